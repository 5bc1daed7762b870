#pragma once

#include "ncinv/lie/lie_context.hpp"
#include "ncinv/lie/word.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace ncinv {

// U(L) for a graded LieContext, with PBW monomials (nondecreasing sequences
// of basis indices) as the linear basis. U is graded by the Lie degree, the
// weight of a monomial being the sum of the degrees of its letters.
class EnvelopingContext {
public:
  EnvelopingContext(std::shared_ptr<const LieContext> lie, std::size_t max_degree);

  const std::shared_ptr<const LieContext>& lie() const { return lie_; }
  std::size_t max_degree() const { return max_degree_; }

  // Rewrites a word over basis indices into PBW form, always resolving the
  // leftmost descent b_j b_i (j > i) as b_i b_j + [b_j, b_i]. Memoized.
  TermMap straighten(const Word& w) const;
  TermMap straighten(const TermMap& t) const;

  std::size_t weight(const Word& w) const;

  // PBW monomials of weight d, lex-sorted; throws CapExceeded past max_degree.
  const std::vector<Word>& pbw_basis(std::size_t d) const;

  // Number of PBW monomials of weight d, read off ∏_i (1 − t^{deg b_i})^{-1}.
  std::size_t dim(std::size_t d) const;

  Vector coordinates(const TermMap& pbw, std::size_t d) const;
  TermMap from_coordinates(const Vector& v, std::size_t d) const;

private:
  std::shared_ptr<const LieContext> lie_;
  std::size_t max_degree_;
  mutable std::mutex mutex_;
  mutable std::map<Word, TermMap> memo_;
  mutable std::map<std::size_t, std::vector<Word>> basis_cache_;
  mutable std::map<std::size_t, std::map<Word, std::size_t>> index_cache_;

  TermMap straighten_locked(const Word& w) const;
  const std::map<Word, std::size_t>& index(std::size_t d) const;
};

}  // namespace ncinv
