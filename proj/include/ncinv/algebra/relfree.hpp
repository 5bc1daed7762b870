#pragma once

#include "ncinv/lie/word.hpp"
#include "ncinv/linalg/subspace.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace ncinv {

using Content = std::vector<std::uint16_t>;

// Words of one degree sharing a letter content. The T-ideal is stable under
// the diagonal torus of GL(V), so it splits into these blocks.
struct ContentBlock {
  std::vector<Word> words;  // lex-sorted
  std::map<Word, std::size_t> index;
  Subspace ideal;                       // T-ideal ∩ span(words), echelon in word order
  std::vector<std::size_t> representatives;  // non-pivot positions
};

struct DegreeComponent {
  std::size_t degree = 0;
  std::map<Content, ContentBlock> blocks;
  std::vector<Word> representatives;  // all blocks, lex-sorted
  std::map<Word, std::size_t> rep_index;
  std::size_t ideal_dim = 0;
};

// The relatively free algebra F(𝔑_p, K^n), represented degreewise as
// T(V)_d modulo the T-ideal of [x_1, …, x_{p+1}]. Components are built on
// first use, up to max_degree; asking for more throws CapExceeded.
class RelFreeContext {
public:
  RelFreeContext(std::size_t n, std::size_t p, std::size_t max_degree);

  std::size_t letters() const { return n_; }
  std::size_t nilpotency() const { return p_; }
  std::size_t max_degree() const { return max_degree_; }

  const DegreeComponent& component(std::size_t d) const;

  // T-ideal component in T(V)_d with coordinates indexed by all_words(n, d).
  Subspace tideal_component(std::size_t d) const;

  // ν: T(V) → F, on every homogeneous component.
  TermMap normal_form(const TermMap& t) const;

  std::size_t dim(std::size_t d) const { return component(d).representatives.size(); }
  const std::vector<Word>& representatives(std::size_t d) const { return component(d).representatives; }

  // Coordinates of a normal-form element homogeneous of degree d.
  Vector coordinates(const TermMap& nf, std::size_t d) const;
  TermMap from_coordinates(const Vector& v, std::size_t d) const;

private:
  void build(std::size_t d) const;  // caller holds mutex_

  std::size_t n_;
  std::size_t p_;
  std::size_t max_degree_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, std::unique_ptr<DegreeComponent>> cache_;
};

// Left-normed commutator [w_1, …, w_k] of words, expanded in T(V).
TermMap left_normed_commutator(const std::vector<Word>& parts);

}  // namespace ncinv
