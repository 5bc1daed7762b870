#pragma once

#include "ncinv/lie/word.hpp"
#include "ncinv/linalg/matrix.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace ncinv {

// Sparse coordinates over a Lie basis, keyed by basis index.
using SparseVec = std::map<std::size_t, Scalar>;

void add_term(SparseVec& into, std::size_t i, const Scalar& c);

// A finite-dimensional positively graded Lie algebra given by a basis with
// degrees and a full table of structure constants. The relatively free
// nilpotent algebra L_p(V) is the main instance: its basis is the Lyndon
// words of length <= p ordered by (degree, lex).
class LieContext {
public:
  // L_p(K^n). Structure constants are computed eagerly.
  static std::shared_ptr<const LieContext> free_nilpotent(std::size_t n, std::size_t p);

  // table[i * dim + j] = [b_i, b_j]. Validates grading, antisymmetry and the
  // Jacobi identity; throws InputError on violation.
  static std::shared_ptr<const LieContext> from_structure_constants(std::vector<std::size_t> degrees,
                                                                    std::vector<SparseVec> table);

  std::size_t dim() const { return degrees_.size(); }
  std::size_t max_degree() const { return max_degree_; }
  bool is_free_nilpotent() const { return free_; }
  // Number of free generators n (free nilpotent case only, else 0).
  std::size_t generators() const { return n_; }

  std::size_t degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<std::size_t>& degrees() const { return degrees_; }
  std::vector<std::size_t> basis_of_degree(std::size_t d) const;

  // Lyndon label of a basis element (free nilpotent case only).
  const Word& word(std::size_t i) const;
  std::optional<std::size_t> index_of(const Word& w) const;

  const SparseVec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  SparseVec bracket(const SparseVec& a, const SparseVec& b) const;

  // Expansion of basis element i in T(V) (free nilpotent case only).
  const TermMap& bracketing_of(std::size_t i) const;
  // π: T(L) → T(V), letters of T(L) are basis indices.
  TermMap embed(const TermMap& lie_tensor) const;

  // Coordinates of a homogeneous Lie element t ∈ T(V)_d in the Lyndon
  // basis; throws NotALieElement if t is not in the span of the bracketings.
  SparseVec project_to_lie(const TermMap& t, std::size_t d) const;

  // GL(V) → Aut(L_p(V)): the dim()×dim() block-diagonal matrix of the
  // automorphism extending g. Throws InputError for singular g.
  Matrix lift(const Matrix& g) const;

  // True iff g (dim()×dim()) preserves degrees and all brackets.
  bool is_graded_automorphism(const Matrix& g) const;

private:
  LieContext() = default;
  void validate() const;

  bool free_ = false;
  std::size_t n_ = 0;
  std::size_t max_degree_ = 0;
  std::vector<std::size_t> degrees_;
  std::vector<Word> words_;
  std::map<Word, std::size_t> index_;
  std::vector<TermMap> bracketings_;
  std::vector<SparseVec> table_;
};

// Element of a LieContext; holds the context it belongs to.
class LieElement {
public:
  LieElement(std::shared_ptr<const LieContext> ctx, SparseVec coeffs = {});
  static LieElement basis(std::shared_ptr<const LieContext> ctx, std::size_t i);

  const std::shared_ptr<const LieContext>& context() const { return ctx_; }
  const SparseVec& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  LieElement& operator+=(const LieElement& o);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(const LieElement& a, const LieElement& b);
  friend LieElement operator*(const Scalar& c, const LieElement& a);
  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
  }

private:
  std::shared_ptr<const LieContext> ctx_;
  SparseVec coeffs_;
};

// Throws ArenaMismatch when the operands come from different contexts.
LieElement lie_bracket(const LieElement& a, const LieElement& b);

// a ↦ g·a for g ∈ GL(V) acting on the letters (free nilpotent only).
LieElement gl_action_lie(const Matrix& g, const LieElement& a);

LieElement project_to_lie(const std::shared_ptr<const LieContext>& ctx, const TermMap& t, std::size_t d);

}  // namespace ncinv
