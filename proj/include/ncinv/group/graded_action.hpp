#pragma once

#include "ncinv/algebra/enveloping.hpp"
#include "ncinv/algebra/relfree.hpp"
#include "ncinv/comm/comm_polynomial.hpp"
#include "ncinv/group/matrix_group.hpp"
#include "ncinv/linalg/subspace.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ncinv {

// Linear action of a finite group on one graded component, one matrix per
// group element (same order as MatrixGroup::elements). Column j of a matrix
// is the image of basis vector j.
class GradedAction {
public:
  GradedAction(std::string label, std::size_t dim, std::vector<Matrix> matrices);

  const std::string& label() const { return label_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& matrices() const { return matrices_; }

  // (1/|G|) Σ_g ρ(g).
  const Matrix& reynolds_matrix() const { return reynolds_; }
  Vector reynolds(const Vector& v) const { return reynolds_.apply(v); }

  // Image of the Reynolds projector, echelonized.
  Subspace invariant_subspace() const;
  // (1/|G|) Σ_g tr ρ(g); throws Error if the average is not an integer.
  std::size_t invariant_dimension() const;
  // Both of the above; throws OracleMismatch when they disagree.
  std::size_t checked_invariant_dimension() const;

private:
  std::string label_;
  std::size_t dim_;
  std::vector<Matrix> matrices_;
  Matrix reynolds_;
};

struct OracleStats {
  std::size_t checks = 0;
  std::size_t mismatches = 0;
};

// Process-wide tally of checked_invariant_dimension calls.
OracleStats oracle_stats();
void reset_oracle_stats();

// T(V)_d in the lex word basis.
GradedAction tensor_action(const MatrixGroup& G, std::size_t d);
// F_d in the representative basis: act on T(V)_d, then take normal forms.
GradedAction relfree_action(const MatrixGroup& G, const RelFreeContext& rf, std::size_t d);
// S_α in the basis of monomial_basis; G_L acts on the Lie basis.
GradedAction sym_action(const MatrixGroup& G_L, const std::vector<std::size_t>& var_degrees, const MultiDegree& alpha);
// Weight-d component of U in the PBW basis; G_L acts on the Lie basis.
GradedAction enveloping_action(const MatrixGroup& G_L, const EnvelopingContext& env, std::size_t d);

}  // namespace ncinv
