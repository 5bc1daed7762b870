#pragma once

#include "ncinv/comm/comm_polynomial.hpp"
#include "ncinv/group/matrix_group.hpp"
#include "ncinv/lie/lie_context.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ncinv {

// A multihomogeneous element of S(L)^G together with its degrees.
struct GeneratorRecord {
  CommPolynomial poly;
  MultiDegree alpha;
  std::size_t std_degree = 0;
  std::size_t f_degree = 0;  // Σ (i+1)·alpha[i]

  friend bool operator==(const GeneratorRecord&, const GeneratorRecord&) = default;
};

// Fills in the degrees; throws InputError unless poly is nonzero and
// multihomogeneous over ctx's variables.
GeneratorRecord make_record(const LieContext& ctx, CommPolynomial poly);

// Echelon basis of S_α^G; G_L acts on the Lie basis.
std::vector<CommPolynomial> invariant_basis_alpha(const MatrixGroup& G_L, const LieContext& ctx,
                                                  const MultiDegree& alpha);

struct GeneratorSearch {
  std::size_t degree_bound = 0;  // D, in standard degree
  // Multidegrees whose weighted degree exceeds this are skipped.
  std::optional<std::size_t> weighted_cap;
};

// Minimal multihomogeneous generators of S(L)^G in standard degrees ≤ D,
// built degree by degree as complements of the decomposables.
std::vector<GeneratorRecord> minimal_generators(const MatrixGroup& G_L, const LieContext& ctx,
                                                const GeneratorSearch& search);

// max std_degree, 0 for no records.
std::size_t beta_commutative(const std::vector<GeneratorRecord>& records);

bool is_invariant(const MatrixGroup& G_L, const CommPolynomial& f);

// Throws InputError naming the first record that some element moves.
void check_invariance(const MatrixGroup& G_L, const std::vector<GeneratorRecord>& records);

// Dimension of the span of all products of records landing in multidegree α.
std::size_t generated_dimension(const LieContext& ctx, const std::vector<GeneratorRecord>& records,
                                const MultiDegree& alpha);

}  // namespace ncinv
