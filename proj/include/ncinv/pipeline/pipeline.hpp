#pragma once

#include "ncinv/algebra/canonical_maps.hpp"
#include "ncinv/comm/invariants.hpp"
#include "ncinv/group/matrix_group.hpp"
#include "ncinv/pipeline/subalgebra.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace ncinv {

inline constexpr std::size_t kDefaultMaxDegree = 6;

struct PipelineOptions {
  // Standard-degree bound D for the commutative generators; |G| if unset.
  std::optional<std::size_t> degree_bound;
  // Degree cap for the noncommutative side (F or U components).
  std::size_t max_degree = kDefaultMaxDegree;
  // Verification degree; min(p·D, max_degree) if unset.
  std::optional<std::size_t> verify_degree;
  // Skip commutative multidegrees of weighted degree above this; the
  // reported β_comm then only covers what was searched.
  std::optional<std::size_t> weighted_cap;
};

struct NCGenerator {
  NCPolynomial nc;
  GeneratorRecord source;
  std::size_t f_degree = 0;
};

struct DegreeCheck {
  std::size_t degree = 0;
  std::size_t dim_subalgebra = 0;
  std::optional<std::size_t> dim_invariant;  // absent when no group is known
  bool equal = false;
};

struct VerificationReport {
  std::vector<DegreeCheck> degrees;  // 1..max_checked_degree
  std::size_t max_checked_degree = 0;
  bool invariance = true;
  bool performed = false;  // false without a finite group

  bool pass() const;
  std::optional<std::size_t> first_failure() const;
};

struct BoundReport {
  std::size_t beta_comm = 0;
  std::size_t beta_nc = 0;
  std::size_t p = 0;
  std::optional<std::size_t> group_order;
  bool inequality_pbeta = false;
  std::optional<bool> inequality_noether;
};

struct PipelineResult {
  ArenaKind arena = ArenaKind::RelFree;
  std::vector<GeneratorRecord> records;
  std::vector<NCGenerator> generators;
  std::size_t degree_bound = 0;
  std::size_t dropped_zero = 0;
  std::size_t pruned = 0;
  // Records with f_degree above the cap are not mapped; generators are then
  // complete only through complete_through_degree.
  std::size_t complete_through_degree = 0;
  bool truncated = false;
  VerificationReport verification;
  BoundReport bounds;
};

// The noncommutative contexts a run works in.
struct RelFreeSetup {
  std::shared_ptr<const LieContext> lie;
  std::shared_ptr<const RelFreeContext> rf;
};
RelFreeSetup make_relfree_setup(std::size_t n, std::size_t p, std::size_t max_degree);

// Generators of F(𝔑_p, V)^G from a finite G ≤ GL(V).
PipelineResult construct_invariants_F(const MatrixGroup& G, std::size_t p, const PipelineOptions& options);

// Same from externally supplied commutative generators over L_p(V). When G
// is given, records are checked for invariance and generation is verified.
PipelineResult construct_invariants_F(std::size_t n, std::size_t p, std::vector<GeneratorRecord> records,
                                      const MatrixGroup* G, const PipelineOptions& options);

// Generators of U(L)^G; G_L acts on the Lie basis by graded automorphisms.
PipelineResult construct_invariants_U(const std::shared_ptr<const LieContext>& lie, const MatrixGroup& G_L,
                                      const PipelineOptions& options);

// Drops elements lying in the subalgebra of the kept ones, lowest degree first.
// Returns the kept indices.
std::vector<std::size_t> prune(const Arena& arena, const std::vector<NCPolynomial>& candidates, std::size_t max_degree);

// ρ(g)·f = f for every element; G acts on the arena's letters.
bool verify_invariance(const MatrixGroup& G, const std::vector<NCPolynomial>& gens);

// For d ≤ d_max compares dim A_d with dim of the invariants (both oracles).
VerificationReport verify_generation(const MatrixGroup& G, const Arena& arena, const std::vector<NCPolynomial>& gens,
                                     std::size_t d_max);

BoundReport bound_report(std::size_t beta_comm, std::size_t beta_nc, std::size_t p,
                         std::optional<std::size_t> group_order);

// Per degree ≤ d_max, whether γ(U generators) and the F generators span the
// same subalgebra.
std::vector<bool> gamma_compatible(const std::shared_ptr<const RelFreeContext>& rf, const PipelineResult& f_result,
                                   const PipelineResult& u_result, std::size_t d_max);

}  // namespace ncinv
