#pragma once

#include "ncinv/algebra/nc_polynomial.hpp"
#include "ncinv/group/matrix_group.hpp"
#include "ncinv/pipeline/pipeline.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ncinv {

// V = U ⊕ W^{⊕m}. Letters: u_i = i, then copy k of W at dim_u + k·dim_w + j,
// so the first l copies of W are the same letters for every m ≥ l.
struct SplitModule {
  std::size_t dim_u = 0;
  std::size_t dim_w = 0;
  std::size_t copies = 0;

  std::size_t dim() const { return dim_u + copies * dim_w; }
  std::size_t w_letter(std::size_t copy, std::size_t j) const { return dim_u + copy * dim_w + j; }
  // Copy index of a letter, or nullopt for a U letter.
  std::optional<std::size_t> copy_of(std::size_t letter) const;
};

// g acting on U ⊕ W (block diagonal) ↦ g acting on U ⊕ mW.
Matrix copies_matrix(const Matrix& g, const SplitModule& module);
// Throws InputError for generators that are not block diagonal.
MatrixGroup expand_to_copies(const MatrixGroup& G, const SplitModule& module);

// GL(K^m) acting on the copies: w_{k,j} ↦ Σ_{k'} g(k', k) w_{k',j}, U fixed.
NCPolynomial gl_km_action(const Matrix& g, const NCPolynomial& f, const SplitModule& module);

// Coefficients of t^1, t^2, … in gl_km_action(I + t·E_{ij}, f): the copy-j
// letters are replaced by copy-i letters in every way, k at a time.
std::vector<NCPolynomial> polarization_images(const NCPolynomial& f, std::size_t i, std::size_t j,
                                              const SplitModule& module);

// Splits f by the number of letters from each copy.
std::vector<NCPolynomial> weight_components(const NCPolynomial& f, const SplitModule& module);

// Moves f from U + lW into the arena of U + mW: identity on letters when
// m ≥ l, otherwise letters of the dropped copies are set to zero.
NCPolynomial change_copies(const NCPolynomial& f, const SplitModule& from, const SplitModule& to, const Arena& target);

// Degreewise closure of span(B) under all polarization operators and weight
// splitting, up to max_degree. The result spans a GL(K^m)-stable subspace
// in each degree.
std::vector<NCPolynomial> polarize_set(const std::vector<NCPolynomial>& B, const SplitModule& module,
                                       std::size_t max_degree);

struct PolarizationReport {
  SplitModule source;
  SplitModule target;
  std::size_t h = 0;
  std::size_t p = 0;
  bool asserted = false;  // only p = 1 runs are held to PASS
  std::size_t source_generators = 0;
  std::size_t polarized_generators = 0;
  VerificationReport verification;
};

// Runs the pipeline on U + (dim_w·h)W, polarizes to m copies and compares
// with the invariants of F(𝔑_p, U + mW) through d_max. G acts on U ⊕ W.
// source_copies overrides dim_w·h.
PolarizationReport verify_polarization(const MatrixGroup& G, std::size_t dim_u, std::size_t dim_w, std::size_t h,
                                       std::size_t p, std::size_t m, std::size_t d_max,
                                       std::optional<std::size_t> source_copies = std::nullopt);

}  // namespace ncinv
