#pragma once

#include "ncinv/algebra/nc_polynomial.hpp"
#include "ncinv/comm/comm_polynomial.hpp"
#include "ncinv/lie/lie_context.hpp"
#include "ncinv/linalg/matrix.hpp"

#include <cstddef>

namespace ncinv {

// Symmetrization S(L) → T(L): each monomial goes to the average of its
// distinct letter arrangements. Letters of the result are Lie-basis indices.
NCPolynomial iota(const LieContext& ctx, const CommPolynomial& s);
// Same, but rejects input that is not multihomogeneous (InputError).
NCPolynomial iota_alpha(const LieContext& ctx, const CommPolynomial& s);

// T(L) → S(L), letters commute.
CommPolynomial pi_S(const NCPolynomial& t);

// π: T(L) → T(V), each letter replaced by its bracketing.
NCPolynomial embed(const LieContext& ctx, const NCPolynomial& t);

// ν: T(V) → F.
NCPolynomial nf_F(const std::shared_ptr<const RelFreeContext>& rf, const NCPolynomial& t);

// ν∘π: T(L) → F.
NCPolynomial pi_F(const LieContext& ctx, const std::shared_ptr<const RelFreeContext>& rf, const NCPolynomial& t);

// T(L) → U(L) by straightening.
NCPolynomial pi_U(const std::shared_ptr<const EnvelopingContext>& env, const NCPolynomial& t);

// π_U∘ι: S(L) → U(L).
NCPolynomial omega(const std::shared_ptr<const EnvelopingContext>& env, const CommPolynomial& s);

// U(L_p(V)) → F(𝔑_p, V), the algebra map that is the identity on L.
// Throws ArenaMismatch when n or p differ.
NCPolynomial gamma(const std::shared_ptr<const RelFreeContext>& rf, const NCPolynomial& u);

// Linear substitution of letters x_j ↦ Σ_i g(i, j) x_i, renormalized. For the
// enveloping arena g acts on the Lie basis.
NCPolynomial act(const Matrix& g, const NCPolynomial& t);

std::size_t dim_F(const RelFreeContext& rf, std::size_t d);
std::size_t dim_U(const EnvelopingContext& env, std::size_t d);

}  // namespace ncinv
