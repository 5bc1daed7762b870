#include "ncinv/algebra/canonical_maps.hpp"

#include "ncinv/error.hpp"

#include <algorithm>

namespace ncinv {

namespace {

Scalar factorial(std::size_t k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Scalar(f);
}

void require_tensor(const NCPolynomial& t, std::size_t letters, const char* what) {
  if (t.arena().kind() != ArenaKind::Tensor || t.arena().letters() != letters)
    throw ArenaMismatch(std::string(what) + " expects a tensor algebra over " + std::to_string(letters) + " letters");
}

}  // namespace

NCPolynomial iota(const LieContext& ctx, const CommPolynomial& s) {
  if (s.num_vars() != ctx.dim()) throw DimensionMismatch("commutative variables do not match the Lie basis");
  TermMap out;
  for (const auto& [e, c] : s.terms()) {
    Word w;
    Scalar weight = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      w.insert(w.end(), e[i], static_cast<Letter>(i));
      weight *= factorial(e[i]);
    }
    weight /= factorial(w.size());
    do {
      add_term(out, w, c * weight);
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return NCPolynomial::from_normalized(Arena::tensor(ctx.dim()), std::move(out));
}

NCPolynomial iota_alpha(const LieContext& ctx, const CommPolynomial& s) {
  if (!s.is_zero() && !s.multidegree(ctx.degrees(), ctx.max_degree()))
    throw InputError("symmetrization input is not multihomogeneous");
  return iota(ctx, s);
}

CommPolynomial pi_S(const NCPolynomial& t) {
  const std::size_t k = t.arena().letters();
  if (t.arena().kind() != ArenaKind::Tensor) throw ArenaMismatch("pi_S expects a tensor algebra");
  CommPolynomial out(k);
  for (const auto& [w, c] : t.terms()) {
    Exponents e(k, 0);
    for (Letter x : w) ++e[x];
    out.add_term(e, c);
  }
  return out;
}

NCPolynomial embed(const LieContext& ctx, const NCPolynomial& t) {
  require_tensor(t, ctx.dim(), "embed");
  return NCPolynomial::from_normalized(Arena::tensor(ctx.generators()), ctx.embed(t.terms()));
}

NCPolynomial nf_F(const std::shared_ptr<const RelFreeContext>& rf, const NCPolynomial& t) {
  require_tensor(t, rf->letters(), "nf_F");
  return NCPolynomial(Arena::relfree(rf), t.terms());
}

NCPolynomial pi_F(const LieContext& ctx, const std::shared_ptr<const RelFreeContext>& rf, const NCPolynomial& t) {
  if (ctx.generators() != rf->letters() || ctx.max_degree() != rf->nilpotency())
    throw ArenaMismatch("Lie context and relatively free context disagree on n or p");
  return nf_F(rf, embed(ctx, t));
}

NCPolynomial pi_U(const std::shared_ptr<const EnvelopingContext>& env, const NCPolynomial& t) {
  require_tensor(t, env->lie()->dim(), "pi_U");
  return NCPolynomial(Arena::enveloping(env), t.terms());
}

NCPolynomial omega(const std::shared_ptr<const EnvelopingContext>& env, const CommPolynomial& s) {
  return pi_U(env, iota(*env->lie(), s));
}

NCPolynomial gamma(const std::shared_ptr<const RelFreeContext>& rf, const NCPolynomial& u) {
  const EnvelopingContext& env = u.arena().enveloping_context();
  const LieContext& ctx = *env.lie();
  if (!ctx.is_free_nilpotent() || ctx.generators() != rf->letters() || ctx.max_degree() != rf->nilpotency())
    throw ArenaMismatch("gamma needs U(L_p(V)) and F(N_p, V) with the same n and p");
  TermMap out;
  for (const auto& [w, c] : u.terms()) {
    TermMap prod{{Word{}, 1}};
    for (Letter x : w) prod = tensor_product(prod, ctx.bracketing_of(x));
    add_scaled(out, prod, c);
  }
  return NCPolynomial(Arena::relfree(rf), out);
}

NCPolynomial act(const Matrix& g, const NCPolynomial& t) {
  const std::size_t k = t.arena().letters();
  if (g.rows() != k || g.cols() != k) throw DimensionMismatch("action matrix does not match the arena alphabet");
  std::vector<TermMap> images(k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i)
      if (g(i, j) != 0) images[j].emplace(Word{static_cast<Letter>(i)}, g(i, j));
  return NCPolynomial(t.arena(), substitute(t.terms(), images));
}

std::size_t dim_F(const RelFreeContext& rf, std::size_t d) { return rf.dim(d); }

std::size_t dim_U(const EnvelopingContext& env, std::size_t d) { return env.dim(d); }

}  // namespace ncinv
