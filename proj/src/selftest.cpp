#include "ncinv/selftest.hpp"

#include "ncinv/algebra/canonical_maps.hpp"
#include "ncinv/group/graded_action.hpp"
#include "ncinv/pipeline/pipeline.hpp"

#include <functional>
#include <map>
#include <random>

namespace ncinv {

namespace {

class Draw {
public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Scalar coeff() {
    long num = 0;
    while (num == 0) num = small(-3, 3);
    Scalar q(num, static_cast<unsigned long>(small(1, 2)));
    q.canonicalize();
    return q;
  }

  Word word(std::size_t letters, std::size_t len) {
    Word w(len);
    for (auto& x : w) x = static_cast<Letter>(small(0, static_cast<long>(letters) - 1));
    return w;
  }

  TermMap terms(std::size_t letters, std::size_t len, std::size_t count) {
    TermMap t;
    for (std::size_t i = 0; i < count; ++i) add_term(t, word(letters, len), coeff());
    return t;
  }

  Matrix invertible(std::size_t n) {
    for (;;) {
      Matrix g(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = small(-2, 2);
      if (is_invertible(g)) return g;
    }
  }

private:
  std::mt19937_64 rng_;
};

// Resolves the rightmost descent first; must agree with the context's order.
TermMap straighten_rightmost(const LieContext& ctx, const Word& w) {
  std::size_t i = w.size();
  for (std::size_t k = w.size(); k >= 2; --k)
    if (w[k - 2] > w[k - 1]) {
      i = k - 2;
      break;
    }
  if (i == w.size()) return TermMap{{w, 1}};
  Word swapped = w;
  std::swap(swapped[i], swapped[i + 1]);
  TermMap out = straighten_rightmost(ctx, swapped);
  for (const auto& [k, c] : ctx.bracket_basis(w[i], w[i + 1])) {
    Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    shorter.push_back(static_cast<Letter>(k));
    shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
    add_scaled(out, straighten_rightmost(ctx, shorter), c);
  }
  return out;
}

CommPolynomial random_multihomogeneous(Draw& draw, const LieContext& ctx, const MultiDegree& alpha) {
  const auto basis = monomial_basis(ctx.degrees(), alpha);
  CommPolynomial f(ctx.dim());
  for (int k = 0; k < 3; ++k) f.add_term(basis[static_cast<std::size_t>(draw.small(0, static_cast<long>(basis.size()) - 1))], draw.coeff());
  return f;
}

SelftestCase check(const std::string& name, const std::function<bool(std::string&)>& body) {
  SelftestCase c{name, false, ""};
  try {
    c.passed = body(c.detail);
  } catch (const std::exception& e) {
    c.detail = e.what();
  }
  return c;
}

}  // namespace

std::vector<SelftestCase> run_selftest(std::uint64_t seed, std::size_t rounds) {
  Draw draw(seed);
  const auto setup = make_relfree_setup(2, 3, 5);
  const auto& lie = setup.lie;
  const auto& rf = setup.rf;
  auto env = std::make_shared<EnvelopingContext>(lie, 6);
  std::vector<SelftestCase> out;

  out.push_back(check("straightening order independence", [&](std::string& detail) {
    for (std::size_t r = 0; r < rounds; ++r) {
      const Word w = draw.word(lie->dim(), static_cast<std::size_t>(draw.small(2, 4)));
      if (env->straighten(w) != straighten_rightmost(*lie, w)) {
        detail = "word " + word_to_string(w);
        return false;
      }
    }
    return true;
  }));

  out.push_back(check("associativity in T, F and U", [&](std::string& detail) {
    const Arena arenas[] = {Arena::tensor(2), Arena::relfree(rf), Arena::enveloping(env)};
    for (const Arena& a : arenas)
      for (std::size_t r = 0; r < rounds; ++r) {
        auto pick = [&] { return NCPolynomial(a, draw.terms(a.letters(), 1, 2)); };
        const NCPolynomial x = pick(), y = pick(), z = pick();
        if (!(nc_multiply(nc_multiply(x, y), z) == nc_multiply(x, nc_multiply(y, z)))) {
          detail = "arena with " + std::to_string(a.letters()) + " letters";
          return false;
        }
      }
    return true;
  }));

  out.push_back(check("commutators of length p+1 vanish in F", [&](std::string&) {
    const Arena a = Arena::relfree(rf);
    for (std::size_t r = 0; r < rounds; ++r) {
      NCPolynomial acc(a, draw.terms(2, 1, 2));
      for (std::size_t k = 0; k < rf->nilpotency(); ++k) {
        const NCPolynomial f(a, draw.terms(2, 1, 2));
        acc = nc_multiply(acc, f) - nc_multiply(f, acc);
      }
      if (!acc.is_zero()) return false;
    }
    return true;
  }));

  out.push_back(check("pi_S after iota is the identity", [&](std::string&) {
    for (std::size_t r = 0; r < rounds; ++r) {
      MultiDegree alpha{static_cast<std::uint32_t>(draw.small(0, 2)), static_cast<std::uint32_t>(draw.small(0, 1)),
                        static_cast<std::uint32_t>(draw.small(0, 1))};
      if (total(alpha) == 0) alpha[0] = 1;
      const CommPolynomial f = random_multihomogeneous(draw, *lie, alpha);
      if (!(pi_S(iota_alpha(*lie, f)) == f)) return false;
    }
    return true;
  }));

  out.push_back(check("pi_F and omega are GL(V)-equivariant", [&](std::string&) {
    for (std::size_t r = 0; r < rounds; ++r) {
      const Matrix g = draw.invertible(2);
      const Matrix gl = lie->lift(g);
      const MultiDegree alpha{static_cast<std::uint32_t>(draw.small(0, 2)), 1, 0};
      const CommPolynomial f = random_multihomogeneous(draw, *lie, alpha);
      const NCPolynomial t = iota(*lie, f);
      if (!(pi_F(*lie, rf, act(gl, t)) == act(g, pi_F(*lie, rf, t)))) return false;
      if (!(omega(env, f.substitute(gl)) == act(gl, omega(env, f)))) return false;
    }
    return true;
  }));

  out.push_back(check("gamma after omega equals pi_F after iota", [&](std::string&) {
    for (std::size_t r = 0; r < rounds; ++r) {
      const MultiDegree alpha{static_cast<std::uint32_t>(draw.small(0, 2)), static_cast<std::uint32_t>(draw.small(0, 1)),
                              static_cast<std::uint32_t>(draw.small(0, 1))};
      if (total(alpha) == 0 || weighted_degree(alpha) > 5) continue;
      const CommPolynomial f = random_multihomogeneous(draw, *lie, alpha);
      if (!(gamma(rf, omega(env, f)) == pi_F(*lie, rf, iota(*lie, f)))) return false;
    }
    return true;
  }));

  out.push_back(check("T-ideal components are GL(V)-stable", [&](std::string&) {
    for (std::size_t d = 3; d <= 5; ++d) {
      const Subspace ideal = rf->tideal_component(d);
      const Matrix g = draw.invertible(2);
      const auto words = all_words(2, d);
      std::vector<TermMap> images(2);
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 0; i < 2; ++i)
          if (sgn(g(i, j)) != 0) images[j].emplace(Word{static_cast<Letter>(i)}, g(i, j));
      std::map<Word, std::size_t> index;
      for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
      for (const auto& v : ideal.basis()) {
        TermMap t;
        for (std::size_t i = 0; i < v.size(); ++i) add_term(t, words[i], v[i]);
        Vector img(words.size());
        for (const auto& [w, c] : substitute(t, images)) img[index.at(w)] = c;
        if (!ideal.contains(img)) return false;
      }
    }
    return true;
  }));

  out.push_back(check("actions are representations; Reynolds is idempotent; oracles agree", [&](std::string&) {
    const MatrixGroup G = MatrixGroup::close({Matrix::from_rows({{0, -1}, {1, 0}})}, 2);
    for (std::size_t d = 1; d <= 4; ++d) {
      const GradedAction a = relfree_action(G, *rf, d);
      for (std::size_t r = 0; r < rounds; ++r) {
        const auto i = static_cast<std::size_t>(draw.small(0, 3)), j = static_cast<std::size_t>(draw.small(0, 3));
        const Matrix gh = G.elements()[i] * G.elements()[j];
        std::size_t k = 0;
        while (!(G.elements()[k] == gh)) ++k;
        if (!(a.matrices()[i] * a.matrices()[j] == a.matrices()[k])) return false;
      }
      if (!(a.reynolds_matrix() * a.reynolds_matrix() == a.reynolds_matrix())) return false;
      a.checked_invariant_dimension();
    }
    return true;
  }));
  return out;
}

}  // namespace ncinv
