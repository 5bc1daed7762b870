#include "../common/random.hpp"

#include "ncinv/error.hpp"
#include "ncinv/pipeline/pipeline.hpp"
#include "ncinv/polarize/polarize.hpp"

#include <doctest.h>

using namespace ncinv;
using ncinv::testing::Rng;

namespace {

Word w(std::initializer_list<int> xs) {
  Word out;
  for (int x : xs) out.push_back(static_cast<Letter>(x));
  return out;
}

Arena relfree_arena(std::size_t n, std::size_t p) { return Arena::relfree(make_relfree_setup(n, p, 4).rf); }

NCPolynomial random_homogeneous(Rng& rng, const Arena& arena, std::size_t d) {
  return NCPolynomial(arena, rng.terms(arena.letters(), d, 3));
}

Subspace span_in_degree(const std::vector<NCPolynomial>& xs, const Arena& arena, std::size_t d) {
  Subspace s(component_dim(arena, d));
  for (const auto& x : xs)
    if (x.degree() == std::optional<std::size_t>(d)) s.insert(component_coordinates(x, d));
  return s;
}

}  // namespace

TEST_SUITE("polarize") {
  TEST_CASE("letter layout") {
    const SplitModule m{2, 3, 2};
    CHECK(m.dim() == 8);
    CHECK(m.w_letter(0, 0) == 2);
    CHECK(m.w_letter(1, 2) == 7);
    CHECK_FALSE(m.copy_of(1));
    CHECK(m.copy_of(4) == std::optional<std::size_t>(0));
    CHECK(m.copy_of(5) == std::optional<std::size_t>(1));
    // The first copies keep their letters when more are added.
    CHECK(SplitModule{2, 3, 5}.w_letter(1, 2) == m.w_letter(1, 2));
  }

  TEST_CASE("action on copies") {
    const SplitModule two{0, 1, 2};
    const Arena fa = relfree_arena(2, 2);
    const NCPolynomial sq(fa, {{w({0, 0}), 1}});
    CHECK(gl_km_action(Matrix::identity(2), sq, two) == sq);
    CHECK(gl_km_action(Matrix::from_rows({{0, 1}, {1, 0}}), sq, two) == NCPolynomial(fa, {{w({1, 1}), 1}}));
    // Column convention: I + E_21 sends w_1 to w_1 + w_2.
    const Matrix unipotent = Matrix::from_rows({{1, 0}, {1, 1}});
    CHECK(gl_km_action(unipotent, sq, two) ==
          NCPolynomial(fa, {{w({0, 0}), 1}, {w({0, 1}), 1}, {w({1, 0}), 1}, {w({1, 1}), 1}}));

    Rng rng(51);
    const SplitModule mod{1, 2, 3};
    const Arena big = relfree_arena(mod.dim(), 2);
    for (int round = 0; round < 10; ++round) {
      const Matrix g = rng.invertible(3), h = rng.invertible(3);
      const auto a = random_homogeneous(rng, big, 2), b = random_homogeneous(rng, big, 1);
      CHECK(gl_km_action(g * h, a, mod) == gl_km_action(g, gl_km_action(h, a, mod), mod));
      CHECK(gl_km_action(g, nc_multiply(a, b), mod) == nc_multiply(gl_km_action(g, a, mod), gl_km_action(g, b, mod)));
      // U letters are fixed.
      const auto u = NCPolynomial::letter(big, 0);
      CHECK(gl_km_action(g, u, mod) == u);
    }
    CHECK_THROWS_AS(gl_km_action(Matrix::identity(2), NCPolynomial::letter(big, 0), mod), DimensionMismatch);
  }

  TEST_CASE("polarization operators") {
    const SplitModule two{0, 1, 2};
    const Arena t2 = Arena::tensor(2);
    const NCPolynomial sq(t2, {{w({0, 0}), 1}});
    const auto images = polarization_images(sq, 1, 0, two);
    REQUIRE(images.size() == 2);
    CHECK(images[0] == NCPolynomial(t2, {{w({0, 1}), 1}, {w({1, 0}), 1}}));
    CHECK(images[1] == NCPolynomial(t2, {{w({1, 1}), 1}}));

    Rng rng(52);
    const SplitModule mod{1, 1, 3};
    const Arena fa = relfree_arena(4, 2);
    for (int round = 0; round < 10; ++round) {
      const auto f = random_homogeneous(rng, fa, 3);
      const std::size_t i = rng.index(3), j = (i + 1 + rng.index(2)) % 3;
      const Scalar c = rng.nonzero();
      Matrix g = Matrix::identity(3);
      g(i, j) = c;
      NCPolynomial expect = f;
      Scalar power = 1;
      for (const auto& img : polarization_images(f, i, j, mod)) {
        power *= c;
        expect += power * img;
      }
      CHECK(gl_km_action(g, f, mod) == expect);

      NCPolynomial sum = NCPolynomial::zero(fa);
      for (const auto& part : weight_components(f, mod)) sum += part;
      CHECK(sum == f);
    }
  }

  TEST_CASE("polarize_set closes under GL(K^m)") {
    const SplitModule two{0, 1, 2};
    const Arena f1 = relfree_arena(2, 1);
    const auto out = polarize_set({NCPolynomial(f1, {{w({0, 0}), 1}})}, two, 4);
    const Subspace s = span_in_degree(out, f1, 2);
    CHECK(s.dim() == 3);
    CHECK(span_contains(s, component_coordinates(NCPolynomial(f1, {{w({0, 1}), 1}}), 2)));

    const Arena f2 = relfree_arena(2, 2);
    const auto out2 = polarize_set({NCPolynomial(f2, {{w({0, 0}), 1}})}, two, 4);
    const Subspace s2 = span_in_degree(out2, f2, 2);
    CHECK(s2.dim() == 3);
    CHECK(span_contains(s2, component_coordinates(NCPolynomial(f2, {{w({0, 1}), 1}, {w({1, 0}), 1}}), 2)));
    CHECK_FALSE(span_contains(s2, component_coordinates(NCPolynomial(f2, {{w({0, 1}), 1}}), 2)));

    // U letters are not polarized.
    const SplitModule mixed{1, 1, 2};
    const Arena f3 = relfree_arena(3, 2);
    const auto out3 = polarize_set({NCPolynomial(f3, {{w({0, 1}), 1}})}, mixed, 4);
    const Subspace s3 = span_in_degree(out3, f3, 2);
    CHECK(s3.dim() == 2);
    CHECK(span_contains(s3, component_coordinates(NCPolynomial(f3, {{w({0, 2}), 1}}), 2)));

    Rng rng(53);
    const SplitModule mod{1, 1, 2};
    for (int round = 0; round < 5; ++round) {
      std::vector<NCPolynomial> seed = {random_homogeneous(rng, f3, 2), random_homogeneous(rng, f3, 3)};
      const auto closed = polarize_set(seed, mod, 4);
      for (std::size_t d = 2; d <= 3; ++d) {
        const Subspace sd = span_in_degree(closed, f3, d);
        const Matrix g = rng.invertible(2);
        for (const auto& x : closed)
          if (x.degree() == std::optional<std::size_t>(d))
            CHECK(span_contains(sd, component_coordinates(gl_km_action(g, x, mod), d)));
        for (const auto& x : seed)
          if (x.degree() == std::optional<std::size_t>(d)) CHECK(span_contains(sd, component_coordinates(x, d)));
      }
    }
  }

  TEST_CASE("changing the number of copies") {
    const SplitModule one{1, 1, 1}, two{1, 1, 2};
    const Arena a1 = relfree_arena(2, 2), a2 = relfree_arena(3, 2);
    const NCPolynomial f(a1, {{w({0, 1}), 1}, {w({1, 1}), 2}});
    const NCPolynomial up = change_copies(f, one, two, a2);
    CHECK(up == NCPolynomial(a2, f.terms()));
    CHECK(change_copies(up, two, one, a1) == f);
    CHECK(change_copies(NCPolynomial(a2, {{w({0, 2}), 1}, {w({1}), 1}}), two, one, a1) == NCPolynomial::letter(a1, 1));
  }

  TEST_CASE("expanding a group to copies") {
    const MatrixGroup G = MatrixGroup::close({Matrix::from_rows({{1, 0}, {0, -1}})}, 2);
    const SplitModule mod{1, 1, 3};
    const MatrixGroup E = expand_to_copies(G, mod);
    CHECK(E.order() == 2);
    CHECK(E.elements()[1] == Matrix::from_rows({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}));
    const MatrixGroup mixing = MatrixGroup::close({Matrix::from_rows({{0, 1}, {1, 0}})}, 2);
    CHECK_THROWS_AS(expand_to_copies(mixing, mod), InputError);
  }

  TEST_CASE("verify_polarization") {
    const MatrixGroup sign = MatrixGroup::close({Matrix::from_rows({{-1}})}, 1);
    const PolarizationReport r = verify_polarization(sign, 0, 1, 1, 1, 3, 4);
    CHECK(r.asserted);
    CHECK(r.source.copies == 1);
    CHECK(r.target.copies == 3);
    CHECK(r.verification.pass());
    CHECK(r.verification.degrees[1].dim_subalgebra == 6);

    const PolarizationReport r2 = verify_polarization(sign, 0, 1, 2, 2, 3, 4);
    CHECK_FALSE(r2.asserted);
    CHECK(r2.source.copies == 2);
    CHECK(r2.verification.performed);

    // Fewer target copies than source copies.
    const PolarizationReport down = verify_polarization(sign, 0, 1, 1, 1, 1, 4, 2);
    CHECK(down.source.copies == 2);
    CHECK(down.verification.pass());

    const MatrixGroup u_and_w = MatrixGroup::close({Matrix::from_rows({{-1, 0}, {0, -1}})}, 2);
    CHECK(verify_polarization(u_and_w, 1, 1, 1, 1, 2, 4).verification.pass());
  }
}
