#include "../common/groups.hpp"
#include "../common/random.hpp"

#include "ncinv/error.hpp"
#include "ncinv/group/graded_action.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ncinv;
using ncinv::testing::m2;
using ncinv::testing::plane_groups;
using ncinv::testing::Rng;

namespace {

std::size_t index_of(const MatrixGroup& G, const Matrix& g) {
  const auto& el = G.elements();
  const auto it = std::find(el.begin(), el.end(), g);
  REQUIRE(it != el.end());
  return static_cast<std::size_t>(it - el.begin());
}

void check_representation(const MatrixGroup& G, const GradedAction& rho) {
  REQUIRE(rho.matrices().size() == G.order());
  CHECK(rho.matrices().front() == Matrix::identity(rho.dim()));
  for (std::size_t a = 0; a < G.order(); ++a)
    for (std::size_t b = 0; b < G.order(); ++b) {
      const std::size_t ab = index_of(G, G.elements()[a] * G.elements()[b]);
      CHECK(rho.matrices()[ab] == rho.matrices()[a] * rho.matrices()[b]);
    }
}

// Fixed vectors as the common kernel of ρ(g) − I over the generators' images.
Subspace fixed_by_kernel(const GradedAction& rho) {
  const std::size_t n = rho.dim();
  Matrix stacked(n * rho.matrices().size(), n);
  for (std::size_t k = 0; k < rho.matrices().size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        stacked(k * n + i, j) = rho.matrices()[k](i, j) - (i == j ? 1 : 0);
  return Subspace::span(n, kernel(stacked));
}

// Molien series coefficient for a 2×2 group: average over g of the t^d
// coefficient of 1 / (1 − tr(g) t + det(g) t²).
Scalar molien(const MatrixGroup& G, std::size_t d) {
  Scalar total = 0;
  for (const auto& g : G.elements()) {
    const Scalar tr = g(0, 0) + g(1, 1), det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    std::vector<Scalar> c(d + 1);
    c[0] = 1;
    for (std::size_t k = 1; k <= d; ++k) c[k] = tr * c[k - 1] - (k >= 2 ? det * c[k - 2] : Scalar(0));
    total += c[d];
  }
  return total / static_cast<long>(G.order());
}

Scalar tensor_character_average(const MatrixGroup& G, std::size_t d) {
  Scalar total = 0;
  for (const auto& g : G.elements()) {
    Scalar t = 1;
    for (std::size_t k = 0; k < d; ++k) t *= g.trace();
    total += t;
  }
  return total / static_cast<long>(G.order());
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("closure of the plane groups") {
    for (const auto& ng : plane_groups()) {
      CAPTURE(ng.name);
      const MatrixGroup G = MatrixGroup::close(ng.generators, 2);
      CHECK(G.order() == ng.order);
      CHECK(G.elements().front() == Matrix::identity(2));
      for (const auto& a : G.elements()) {
        CHECK(std::count(G.elements().begin(), G.elements().end(), inverse(a)) == 1);
        for (const auto& b : G.elements()) CHECK(std::count(G.elements().begin(), G.elements().end(), a * b) == 1);
      }
    }
    // Redundant generators do not change the group.
    CHECK(MatrixGroup::close({m2(0, -1, 1, 0), m2(-1, 0, 0, -1), m2(1, 0, 0, 1)}, 2).order() == 4);
    CHECK(MatrixGroup::close({Matrix::from_rows({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}})}, 3).order() == 2);
  }

  TEST_CASE("closure errors") {
    CHECK_THROWS_AS(MatrixGroup::close({m2(1, 1, 0, 1)}, 2), CapExceeded);
    CHECK_THROWS_AS(MatrixGroup::close({m2(0, -1, 1, 0), m2(1, 0, 0, -1)}, 2, 4), CapExceeded);
    CHECK_NOTHROW(MatrixGroup::close({m2(0, -1, 1, 0), m2(1, 0, 0, -1)}, 2, 8));
    CHECK_THROWS_AS(MatrixGroup::close({m2(1, 2, 2, 4)}, 2), InputError);
    CHECK_THROWS_AS(MatrixGroup::close({Matrix::identity(3)}, 2), InputError);
    try {
      MatrixGroup::close({m2(2, 0, 0, 1)}, 2, 16);
      FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
      CHECK(std::string(e.what()).find("group not verified finite within cap") != std::string::npos);
    }
  }

  TEST_CASE("lifting to the free nilpotent Lie algebra") {
    const auto ctx = LieContext::free_nilpotent(2, 3);
    const MatrixGroup G = MatrixGroup::close({m2(0, -1, 1, 0), m2(1, 0, 0, -1)}, 2);
    const MatrixGroup GL = G.lift(*ctx);
    CHECK(GL.dim() == ctx->dim());
    CHECK(GL.order() == 8);
    for (std::size_t k = 0; k < G.order(); ++k) CHECK(GL.elements()[k] == ctx->lift(G.elements()[k]));
    CHECK(close_automorphisms(*ctx, GL.generators()).order() == 8);
    Matrix bad = Matrix::identity(ctx->dim());
    bad(2, 2) = 2;
    CHECK_THROWS_AS(close_automorphisms(*ctx, {bad}), InputError);
  }

  TEST_CASE("induced actions are representations") {
    const auto ctx = LieContext::free_nilpotent(2, 2);
    const RelFreeContext rf(2, 2, 4);
    const EnvelopingContext env(ctx, 4);
    for (const auto& ng : plane_groups()) {
      CAPTURE(ng.name);
      const MatrixGroup G = MatrixGroup::close(ng.generators, 2);
      const MatrixGroup GL = G.lift(*ctx);
      for (std::size_t d = 1; d <= 3; ++d) {
        check_representation(G, tensor_action(G, d));
        check_representation(G, relfree_action(G, rf, d));
        check_representation(GL, enveloping_action(GL, env, d));
      }
      check_representation(GL, sym_action(GL, ctx->degrees(), {1, 1}));
    }
  }

  TEST_CASE("invariant dimensions agree with character oracles") {
    const auto l1 = LieContext::free_nilpotent(2, 1);
    const RelFreeContext rf1(2, 1, 6);
    const EnvelopingContext env1(l1, 6);
    for (const auto& ng : plane_groups()) {
      CAPTURE(ng.name);
      const MatrixGroup G = MatrixGroup::close(ng.generators, 2);
      const MatrixGroup GL = G.lift(*l1);
      for (std::size_t d = 1; d <= 6; ++d) {
        if (d <= 4) CHECK(Scalar(tensor_action(G, d).checked_invariant_dimension()) == tensor_character_average(G, d));
        const Scalar m = molien(G, d);
        CHECK(Scalar(sym_action(GL, l1->degrees(), {static_cast<std::uint32_t>(d)}).checked_invariant_dimension()) == m);
        CHECK(Scalar(relfree_action(G, rf1, d).checked_invariant_dimension()) == m);
        CHECK(Scalar(enveloping_action(GL, env1, d).checked_invariant_dimension()) == m);
      }
    }
  }

  TEST_CASE("sign group examples") {
    const MatrixGroup pm = MatrixGroup::close({m2(-1, 0, 0, -1)}, 2);
    CHECK(tensor_action(pm, 2).invariant_dimension() == 4);
    CHECK(tensor_action(pm, 3).invariant_dimension() == 0);
    const RelFreeContext rf(2, 2, 4);
    CHECK(relfree_action(pm, rf, 3).checked_invariant_dimension() == 0);
    CHECK(relfree_action(pm, rf, 2).checked_invariant_dimension() == 4);
    // In L_2 the commutator z = [x0, x1] is fixed by −I.
    const auto ctx = LieContext::free_nilpotent(2, 2);
    const MatrixGroup GL = pm.lift(*ctx);
    CHECK(sym_action(GL, ctx->degrees(), {0, 1}).checked_invariant_dimension() == 1);
    CHECK(sym_action(GL, ctx->degrees(), {1, 1}).checked_invariant_dimension() == 0);
    CHECK(sym_action(GL, ctx->degrees(), {2, 0}).reynolds_matrix() == Matrix::identity(3));
  }

  TEST_CASE("Reynolds projector and invariant subspace") {
    const RelFreeContext rf(2, 2, 4);
    for (const auto& ng : plane_groups()) {
      CAPTURE(ng.name);
      const MatrixGroup G = MatrixGroup::close(ng.generators, 2);
      for (std::size_t d = 1; d <= 4; ++d) {
        for (const GradedAction& rho : {tensor_action(G, d), relfree_action(G, rf, d)}) {
          const Matrix& r = rho.reynolds_matrix();
          CHECK(r * r == r);
          for (const auto& g : rho.matrices()) CHECK(g * r == r);
          const Subspace inv = rho.invariant_subspace();
          CHECK(inv == fixed_by_kernel(rho));
          CHECK(inv.dim() == rho.invariant_dimension());
          for (const auto& v : inv.basis()) CHECK(rho.reynolds(v) == v);
        }
      }
    }
  }

  TEST_CASE("oracle tally") {
    reset_oracle_stats();
    const MatrixGroup G = MatrixGroup::close({m2(0, -1, 1, 0)}, 2);
    (void)tensor_action(G, 2).checked_invariant_dimension();
    (void)tensor_action(G, 3).checked_invariant_dimension();
    CHECK(oracle_stats().checks == 2);
    CHECK(oracle_stats().mismatches == 0);
    // A set of matrices that is not a group gives a non-integral trace average.
    const GradedAction fake("fake", 1, {Matrix::from_rows({{1}}), Matrix::from_rows({{0}})});
    CHECK_THROWS_AS(fake.invariant_dimension(), Error);
  }
}
