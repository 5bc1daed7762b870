#include "../common/groups.hpp"

#include "ncinv/comm/invariants.hpp"
#include "ncinv/error.hpp"
#include "ncinv/group/graded_action.hpp"
#include "ncinv/io/json_io.hpp"

#include <doctest.h>

#include <map>

using namespace ncinv;
using ncinv::testing::m2;
using ncinv::testing::plane_groups;

namespace {

CommPolynomial poly(std::size_t vars, std::initializer_list<std::pair<Exponents, long>> terms) {
  CommPolynomial f(vars);
  for (const auto& [e, c] : terms) f.add_term(e, c);
  return f;
}

std::vector<std::size_t> std_degrees(const std::vector<GeneratorRecord>& records) {
  std::vector<std::size_t> out;
  for (const auto& r : records) out.push_back(r.std_degree);
  return out;
}

std::size_t invariant_dim(const MatrixGroup& GL, const LieContext& ctx, const MultiDegree& alpha) {
  return sym_action(GL, ctx.degrees(), alpha).checked_invariant_dimension();
}

}  // namespace

TEST_SUITE("comm") {
  TEST_CASE("invariant bases per multidegree") {
    const auto l1 = LieContext::free_nilpotent(2, 1);
    const MatrixGroup pm = MatrixGroup::close({m2(-1, 0, 0, -1)}, 2).lift(*l1);
    CHECK(invariant_basis_alpha(pm, *l1, {1}).empty());
    CHECK(invariant_basis_alpha(pm, *l1, {2}).size() == 3);

    const MatrixGroup c4 = MatrixGroup::close({m2(0, -1, 1, 0)}, 2).lift(*l1);
    const auto quad = invariant_basis_alpha(c4, *l1, {2});
    REQUIRE(quad.size() == 1);
    CHECK(quad[0] == poly(2, {{{2, 0}, 1}, {{0, 2}, 1}}));
    const auto quartic = invariant_basis_alpha(c4, *l1, {4});
    CHECK(quartic.size() == 3);
    for (const auto& f : quartic) CHECK(is_invariant(c4, f));

    const auto l2 = LieContext::free_nilpotent(2, 2);
    const MatrixGroup pm2 = MatrixGroup::close({m2(-1, 0, 0, -1)}, 2).lift(*l2);
    const auto zs = invariant_basis_alpha(pm2, *l2, {0, 1});
    REQUIRE(zs.size() == 1);
    CHECK(zs[0] == CommPolynomial::variable(3, 2));
    CHECK(invariant_basis_alpha(pm2, *l2, {1, 1}).empty());
  }

  TEST_CASE("minimal generators of classical examples") {
    const auto l1 = LieContext::free_nilpotent(2, 1);
    const std::map<std::string, std::vector<std::size_t>> expected = {
        {"trivial", {1, 1}},       {"minus_identity", {2, 2, 2}}, {"reflection", {1, 2}},
        {"cyclic3", {2, 3, 3}},    {"klein4", {2, 2}},            {"cyclic4", {2, 4, 4}},
        {"cyclic6", {2, 6, 6}},    {"symmetric3", {2, 3}},        {"dihedral8", {2, 4}},
    };
    for (const auto& ng : plane_groups()) {
      CAPTURE(ng.name);
      const MatrixGroup GL = MatrixGroup::close(ng.generators, 2).lift(*l1);
      const auto gens = minimal_generators(GL, *l1, {ng.order, std::nullopt});
      CHECK(std_degrees(gens) == expected.at(ng.name));
      CHECK(beta_commutative(gens) == expected.at(ng.name).back());
      // Past the Noether bound nothing new appears.
      CHECK(minimal_generators(GL, *l1, {ng.order + 2, std::nullopt}) == gens);
    }
    const MatrixGroup c4 = MatrixGroup::close({m2(0, -1, 1, 0)}, 2).lift(*l1);
    const auto gens = minimal_generators(c4, *l1, {4, std::nullopt});
    CHECK(gens[0].poly == poly(2, {{{2, 0}, 1}, {{0, 2}, 1}}));
    CHECK(beta_commutative({}) == 0);
  }

  TEST_CASE("generators saturate, are invariant and are minimal") {
    for (std::size_t p = 1; p <= 2; ++p) {
      const auto ctx = LieContext::free_nilpotent(2, p);
      for (const auto& ng : plane_groups()) {
        if (ng.order > 4) continue;
        CAPTURE(ng.name);
        CAPTURE(p);
        const MatrixGroup GL = MatrixGroup::close(ng.generators, 2).lift(*ctx);
        const auto gens = minimal_generators(GL, *ctx, {ng.order, std::nullopt});
        CHECK_NOTHROW(check_invariance(GL, gens));
        for (std::size_t d = 1; d <= ng.order; ++d)
          for (const auto& alpha : multidegrees_of_total(ctx->degrees(), p, d))
            CHECK(generated_dimension(*ctx, gens, alpha) == invariant_dim(GL, *ctx, alpha));
        for (std::size_t k = 0; k < gens.size(); ++k) {
          auto fewer = gens;
          fewer.erase(fewer.begin() + static_cast<long>(k));
          CHECK(generated_dimension(*ctx, fewer, gens[k].alpha) < invariant_dim(GL, *ctx, gens[k].alpha));
        }
      }
    }
  }

  TEST_CASE("records on the nilpotent Lie algebra") {
    const auto l2 = LieContext::free_nilpotent(2, 2);
    const MatrixGroup pm = MatrixGroup::close({m2(-1, 0, 0, -1)}, 2).lift(*l2);
    const auto gens = minimal_generators(pm, *l2, {2, std::nullopt});
    REQUIRE(gens.size() == 4);
    std::size_t from_z = 0;
    for (const auto& r : gens)
      if (r.alpha == MultiDegree{0, 1}) {
        ++from_z;
        CHECK(r.std_degree == 1);
        CHECK(r.f_degree == 2);
      } else {
        CHECK(r.alpha == MultiDegree{2, 0});
        CHECK(r.f_degree == 2);
      }
    CHECK(from_z == 1);
    const auto capped = minimal_generators(pm, *l2, {2, std::size_t{1}});
    CHECK(capped.empty());
  }

  TEST_CASE("record validation") {
    const auto l2 = LieContext::free_nilpotent(2, 2);
    const GeneratorRecord r = make_record(*l2, poly(3, {{{1, 1, 1}, 2}}));
    CHECK(r.alpha == MultiDegree{2, 1});
    CHECK(r.std_degree == 3);
    CHECK(r.f_degree == 4);
    CHECK_THROWS_AS(make_record(*l2, CommPolynomial(3)), InputError);
    CHECK_THROWS_AS(make_record(*l2, poly(3, {{{1, 0, 0}, 1}, {{0, 0, 1}, 1}})), InputError);
    // Same standard degree, different multidegree.
    CHECK_THROWS_AS(make_record(*l2, poly(3, {{{2, 0, 0}, 1}, {{1, 0, 1}, 1}})), InputError);

    const auto l1 = LieContext::free_nilpotent(2, 1);
    const MatrixGroup c4 = MatrixGroup::close({m2(0, -1, 1, 0)}, 2).lift(*l1);
    CHECK_FALSE(is_invariant(c4, poly(2, {{{1, 1}, 1}})));
    CHECK(is_invariant(c4, poly(2, {{{3, 1}, 1}, {{1, 3}, -1}})));
    CHECK_THROWS_AS(check_invariance(c4, {make_record(*l1, poly(2, {{{1, 1}, 1}}))}), InputError);
  }

  TEST_CASE("JSON round trip of generator records") {
    const auto l2 = LieContext::free_nilpotent(2, 2);
    const MatrixGroup s3 = MatrixGroup::close({m2(-1, 1, 0, 1), m2(1, 0, 1, -1)}, 2).lift(*l2);
    const auto gens = minimal_generators(s3, *l2, {4, std::nullopt});
    REQUIRE_FALSE(gens.empty());
    const json j = records_to_json(gens);
    const auto back = records_from_json(j, *l2);
    CHECK(back == gens);
    CHECK(records_to_json(back).dump() == j.dump());
    CHECK(json::parse(j.dump()) == j);

    json broken = j;
    broken[0]["alpha"] = json::array({9, 9});
    CHECK_THROWS_AS(records_from_json(broken, *l2), InputError);
  }
}
