// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.
#include "../common/groups.hpp"

#include "ncinv/algebra/canonical_maps.hpp"
#include "ncinv/group/graded_action.hpp"
#include "ncinv/io/runner.hpp"
#include "ncinv/lie/lyndon.hpp"
#include "ncinv/pipeline/pipeline.hpp"
#include "ncinv/polarize/polarize.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

using namespace ncinv;
using ncinv::testing::plane_groups;

namespace {

constexpr std::size_t kDegree = 6;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Key {
  std::string group;
  std::size_t p;
  friend bool operator<(const Key& a, const Key& b) { return std::tie(a.group, a.p) < std::tie(b.group, b.p); }
};

std::map<Key, PipelineResult> g_f_results;

PipelineOptions options() {
  PipelineOptions o;
  o.max_degree = kDegree;
  o.verify_degree = kDegree;
  return o;
}

Outcome generation_in_F() {
  Outcome out;
  for (const auto& ng : plane_groups()) {
    const MatrixGroup G = MatrixGroup::close(ng.generators, 2);
    if (G.order() != ng.order) out.fail(ng.name + " closed to the wrong order");
    for (std::size_t p = 1; p <= 3; ++p) {
      PipelineResult r = construct_invariants_F(G, p, options());
      if (!r.verification.pass()) {
        const auto d = r.verification.first_failure();
        out.fail(ng.name + " p=" + std::to_string(p) + " fails at degree " + std::to_string(d.value_or(0)));
      }
      if (r.verification.max_checked_degree != kDegree) out.fail("verification stopped early");
      for (const auto& g : r.generators)
        if (g.f_degree != weighted_degree(g.source.alpha)) out.fail("degree formula violated");
      g_f_results.emplace(Key{ng.name, p}, std::move(r));
    }
  }
  return out;
}

Outcome generation_in_U() {
  Outcome out;
  for (const auto& ng : plane_groups()) {
    const MatrixGroup G = MatrixGroup::close(ng.generators, 2);
    for (std::size_t p = 1; p <= 3; ++p) {
      const RelFreeSetup setup = make_relfree_setup(2, p, kDegree);
      const PipelineResult u = construct_invariants_U(setup.lie, G.lift(*setup.lie), options());
      const std::string tag = ng.name + " p=" + std::to_string(p);
      if (!u.verification.pass()) out.fail(tag + " U verification failed");
      const auto compat = gamma_compatible(setup.rf, g_f_results.at({ng.name, p}), u, kDegree);
      for (std::size_t d = 0; d < compat.size(); ++d)
        if (!compat[d]) out.fail(tag + " gamma image differs in degree " + std::to_string(d + 1));
    }
  }
  return out;
}

Outcome degree_bounds() {
  Outcome out;
  for (const auto& [key, r] : g_f_results) {
    const BoundReport& b = r.bounds;
    if (!(b.beta_nc <= b.p * b.beta_comm) || !b.inequality_pbeta)
      out.fail(key.group + " p=" + std::to_string(key.p) + " beta_nc > p*beta_comm");
    if (!b.group_order || !(b.beta_nc <= b.p * *b.group_order) || !b.inequality_noether.value_or(false))
      out.fail(key.group + " p=" + std::to_string(key.p) + " beta_nc > p*|G|");
    if (key.p == 1 && b.beta_nc != b.beta_comm) out.fail(key.group + " p=1 beta_nc differs from beta_comm");
  }
  const BoundReport& sign = g_f_results.at({"minus_identity", 2}).bounds;
  if (sign.beta_nc != 2 || sign.p * sign.beta_comm != 4 || sign.p * *sign.group_order != 4)
    out.fail("{±I}, p=2: beta_nc=" + std::to_string(sign.beta_nc) + ", bound " +
             std::to_string(sign.p * sign.beta_comm));
  return out;
}

Outcome dimension_oracles() {
  Outcome out;
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t d = 1; d <= 6; ++d)
      if (lyndon_words(n, d).size() != witt(n, d)) out.fail("Lyndon count n=" + std::to_string(n));
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t p = 1; p <= 3; ++p) {
      RelFreeContext rf(n, p, p);
      std::size_t nd = 1;
      for (std::size_t d = 0; d <= p; ++d, nd *= n)
        if (dim_F(rf, d) != nd) out.fail("dim F below the identity degree");
    }
  if (dim_F(RelFreeContext(2, 2, 3), 3) != 6) out.fail("dim F(N_2, K^2)_3 != 6");
  EnvelopingContext env2(LieContext::free_nilpotent(2, 2), 3);
  if (dim_U(env2, 3) != 6 || env2.pbw_basis(3).size() != 6) out.fail("dim U(L_2(K^2))_3 != 6");

  // ω on a basis of S^d(L): the length-d parts of the images are independent.
  for (std::size_t p = 1; p <= 3; ++p) {
    const auto lie = LieContext::free_nilpotent(2, p);
    auto env = std::make_shared<EnvelopingContext>(lie, 3 * 4);
    for (std::size_t d = 1; d <= 4; ++d) {
      std::size_t count = 0;
      std::map<Word, std::size_t> cols;
      std::vector<std::map<Word, Scalar>> rows;
      for (const auto& alpha : multidegrees_of_total(lie->degrees(), p, d))
        for (const auto& e : monomial_basis(lie->degrees(), alpha)) {
          ++count;
          std::map<Word, Scalar> lead;
          const NCPolynomial image = omega(env, CommPolynomial(lie->dim(), {{e, 1}}));
          for (const auto& [w, c] : image.terms())
            if (w.size() == d) {
              lead.emplace(w, c);
              cols.emplace(w, cols.size());
            }
          rows.push_back(std::move(lead));
        }
      Subspace span(cols.size());
      for (const auto& row : rows) {
        Vector v(cols.size());
        for (const auto& [w, c] : row) v[cols.at(w)] = c;
        span.insert(v);
      }
      if (span.dim() != count) out.fail("omega leading parts dependent, p=" + std::to_string(p));
    }
  }
  return out;
}

Outcome weyl_polarization(std::string& reports) {
  Outcome out;
  struct Case {
    std::string name;
    std::vector<Matrix> gens;  // on U + W
    std::size_t dim_u, dim_w;
  };
  std::vector<Case> cases;
  for (const auto& ng : testing::line_groups()) cases.push_back({ng.name + " on K^1", ng.generators, 0, 1});
  for (const auto& ng : plane_groups()) cases.push_back({ng.name + " on K^2", ng.generators, 0, 2});
  cases.push_back({"sign with trivial U", {Matrix::from_rows({{1, 0}, {0, -1}})}, 1, 1});
  for (const auto& c : cases) {
    const MatrixGroup G = MatrixGroup::close(c.gens, c.dim_u + c.dim_w);
    for (std::size_t m = 1; m <= 3; ++m) {
      const PolarizationReport r = verify_polarization(G, c.dim_u, c.dim_w, 1, 1, m, 4);
      if (!r.verification.pass())
        out.fail(c.name + " m=" + std::to_string(m) + " fails at degree " +
                 std::to_string(r.verification.first_failure().value_or(0)));
    }
  }
  // Nilpotency class 2 with a user-chosen h: recorded, never asserted.
  const MatrixGroup sign = MatrixGroup::close({Matrix::from_rows({{-1}})}, 1);
  const PolarizationReport r2 = verify_polarization(sign, 0, 1, 2, 2, 3, 4);
  reports += "REPORT p=2 h=2 sign on K^1, 2 -> 3 copies through degree 4: ";
  reports += r2.verification.pass() ? "generated\n" : "not generated\n";
  return out;
}

Outcome determinism() {
  Outcome out;
  const std::vector<json> configs = {
      {{"mode", "relfree"}, {"dim_v", 2}, {"p", 2}, {"group", {{"generators", {{{-1, 0}, {0, -1}}}}}}},
      {{"mode", "enveloping"}, {"dim_v", 2}, {"p", 3}, {"group", {{"generators", {{{0, -1}, {1, 0}}}}}}},
      {{"mode", "comm-only"}, {"dim_v", 2}, {"p", 2}, {"group", {{"generators", {{{0, -1}, {1, -1}}}}}}},
      {{"mode", "polarize"},
       {"p", 1},
       {"group", {{"generators", {{{-1}}}}}},
       {"polarize", {{"dim_w", 1}, {"copies_target", 2}, {"h", 1}}}},
      {{"mode", "dims"}, {"dim_v", 3}, {"p", 2}, {"caps", {{"max_degree", 4}}}},
  };
  for (const auto& j : configs) {
    const RunConfig c = parse_config(j);
    const std::string first = run_config(c).result.dump(2);
    const std::string second = run_config(c).result.dump(2);
    if (first != second) out.fail("mode " + mode_name(c.mode) + " output differs between runs");
  }
  return out;
}

}  // namespace

int main() {
  reset_oracle_stats();
  const auto start = std::chrono::steady_clock::now();
  std::string reports;
  struct Criterion {
    const char* id;
    const char* what;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "F(N_p,K^2)^G generated by the mapped commutative generators through degree 6", generation_in_F},
      {"AC2", "U(L_p(K^2))^G generated through degree 6; gamma image spans the same subalgebra", generation_in_U},
      {"AC3", "beta_nc <= p*beta_comm and beta_nc <= p*|G|; {±I}, p=2 gives 2 against 4", degree_bounds},
      {"AC4", "Lyndon/Witt counts, dim F and dim U oracles, omega leading-term independence", dimension_oracles},
      {"AC5", "p=1 polarization from dim W copies generates the invariants of m <= 3 copies",
       [&] { return weyl_polarization(reports); }},
      {"AC6", "repeated runs give byte-identical results", determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::printf("%s %s %s%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.what, o.pass ? "" : " -- ", o.detail.c_str());
  }
  const OracleStats stats = oracle_stats();
  const bool oracles = stats.checks > 0 && stats.mismatches == 0;
  all = all && oracles;
  std::printf("AC7 %s trace-average and Reynolds-rank invariant dimensions agree (%zu checks, %zu mismatches)\n",
              oracles ? "PASS" : "FAIL", stats.checks, stats.mismatches);
  std::fputs(reports.c_str(), stdout);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("elapsed %.1f s\n", secs);
  return all ? 0 : 1;
}
