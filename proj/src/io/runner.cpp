#include "ncinv/io/runner.hpp"

#include "ncinv/algebra/canonical_maps.hpp"
#include "ncinv/error.hpp"
#include "ncinv/group/graded_action.hpp"
#include "ncinv/lie/lyndon.hpp"
#include "ncinv/pipeline/pipeline.hpp"
#include "ncinv/polarize/polarize.hpp"

#include <spdlog/spdlog.h>

#include <sstream>

namespace ncinv {

namespace {

MatrixGroup close_group(const RunConfig& c, std::size_t dim) {
  const MatrixGroup G = MatrixGroup::close(*c.group, dim, c.group_cap);
  spdlog::debug("group closed: order {}", G.order());
  return G;
}

PipelineOptions options_of(const RunConfig& c) {
  PipelineOptions o;
  o.degree_bound = c.degree_bound;
  o.max_degree = c.max_degree;
  o.verify_degree = c.verify_degree;
  return o;
}

std::string pipeline_summary(const PipelineResult& r, const std::string& algebra) {
  std::ostringstream out;
  out << algebra << ": " << r.records.size() << " commutative generators (D = " << r.degree_bound << "), "
      << r.generators.size() << " generators after pruning";
  if (r.truncated) out << " (complete through degree " << r.complete_through_degree << ")";
  out << "\n";
  for (const auto& c : r.verification.degrees) {
    out << "  degree " << c.degree << ": subalgebra " << c.dim_subalgebra;
    if (c.dim_invariant) out << ", invariants " << *c.dim_invariant << (c.equal ? "" : "  <-- mismatch");
    out << "\n";
  }
  const BoundReport& b = r.bounds;
  out << "  beta_comm = " << b.beta_comm << ", beta_nc = " << b.beta_nc << ", p*beta_comm = " << b.p * b.beta_comm;
  if (b.group_order) out << ", p*|G| = " << b.p * *b.group_order;
  out << "\n";
  return out.str();
}

RunStatus verdict(const VerificationReport& v) {
  if (!v.performed) return RunStatus::Ok;
  return v.pass() ? RunStatus::Pass : RunStatus::Fail;
}

json input_echo(const RunConfig& c) {
  json in = {{"mode", mode_name(c.mode)}, {"dim_v", c.dim_v}, {"p", c.p}};
  in["degree_bound"] = c.degree_bound ? json(*c.degree_bound) : json(nullptr);
  in["verify_degree"] = c.verify_degree ? json(*c.verify_degree) : json(nullptr);
  in["caps"] = {{"group_order", c.group_cap}, {"max_degree", c.max_degree}};
  if (c.group) {
    json gens = json::array();
    for (const auto& g : *c.group) gens.push_back(matrix_to_json(g));
    in["group"] = {{"generators", std::move(gens)}};
  }
  if (c.external_generators) in["external_generators"] = c.external_generators->filename().string();
  return in;
}

RunOutput run_dims(const RunConfig& c) {
  RunOutput out;
  if (c.lie_algebra) {
    const auto lie = lie_context_from_json(*c.lie_algebra);
    EnvelopingContext env(lie, c.max_degree);
    json rows = json::array();
    for (std::size_t d = 0; d <= c.max_degree; ++d) rows.push_back({{"degree", d}, {"dim_U", env.dim(d)}});
    out.result = {{"degrees", std::move(rows)}};
  } else {
    out.result = dims_table(c.dim_v, c.p, c.max_degree);
  }
  std::ostringstream s;
  for (const auto& row : out.result["degrees"]) s << row.dump() << "\n";
  out.summary = s.str();
  return out;
}

RunOutput run_comm(const RunConfig& c) {
  const auto lie = c.lie_algebra ? lie_context_from_json(*c.lie_algebra) : LieContext::free_nilpotent(c.dim_v, c.p);
  std::optional<MatrixGroup> G_L;
  if (c.group) {
    G_L = c.lie_algebra ? close_automorphisms(*lie, *c.group, c.group_cap) : close_group(c, c.dim_v).lift(*lie);
  }
  std::vector<GeneratorRecord> records;
  std::size_t D = 0;
  if (c.external_generators) {
    records = import_external_generators(*c.external_generators, *lie);
    if (G_L) check_invariance(*G_L, records);
    D = c.degree_bound.value_or(beta_commutative(records));
  } else {
    D = c.degree_bound.value_or(G_L->order());
    records = minimal_generators(*G_L, *lie, {D, std::nullopt});
  }
  RunOutput out;
  json checks = json::array();
  bool pass = true;
  if (G_L) {
    for (std::size_t d = 1; d <= D; ++d)
      for (const auto& alpha : multidegrees_of_total(lie->degrees(), lie->max_degree(), d)) {
        const std::size_t inv = sym_action(*G_L, lie->degrees(), alpha).checked_invariant_dimension();
        const std::size_t gen = generated_dimension(*lie, records, alpha);
        pass = pass && inv == gen;
        checks.push_back({{"alpha", alpha}, {"dim_generated", gen}, {"dim_invariant", inv}, {"equal", inv == gen}});
      }
  }
  out.result = {{"degree_bound", D},
                {"group_order", G_L ? json(G_L->order()) : json(nullptr)},
                {"generators", records_to_json(records)},
                {"beta_comm", beta_commutative(records)},
                {"saturation", std::move(checks)}};
  out.status = G_L ? (pass ? RunStatus::Pass : RunStatus::Fail) : RunStatus::Ok;
  std::ostringstream s;
  s << "S(L)^G: " << records.size() << " minimal generators through standard degree " << D
    << ", beta_comm = " << beta_commutative(records) << "\n";
  out.summary = s.str();
  return out;
}

RunOutput run_relfree(const RunConfig& c) {
  std::optional<MatrixGroup> G;
  if (c.group) G = close_group(c, c.dim_v);
  PipelineResult r;
  if (c.external_generators) {
    const auto setup = make_relfree_setup(c.dim_v, c.p, c.max_degree);
    auto records = import_external_generators(*c.external_generators, *setup.lie);
    r = construct_invariants_F(c.dim_v, c.p, std::move(records), G ? &*G : nullptr, options_of(c));
  } else {
    r = construct_invariants_F(*G, c.p, options_of(c));
  }
  RunOutput out;
  out.result = pipeline_to_json(r);
  out.status = verdict(r.verification);
  out.summary = pipeline_summary(r, "F(N_" + std::to_string(c.p) + ", K^" + std::to_string(c.dim_v) + ")^G");
  return out;
}

RunOutput run_enveloping(const RunConfig& c) {
  RunOutput out;
  if (c.lie_algebra) {
    const auto lie = lie_context_from_json(*c.lie_algebra);
    const MatrixGroup G_L = close_automorphisms(*lie, *c.group, c.group_cap);
    const PipelineResult u = construct_invariants_U(lie, G_L, options_of(c));
    out.result = pipeline_to_json(u);
    out.status = verdict(u.verification);
    out.summary = pipeline_summary(u, "U(L)^G");
    return out;
  }
  const MatrixGroup G = close_group(c, c.dim_v);
  const auto setup = make_relfree_setup(c.dim_v, c.p, c.max_degree);
  const PipelineResult u = construct_invariants_U(setup.lie, G.lift(*setup.lie), options_of(c));
  const PipelineResult f = construct_invariants_F(G, c.p, options_of(c));
  const auto compat = gamma_compatible(setup.rf, f, u, u.verification.max_checked_degree);
  bool all = true;
  json flags = json::array();
  for (bool b : compat) {
    flags.push_back(b);
    all = all && b;
  }
  out.result = pipeline_to_json(u);
  out.result["gamma_compatible"] = std::move(flags);
  out.status = verdict(u.verification);
  if (out.status == RunStatus::Pass && !all) out.status = RunStatus::Fail;
  out.summary = pipeline_summary(u, "U(L_" + std::to_string(c.p) + "(K^" + std::to_string(c.dim_v) + "))^G") +
                "  gamma image spans the F generators' subalgebra: " + (all ? "yes" : "no") + "\n";
  return out;
}

RunOutput run_polarize(const RunConfig& c) {
  const PolarizeConfig& pc = *c.polarize;
  const MatrixGroup G = close_group(c, pc.dim_u + pc.dim_w);
  const std::size_t d_max = c.verify_degree.value_or(c.max_degree);
  const PolarizationReport r =
      verify_polarization(G, pc.dim_u, pc.dim_w, pc.h, c.p, pc.copies_target, d_max, pc.copies_source);
  RunOutput out;
  out.result = polarization_to_json(r);
  out.status = r.asserted ? (r.verification.pass() ? RunStatus::Pass : RunStatus::Fail) : RunStatus::Report;
  std::ostringstream s;
  s << "polarization " << r.source.copies << " -> " << r.target.copies << " copies (p = " << r.p << ", h = " << r.h
    << "): " << r.source_generators << " source generators, " << r.polarized_generators << " after closure\n";
  for (const auto& d : r.verification.degrees)
    s << "  degree " << d.degree << ": subalgebra " << d.dim_subalgebra << ", invariants " << d.dim_invariant.value_or(0)
      << (d.equal ? "" : "  <-- mismatch") << "\n";
  if (!r.asserted) s << "  p >= 2: reported only\n";
  out.summary = s.str();
  return out;
}

}  // namespace

std::string status_name(RunStatus s) {
  switch (s) {
    case RunStatus::Ok:
      return "OK";
    case RunStatus::Pass:
      return "PASS";
    case RunStatus::Fail:
      return "FAIL";
    case RunStatus::Report:
      return "REPORT";
  }
  return "";
}

int exit_code(RunStatus s) { return s == RunStatus::Fail ? 1 : 0; }

json dims_table(std::size_t n, std::size_t p, std::size_t max_degree) {
  const auto setup = make_relfree_setup(n, p, max_degree);
  EnvelopingContext env(setup.lie, max_degree);
  json rows = json::array();
  for (std::size_t d = 0; d <= max_degree; ++d) {
    std::size_t dim_t = 1;
    for (std::size_t i = 0; i < d; ++i) dim_t *= n;
    rows.push_back({{"degree", d},
                    {"dim_T", dim_t},
                    {"dim_L", d >= 1 && d <= p ? setup.lie->basis_of_degree(d).size() : 0},
                    {"dim_F", dim_F(*setup.rf, d)},
                    {"dim_U", dim_U(env, d)}});
  }
  return {{"n", n}, {"p", p}, {"degrees", std::move(rows)}};
}

RunOutput run_config(const RunConfig& config) {
  validate(config);
  spdlog::debug("running mode {}", mode_name(config.mode));
  RunOutput out;
  switch (config.mode) {
    case Mode::Dims:
      out = run_dims(config);
      break;
    case Mode::CommOnly:
      out = run_comm(config);
      break;
    case Mode::RelFree:
      out = run_relfree(config);
      break;
    case Mode::Enveloping:
      out = run_enveloping(config);
      break;
    case Mode::Polarize:
      out = run_polarize(config);
      break;
  }
  json full = {{"input", input_echo(config)}, {"status", status_name(out.status)}, {"result", std::move(out.result)}};
  out.result = std::move(full);
  out.summary += status_name(out.status) + "\n";
  return out;
}

}  // namespace ncinv
