#include "ncinv/error.hpp"
#include "ncinv/io/runner.hpp"
#include "ncinv/lie/lie_context.hpp"
#include "ncinv/selftest.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

struct Flags {
  std::string config;
  std::string out;
  std::optional<std::size_t> max_degree;
  std::optional<std::size_t> verify_degree;
  std::optional<std::size_t> group_cap;
  bool quiet = false;
  std::uint64_t seed = 1;
  std::size_t n = 2;
  std::size_t p = 2;
};

void add_run_flags(CLI::App* cmd, Flags& f, bool config_required) {
  auto* opt = cmd->add_option("--config", f.config, "JSON run configuration")->check(CLI::ExistingFile);
  if (config_required) opt->required();
  cmd->add_option("--max-degree", f.max_degree, "degree cap for noncommutative components");
  cmd->add_option("--verify-degree", f.verify_degree, "verify generation through this degree");
  cmd->add_option("--group-cap", f.group_cap, "largest group order accepted by the closure");
}

void apply_overrides(ncinv::RunConfig& c, const Flags& f) {
  if (f.max_degree) c.max_degree = *f.max_degree;
  if (f.verify_degree) c.verify_degree = *f.verify_degree;
  if (f.group_cap) c.group_cap = *f.group_cap;
}

void emit(const ncinv::json& result, const std::string& summary, const Flags& f) {
  const std::string text = result.dump(2) + "\n";
  if (!f.out.empty()) {
    std::ofstream out(f.out, std::ios::binary);
    if (!out) throw ncinv::InputError("cannot write " + f.out);
    out << text;
    if (!f.quiet) std::cout << summary;
  } else {
    std::cout << text;
    if (!f.quiet) std::cerr << summary;
  }
}

int run_with(const Flags& f, std::optional<ncinv::Mode> forced) {
  ncinv::RunConfig c = ncinv::load_config(f.config);
  if (forced) c.mode = *forced;
  apply_overrides(c, f);
  const ncinv::RunOutput r = ncinv::run_config(c);
  emit(r.result, r.summary, f);
  return ncinv::exit_code(r.status);
}

int run_dims_or_basis(const Flags& f, bool basis) {
  std::size_t n = f.n, p = f.p, max_degree = f.max_degree.value_or(6);
  if (!f.config.empty()) {
    ncinv::RunConfig c = ncinv::load_config(f.config);
    apply_overrides(c, f);
    n = c.dim_v;
    p = c.p;
    max_degree = c.max_degree;
  }
  if (basis) {
    const auto ctx = ncinv::LieContext::free_nilpotent(n, p);
    const ncinv::json j = ncinv::lie_basis_to_json(*ctx);
    emit(j, "L_" + std::to_string(p) + "(K^" + std::to_string(n) + "): dimension " + std::to_string(ctx->dim()) + "\n",
         f);
    return 0;
  }
  const ncinv::json j = ncinv::dims_table(n, p, max_degree);
  std::string summary = "degree  dim_T  dim_L  dim_F  dim_U\n";
  for (const auto& row : j["degrees"])
    summary += std::to_string(row["degree"].get<std::size_t>()) + "  " + std::to_string(row["dim_T"].get<std::size_t>()) +
               "  " + std::to_string(row["dim_L"].get<std::size_t>()) + "  " +
               std::to_string(row["dim_F"].get<std::size_t>()) + "  " +
               std::to_string(row["dim_U"].get<std::size_t>()) + "\n";
  emit(j, summary, f);
  return 0;
}

int run_selftest(const Flags& f) {
  const auto cases = ncinv::run_selftest(f.seed);
  ncinv::json arr = ncinv::json::array();
  std::string summary;
  bool ok = true;
  for (const auto& c : cases) {
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    summary += std::string(c.passed ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")") + "\n";
    ok = ok && c.passed;
  }
  emit({{"seed", f.seed}, {"cases", std::move(arr)}, {"status", ok ? "PASS" : "FAIL"}}, summary, f);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_default_logger(spdlog::stderr_color_mt("ncinv"));
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("LOG_LEVEL")) spdlog::set_level(spdlog::level::from_str(level));

  CLI::App app{"Generators of invariants in relatively free nilpotent algebras and enveloping algebras"};
  app.require_subcommand(1);
  Flags f;
  app.add_flag("--quiet", f.quiet, "suppress the text summary");
  app.add_option("--out", f.out, "write the JSON result here");

  auto* run = app.add_subcommand("run", "run the mode named in the config");
  add_run_flags(run, f, true);
  auto* comm = app.add_subcommand("comm", "minimal generators of the commutative invariants");
  add_run_flags(comm, f, true);
  auto* verify = app.add_subcommand("verify", "construct and verify generators of F^G");
  add_run_flags(verify, f, true);
  auto* polarize = app.add_subcommand("polarize", "polarization run from the config's polarize section");
  add_run_flags(polarize, f, true);
  auto* dims = app.add_subcommand("dims", "dimensions of T, L, F and U per degree");
  add_run_flags(dims, f, false);
  dims->add_option("--n", f.n, "dim V")->check(CLI::PositiveNumber);
  dims->add_option("--p", f.p, "nilpotency class")->check(CLI::PositiveNumber);
  auto* basis = app.add_subcommand("lie-basis", "Lyndon basis and structure constants of L_p(K^n)");
  add_run_flags(basis, f, false);
  basis->add_option("--n", f.n, "dim V")->check(CLI::PositiveNumber);
  basis->add_option("--p", f.p, "nilpotency class")->check(CLI::PositiveNumber);
  auto* selftest = app.add_subcommand("selftest", "randomized property checks");
  selftest->add_option("--seed", f.seed, "random seed");

  for (auto* sub : {run, comm, verify, polarize, dims, basis, selftest}) {
    sub->add_flag("--quiet", f.quiet, "suppress the text summary");
    sub->add_option("--out", f.out, "write the JSON result here");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*run) return run_with(f, std::nullopt);
    if (*comm) return run_with(f, ncinv::Mode::CommOnly);
    if (*verify) {
      ncinv::RunConfig c = ncinv::load_config(f.config);
      return run_with(f, c.mode == ncinv::Mode::Enveloping ? ncinv::Mode::Enveloping : ncinv::Mode::RelFree);
    }
    if (*polarize) return run_with(f, ncinv::Mode::Polarize);
    if (*dims) return run_dims_or_basis(f, false);
    if (*basis) return run_dims_or_basis(f, true);
    if (*selftest) return run_selftest(f);
  } catch (const ncinv::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ncinv::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const ncinv::OracleMismatch& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n";
    return 1;
  } catch (const ncinv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
