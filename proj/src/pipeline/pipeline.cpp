#include "ncinv/pipeline/pipeline.hpp"

#include "ncinv/error.hpp"
#include "ncinv/group/graded_action.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>

namespace ncinv {

bool VerificationReport::pass() const {
  if (!performed || !invariance) return false;
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeCheck& c) { return c.equal; });
}

std::optional<std::size_t> VerificationReport::first_failure() const {
  for (const auto& c : degrees)
    if (!c.equal) return c.degree;
  return std::nullopt;
}

RelFreeSetup make_relfree_setup(std::size_t n, std::size_t p, std::size_t max_degree) {
  // Contexts are immutable apart from their internally locked caches, so runs
  // with the same shape share them.
  static std::mutex mutex;
  static std::map<std::tuple<std::size_t, std::size_t, std::size_t>, RelFreeSetup> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, p, max_degree}];
  if (!slot.lie) {
    slot.lie = LieContext::free_nilpotent(n, p);
    slot.rf = std::make_shared<RelFreeContext>(n, p, max_degree);
  }
  return slot;
}

std::vector<std::size_t> prune(const Arena& arena, const std::vector<NCPolynomial>& candidates,
                               std::size_t max_degree) {
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return candidates[a].degree().value_or(0) < candidates[b].degree().value_or(0);
  });
  SubalgebraSpan span(arena, max_degree);
  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    const NCPolynomial& c = candidates[i];
    if (c.is_zero() || span.contains(c, *c.degree())) continue;
    span.add_generator(c);
    kept.push_back(i);
  }
  return kept;
}

bool verify_invariance(const MatrixGroup& G, const std::vector<NCPolynomial>& gens) {
  for (const auto& f : gens)
    for (const auto& g : G.elements())
      if (!(act(g, f) == f)) return false;
  return true;
}

VerificationReport verify_generation(const MatrixGroup& G, const Arena& arena, const std::vector<NCPolynomial>& gens,
                                     std::size_t d_max) {
  SubalgebraSpan span(arena, d_max);
  for (const auto& g : gens)
    if (!g.is_zero() && *g.degree() <= d_max) span.add_generator(g);
  VerificationReport report;
  report.performed = true;
  report.max_checked_degree = d_max;
  for (std::size_t d = 1; d <= d_max; ++d) {
    DegreeCheck check;
    check.degree = d;
    check.dim_subalgebra = span.dim(d);
    switch (arena.kind()) {
      case ArenaKind::Tensor:
        check.dim_invariant = tensor_action(G, d).checked_invariant_dimension();
        break;
      case ArenaKind::RelFree:
        check.dim_invariant = relfree_action(G, arena.relfree_context(), d).checked_invariant_dimension();
        break;
      case ArenaKind::Enveloping:
        check.dim_invariant = enveloping_action(G, arena.enveloping_context(), d).checked_invariant_dimension();
        break;
    }
    check.equal = check.dim_subalgebra == *check.dim_invariant;
    report.degrees.push_back(check);
  }
  report.invariance = verify_invariance(G, gens);
  return report;
}

BoundReport bound_report(std::size_t beta_comm, std::size_t beta_nc, std::size_t p,
                         std::optional<std::size_t> group_order) {
  BoundReport b;
  b.beta_comm = beta_comm;
  b.beta_nc = beta_nc;
  b.p = p;
  b.group_order = group_order;
  b.inequality_pbeta = beta_nc <= p * beta_comm;
  if (group_order) b.inequality_noether = beta_nc <= p * *group_order;
  return b;
}

namespace {

std::size_t resolve_verify_degree(const PipelineOptions& options, std::size_t p, std::size_t D) {
  const std::size_t d = options.verify_degree.value_or(std::min(p * D, options.max_degree));
  if (d > options.max_degree)
    throw CapExceeded("verify degree " + std::to_string(d) + " exceeds max_degree cap " +
                      std::to_string(options.max_degree));
  return d;
}

// Shared tail of both pipelines: map records, prune, verify, bound.
template <typename MapRecord>
PipelineResult finish(ArenaKind kind, const Arena& arena, std::vector<GeneratorRecord> records, std::size_t D,
                      std::size_t p, const MatrixGroup* G, const PipelineOptions& options, MapRecord&& map_record) {
  PipelineResult result;
  result.arena = kind;
  result.degree_bound = D;
  result.records = std::move(records);

  std::vector<NCPolynomial> candidates;
  std::vector<std::size_t> source;
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const auto& r = result.records[i];
    if (r.f_degree > options.max_degree) {
      result.truncated = true;
      continue;
    }
    NCPolynomial nc = map_record(r);
    if (nc.is_zero()) {
      ++result.dropped_zero;
      continue;
    }
    candidates.push_back(std::move(nc));
    source.push_back(i);
  }
  for (std::size_t k : prune(arena, candidates, options.max_degree)) {
    const auto& r = result.records[source[k]];
    result.generators.push_back({candidates[k], r, r.f_degree});
  }
  result.pruned = candidates.size() - result.generators.size();
  result.complete_through_degree = result.truncated ? options.max_degree : p * D;

  std::vector<NCPolynomial> gens;
  std::size_t beta_nc = 0;
  for (const auto& g : result.generators) {
    gens.push_back(g.nc);
    beta_nc = std::max(beta_nc, g.f_degree);
  }
  const std::size_t d_max = resolve_verify_degree(options, p, D);
  if (G) {
    result.verification = verify_generation(*G, arena, gens, d_max);
  } else {
    SubalgebraSpan span(arena, d_max);
    for (const auto& g : gens)
      if (*g.degree() <= d_max) span.add_generator(g);
    result.verification.max_checked_degree = d_max;
    for (std::size_t d = 1; d <= d_max; ++d) result.verification.degrees.push_back({d, span.dim(d), std::nullopt, false});
  }
  result.bounds = bound_report(beta_commutative(result.records), beta_nc, p,
                               G ? std::optional<std::size_t>(G->order()) : std::nullopt);
  return result;
}

}  // namespace

PipelineResult construct_invariants_F(const MatrixGroup& G, std::size_t p, const PipelineOptions& options) {
  const RelFreeSetup setup = make_relfree_setup(G.dim(), p, options.max_degree);
  const MatrixGroup G_L = G.lift(*setup.lie);
  const std::size_t D = options.degree_bound.value_or(G.order());
  auto records = minimal_generators(G_L, *setup.lie, {D, options.weighted_cap});
  return finish(ArenaKind::RelFree, Arena::relfree(setup.rf), std::move(records), D, p, &G, options,
                [&](const GeneratorRecord& r) { return pi_F(*setup.lie, setup.rf, iota_alpha(*setup.lie, r.poly)); });
}

PipelineResult construct_invariants_F(std::size_t n, std::size_t p, std::vector<GeneratorRecord> records,
                                      const MatrixGroup* G, const PipelineOptions& options) {
  const RelFreeSetup setup = make_relfree_setup(n, p, options.max_degree);
  if (G) {
    if (G->dim() != n) throw InputError("group dimension does not match dim_v");
    check_invariance(G->lift(*setup.lie), records);
  }
  const std::size_t D = options.degree_bound.value_or(beta_commutative(records));
  return finish(ArenaKind::RelFree, Arena::relfree(setup.rf), std::move(records), D, p, G, options,
                [&](const GeneratorRecord& r) { return pi_F(*setup.lie, setup.rf, iota_alpha(*setup.lie, r.poly)); });
}

PipelineResult construct_invariants_U(const std::shared_ptr<const LieContext>& lie, const MatrixGroup& G_L,
                                      const PipelineOptions& options) {
  if (G_L.dim() != lie->dim()) throw InputError("group does not act on the Lie basis");
  for (std::size_t i = 0; i < G_L.generators().size(); ++i)
    if (!lie->is_graded_automorphism(G_L.generators()[i]))
      throw InputError("group generator " + std::to_string(i) + " is not a graded automorphism of L");
  auto env = std::make_shared<EnvelopingContext>(lie, options.max_degree);
  const std::size_t D = options.degree_bound.value_or(G_L.order());
  auto records = minimal_generators(G_L, *lie, {D, options.weighted_cap});
  return finish(ArenaKind::Enveloping, Arena::enveloping(env), std::move(records), D, lie->max_degree(), &G_L,
                options, [&](const GeneratorRecord& r) { return omega(env, r.poly); });
}

std::vector<bool> gamma_compatible(const std::shared_ptr<const RelFreeContext>& rf, const PipelineResult& f_result,
                                   const PipelineResult& u_result, std::size_t d_max) {
  const Arena arena = Arena::relfree(rf);
  SubalgebraSpan from_f(arena, d_max);
  SubalgebraSpan from_u(arena, d_max);
  for (const auto& g : f_result.generators)
    if (g.f_degree <= d_max) from_f.add_generator(g.nc);
  for (const auto& g : u_result.generators) {
    if (g.f_degree > d_max) continue;
    NCPolynomial img = gamma(rf, g.nc);
    if (!img.is_zero()) from_u.add_generator(img);
  }
  std::vector<bool> out;
  for (std::size_t d = 1; d <= d_max; ++d) out.push_back(from_f.component(d) == from_u.component(d));
  return out;
}

}  // namespace ncinv
