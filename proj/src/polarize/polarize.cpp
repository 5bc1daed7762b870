#include "ncinv/polarize/polarize.hpp"

#include "ncinv/error.hpp"
#include "ncinv/pipeline/subalgebra.hpp"

#include <deque>
#include <map>
#include <string>

namespace ncinv {

std::optional<std::size_t> SplitModule::copy_of(std::size_t letter) const {
  if (letter < dim_u) return std::nullopt;
  return (letter - dim_u) / dim_w;
}

Matrix copies_matrix(const Matrix& g, const SplitModule& module) {
  const std::size_t du = module.dim_u, dw = module.dim_w;
  if (g.rows() != du + dw || g.cols() != du + dw) throw DimensionMismatch("matrix does not act on U + W");
  for (std::size_t i = 0; i < du + dw; ++i)
    for (std::size_t j = 0; j < du + dw; ++j)
      if ((i < du) != (j < du) && sgn(g(i, j)) != 0)
        throw InputError("group element does not preserve the splitting U + W");
  Matrix out(module.dim(), module.dim());
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t j = 0; j < du; ++j) out(i, j) = g(i, j);
  for (std::size_t k = 0; k < module.copies; ++k)
    for (std::size_t i = 0; i < dw; ++i)
      for (std::size_t j = 0; j < dw; ++j) out(module.w_letter(k, i), module.w_letter(k, j)) = g(du + i, du + j);
  return out;
}

MatrixGroup expand_to_copies(const MatrixGroup& G, const SplitModule& module) {
  return G.map([&](const Matrix& g) { return copies_matrix(g, module); }, module.dim());
}

NCPolynomial gl_km_action(const Matrix& g, const NCPolynomial& f, const SplitModule& module) {
  const std::size_t m = module.copies;
  if (g.rows() != m || g.cols() != m) throw DimensionMismatch("GL(K^m) element has the wrong size");
  if (!is_invertible(g)) throw InputError("GL(K^m) element is singular");
  if (f.arena().letters() != module.dim()) throw DimensionMismatch("polynomial does not live on U + mW");
  std::vector<TermMap> images(module.dim());
  for (std::size_t i = 0; i < module.dim_u; ++i) images[i].emplace(Word{static_cast<Letter>(i)}, 1);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < module.dim_w; ++j)
      for (std::size_t k2 = 0; k2 < m; ++k2)
        if (sgn(g(k2, k)) != 0)
          images[module.w_letter(k, j)].emplace(Word{static_cast<Letter>(module.w_letter(k2, j))}, g(k2, k));
  return NCPolynomial(f.arena(), substitute(f.terms(), images));
}

std::vector<NCPolynomial> polarization_images(const NCPolynomial& f, std::size_t i, std::size_t j,
                                              const SplitModule& module) {
  if (i == j || i >= module.copies || j >= module.copies) throw InputError("polarization needs two distinct copies");
  std::map<std::size_t, TermMap> by_power;
  for (const auto& [w, c] : f.terms()) {
    // Expand letter by letter, tracking how many letters were replaced.
    std::map<std::size_t, std::vector<Word>> partial{{0, {Word{}}}};
    for (Letter x : w) {
      std::map<std::size_t, std::vector<Word>> next;
      const auto copy = module.copy_of(x);
      for (auto& [k, words] : partial)
        for (const Word& prefix : words) {
          Word keep = prefix;
          keep.push_back(x);
          next[k].push_back(std::move(keep));
          if (copy && *copy == j) {
            Word moved = prefix;
            moved.push_back(static_cast<Letter>(module.w_letter(i, (x - module.dim_u) % module.dim_w)));
            next[k + 1].push_back(std::move(moved));
          }
        }
      partial = std::move(next);
    }
    for (const auto& [k, words] : partial)
      if (k > 0)
        for (const Word& v : words) add_term(by_power[k], v, c);
  }
  std::vector<NCPolynomial> out;
  for (const auto& [k, t] : by_power) out.emplace_back(f.arena(), t);
  return out;
}

std::vector<NCPolynomial> weight_components(const NCPolynomial& f, const SplitModule& module) {
  std::map<std::vector<std::size_t>, TermMap> parts;
  for (const auto& [w, c] : f.terms()) {
    std::vector<std::size_t> weight(module.copies, 0);
    for (Letter x : w)
      if (auto k = module.copy_of(x)) ++weight[*k];
    parts[weight].emplace(w, c);
  }
  std::vector<NCPolynomial> out;
  for (auto& [weight, t] : parts) out.push_back(NCPolynomial::from_normalized(f.arena(), std::move(t)));
  return out;
}

NCPolynomial change_copies(const NCPolynomial& f, const SplitModule& from, const SplitModule& to,
                           const Arena& target) {
  if (from.dim_u != to.dim_u || from.dim_w != to.dim_w) throw InputError("modules differ in U or W");
  if (target.letters() != to.dim()) throw DimensionMismatch("target arena does not live on U + mW");
  TermMap out;
  for (const auto& [w, c] : f.terms()) {
    bool dropped = false;
    for (Letter x : w)
      if (auto k = from.copy_of(x); k && *k >= to.copies) dropped = true;
    if (!dropped) add_term(out, w, c);
  }
  return NCPolynomial(target, out);
}

std::vector<NCPolynomial> polarize_set(const std::vector<NCPolynomial>& B, const SplitModule& module,
                                       std::size_t max_degree) {
  std::map<std::size_t, std::vector<NCPolynomial>> seeds;
  for (const auto& f : B)
    for (std::size_t d = 0; d <= max_degree; ++d) {
      NCPolynomial part = f.homogeneous_part(d);
      if (!part.is_zero()) seeds[d].push_back(std::move(part));
    }
  std::vector<NCPolynomial> out;
  for (auto& [d, elements] : seeds) {
    if (elements.empty()) continue;
    Subspace span(component_dim(elements.front().arena(), d));
    std::deque<NCPolynomial> queue;
    auto offer = [&](const NCPolynomial& f) {
      for (auto& part : weight_components(f, module))
        if (span.insert(component_coordinates(part, d))) {
          out.push_back(part);
          queue.push_back(std::move(part));
        }
    };
    for (const auto& f : elements) offer(f);
    while (!queue.empty()) {
      const NCPolynomial f = std::move(queue.front());
      queue.pop_front();
      for (std::size_t i = 0; i < module.copies; ++i)
        for (std::size_t j = 0; j < module.copies; ++j)
          if (i != j)
            for (const auto& img : polarization_images(f, i, j, module)) offer(img);
    }
  }
  return out;
}

PolarizationReport verify_polarization(const MatrixGroup& G, std::size_t dim_u, std::size_t dim_w, std::size_t h,
                                       std::size_t p, std::size_t m, std::size_t d_max,
                                       std::optional<std::size_t> source_copies) {
  if (dim_w == 0 || h == 0 || m == 0) throw InputError("polarization needs dim_w, h and m positive");
  PolarizationReport report;
  report.source = {dim_u, dim_w, source_copies.value_or(dim_w * h)};
  if (report.source.copies == 0) throw InputError("source copies must be positive");
  report.target = {dim_u, dim_w, m};
  report.h = h;
  report.p = p;
  report.asserted = p == 1;

  PipelineOptions options;
  options.max_degree = d_max;
  options.verify_degree = d_max;
  options.weighted_cap = d_max;
  const MatrixGroup G_source = expand_to_copies(G, report.source);
  const PipelineResult source = construct_invariants_F(G_source, p, options);
  report.source_generators = source.generators.size();

  const RelFreeSetup target = make_relfree_setup(report.target.dim(), p, d_max);
  const Arena arena = Arena::relfree(target.rf);
  std::vector<NCPolynomial> moved;
  for (const auto& g : source.generators) {
    NCPolynomial f = change_copies(g.nc, report.source, report.target, arena);
    if (!f.is_zero()) moved.push_back(std::move(f));
  }
  const auto polarized = polarize_set(moved, report.target, d_max);
  report.polarized_generators = polarized.size();
  report.verification = verify_generation(expand_to_copies(G, report.target), arena, polarized, d_max);
  return report;
}

}  // namespace ncinv
