#include "ncinv/comm/invariants.hpp"

#include "ncinv/error.hpp"
#include "ncinv/group/graded_action.hpp"
#include "ncinv/linalg/subspace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace ncinv {

namespace {

struct Block {
  std::vector<Exponents> basis;
  std::map<Exponents, std::size_t> index;

  Block(const LieContext& ctx, const MultiDegree& alpha) : basis(monomial_basis(ctx.degrees(), alpha)) {
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  }

  Vector coords(const CommPolynomial& f) const {
    Vector v(basis.size());
    for (const auto& [e, c] : f.terms()) v[index.at(e)] = c;
    return v;
  }

  CommPolynomial poly(std::size_t num_vars, const Vector& v) const {
    CommPolynomial f(num_vars);
    for (std::size_t i = 0; i < v.size(); ++i) f.add_term(basis[i], v[i]);
    return f;
  }
};

bool dominated(const MultiDegree& a, const MultiDegree& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

MultiDegree minus(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

GeneratorRecord make_record(const LieContext& ctx, CommPolynomial poly) {
  if (poly.num_vars() != ctx.dim())
    throw InputError("polynomial has " + std::to_string(poly.num_vars()) + " variables, the Lie basis has " +
                     std::to_string(ctx.dim()));
  if (poly.is_zero()) throw InputError("zero polynomial cannot be a generator");
  auto alpha = poly.multidegree(ctx.degrees(), ctx.max_degree());
  if (!alpha) throw InputError("polynomial is not multihomogeneous");
  GeneratorRecord r;
  r.alpha = *alpha;
  r.std_degree = total(*alpha);
  r.f_degree = weighted_degree(*alpha);
  r.poly = std::move(poly);
  return r;
}

std::vector<CommPolynomial> invariant_basis_alpha(const MatrixGroup& G_L, const LieContext& ctx,
                                                  const MultiDegree& alpha) {
  const Block block(ctx, alpha);
  const GradedAction action = sym_action(G_L, ctx.degrees(), alpha);
  action.checked_invariant_dimension();
  std::vector<CommPolynomial> out;
  const Subspace inv = action.invariant_subspace();
  for (const auto& v : inv.basis()) out.push_back(block.poly(ctx.dim(), v));
  return out;
}

std::vector<GeneratorRecord> minimal_generators(const MatrixGroup& G_L, const LieContext& ctx,
                                                const GeneratorSearch& search) {
  std::vector<GeneratorRecord> records;
  std::map<MultiDegree, std::vector<CommPolynomial>> invariants;
  for (std::size_t d = 1; d <= search.degree_bound; ++d) {
    for (const auto& alpha : multidegrees_of_total(ctx.degrees(), ctx.max_degree(), d)) {
      if (search.weighted_cap && weighted_degree(alpha) > *search.weighted_cap) continue;
      const Block block(ctx, alpha);
      auto inv = invariant_basis_alpha(G_L, ctx, alpha);
      Subspace all(block.basis.size());
      for (const auto& f : inv) all.insert(block.coords(f));

      Subspace decomposable(block.basis.size());
      for (const auto& r : records) {
        if (r.alpha == alpha || !dominated(r.alpha, alpha)) continue;
        for (const auto& f : invariants.at(minus(alpha, r.alpha))) decomposable.insert(block.coords(r.poly * f));
      }
      const Subspace fresh = quotient_complement(all, decomposable);
      for (const auto& v : fresh.basis())
        records.push_back(make_record(ctx, block.poly(ctx.dim(), v)));
      invariants.emplace(alpha, std::move(inv));
    }
  }
  return records;
}

std::size_t beta_commutative(const std::vector<GeneratorRecord>& records) {
  std::size_t beta = 0;
  for (const auto& r : records) beta = std::max(beta, r.std_degree);
  return beta;
}

bool is_invariant(const MatrixGroup& G_L, const CommPolynomial& f) {
  return std::all_of(G_L.elements().begin(), G_L.elements().end(),
                     [&](const Matrix& g) { return f.substitute(g) == f; });
}

void check_invariance(const MatrixGroup& G_L, const std::vector<GeneratorRecord>& records) {
  for (std::size_t i = 0; i < records.size(); ++i)
    if (!is_invariant(G_L, records[i].poly))
      throw InputError("generator " + std::to_string(i) + " is not invariant under the group");
}

std::size_t generated_dimension(const LieContext& ctx, const std::vector<GeneratorRecord>& records,
                                const MultiDegree& alpha) {
  std::map<MultiDegree, std::vector<CommPolynomial>> spans;
  std::function<const std::vector<CommPolynomial>&(const MultiDegree&)> span_of =
      [&](const MultiDegree& beta) -> const std::vector<CommPolynomial>& {
    if (auto it = spans.find(beta); it != spans.end()) return it->second;
    std::vector<CommPolynomial> out;
    if (total(beta) == 0) {
      out.push_back(CommPolynomial::constant(ctx.dim(), 1));
    } else {
      const Block block(ctx, beta);
      Subspace s(block.basis.size());
      for (const auto& r : records) {
        if (!dominated(r.alpha, beta)) continue;
        for (const auto& f : span_of(minus(beta, r.alpha))) s.insert(block.coords(r.poly * f));
      }
      for (const auto& v : s.basis()) out.push_back(block.poly(ctx.dim(), v));
    }
    return spans.emplace(beta, std::move(out)).first->second;
  };
  return span_of(alpha).size();
}

}  // namespace ncinv
