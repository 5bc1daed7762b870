#include "ncinv/group/graded_action.hpp"

#include "ncinv/error.hpp"

#include <atomic>
#include <map>

namespace ncinv {

namespace {

std::atomic<std::size_t> g_checks{0};
std::atomic<std::size_t> g_mismatches{0};

std::vector<TermMap> letter_images(const Matrix& g) {
  std::vector<TermMap> images(g.cols());
  for (std::size_t j = 0; j < g.cols(); ++j)
    for (std::size_t i = 0; i < g.rows(); ++i)
      if (sgn(g(i, j)) != 0) images[j].emplace(Word{static_cast<Letter>(i)}, g(i, j));
  return images;
}

// Builds one matrix per element from the images of the basis vectors.
template <typename ImageFn>
std::vector<Matrix> build_matrices(const MatrixGroup& G, std::size_t dim, ImageFn&& image) {
  std::vector<Matrix> out;
  out.reserve(G.order());
  for (const auto& g : G.elements()) {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      const Vector col = image(g, j);
      for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i];
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

GradedAction::GradedAction(std::string label, std::size_t dim, std::vector<Matrix> matrices)
    : label_(std::move(label)), dim_(dim), matrices_(std::move(matrices)), reynolds_(dim, dim) {
  if (matrices_.empty()) throw InputError("group action needs at least the identity");
  for (const auto& m : matrices_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("action matrix size in " + label_);
    reynolds_ = reynolds_ + m;
  }
  const Scalar inv(1, matrices_.size());
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) reynolds_(i, j) *= inv;
}

Subspace GradedAction::invariant_subspace() const {
  Subspace s(dim_);
  for (std::size_t j = 0; j < dim_; ++j) s.insert(reynolds_.column(j));
  return s;
}

std::size_t GradedAction::invariant_dimension() const {
  Scalar sum = 0;
  for (const auto& m : matrices_) sum += m.trace();
  sum /= static_cast<unsigned long>(matrices_.size());
  if (sum.get_den() != 1 || sgn(sum) < 0)
    throw Error("trace average " + to_string(sum) + " on " + label_ + " is not a non-negative integer");
  return sum.get_num().get_ui();
}

std::size_t GradedAction::checked_invariant_dimension() const {
  const std::size_t by_trace = invariant_dimension();
  const std::size_t by_rank = invariant_subspace().dim();
  ++g_checks;
  if (by_trace != by_rank) {
    ++g_mismatches;
    throw OracleMismatch("invariant dimension on " + label_ + ": trace average " + std::to_string(by_trace) +
                         " vs Reynolds rank " + std::to_string(by_rank));
  }
  return by_trace;
}

OracleStats oracle_stats() { return {g_checks.load(), g_mismatches.load()}; }

void reset_oracle_stats() {
  g_checks = 0;
  g_mismatches = 0;
}

GradedAction tensor_action(const MatrixGroup& G, std::size_t d) {
  const auto words = all_words(G.dim(), d);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  auto mats = build_matrices(G, words.size(), [&](const Matrix& g, std::size_t j) {
    Vector col(words.size());
    for (const auto& [w, c] : substitute(TermMap{{words[j], 1}}, letter_images(g))) col[index.at(w)] = c;
    return col;
  });
  return GradedAction("T_" + std::to_string(d), words.size(), std::move(mats));
}

GradedAction relfree_action(const MatrixGroup& G, const RelFreeContext& rf, std::size_t d) {
  if (G.dim() != rf.letters()) throw DimensionMismatch("group and relatively free algebra have different n");
  const auto& reps = rf.representatives(d);
  auto mats = build_matrices(G, reps.size(), [&](const Matrix& g, std::size_t j) {
    return rf.coordinates(rf.normal_form(substitute(TermMap{{reps[j], 1}}, letter_images(g))), d);
  });
  return GradedAction("F_" + std::to_string(d), reps.size(), std::move(mats));
}

GradedAction sym_action(const MatrixGroup& G_L, const std::vector<std::size_t>& var_degrees,
                        const MultiDegree& alpha) {
  if (G_L.dim() != var_degrees.size()) throw DimensionMismatch("group and commutative variables differ");
  const auto basis = monomial_basis(var_degrees, alpha);
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  auto mats = build_matrices(G_L, basis.size(), [&](const Matrix& g, std::size_t j) {
    Vector col(basis.size());
    const CommPolynomial img = CommPolynomial(var_degrees.size(), {{basis[j], 1}}).substitute(g);
    for (const auto& [e, c] : img.terms()) col[index.at(e)] = c;
    return col;
  });
  std::string label = "S_(";
  for (std::size_t i = 0; i < alpha.size(); ++i) label += (i ? "," : "") + std::to_string(alpha[i]);
  return GradedAction(label + ")", basis.size(), std::move(mats));
}

GradedAction enveloping_action(const MatrixGroup& G_L, const EnvelopingContext& env, std::size_t d) {
  if (G_L.dim() != env.lie()->dim()) throw DimensionMismatch("group does not act on this Lie basis");
  const auto& basis = env.pbw_basis(d);
  auto mats = build_matrices(G_L, basis.size(), [&](const Matrix& g, std::size_t j) {
    return env.coordinates(env.straighten(substitute(TermMap{{basis[j], 1}}, letter_images(g))), d);
  });
  return GradedAction("U_" + std::to_string(d), basis.size(), std::move(mats));
}

}  // namespace ncinv
