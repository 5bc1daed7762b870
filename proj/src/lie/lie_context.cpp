#include "ncinv/lie/lie_context.hpp"

#include "ncinv/error.hpp"
#include "ncinv/lie/lyndon.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace ncinv {

void add_term(SparseVec& into, std::size_t i, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = into.try_emplace(i, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) into.erase(it);
}

namespace {

void add_scaled(SparseVec& into, const SparseVec& from, const Scalar& c) {
  if (sgn(c) == 0) return;
  for (const auto& [i, x] : from) add_term(into, i, x * c);
}

SparseVec negated(const SparseVec& v) {
  SparseVec out;
  add_scaled(out, v, -1);
  return out;
}

}  // namespace

std::shared_ptr<const LieContext> LieContext::free_nilpotent(std::size_t n, std::size_t p) {
  if (n == 0 || p == 0) throw InputError("free nilpotent Lie algebra needs n >= 1 and p >= 1");
  std::shared_ptr<LieContext> ctx(new LieContext());
  ctx->free_ = true;
  ctx->n_ = n;
  ctx->max_degree_ = p;
  for (std::size_t d = 1; d <= p; ++d)
    for (auto& w : lyndon_words(n, d)) {
      ctx->index_.emplace(w, ctx->words_.size());
      ctx->words_.push_back(std::move(w));
      ctx->degrees_.push_back(d);
    }
  const std::size_t dim = ctx->words_.size();
  ctx->bracketings_.reserve(dim);
  for (const auto& w : ctx->words_) {
    if (w.size() == 1) {
      ctx->bracketings_.push_back(TermMap{{w, 1}});
      continue;
    }
    const auto [u, v] = standard_factorization(w);
    ctx->bracketings_.push_back(
        commutator(ctx->bracketings_[ctx->index_.at(u)], ctx->bracketings_[ctx->index_.at(v)]));
  }
  ctx->table_.assign(dim * dim, SparseVec{});
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      const std::size_t d = ctx->degrees_[i] + ctx->degrees_[j];
      if (d > p) continue;
      SparseVec c = ctx->project_to_lie(commutator(ctx->bracketings_[i], ctx->bracketings_[j]), d);
      ctx->table_[j * dim + i] = negated(c);
      ctx->table_[i * dim + j] = std::move(c);
    }
  return ctx;
}

std::shared_ptr<const LieContext> LieContext::from_structure_constants(std::vector<std::size_t> degrees,
                                                                       std::vector<SparseVec> table) {
  std::shared_ptr<LieContext> ctx(new LieContext());
  const std::size_t dim = degrees.size();
  if (dim == 0) throw InputError("Lie algebra must have a nonempty basis");
  if (table.size() != dim * dim) throw InputError("structure constant table must have dim*dim entries");
  for (auto d : degrees) {
    if (d == 0) throw InputError("Lie algebra grading must be positive");
    ctx->max_degree_ = std::max(ctx->max_degree_, d);
  }
  ctx->degrees_ = std::move(degrees);
  ctx->table_ = std::move(table);
  ctx->validate();
  return ctx;
}

void LieContext::validate() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec& c = bracket_basis(i, j);
      for (const auto& [k, x] : c) {
        if (k >= n) throw InputError("structure constant refers to a basis index out of range");
        if (degrees_[k] != degrees_[i] + degrees_[j])
          throw InputError("bracket [b" + std::to_string(i) + ", b" + std::to_string(j) + "] is not graded");
      }
      if (c != negated(bracket_basis(j, i)))
        throw InputError("structure constants are not antisymmetric at (" + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        SparseVec sum = bracket(bracket_basis(i, j), SparseVec{{k, 1}});
        add_scaled(sum, bracket(bracket_basis(j, k), SparseVec{{i, 1}}), 1);
        add_scaled(sum, bracket(bracket_basis(k, i), SparseVec{{j, 1}}), 1);
        if (!sum.empty()) throw InputError("structure constants violate the Jacobi identity");
      }
}

std::vector<std::size_t> LieContext::basis_of_degree(std::size_t d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (degrees_[i] == d) out.push_back(i);
  return out;
}

const Word& LieContext::word(std::size_t i) const {
  if (!free_) throw InputError("basis labels exist only for free nilpotent Lie algebras");
  return words_.at(i);
}

std::optional<std::size_t> LieContext::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVec LieContext::bracket(const SparseVec& a, const SparseVec& b) const {
  SparseVec out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) add_scaled(out, bracket_basis(i, j), x * y);
  return out;
}

const TermMap& LieContext::bracketing_of(std::size_t i) const {
  if (!free_) throw InputError("bracketings exist only for free nilpotent Lie algebras");
  return bracketings_.at(i);
}

TermMap LieContext::embed(const TermMap& lie_tensor) const {
  if (!free_) throw InputError("the embedding into T(V) exists only for free nilpotent Lie algebras");
  return substitute(lie_tensor, bracketings_);
}

SparseVec LieContext::project_to_lie(const TermMap& t, std::size_t d) const {
  if (!free_) throw InputError("project_to_lie needs a free nilpotent Lie algebra");
  if (d > max_degree_) throw InputError("degree " + std::to_string(d) + " exceeds the nilpotency index");
  // The bracketing of a Lyndon word w is w plus lexicographically larger
  // words, so repeatedly cancelling the smallest word is a triangular solve.
  TermMap rest = t;
  SparseVec out;
  while (!rest.empty()) {
    const auto& [w, c] = *rest.begin();
    if (w.size() != d) throw NotALieElement("element is not homogeneous of degree " + std::to_string(d));
    auto idx = index_of(w);
    if (!idx) throw NotALieElement("not a Lie element: leading word " + word_to_string(w) + " is not Lyndon");
    const Scalar coeff = c;
    add_term(out, *idx, coeff);
    ncinv::add_scaled(rest, bracketings_[*idx], -coeff);
  }
  return out;
}

Matrix LieContext::lift(const Matrix& g) const {
  if (!free_) throw InputError("lifting from GL(V) needs a free nilpotent Lie algebra");
  if (g.rows() != n_ || g.cols() != n_) throw DimensionMismatch("lift: matrix must be n x n");
  if (!is_invertible(g)) throw InputError("lift: matrix is singular");
  std::vector<SparseVec> images(dim());
  for (std::size_t idx = 0; idx < dim(); ++idx) {
    const Word& w = words_[idx];
    if (w.size() == 1) {
      for (std::size_t i = 0; i < n_; ++i) add_term(images[idx], i, g(i, w[0]));
      continue;
    }
    const auto [u, v] = standard_factorization(w);
    images[idx] = bracket(images[index_.at(u)], images[index_.at(v)]);
  }
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& [k, x] : images[j]) m(k, j) = x;
  return m;
}

bool LieContext::is_graded_automorphism(const Matrix& g) const {
  const std::size_t n = dim();
  if (g.rows() != n || g.cols() != n || !is_invertible(g)) return false;
  std::vector<SparseVec> images(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(g(k, j)) == 0) continue;
      if (degrees_[k] != degrees_[j]) return false;
      images[j][k] = g(k, j);
    }
  auto apply = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, x] : v) add_scaled(out, images[i], x);
    return out;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (apply(bracket_basis(i, j)) != bracket(images[i], images[j])) return false;
  return true;
}

LieElement::LieElement(std::shared_ptr<const LieContext> ctx, SparseVec coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->first >= ctx_->dim()) throw InputError("Lie element refers to a basis index out of range");
    it = sgn(it->second) == 0 ? coeffs_.erase(it) : std::next(it);
  }
}

LieElement LieElement::basis(std::shared_ptr<const LieContext> ctx, std::size_t i) {
  return LieElement(std::move(ctx), SparseVec{{i, 1}});
}

LieElement& LieElement::operator+=(const LieElement& o) {
  if (ctx_ != o.ctx_) throw ArenaMismatch("Lie elements from different contexts");
  add_scaled(coeffs_, o.coeffs_, 1);
  return *this;
}

LieElement operator-(const LieElement& a, const LieElement& b) { return a + Scalar(-1) * b; }

LieElement operator*(const Scalar& c, const LieElement& a) {
  SparseVec out;
  add_scaled(out, a.coeffs_, c);
  return LieElement(a.ctx_, std::move(out));
}

LieElement lie_bracket(const LieElement& a, const LieElement& b) {
  if (a.context() != b.context()) throw ArenaMismatch("lie_bracket: context mismatch");
  return LieElement(a.context(), a.context()->bracket(a.coeffs(), b.coeffs()));
}

LieElement gl_action_lie(const Matrix& g, const LieElement& a) {
  const Matrix lifted = a.context()->lift(g);
  SparseVec out;
  for (const auto& [j, x] : a.coeffs())
    for (std::size_t k = 0; k < lifted.rows(); ++k)
      if (sgn(lifted(k, j)) != 0) add_term(out, k, lifted(k, j) * x);
  return LieElement(a.context(), std::move(out));
}

LieElement project_to_lie(const std::shared_ptr<const LieContext>& ctx, const TermMap& t, std::size_t d) {
  return LieElement(ctx, ctx->project_to_lie(t, d));
}

}  // namespace ncinv
