#include "ncinv/linalg/subspace.hpp"

#include "ncinv/error.hpp"

#include <algorithm>
#include <iterator>
#include <utility>

namespace ncinv {

namespace {

// v -= f * row, skipping zero entries of row.
void subtract_multiple(Vector& v, const Scalar& f, const Vector& row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (sgn(row[j]) != 0) v[j] -= f * row[j];
}

}  // namespace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vector e(ambient_dim);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

void Subspace::check_size(const Vector& v) const {
  if (v.size() != ambient_dim_)
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                            std::to_string(ambient_dim_));
}

Vector Subspace::reduce(Vector v) const {
  check_size(v);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t pc = pivots_[i];
    if (sgn(v[pc]) == 0) continue;
    const Scalar f = v[pc];
    subtract_multiple(v, f, basis_[i]);
  }
  return v;
}

bool Subspace::insert(Vector v) {
  v = reduce(std::move(v));
  const auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) != 0; });
  if (lead == v.end()) return false;
  const auto c = static_cast<std::size_t>(std::distance(v.begin(), lead));
  const Scalar inv = 1 / v[c];
  for (auto& x : v)
    if (sgn(x) != 0) x *= inv;
  for (auto& row : basis_) {
    if (sgn(row[c]) == 0) continue;
    const Scalar f = row[c];
    subtract_multiple(row, f, v);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, c);
  basis_.insert(basis_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) coords[i] = v[pivots_[i]];
  return coords;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  if (ambient_dim_ != other.ambient_dim_) throw DimensionMismatch("subspaces of different ambient spaces");
  return std::all_of(basis_.begin(), basis_.end(), [&](const Vector& b) { return other.contains(b); });
}

std::optional<Vector> span_contains(const Subspace& s, const Vector& v) { return s.coordinates(v); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace sum of different ambient spaces");
  Subspace s = a;
  for (const auto& v : b.basis()) s.insert(v);
  return s;
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("intersection of different ambient spaces");
  const std::size_t n = a.ambient_dim();
  Subspace out(n);
  if (a.dim() == 0 || b.dim() == 0) return out;
  // Columns are the basis vectors of a and b; a kernel vector (λ, μ) gives λ·A = −μ·B.
  Matrix stacked(n, a.dim() + b.dim());
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (std::size_t i = 0; i < n; ++i) stacked(i, j) = a.basis()[j][i];
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t i = 0; i < n; ++i) stacked(i, a.dim() + j) = b.basis()[j][i];
  for (const auto& k : kernel(stacked)) {
    Vector v(n);
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (sgn(k[j]) != 0)
        for (std::size_t i = 0; i < n; ++i) v[i] += k[j] * a.basis()[j][i];
    out.insert(std::move(v));
  }
  return out;
}

Subspace quotient_complement(const Subspace& big, const Subspace& small) {
  if (!small.is_subspace_of(big)) throw InputError("quotient_complement: subspace is not contained in the big space");
  Subspace acc = small;
  std::vector<Vector> residuals;
  for (const auto& b : big.basis()) {
    Vector r = acc.reduce(b);
    if (is_zero(r)) continue;
    acc.insert(r);
    residuals.push_back(std::move(r));
  }
  return Subspace::span(big.ambient_dim(), residuals);
}

std::optional<Vector> express_in(const std::vector<Vector>& vectors, const Vector& v) {
  const std::size_t k = vectors.size();
  const std::size_t n = v.size();
  Matrix aug(n, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    if (vectors[j].size() != n) throw DimensionMismatch("express_in: length mismatch");
    for (std::size_t i = 0; i < n; ++i) aug(i, j) = vectors[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) aug(i, k) = v[i];
  const RrefResult r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == k) return std::nullopt;
  Vector coords(k);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) coords[r.pivots[i]] = r.reduced(i, k);
  return coords;
}

}  // namespace ncinv
