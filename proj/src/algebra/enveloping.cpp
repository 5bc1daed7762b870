#include "ncinv/algebra/enveloping.hpp"

#include "ncinv/error.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace ncinv {

EnvelopingContext::EnvelopingContext(std::shared_ptr<const LieContext> lie, std::size_t max_degree)
    : lie_(std::move(lie)), max_degree_(max_degree) {}

std::size_t EnvelopingContext::weight(const Word& w) const {
  std::size_t s = 0;
  for (Letter x : w) s += lie_->degree(x);
  return s;
}

TermMap EnvelopingContext::straighten(const Word& w) const {
  for (Letter x : w)
    if (x >= lie_->dim()) throw InputError("PBW word uses index " + std::to_string(x) + " outside the Lie basis");
  std::lock_guard lock(mutex_);
  return straighten_locked(w);
}

TermMap EnvelopingContext::straighten_locked(const Word& w) const {
  std::size_t i = 0;
  while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
  if (i + 1 >= w.size()) return TermMap{{w, 1}};
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;

  Word swapped = w;
  std::swap(swapped[i], swapped[i + 1]);
  TermMap out = straighten_locked(swapped);
  for (const auto& [k, c] : lie_->bracket_basis(w[i], w[i + 1])) {
    Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    shorter.push_back(static_cast<Letter>(k));
    shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
    add_scaled(out, straighten_locked(shorter), c);
  }
  memo_.emplace(w, out);
  return out;
}

TermMap EnvelopingContext::straighten(const TermMap& t) const {
  TermMap out;
  for (const auto& [w, c] : t) add_scaled(out, straighten(w), c);
  return out;
}

const std::vector<Word>& EnvelopingContext::pbw_basis(std::size_t d) const {
  if (d > max_degree_)
    throw CapExceeded("degree " + std::to_string(d) + " exceeds max_degree cap " + std::to_string(max_degree_));
  std::lock_guard lock(mutex_);
  if (auto it = basis_cache_.find(d); it != basis_cache_.end()) return it->second;
  std::vector<Word> out;
  Word w;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t left) {
    if (left == 0) {
      out.push_back(w);
      return;
    }
    for (std::size_t i = from; i < lie_->dim(); ++i) {
      if (lie_->degree(i) > left) continue;
      w.push_back(static_cast<Letter>(i));
      rec(i, left - lie_->degree(i));
      w.pop_back();
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  auto& idx = index_cache_[d];
  for (std::size_t i = 0; i < out.size(); ++i) idx.emplace(out[i], i);
  return basis_cache_.emplace(d, std::move(out)).first->second;
}

const std::map<Word, std::size_t>& EnvelopingContext::index(std::size_t d) const {
  pbw_basis(d);
  std::lock_guard lock(mutex_);
  return index_cache_.at(d);
}

std::size_t EnvelopingContext::dim(std::size_t d) const {
  std::vector<std::size_t> coeff(d + 1, 0);
  coeff[0] = 1;
  for (std::size_t i = 0; i < lie_->dim(); ++i) {
    const std::size_t k = lie_->degree(i);
    for (std::size_t j = k; j <= d; ++j) coeff[j] += coeff[j - k];
  }
  return coeff[d];
}

Vector EnvelopingContext::coordinates(const TermMap& pbw, std::size_t d) const {
  const auto& idx = index(d);
  Vector v(idx.size());
  for (const auto& [w, c] : pbw) {
    auto it = idx.find(w);
    if (it == idx.end())
      throw InputError("word " + word_to_string(w) + " is not a weight-" + std::to_string(d) + " PBW monomial");
    v[it->second] = c;
  }
  return v;
}

TermMap EnvelopingContext::from_coordinates(const Vector& v, std::size_t d) const {
  const auto& basis = pbw_basis(d);
  if (v.size() != basis.size()) throw DimensionMismatch("U_d coordinate vector length");
  TermMap out;
  for (std::size_t i = 0; i < v.size(); ++i) add_term(out, basis[i], v[i]);
  return out;
}

}  // namespace ncinv
