#include "ncinv/comm/comm_polynomial.hpp"

#include "ncinv/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>

namespace ncinv {

std::size_t total(const MultiDegree& alpha) { return std::accumulate(alpha.begin(), alpha.end(), std::size_t{0}); }

std::size_t weighted_degree(const MultiDegree& alpha) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) w += (i + 1) * alpha[i];
  return w;
}

std::size_t standard_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::size_t{0}); }

MultiDegree multidegree_of(const Exponents& e, const std::vector<std::size_t>& var_degrees, std::size_t max_degree) {
  MultiDegree alpha(max_degree, 0);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i]) alpha.at(var_degrees.at(i) - 1) += e[i];
  return alpha;
}

CommPolynomial::CommPolynomial(std::size_t num_vars, Terms terms) : num_vars_(num_vars) {
  for (auto& [e, c] : terms) add_term(e, c);
}

CommPolynomial CommPolynomial::constant(std::size_t num_vars, const Scalar& c) {
  CommPolynomial p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

CommPolynomial CommPolynomial::variable(std::size_t num_vars, std::size_t i) {
  Exponents e(num_vars, 0);
  e.at(i) = 1;
  CommPolynomial p(num_vars);
  p.add_term(e, 1);
  return p;
}

void CommPolynomial::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != num_vars_) throw DimensionMismatch("monomial has the wrong number of variables");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

CommPolynomial& CommPolynomial::operator+=(const CommPolynomial& o) {
  if (num_vars_ != o.num_vars_) throw DimensionMismatch("polynomials over different variable sets");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CommPolynomial operator-(const CommPolynomial& a, const CommPolynomial& b) { return a + Scalar(-1) * b; }

CommPolynomial operator*(const CommPolynomial& a, const CommPolynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw DimensionMismatch("polynomials over different variable sets");
  CommPolynomial out(a.num_vars_);
  Exponents e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

CommPolynomial operator*(const Scalar& c, const CommPolynomial& a) {
  CommPolynomial out(a.num_vars_);
  for (const auto& [e, x] : a.terms_) out.add_term(e, x * c);
  return out;
}

std::optional<MultiDegree> CommPolynomial::multidegree(const std::vector<std::size_t>& var_degrees,
                                                       std::size_t max_degree) const {
  std::optional<MultiDegree> alpha;
  for (const auto& [e, c] : terms_) {
    MultiDegree a = multidegree_of(e, var_degrees, max_degree);
    if (alpha && *alpha != a) return std::nullopt;
    alpha = std::move(a);
  }
  return alpha;
}

CommPolynomial CommPolynomial::substitute(const Matrix& g) const {
  if (g.rows() != num_vars_ || g.cols() != num_vars_) throw DimensionMismatch("substitution matrix size");
  std::vector<CommPolynomial> images;
  images.reserve(num_vars_);
  for (std::size_t j = 0; j < num_vars_; ++j) {
    CommPolynomial lin(num_vars_);
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (sgn(g(i, j)) != 0) lin += g(i, j) * variable(num_vars_, i);
    images.push_back(std::move(lin));
  }
  CommPolynomial out(num_vars_);
  for (const auto& [e, c] : terms_) {
    CommPolynomial acc = constant(num_vars_, c);
    for (std::size_t j = 0; j < num_vars_; ++j)
      for (std::uint32_t k = 0; k < e[j]; ++k) acc = acc * images[j];
    out += acc;
  }
  return out;
}

std::vector<Exponents> monomial_basis(const std::vector<std::size_t>& var_degrees, const MultiDegree& alpha) {
  const std::size_t k = var_degrees.size();
  std::vector<Exponents> out;
  Exponents e(k, 0);
  std::vector<std::size_t> remaining(alpha.begin(), alpha.end());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      if (std::all_of(remaining.begin(), remaining.end(), [](std::size_t r) { return r == 0; })) out.push_back(e);
      return;
    }
    const std::size_t block = var_degrees[i] - 1;
    if (block >= remaining.size()) {
      e[i] = 0;
      rec(i + 1);
      return;
    }
    const std::size_t budget = remaining[block];
    for (std::size_t x = 0; x <= budget; ++x) {
      e[i] = static_cast<std::uint32_t>(x);
      remaining[block] -= x;
      rec(i + 1);
      remaining[block] += x;
    }
    e[i] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<MultiDegree> multidegrees_of_total(const std::vector<std::size_t>& var_degrees, std::size_t max_degree,
                                               std::size_t d) {
  std::vector<bool> present(max_degree, false);
  for (auto deg : var_degrees)
    if (deg >= 1 && deg <= max_degree) present[deg - 1] = true;
  std::vector<MultiDegree> out;
  MultiDegree alpha(max_degree, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i == max_degree) {
      if (left == 0) out.push_back(alpha);
      return;
    }
    const std::size_t top = present[i] ? left : 0;
    for (std::size_t x = 0; x <= top; ++x) {
      alpha[i] = static_cast<std::uint32_t>(x);
      rec(i + 1, left - x);
    }
    alpha[i] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), [](const MultiDegree& a, const MultiDegree& b) {
    const auto wa = weighted_degree(a), wb = weighted_degree(b);
    if (wa != wb) return wa < wb;
    return a > b;
  });
  return out;
}

}  // namespace ncinv
