#pragma once

#include "ncinv/linalg/matrix.hpp"
#include "ncinv/linalg/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace ncinv {

// Exponent vector over the variables of S(L); variables are Lie-basis indices.
using Exponents = std::vector<std::uint32_t>;

// α ∈ ℕ₀^p: α_i counts the variables of Lie degree i+1 in a monomial.
using MultiDegree = std::vector<std::uint32_t>;

std::size_t total(const MultiDegree& alpha);
// Induced degree in F and U: Σ (i+1)·α_i.
std::size_t weighted_degree(const MultiDegree& alpha);

// Polynomial in the commutative variables x_0..x_{k-1}, each carrying a
// positive degree (the Lie degree of the corresponding basis element).
class CommPolynomial {
public:
  using Terms = std::map<Exponents, Scalar>;

  CommPolynomial() = default;
  explicit CommPolynomial(std::size_t num_vars) : num_vars_(num_vars) {}
  CommPolynomial(std::size_t num_vars, Terms terms);

  static CommPolynomial constant(std::size_t num_vars, const Scalar& c);
  static CommPolynomial variable(std::size_t num_vars, std::size_t i);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Scalar& c);

  CommPolynomial& operator+=(const CommPolynomial& o);
  friend CommPolynomial operator+(CommPolynomial a, const CommPolynomial& b) { return a += b; }
  friend CommPolynomial operator-(const CommPolynomial& a, const CommPolynomial& b);
  friend CommPolynomial operator*(const CommPolynomial& a, const CommPolynomial& b);
  friend CommPolynomial operator*(const Scalar& c, const CommPolynomial& a);
  friend bool operator==(const CommPolynomial& a, const CommPolynomial& b) = default;

  // Multidegree when every term shares one; var_degrees[i] is the degree of x_i.
  std::optional<MultiDegree> multidegree(const std::vector<std::size_t>& var_degrees,
                                         std::size_t max_degree) const;

  // Linear substitution x_j ↦ Σ_i g(i, j) x_i.
  CommPolynomial substitute(const Matrix& g) const;

private:
  std::size_t num_vars_ = 0;
  Terms terms_;
};

std::size_t standard_degree(const Exponents& e);
MultiDegree multidegree_of(const Exponents& e, const std::vector<std::size_t>& var_degrees, std::size_t max_degree);

// Monomial basis of the multihomogeneous component S_α. Within each degree
// block exponents are listed in decreasing lex order (x0² before x0x1 before x1²).
std::vector<Exponents> monomial_basis(const std::vector<std::size_t>& var_degrees, const MultiDegree& alpha);

// All α ∈ ℕ₀^p with |α| = d, skipping degrees with no variables, in
// increasing weighted degree then decreasing lex order.
std::vector<MultiDegree> multidegrees_of_total(const std::vector<std::size_t>& var_degrees, std::size_t max_degree,
                                               std::size_t d);

}  // namespace ncinv
