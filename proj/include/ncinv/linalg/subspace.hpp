#pragma once

#include "ncinv/linalg/matrix.hpp"
#include "ncinv/linalg/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ncinv {

// Finite-dimensional subspace of K^ambient_dim kept as a reduced row-echelon
// basis: pivot entries are 1, every other row is 0 in each pivot column, and
// rows are ordered by strictly increasing pivot column.
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Adds v to the span; returns true iff the dimension grew.
  bool insert(Vector v);

  // Residual of v modulo the span; zero in every pivot column.
  Vector reduce(Vector v) const;

  bool contains(const Vector& v) const;

  // Coordinates of v in the echelon basis, or nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
  void check_size(const Vector& v) const;

  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

std::optional<Vector> span_contains(const Subspace& s, const Vector& v);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

// C with small ⊕ C = big: basis vectors of big are reduced modulo small (and
// the part of C built so far) in echelon order; nonzero residuals span C.
Subspace quotient_complement(const Subspace& big, const Subspace& small);

// Coordinates of v with respect to the given (linearly independent) vectors.
std::optional<Vector> express_in(const std::vector<Vector>& vectors, const Vector& v);

}  // namespace ncinv
