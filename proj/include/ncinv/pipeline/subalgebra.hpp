#pragma once

#include "ncinv/algebra/nc_polynomial.hpp"
#include "ncinv/linalg/subspace.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace ncinv {

// Coordinates of a homogeneous degree-d element in the arena's basis of its
// degree-d component (words, representatives or PBW monomials).
std::size_t component_dim(const Arena& arena, std::size_t d);
Vector component_coordinates(const NCPolynomial& f, std::size_t d);

// Degreewise spans A_d of the subalgebra generated by homogeneous elements:
// A_0 = K·1 and A_e = span{g·a : g a generator of degree k ≥ 1, a ∈ A_{e−k}}.
class SubalgebraSpan {
public:
  SubalgebraSpan(Arena arena, std::size_t max_degree);

  const Arena& arena() const { return arena_; }
  std::size_t max_degree() const { return max_degree_; }
  const std::vector<NCPolynomial>& generators() const { return generators_; }

  // g must be nonzero and homogeneous of degree in [1, max_degree].
  void add_generator(const NCPolynomial& g);
  const Subspace& component(std::size_t d);
  std::size_t dim(std::size_t d) { return component(d).dim(); }
  // f homogeneous (or zero) of degree d.
  bool contains(const NCPolynomial& f, std::size_t d);

private:
  struct Level {
    Subspace span;
    std::vector<NCPolynomial> basis;
  };

  Arena arena_;
  std::size_t max_degree_;
  std::vector<NCPolynomial> generators_;
  std::vector<std::size_t> degrees_;
  std::map<std::size_t, Level> levels_;
};

}  // namespace ncinv
