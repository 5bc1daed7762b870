#pragma once

#include "ncinv/lie/lie_context.hpp"
#include "ncinv/linalg/matrix.hpp"

#include <cstddef>
#include <vector>

namespace ncinv {

inline constexpr std::size_t kDefaultGroupCap = 1024;

// Finite group of invertible rational matrices. Elements are kept in
// breadth-first discovery order, identity first.
class MatrixGroup {
public:
  // Throws InputError on a singular or wrongly sized generator and
  // CapExceeded when more than cap elements turn up.
  static MatrixGroup close(std::vector<Matrix> generators, std::size_t dim, std::size_t cap = kDefaultGroupCap);

  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& generators() const { return generators_; }
  const std::vector<Matrix>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  // Elementwise image under a homomorphism, keeping the element order.
  // Used for GL(V) → Aut(L_p(V)) and for copies of a module.
  template <typename F>
  MatrixGroup map(F&& f, std::size_t new_dim) const {
    MatrixGroup out;
    out.dim_ = new_dim;
    for (const auto& g : generators_) out.generators_.push_back(f(g));
    for (const auto& g : elements_) out.elements_.push_back(f(g));
    return out;
  }

  MatrixGroup lift(const LieContext& ctx) const;

private:
  std::size_t dim_ = 0;
  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
};

// Closes generators already written in a Lie basis after checking that each
// one is a graded automorphism; throws InputError otherwise.
MatrixGroup close_automorphisms(const LieContext& ctx, std::vector<Matrix> generators,
                                std::size_t cap = kDefaultGroupCap);

}  // namespace ncinv
