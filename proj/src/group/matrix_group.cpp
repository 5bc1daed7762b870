#include "ncinv/group/matrix_group.hpp"

#include "ncinv/error.hpp"

#include <deque>
#include <set>
#include <string>

namespace ncinv {

MatrixGroup MatrixGroup::close(std::vector<Matrix> generators, std::size_t dim, std::size_t cap) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Matrix& g = generators[i];
    if (g.rows() != dim || g.cols() != dim)
      throw InputError("generator " + std::to_string(i) + " is " + std::to_string(g.rows()) + "x" +
                       std::to_string(g.cols()) + ", expected " + std::to_string(dim) + "x" + std::to_string(dim));
    if (!is_invertible(g)) throw InputError("generator " + std::to_string(i) + " is singular");
  }
  MatrixGroup G;
  G.dim_ = dim;
  G.generators_ = std::move(generators);

  std::set<Matrix> seen;
  std::deque<std::size_t> queue;
  auto discover = [&](Matrix m) {
    if (!seen.insert(m).second) return;
    if (G.elements_.size() == cap)
      throw CapExceeded("group not verified finite within cap group_order=" + std::to_string(cap));
    G.elements_.push_back(std::move(m));
    queue.push_back(G.elements_.size() - 1);
  };
  discover(Matrix::identity(dim));
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& s : G.generators_) discover(G.elements_[i] * s);
  }
  return G;
}

MatrixGroup MatrixGroup::lift(const LieContext& ctx) const {
  return map([&](const Matrix& g) { return ctx.lift(g); }, ctx.dim());
}

MatrixGroup close_automorphisms(const LieContext& ctx, std::vector<Matrix> generators, std::size_t cap) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Matrix& g = generators[i];
    if (g.rows() != ctx.dim() || g.cols() != ctx.dim())
      throw InputError("automorphism " + std::to_string(i) + " does not match the Lie basis dimension");
    if (!ctx.is_graded_automorphism(g))
      throw InputError("matrix " + std::to_string(i) + " is not a graded automorphism of the Lie algebra");
  }
  return MatrixGroup::close(std::move(generators), ctx.dim(), cap);
}

}  // namespace ncinv
