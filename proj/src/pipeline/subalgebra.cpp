#include "ncinv/pipeline/subalgebra.hpp"

#include "ncinv/error.hpp"

#include <string>

namespace ncinv {

namespace {

std::size_t power(std::size_t n, std::size_t d) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < d; ++i) r *= n;
  return r;
}

// Rank of w among all words of its length (lex order).
std::size_t word_rank(const Word& w, std::size_t n) {
  std::size_t r = 0;
  for (Letter x : w) r = r * n + x;
  return r;
}

}  // namespace

std::size_t component_dim(const Arena& arena, std::size_t d) {
  switch (arena.kind()) {
    case ArenaKind::Tensor:
      return power(arena.letters(), d);
    case ArenaKind::RelFree:
      return arena.relfree_context().dim(d);
    case ArenaKind::Enveloping:
      return arena.enveloping_context().pbw_basis(d).size();
  }
  return 0;
}

Vector component_coordinates(const NCPolynomial& f, std::size_t d) {
  const Arena& arena = f.arena();
  for (const auto& [w, c] : f.terms())
    if (arena.degree_of(w) != d)
      throw DimensionMismatch("element is not homogeneous of degree " + std::to_string(d));
  switch (arena.kind()) {
    case ArenaKind::Tensor: {
      Vector v(power(arena.letters(), d));
      for (const auto& [w, c] : f.terms()) v[word_rank(w, arena.letters())] = c;
      return v;
    }
    case ArenaKind::RelFree:
      return arena.relfree_context().coordinates(f.terms(), d);
    case ArenaKind::Enveloping:
      return arena.enveloping_context().coordinates(f.terms(), d);
  }
  return {};
}

SubalgebraSpan::SubalgebraSpan(Arena arena, std::size_t max_degree)
    : arena_(std::move(arena)), max_degree_(max_degree) {}

void SubalgebraSpan::add_generator(const NCPolynomial& g) {
  if (!(g.arena() == arena_)) throw ArenaMismatch("generator from a different arena");
  if (g.is_zero() || !g.is_homogeneous()) throw InputError("subalgebra generators must be nonzero and homogeneous");
  const std::size_t k = *g.degree();
  if (k == 0 || k > max_degree_)
    throw CapExceeded("generator degree " + std::to_string(k) + " outside 1.." + std::to_string(max_degree_));
  generators_.push_back(g);
  degrees_.push_back(k);
  levels_.erase(levels_.lower_bound(k), levels_.end());
}

const Subspace& SubalgebraSpan::component(std::size_t d) {
  if (d > max_degree_)
    throw CapExceeded("degree " + std::to_string(d) + " exceeds max_degree cap " + std::to_string(max_degree_));
  if (auto it = levels_.find(d); it != levels_.end()) return it->second.span;
  Level level{Subspace(component_dim(arena_, d)), {}};
  auto offer = [&](const NCPolynomial& f) {
    if (f.is_zero()) return;
    if (level.span.insert(component_coordinates(f, d))) level.basis.push_back(f);
  };
  if (d == 0) {
    offer(NCPolynomial::one(arena_));
  } else {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (degrees_[i] > d) continue;
      component(d - degrees_[i]);
      const auto& lower = levels_.at(d - degrees_[i]).basis;
      for (const auto& a : lower) offer(nc_multiply(generators_[i], a));
    }
  }
  return levels_.emplace(d, std::move(level)).first->second.span;
}

bool SubalgebraSpan::contains(const NCPolynomial& f, std::size_t d) {
  if (f.is_zero()) return true;
  return component(d).contains(component_coordinates(f, d));
}

}  // namespace ncinv
