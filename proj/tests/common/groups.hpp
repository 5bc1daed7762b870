#pragma once

#include "ncinv/group/matrix_group.hpp"

#include <string>
#include <vector>

namespace ncinv::testing {

struct NamedGroup {
  std::string name;
  std::vector<Matrix> generators;
  std::size_t order;
};

inline Matrix m2(long a, long b, long c, long d) { return Matrix::from_rows({{a, b}, {c, d}}); }

// Finite subgroups of GL_2(Q) of order ≤ 8 used across the suites.
inline std::vector<NamedGroup> plane_groups() {
  return {
      {"trivial", {m2(1, 0, 0, 1)}, 1},
      {"minus_identity", {m2(-1, 0, 0, -1)}, 2},
      {"reflection", {m2(1, 0, 0, -1)}, 2},
      {"cyclic3", {m2(0, -1, 1, -1)}, 3},
      {"klein4", {m2(-1, 0, 0, 1), m2(1, 0, 0, -1)}, 4},
      {"cyclic4", {m2(0, -1, 1, 0)}, 4},
      {"cyclic6", {m2(1, -1, 1, 0)}, 6},
      {"symmetric3", {m2(-1, 1, 0, 1), m2(1, 0, 1, -1)}, 6},
      {"dihedral8", {m2(0, -1, 1, 0), m2(1, 0, 0, -1)}, 8},
  };
}

// Groups on a line.
inline std::vector<NamedGroup> line_groups() {
  return {
      {"trivial", {Matrix::from_rows({{1}})}, 1},
      {"sign", {Matrix::from_rows({{-1}})}, 2},
  };
}

}  // namespace ncinv::testing
