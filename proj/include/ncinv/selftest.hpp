#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncinv {

struct SelftestCase {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Randomized property checks over small contexts; the seed fixes every draw.
std::vector<SelftestCase> run_selftest(std::uint64_t seed, std::size_t rounds = 5);

}  // namespace ncinv
