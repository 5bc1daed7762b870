#pragma once

#include "ncinv/io/json_io.hpp"
#include "ncinv/linalg/matrix.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ncinv {

enum class Mode { RelFree, Enveloping, CommOnly, Polarize, Dims };

std::string mode_name(Mode m);

struct PolarizeConfig {
  std::size_t dim_u = 0;
  std::size_t dim_w = 0;
  std::optional<std::size_t> copies_source;  // dim_w·h when absent
  std::size_t copies_target = 0;
  std::size_t h = 0;
};

struct RunConfig {
  Mode mode = Mode::RelFree;
  std::size_t dim_v = 0;
  std::size_t p = 1;
  std::optional<std::vector<Matrix>> group;
  std::optional<std::filesystem::path> external_generators;  // resolved against the config's directory
  std::optional<std::size_t> degree_bound;
  std::optional<std::size_t> verify_degree;
  std::size_t group_cap = 1024;
  std::size_t max_degree = 6;
  std::optional<json> lie_algebra;  // structure constants for a general graded L
  std::optional<PolarizeConfig> polarize;
};

// Throws InputError with a message naming the offending field.
RunConfig parse_config(const json& j, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

// Rechecks cross-field constraints, e.g. after command-line overrides.
void validate(const RunConfig& config);

}  // namespace ncinv
