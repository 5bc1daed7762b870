#pragma once

#include "ncinv/io/config.hpp"

#include <string>

namespace ncinv {

enum class RunStatus { Ok, Pass, Fail, Report };

struct RunOutput {
  json result;
  RunStatus status = RunStatus::Ok;
  std::string summary;
};

std::string status_name(RunStatus s);

// 0 for Ok/Pass/Report, 1 for Fail.
int exit_code(RunStatus s);

// Executes the configured mode. Input problems surface as InputError or
// CapExceeded; verification failures are reported through the status.
RunOutput run_config(const RunConfig& config);

// dim T_d, dim (L_p)_d, dim F_d, dim U_d for d = 0..max_degree.
json dims_table(std::size_t n, std::size_t p, std::size_t max_degree);

}  // namespace ncinv
