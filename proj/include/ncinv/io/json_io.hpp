#pragma once

#include "ncinv/algebra/nc_polynomial.hpp"
#include "ncinv/comm/invariants.hpp"
#include "ncinv/lie/lie_context.hpp"
#include "ncinv/pipeline/pipeline.hpp"
#include "ncinv/polarize/polarize.hpp"

#include <json.hpp>

#include <filesystem>
#include <memory>
#include <vector>

namespace ncinv {

using json = nlohmann::ordered_json;

// Rationals are written as "p/q" strings; integers are accepted on input.
json scalar_to_json(const Scalar& q);
Scalar scalar_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json comm_to_json(const CommPolynomial& f);
CommPolynomial comm_from_json(const json& terms, std::size_t num_vars);

// {alpha: [...], terms: [{exps: {"i": k}, coeff: "p/q"}]}
json record_to_json(const GeneratorRecord& r);
json records_to_json(const std::vector<GeneratorRecord>& records);
// Checks multihomogeneity and that a stated alpha matches the terms.
std::vector<GeneratorRecord> records_from_json(const json& j, const LieContext& ctx);
std::vector<GeneratorRecord> import_external_generators(const std::filesystem::path& path, const LieContext& ctx);

// [{word: [...], coeff: "p/q"}]
json nc_to_json(const NCPolynomial& f);
NCPolynomial nc_from_json(const json& j, const Arena& arena);

// {"0,1": "c", ...} keyed by Lyndon labels.
json lie_element_to_json(const LieElement& a);
LieElement lie_element_from_json(const json& j, const std::shared_ptr<const LieContext>& ctx);

// {degrees: [...], brackets: [{i, j, result: {"k": "c"}}]} listing [b_i, b_j]
// for i < j; the rest follows from antisymmetry.
std::shared_ptr<const LieContext> lie_context_from_json(const json& j);
json lie_basis_to_json(const LieContext& ctx);

json verification_to_json(const VerificationReport& v);
json bounds_to_json(const BoundReport& b);
json pipeline_to_json(const PipelineResult& r);
json polarization_to_json(const PolarizationReport& r);

}  // namespace ncinv
