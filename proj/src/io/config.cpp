#include "ncinv/io/config.hpp"

#include "ncinv/error.hpp"

#include <fstream>
#include <set>

namespace ncinv {

namespace {

std::size_t positive(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() <= 0)
    throw InputError("\"" + field + "\" must be a positive integer");
  return j.get<std::size_t>();
}

std::size_t non_negative(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InputError("\"" + field + "\" must be a non-negative integer");
  return j.get<std::size_t>();
}

Mode parse_mode(const json& j) {
  if (!j.is_string()) throw InputError("\"mode\" must be a string");
  const std::string s = j.get<std::string>();
  if (s == "relfree") return Mode::RelFree;
  if (s == "enveloping") return Mode::Enveloping;
  if (s == "comm-only") return Mode::CommOnly;
  if (s == "polarize") return Mode::Polarize;
  if (s == "dims") return Mode::Dims;
  throw InputError("unknown mode \"" + s + "\" (expected relfree, enveloping, comm-only, polarize or dims)");
}

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, val] : j.items())
    if (!known.count(key)) throw InputError("unknown field \"" + key + "\" in " + where);
}

}  // namespace

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::RelFree:
      return "relfree";
    case Mode::Enveloping:
      return "enveloping";
    case Mode::CommOnly:
      return "comm-only";
    case Mode::Polarize:
      return "polarize";
    case Mode::Dims:
      return "dims";
  }
  return "";
}

RunConfig parse_config(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  reject_unknown(j,
                 {"mode", "dim_v", "p", "group", "external_generators", "degree_bound", "verify_degree", "caps",
                  "lie_algebra", "polarize"},
                 "config");
  RunConfig c;
  if (!j.contains("mode")) throw InputError("config needs \"mode\"");
  c.mode = parse_mode(j["mode"]);
  if (j.contains("dim_v")) c.dim_v = positive(j["dim_v"], "dim_v");
  if (j.contains("p")) c.p = positive(j["p"], "p");
  if (j.contains("group")) {
    const json& g = j["group"];
    if (!g.is_object() || !g.contains("generators") || !g["generators"].is_array())
      throw InputError("\"group\" must be {\"generators\": [matrices]}");
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < g["generators"].size(); ++i) {
      try {
        gens.push_back(matrix_from_json(g["generators"][i]));
      } catch (const InputError& e) {
        throw InputError("group generator " + std::to_string(i) + ": " + e.what());
      }
    }
    c.group = std::move(gens);
  }
  if (j.contains("external_generators")) {
    if (!j["external_generators"].is_string()) throw InputError("\"external_generators\" must be a path string");
    std::filesystem::path p = j["external_generators"].get<std::string>();
    c.external_generators = p.is_absolute() ? p : base_dir / p;
  }
  if (j.contains("degree_bound")) c.degree_bound = positive(j["degree_bound"], "degree_bound");
  if (j.contains("verify_degree")) c.verify_degree = non_negative(j["verify_degree"], "verify_degree");
  if (j.contains("caps")) {
    const json& caps = j["caps"];
    if (!caps.is_object()) throw InputError("\"caps\" must be an object");
    reject_unknown(caps, {"group_order", "max_degree"}, "caps");
    if (caps.contains("group_order")) c.group_cap = positive(caps["group_order"], "caps.group_order");
    if (caps.contains("max_degree")) c.max_degree = positive(caps["max_degree"], "caps.max_degree");
  }
  if (j.contains("lie_algebra")) c.lie_algebra = j["lie_algebra"];
  if (j.contains("polarize")) {
    const json& pj = j["polarize"];
    if (!pj.is_object()) throw InputError("\"polarize\" must be an object");
    reject_unknown(pj, {"dim_u", "dim_w", "copies_source", "copies_target", "h"}, "polarize");
    PolarizeConfig pc;
    if (pj.contains("dim_u")) pc.dim_u = non_negative(pj["dim_u"], "polarize.dim_u");
    if (!pj.contains("dim_w") || !pj.contains("copies_target") || !pj.contains("h"))
      throw InputError("\"polarize\" needs dim_w, copies_target and h");
    pc.dim_w = positive(pj["dim_w"], "polarize.dim_w");
    pc.copies_target = positive(pj["copies_target"], "polarize.copies_target");
    pc.h = positive(pj["h"], "polarize.h");
    if (pj.contains("copies_source")) pc.copies_source = positive(pj["copies_source"], "polarize.copies_source");
    c.polarize = pc;
  }
  validate(c);
  return c;
}

void validate(const RunConfig& c) {
  if (c.group_cap == 0) throw InputError("caps.group_order must be positive");
  if (c.max_degree == 0) throw InputError("caps.max_degree must be positive");
  if (c.verify_degree && *c.verify_degree > c.max_degree)
    throw InputError("verify_degree " + std::to_string(*c.verify_degree) + " exceeds caps.max_degree " +
                     std::to_string(c.max_degree));
  if (c.group && c.group->empty())
    throw InputError("group.generators is empty; give the identity matrix for the trivial group");

  if (c.mode == Mode::Polarize) {
    if (!c.polarize) throw InputError("mode polarize needs a \"polarize\" section");
    if (!c.group) throw InputError("mode polarize needs a finite group acting on U + W");
    const std::size_t d = c.polarize->dim_u + c.polarize->dim_w;
    for (const auto& g : *c.group)
      if (g.rows() != d || g.cols() != d)
        throw InputError("polarize group generators must be " + std::to_string(d) + "x" + std::to_string(d) +
                         " (dim_u + dim_w)");
    return;
  }
  if (c.mode == Mode::Dims) {
    if (c.dim_v == 0 && !c.lie_algebra) throw InputError("mode dims needs \"dim_v\"");
    return;
  }
  if (c.lie_algebra) {
    if (c.mode != Mode::Enveloping && c.mode != Mode::CommOnly)
      throw InputError("\"lie_algebra\" is only used by the enveloping and comm-only modes");
    if (!c.group) throw InputError("a general Lie algebra needs \"group\" given in its basis");
    return;
  }
  if (c.dim_v == 0) throw InputError("config needs \"dim_v\"");
  if (!c.group && !c.external_generators)
    throw InputError("invariant modes need \"group\" or \"external_generators\"");
  if (c.mode == Mode::Enveloping && !c.group) throw InputError("mode enveloping needs \"group\"");
  if (c.group)
    for (std::size_t i = 0; i < c.group->size(); ++i)
      if ((*c.group)[i].rows() != c.dim_v || (*c.group)[i].cols() != c.dim_v)
        throw InputError("group generator " + std::to_string(i) + " must be " + std::to_string(c.dim_v) + "x" +
                         std::to_string(c.dim_v));
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_config(j, path.parent_path());
}

}  // namespace ncinv
