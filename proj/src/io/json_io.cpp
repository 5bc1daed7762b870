#include "ncinv/io/json_io.hpp"

#include "ncinv/error.hpp"

#include <fstream>
#include <string>

namespace ncinv {

namespace {

std::size_t index_from_key(const std::string& key, std::size_t bound, const char* what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != key.size() || v >= bound)
    throw InputError(std::string("bad ") + what + " index \"" + key + "\"");
  return v;
}

std::size_t count_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InputError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Word word_from_json(const json& j, std::size_t letters) {
  if (!j.is_array()) throw InputError("word must be a list of letter indices");
  Word w;
  for (const auto& x : j) {
    const std::size_t v = count_from_json(x, "letter");
    if (v >= letters) throw InputError("letter " + std::to_string(v) + " outside the alphabet");
    w.push_back(static_cast<Letter>(v));
  }
  return w;
}

}  // namespace

json scalar_to_json(const Scalar& q) { return to_string(q); }

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw InputError("rational entries must be integers or \"p/q\" strings");
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("matrix must be a non-empty list of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw InputError("matrix rows must be lists");
    Vector row;
    for (const auto& x : r) row.push_back(scalar_from_json(x));
    rows.push_back(std::move(row));
  }
  try {
    return Matrix::from_rows(rows);
  } catch (const DimensionMismatch& e) {
    throw InputError(std::string("ragged matrix: ") + e.what());
  }
}

json comm_to_json(const CommPolynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) {
    json exps = json::object();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) exps[std::to_string(i)] = e[i];
    terms.push_back({{"exps", std::move(exps)}, {"coeff", scalar_to_json(c)}});
  }
  return terms;
}

CommPolynomial comm_from_json(const json& terms, std::size_t num_vars) {
  if (!terms.is_array()) throw InputError("terms must be a list");
  CommPolynomial f(num_vars);
  for (const auto& t : terms) {
    if (!t.is_object() || !t.contains("exps") || !t.contains("coeff"))
      throw InputError("each term needs \"exps\" and \"coeff\"");
    if (!t["exps"].is_object()) throw InputError("\"exps\" must map variable indices to exponents");
    Exponents e(num_vars, 0);
    for (const auto& [key, val] : t["exps"].items())
      e[index_from_key(key, num_vars, "variable")] = static_cast<std::uint32_t>(count_from_json(val, "exponent"));
    f.add_term(e, scalar_from_json(t["coeff"]));
  }
  return f;
}

json record_to_json(const GeneratorRecord& r) {
  return {{"alpha", r.alpha}, {"terms", comm_to_json(r.poly)}};
}

json records_to_json(const std::vector<GeneratorRecord>& records) {
  json out = json::array();
  for (const auto& r : records) out.push_back(record_to_json(r));
  return out;
}

std::vector<GeneratorRecord> records_from_json(const json& j, const LieContext& ctx) {
  if (!j.is_array()) throw InputError("generator file must hold a list of records");
  std::vector<GeneratorRecord> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& item = j[i];
    if (!item.is_object() || !item.contains("terms"))
      throw InputError("record " + std::to_string(i) + " needs \"terms\"");
    GeneratorRecord r;
    try {
      r = make_record(ctx, comm_from_json(item["terms"], ctx.dim()));
    } catch (const InputError& e) {
      throw InputError("record " + std::to_string(i) + ": " + e.what());
    }
    if (item.contains("alpha")) {
      MultiDegree stated;
      if (!item["alpha"].is_array()) throw InputError("record " + std::to_string(i) + ": alpha must be a list");
      for (const auto& a : item["alpha"]) stated.push_back(static_cast<std::uint32_t>(count_from_json(a, "alpha")));
      if (stated != r.alpha) throw InputError("record " + std::to_string(i) + ": alpha does not match its terms");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<GeneratorRecord> import_external_generators(const std::filesystem::path& path, const LieContext& ctx) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read generator file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("generator file " + path.string() + " is not valid JSON: " + e.what());
  }
  return records_from_json(j, ctx);
}

json nc_to_json(const NCPolynomial& f) {
  json out = json::array();
  for (const auto& [w, c] : f.terms()) out.push_back({{"word", w}, {"coeff", scalar_to_json(c)}});
  return out;
}

NCPolynomial nc_from_json(const json& j, const Arena& arena) {
  if (!j.is_array()) throw InputError("polynomial must be a list of terms");
  TermMap t;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("word") || !term.contains("coeff"))
      throw InputError("each term needs \"word\" and \"coeff\"");
    add_term(t, word_from_json(term["word"], arena.letters()), scalar_from_json(term["coeff"]));
  }
  return NCPolynomial(arena, t);
}

json lie_element_to_json(const LieElement& a) {
  json out = json::object();
  for (const auto& [i, c] : a.coeffs()) out[word_to_string(a.context()->word(i))] = scalar_to_json(c);
  return out;
}

LieElement lie_element_from_json(const json& j, const std::shared_ptr<const LieContext>& ctx) {
  if (!j.is_object()) throw InputError("Lie element must map Lyndon labels to coefficients");
  SparseVec v;
  for (const auto& [key, val] : j.items()) {
    Word w;
    std::size_t start = 0;
    while (start <= key.size()) {
      const std::size_t comma = key.find(',', start);
      const std::string part = key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      w.push_back(static_cast<Letter>(index_from_key(part, ctx->generators(), "letter")));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    auto idx = ctx->index_of(w);
    if (!idx) throw InputError("\"" + key + "\" is not a basis label of this Lie algebra");
    add_term(v, *idx, scalar_from_json(val));
  }
  return LieElement(ctx, std::move(v));
}

std::shared_ptr<const LieContext> lie_context_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degrees")) throw InputError("lie_algebra needs \"degrees\"");
  std::vector<std::size_t> degrees;
  for (const auto& d : j["degrees"]) {
    const std::size_t v = count_from_json(d, "degree");
    if (v == 0) throw InputError("Lie basis degrees must be positive");
    degrees.push_back(v);
  }
  const std::size_t n = degrees.size();
  std::vector<SparseVec> table(n * n);
  if (j.contains("brackets")) {
    for (const auto& b : j["brackets"]) {
      if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("result"))
        throw InputError("each bracket needs \"i\", \"j\" and \"result\"");
      const std::size_t i = count_from_json(b["i"], "bracket index");
      const std::size_t k = count_from_json(b["j"], "bracket index");
      if (i >= n || k >= n || i >= k) throw InputError("brackets are listed for basis indices i < j");
      if (!b["result"].is_object()) throw InputError("bracket result must map basis indices to coefficients");
      SparseVec res;
      for (const auto& [key, val] : b["result"].items())
        add_term(res, index_from_key(key, n, "basis"), scalar_from_json(val));
      SparseVec neg;
      for (const auto& [x, c] : res) neg[x] = -c;
      table[i * n + k] = std::move(res);
      table[k * n + i] = std::move(neg);
    }
  }
  return LieContext::from_structure_constants(std::move(degrees), std::move(table));
}

json lie_basis_to_json(const LieContext& ctx) {
  json basis = json::array();
  for (std::size_t i = 0; i < ctx.dim(); ++i) {
    json entry = {{"index", i}, {"degree", ctx.degree(i)}};
    if (ctx.is_free_nilpotent()) entry["word"] = ctx.word(i);
    basis.push_back(std::move(entry));
  }
  json brackets = json::array();
  for (std::size_t i = 0; i < ctx.dim(); ++i)
    for (std::size_t k = i + 1; k < ctx.dim(); ++k) {
      const SparseVec& r = ctx.bracket_basis(i, k);
      if (r.empty()) continue;
      json res = json::object();
      for (const auto& [x, c] : r) res[std::to_string(x)] = scalar_to_json(c);
      brackets.push_back({{"i", i}, {"j", k}, {"result", std::move(res)}});
    }
  return {{"dim", ctx.dim()}, {"basis", std::move(basis)}, {"brackets", std::move(brackets)}};
}

json verification_to_json(const VerificationReport& v) {
  json rows = json::array();
  for (const auto& c : v.degrees) {
    json row = {{"degree", c.degree}, {"dim_subalgebra", c.dim_subalgebra}};
    row["dim_invariant"] = c.dim_invariant ? json(*c.dim_invariant) : json(nullptr);
    row["equal"] = c.equal;
    rows.push_back(std::move(row));
  }
  return {{"performed", v.performed},
          {"max_checked_degree", v.max_checked_degree},
          {"invariance", v.invariance},
          {"degrees", std::move(rows)},
          {"pass", v.pass()}};
}

json bounds_to_json(const BoundReport& b) {
  json out = {{"beta_comm", b.beta_comm}, {"beta_nc", b.beta_nc}, {"p", b.p}};
  out["group_order"] = b.group_order ? json(*b.group_order) : json(nullptr);
  out["inequality_pbeta"] = b.inequality_pbeta;
  out["inequality_noether"] = b.inequality_noether ? json(*b.inequality_noether) : json(nullptr);
  return out;
}

json pipeline_to_json(const PipelineResult& r) {
  json gens = json::array();
  for (const auto& g : r.generators)
    gens.push_back({{"f_degree", g.f_degree}, {"nc", nc_to_json(g.nc)}, {"source", record_to_json(g.source)}});
  return {{"arena", r.arena == ArenaKind::Enveloping ? "enveloping" : "relfree"},
          {"degree_bound", r.degree_bound},
          {"commutative_generators", records_to_json(r.records)},
          {"generators", std::move(gens)},
          {"dropped_zero", r.dropped_zero},
          {"pruned", r.pruned},
          {"complete_through_degree", r.complete_through_degree},
          {"truncated", r.truncated},
          {"verification", verification_to_json(r.verification)},
          {"bounds", bounds_to_json(r.bounds)}};
}

json polarization_to_json(const PolarizationReport& r) {
  auto module = [](const SplitModule& m) {
    return json{{"dim_u", m.dim_u}, {"dim_w", m.dim_w}, {"copies", m.copies}};
  };
  return {{"source", module(r.source)},
          {"target", module(r.target)},
          {"h", r.h},
          {"p", r.p},
          {"asserted", r.asserted},
          {"source_generators", r.source_generators},
          {"polarized_generators", r.polarized_generators},
          {"verification", verification_to_json(r.verification)}};
}

}  // namespace ncinv
