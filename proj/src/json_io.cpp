#include "ybe/json_io.hpp"

#include <fstream>
#include <sstream>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

Table table_from(const Json& j, const char* key, std::size_t n) {
  if (!j.contains(key) || !j[key].is_array())
    throw InputError(std::string("solution field \"") + key + "\" must be an array");
  const Json& rows = j[key];
  if (rows.size() != n)
    throw InputError(std::string("\"") + key + "\" must have n rows");
  Table out;
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != n)
      throw InputError(std::string("\"") + key + "\" rows must have n entries");
    std::vector<std::size_t> r;
    for (const Json& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0)
        throw InputError(std::string("\"") + key + "\" entries must be non-negative integers");
      r.push_back(v.get<std::size_t>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

SetSolution solution_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("solution must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1)
    throw InputError("solution field \"n\" must be a positive integer");
  const auto n = j["n"].get<std::size_t>();
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("solution field \"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  Table sigma = table_from(j, "sigma", n);
  if (!j.contains("tau")) {
    // Derivation inverts σ rows; reject tables where that is impossible.
    for (const auto& row : sigma)
      if (!is_permutation(row, n)) throw InputError("sigma rows must be permutations to derive tau");
    return from_sigma(std::move(sigma), std::move(name));
  }
  return make_solution(std::move(sigma), table_from(j, "tau", n), std::move(name));
}

Json solution_to_json(const SetSolution& s) {
  Json j;
  if (!s.name.empty()) j["name"] = s.name;
  j["n"] = s.n;
  j["sigma"] = s.sigma;
  j["tau"] = s.tau;
  return j;
}

SetSolution parse_solution(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return solution_from_json(j);
}

SetSolution load_solution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  SetSolution s = parse_solution(buf.str());
  if (s.name.empty()) s.name = path.stem().string();
  return s;
}

Json matrix_to_json(const SparseMat& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (const auto& [c, v] : m.row(r)) entries.push_back(Json::array({r, c, v.str()}));
  return Json{{"dim", m.dim()}, {"entries", std::move(entries)}};
}

Json report_to_json(const CheckReport& r) {
  Json j{{"name", r.name}, {"status", std::string(status_name(r.status))}, {"millis", r.millis}};
  if (!r.note.empty()) j["note"] = r.note;
  if (r.witness) {
    j["witness"] = Json{{"indices", r.witness->indices},
                        {"location", r.witness->location},
                        {"lhs", r.witness->lhs},
                        {"rhs", r.witness->rhs}};
  }
  return j;
}

Json reports_to_json(const std::string& solution, const std::vector<CheckReport>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(report_to_json(c));
  return Json{{"solution", solution}, {"checks", std::move(arr)}};
}

Json conjecture_to_json(const ConjectureReport& c) {
  Json j{{"invertible", c.invertible},
         {"commutes_r", c.commutes_r},
         {"commutes_rcheck", c.commutes_rcheck}};
  if (c.phi) j["phi"] = matrix_to_json(*c.phi);
  return j;
}

}  // namespace ybe
