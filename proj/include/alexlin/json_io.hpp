// JSON serialization: representations, polynomials, invariant reports,
// and the growth-experiment table (JSON and CSV).
#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "alexlin/covers.hpp"

namespace alexlin {

using json = nlohmann::ordered_json;

inline json poly_to_json(const LaurentPoly& f) {
  json j;
  j["lowest"] = f.low_degree();
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(c.str());
  j["coeffs"] = coeffs;
  j["pretty"] = f.str();
  return j;
}

inline LaurentPoly poly_from_json(const json& j) {
  std::vector<Int> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
  return LaurentPoly(j.at("lowest").get<long>(), std::move(coeffs));
}

inline json permutation_to_json(const Permutation& p) {
  json cycles = json::array();
  for (const auto& c : p.cycles()) cycles.push_back(c);
  return cycles;
}

inline Permutation permutation_from_json(const json& j, int N) {
  std::vector<int> img(static_cast<std::size_t>(N));
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : j) {
    std::vector<int> c = cyc.get<std::vector<int>>();
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i] - 1, to = c[(i + 1) % c.size()] - 1;
      if (from < 0 || from >= N || to < 0 || to >= N)
        throw input_error("permutation JSON: symbol out of range");
      img[static_cast<std::size_t>(from)] = to;
    }
  }
  return Permutation::from_images(std::move(img));
}

/// {"N": 3, "r": 2, "table": {"a": [[[1,2,3]], [[1,3,2]]]}}
inline json rep_to_json(const PeriodicRep& rep, const std::vector<std::string>& gen_names) {
  json j;
  j["N"] = rep.N;
  j["r"] = rep.r;
  json table = json::object();
  for (std::size_t g = 0; g < rep.table.size(); ++g) {
    json per_shift = json::array();
    for (const auto& p : rep.table[g]) per_shift.push_back(permutation_to_json(p));
    table[gen_names.at(g)] = per_shift;
  }
  j["table"] = table;
  return j;
}

inline PeriodicRep rep_from_json(const json& j, const std::vector<std::string>& gen_names) {
  PeriodicRep rep;
  rep.N = j.at("N").get<int>();
  rep.r = j.at("r").get<int>();
  if (rep.N < 1 || rep.r < 1) throw input_error("rep JSON: N and r must be positive");
  const json& table = j.at("table");
  rep.table.resize(gen_names.size());
  for (std::size_t g = 0; g < gen_names.size(); ++g) {
    if (!table.contains(gen_names[g]))
      throw input_error("rep JSON: missing table entry for generator '" + gen_names[g] + "'");
    const json& per_shift = table.at(gen_names[g]);
    if (static_cast<int>(per_shift.size()) != rep.r)
      throw input_error("rep JSON: generator '" + gen_names[g] + "' needs one permutation per shift");
    for (const auto& pj : per_shift)
      rep.table[g].push_back(permutation_from_json(pj, rep.N));
  }
  return rep;
}

inline json check_to_json(const CheckResult& c) {
  json j;
  j["name"] = c.name;
  j["statement"] = c.statement;
  j["status"] = detail::status_str(c.status);
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

inline json report_to_json(const InvariantReport& r) {
  json j;
  j["N"] = r.N;
  j["r"] = r.r;
  j["matrix"] = std::to_string(r.matrix_rows) + "x" + std::to_string(r.matrix_cols);
  j["D"] = poly_to_json(r.D);
  j["degree"] = r.degree;
  if (r.orbit_count_T) j["T"] = *r.orbit_count_T;
  if (r.extension_tested)
    j["extends_over_G"] = r.extension_witness ? r.extension_witness->str() : "no";
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  j["checks"] = checks;
  return j;
}

inline std::string report_to_text(const InvariantReport& r) {
  std::ostringstream os;
  os << "N = " << r.N << ", r = " << r.r << ", matrix " << r.matrix_rows << "x" << r.matrix_cols
     << "\n";
  os << "D = " << r.D.str() << "\n";
  os << "degree = " << r.degree << "\n";
  if (r.orbit_count_T) os << "T = " << *r.orbit_count_T << "\n";
  if (r.extension_tested)
    os << "extends over G: " << (r.extension_witness ? r.extension_witness->str() : "no") << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << detail::status_str(c.status) << "] " << c.name << ": " << c.statement;
    if (!c.witness.empty()) os << " -- " << c.witness;
    os << "\n";
  }
  return os.str();
}

inline json growth_to_json(const GrowthExperiment& g) {
  json j;
  json rows = json::array();
  for (const auto& row : g.rows) {
    json rj;
    rj["n"] = row.n;
    rj["b"] = row.torsion.str();
    rj["betti"] = row.betti;
    rj["b_pow"] = row.torsion_root;
    rows.push_back(rj);
  }
  j["rows"] = rows;
  j["mahler"] = g.mahler;
  j["mahler_bound"] = g.mahler_bound;
  j["final_gap"] = g.final_gap;
  j["log_slope"] = g.slope;
  j["excluded_from_fit"] = g.excluded;
  return j;
}

inline std::string growth_to_csv(const GrowthExperiment& g) {
  std::ostringstream os;
  os << "n,b,b_pow\n";
  os.precision(17);
  for (const auto& row : g.rows) os << row.n << "," << row.torsion.str() << "," << row.torsion_root << "\n";
  return os.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace alexlin
