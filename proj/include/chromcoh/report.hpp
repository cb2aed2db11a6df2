#pragma once

// JSON and plain-text renderings of cohomology results.
//
// JSON layout (field order is fixed):
//   { "graph":     {"vertices": v, "edges": [[a, b], ...]},
//     "groups":    [{"i": i, "j": j, "free_rank": r, "torsion": [d, ...]}, ...],
//     "poincare":  [[t_exp, q_exp, coeff], ...],
//     "euler":     [[q_exp, coeff], ...],
//     "chromatic": [[lambda_exp, coeff], ...],
//     "checks":    {"name": bool, ...} }
// Coefficients that do not fit in 64 bits are emitted as decimal strings.

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chromcoh/abelian_group.hpp"
#include "chromcoh/chromatic.hpp"
#include "chromcoh/cohomology.hpp"
#include "chromcoh/graph.hpp"
#include "chromcoh/polynomial.hpp"

namespace chromcoh {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& a) {
  if (fits_int64(a)) return Json(a.convert_to<std::int64_t>());
  return Json(a.str());
}

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.a, e.b});
  return Json{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline Json to_json(const BigradedGroups& h) {
  Json out = Json::array();
  for (const auto& [b, grp] : h.entries()) {
    Json torsion = Json::array();
    for (const auto& d : grp.torsion()) torsion.push_back(to_json(d));
    out.push_back(Json{{"i", b.i}, {"j", b.j}, {"free_rank", grp.free_rank()}, {"torsion", std::move(torsion)}});
  }
  return out;
}

inline Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& [k, a] : p.terms()) out.push_back(Json::array({k, to_json(a)}));
  return out;
}

inline Json to_json(const TwoVarPolynomial& p) {
  Json out = Json::array();
  for (const auto& [e, a] : p.terms()) out.push_back(Json::array({e.first, e.second, to_json(a)}));
  return out;
}

inline Json cohomology_report(const Graph& g, const BigradedGroups& h, const ChromaticPolynomial& chromatic,
                              const std::vector<std::pair<std::string, bool>>& checks) {
  Json c = Json::object();
  for (const auto& [name, ok] : checks) c[name] = ok;
  return Json{{"graph", to_json(g)},
              {"groups", to_json(h)},
              {"poincare", to_json(poincare_polynomial(h))},
              {"euler", to_json(graded_euler_characteristic(h))},
              {"chromatic", to_json(chromatic.in_lambda())},
              {"checks", std::move(c)}};
}

// Row i in degree-shift notation, highest degree first, e.g. "Z_2{2} + Z{1}".
// `plus` separates summands.
inline std::string render_row(const BigradedGroups& h, int i, const std::string& plus = " ⊕ ") {
  std::vector<std::string> parts;
  const auto groups = row(h, i);
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    const int j = it->first;
    const AbelianGroup& grp = it->second;
    for (const auto& d : grp.torsion()) parts.push_back("Z_" + d.str() + "{" + std::to_string(j) + "}");
    if (grp.free_rank() == 1) parts.push_back("Z{" + std::to_string(j) + "}");
    if (grp.free_rank() > 1) parts.push_back("Z^" + std::to_string(grp.free_rank()) + "{" + std::to_string(j) + "}");
  }
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out += plus + parts[k];
  return out;
}

inline std::string render_table(const BigradedGroups& h, int max_height) {
  std::ostringstream out;
  for (int i = 0; i <= max_height; ++i) out << "H^" << i << ": " << render_row(h, i) << '\n';
  return out.str();
}

}  // namespace chromcoh
