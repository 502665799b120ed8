// JSON and DOT serialization. All output is deterministic for fixed input:
// containers iterate in fixed orders and numbers are exact "p/q" strings.
#pragma once

#include <json.hpp>

#include <sstream>

#include "qpforge/higher_ar.hpp"
#include "qpforge/skew.hpp"

namespace qpforge {

using Json = nlohmann::ordered_json;

inline Json cyc3_json(const Cyc3& c) {
  return Json{{"a", rat_str(c.a)}, {"b", rat_str(c.b)}};
}

inline Cyc3 cyc3_from_json(const Json& j) {
  return Cyc3(rat_parse(j.at("a").get<std::string>()), rat_parse(j.at("b").get<std::string>()));
}

inline Json quiver_json(const Quiver& q) {
  Json j;
  j["s"] = q.s;
  j["family"] = family_name(q.family);
  Json verts = Json::array();
  for (const Vertex& v : q.vertices) verts.push_back(v.name());
  j["vertices"] = std::move(verts);
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows)
    arrows.push_back(Json{{"id", a.id},
                          {"src", q.vertices[a.src].name()},
                          {"tgt", q.vertices[a.tgt].name()},
                          {"label", q.arrow_identity(a.id)}});
  j["arrows"] = std::move(arrows);
  return j;
}

inline Json potential_json(const Potential& w) {
  Json terms = Json::array();
  for (const auto& [cycle, coeff] : w.terms) {
    Json t;
    t["cycle"] = cycle;
    t["coeff"] = cyc3_json(coeff);
    terms.push_back(std::move(t));
  }
  return terms;
}

inline std::string quiver_dot(const Quiver& q, const char* graph_name = "quiver") {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  for (const Vertex& v : q.vertices) os << "  \"" << v.name() << "\";\n";
  for (const Arrow& a : q.arrows)
    os << "  \"" << q.vertices[a.src].name() << "\" -> \"" << q.vertices[a.tgt].name()
       << "\" [label=\"" << a.label.display() << "\"];\n";
  os << "}\n";
  return os.str();
}

inline Json algebra_json(const JacobianAlgebra& J) {
  Json j;
  j["s"] = J.quiver.s;
  j["family"] = family_name(J.quiver.family);
  j["total_dimension"] = J.total_dimension;
  j["top_degree"] = J.top_degree;
  Json basis;
  for (uint32_t x = 0; x < J.quiver.vertices.size(); ++x) {
    Json list = Json::array();
    for (auto [d, i] : vertex_basis(J, x))
      list.push_back(Json{{"degree", d}, {"path", J.levels[d].basis[i].arrows}});
    basis[J.quiver.vertices[x].name()] = std::move(list);
  }
  j["basis"] = std::move(basis);
  // vertex x vertex dimension matrix
  const size_t nv = J.quiver.vertices.size();
  std::vector<std::vector<size_t>> mat(nv, std::vector<size_t>(nv, 0));
  for (int d = 0; d <= J.top_degree; ++d)
    for (uint32_t i = 0; i < J.levels[d].basis.size(); ++i)
      ++mat[J.levels[d].src[i]][J.levels[d].tgt[i]];
  j["dimension_matrix"] = mat;
  return j;
}

inline Json homogeneity_json(const Quiver& q, const HomogeneityReport& rep) {
  Json j;
  j["s"] = rep.s;
  Json cut = Json::array();
  for (uint32_t id : rep.cut.arrows) cut.push_back(q.arrow_identity(id));
  j["cut"] = std::move(cut);
  Json degs;
  for (const auto& [x, d] : rep.socle_degree) degs[q.vertices[x].name()] = d;
  j["socle_degrees"] = std::move(degs);
  j["N"] = rep.N;
  j["fcy"] = rep.fcy_str();
  return j;
}

inline Json ar_quiver_json(const Quiver& q, const ARQuiver& ar) {
  Json j;
  Json verts = Json::array();
  for (const auto& v : ar.vertices)
    verts.push_back(Json{{"x", q.vertices[v.x].name()}, {"level", v.level}});
  j["vertices"] = std::move(verts);
  Json arrows = Json::array();
  for (const auto& [from, to] : ar.arrows) arrows.push_back(Json::array({from, to}));
  j["arrows"] = std::move(arrows);
  return j;
}

// Levels become ranks so the translation reads horizontally.
inline std::string ar_quiver_dot(const Quiver& q, const ARQuiver& ar) {
  std::ostringstream os;
  os << "digraph ar {\n  rankdir=LR;\n";
  auto vname = [&](size_t i) {
    return q.vertices[ar.vertices[i].x].name() + "@" + std::to_string(ar.vertices[i].level);
  };
  for (int lvl = ar.lo; lvl <= ar.hi; ++lvl) {
    os << "  { rank=same;";
    for (size_t i = 0; i < ar.vertices.size(); ++i)
      if (ar.vertices[i].level == lvl) os << " \"" << vname(i) << "\";";
    os << " }\n";
  }
  for (const auto& [from, to] : ar.arrows)
    os << "  \"" << vname(from) << "\" -> \"" << vname(to) << "\";\n";
  os << "}\n";
  return os.str();
}

// Cut syntax: comma-separated arrow identities, e.g.
// "a[1,0]@2.1.0,a[2,1]@2.1.0" or "b[0],g[2]". Commas inside brackets
// belong to the identity, so tokens split at bracket depth zero only.
inline Cut parse_cut_spec(const Quiver& q, const std::string& spec) {
  std::map<std::string, uint32_t> by_identity;
  for (const Arrow& a : q.arrows) by_identity.emplace(q.arrow_identity(a.id), a.id);
  Cut cut;
  std::vector<std::string> tokens;
  std::string token;
  int depth = 0;
  for (char c : spec) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      tokens.push_back(token);
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  tokens.push_back(token);
  for (const std::string& tok : tokens) {
    if (tok.empty()) throw BadCutSpec("empty arrow token in cut spec");
    auto it = by_identity.find(tok);
    if (it == by_identity.end()) throw BadCutSpec("no arrow named " + tok);
    cut.arrows.push_back(it->second);
  }
  std::sort(cut.arrows.begin(), cut.arrows.end());
  cut.arrows.erase(std::unique(cut.arrows.begin(), cut.arrows.end()), cut.arrows.end());
  return cut;
}

inline std::string cut_to_string(const Quiver& q, const Cut& c) {
  std::string out;
  for (uint32_t id : c.arrows) {
    if (!out.empty()) out += ",";
    out += q.arrow_identity(id);
  }
  return out;
}

}  // namespace qpforge
