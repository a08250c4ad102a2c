#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "campaign.hpp"
#include "diametrical.hpp"
#include "error.hpp"
#include "labeled_tree.hpp"
#include "rational.hpp"
#include "space.hpp"

namespace ultratree {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

/// Tree JSON: {"vertices": [...], "labels": {"v": "p/q", ...}, "edges": [["u","v"], ...]}.
/// Labels must be rational strings; JSON numbers are refused so that no
/// value passes through floating point.
inline RawTree parse_tree_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  auto fail = [](const std::string& what) -> void { throw Error(ErrorKind::InvalidInput, what); };
  if (!doc.is_object()) fail("tree file must be a JSON object");
  for (const char* key : {"vertices", "labels", "edges"})
    if (!doc.contains(key)) fail(std::string("tree file lacks \"") + key + "\"");
  if (!doc["vertices"].is_array() || !doc["labels"].is_object() || !doc["edges"].is_array())
    fail("\"vertices\" and \"edges\" must be arrays and \"labels\" an object");

  RawTree raw;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) fail("vertex identifiers must be strings");
    raw.vertices.push_back(v.get<std::string>());
  }
  for (const auto& [id, value] : doc["labels"].items()) {
    if (!value.is_string()) fail("label of " + id + " must be a rational string such as \"3/2\"");
    raw.labels.emplace_back(id, Rational::parse(value.get<std::string>()));
  }
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      fail("each edge must be a pair of vertex identifiers");
    raw.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return raw;
}

inline std::string tree_to_json(const LabeledTree& t) {
  nlohmann::ordered_json doc;
  doc["vertices"] = t.ids();
  doc["labels"] = nlohmann::ordered_json::object();
  for (std::size_t v = 0; v < t.size(); ++v) doc["labels"][t.id(v)] = t.label(v).str();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : t.edges()) doc["edges"].push_back({t.id(u), t.id(v)});
  return doc.dump(2) + "\n";
}

/// Matrix CSV: a header row of point identifiers, then one row of rational strings per point.
inline FiniteUltrametricSpace parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) {
      const auto a = field.find_first_not_of(" \t");
      const auto b = field.find_last_not_of(" \t");
      fields.push_back(a == std::string::npos ? "" : field.substr(a, b - a + 1));
    }
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    rows.push_back(std::move(fields));
  }
  if (rows.empty()) throw Error(ErrorKind::InvalidInput, "matrix file is empty");
  const std::vector<std::string> ids = rows.front();
  const std::size_t n = ids.size();
  for (const auto& id : ids)
    if (id.empty()) throw Error(ErrorKind::InvalidInput, "empty point identifier in header row");
  if (rows.size() != n + 1)
    throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(n) + " matrix rows, found " +
                                             std::to_string(rows.size() - 1));
  std::vector<std::vector<Rational>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i + 1].size() != n)
      throw Error(ErrorKind::InvalidInput, "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i + 1].size()) +
                                               " entries, expected " + std::to_string(n));
    for (const auto& cell : rows[i + 1]) m[i].push_back(Rational::parse(cell));
  }
  return validate_ultrametric(ids, m);
}

inline std::string matrix_to_csv(const FiniteUltrametricSpace& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s.point(i);
  out += "\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) out += (j ? "," : "") + s.distance(i, j).str();
    out += "\n";
  }
  return out;
}

/// DOT for G_X: one cluster per part with a shared fill color, and the star center (if any) annotated.
inline std::string diametrical_dot(const FiniteUltrametricSpace& s) {
  const DiametricalGraph g(s);
  auto quote = [](const std::string& id) {
    std::string out = "\"";
    for (char c : id) out += (c == '"' || c == '\\') ? std::string("\\") + c : std::string(1, c);
    return out + "\"";
  };
  std::ostringstream out;
  out << "graph diametrical {\n";
  out << "  label=\"diam = " << diameter(s).str() << "\";\n";
  out << "  node [shape=circle, style=filled, colorscheme=set312];\n";
  if (s.size() >= 2) {
    const auto parts = multipartite_parts(g);
    const auto star = spanning_star(g);
    for (std::size_t p = 0; p < parts.parts.size(); ++p) {
      out << "  subgraph cluster_part" << p + 1 << " {\n";
      out << "    label=\"part " << p + 1 << "\";\n";
      for (std::size_t v : parts.parts[p]) out << "    " << quote(s.point(v)) << " [fillcolor=" << p % 12 + 1 << "];\n";
      out << "  }\n";
    }
    if (star) out << "  " << quote(s.point(star->center)) << " [xlabel=\"star center\", penwidth=3];\n";
  } else {
    out << "  " << quote(s.point(0)) << " [fillcolor=1];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << quote(s.point(u)) << " -- " << quote(s.point(v)) << ";\n";
  out << "}\n";
  return out.str();
}

inline nlohmann::ordered_json report_json(const CampaignReport& r) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["campaign"] = r.campaign;
  doc["n"] = r.n;
  doc["classes_checked"] = r.classes_checked;
  doc["all_passed"] = r.all_passed();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : r.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["kind"] = c.kind == CheckKind::Theorem ? "theorem" : "conjecture";
    j["verdict"] = to_string(c.verdict());
    j["passed"] = c.passed;
    j["failed"] = c.failed;
    j["skipped"] = c.skipped;
    if (!c.note.empty()) j["note"] = c.note;
    if (c.witness) {
      j["witness"]["description"] = c.witness->description;
      if (c.witness->space) j["witness"]["matrix"] = matrix_to_csv(*c.witness->space);
    }
    doc["checks"].push_back(std::move(j));
  }
  doc["facts"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.facts) doc["facts"][k] = v;
  return doc;
}

inline std::string report_to_json(const CampaignReport& r) { return report_json(r).dump(2) + "\n"; }

}  // namespace ultratree
