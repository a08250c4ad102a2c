#pragma once

#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace ultratree {

/// Unvalidated tree description, as read from the external format.
struct RawTree {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, Rational>> labels;
  std::vector<std::pair<std::string, std::string>> edges;
};

using Edge = std::pair<std::size_t, std::size_t>;

class LabeledTree;
LabeledTree validate_tree(const RawTree& raw);

/// Validated, immutable vertex-labeled tree. Copies share one frozen snapshot.
class LabeledTree {
 public:
  std::size_t size() const { return data_->ids.size(); }
  const std::vector<std::string>& ids() const { return data_->ids; }
  const std::string& id(std::size_t v) const { return data_->ids.at(v); }
  const std::vector<Rational>& labels() const { return data_->labels; }
  const Rational& label(std::size_t v) const { return data_->labels.at(v); }
  const std::vector<Edge>& edges() const { return data_->edges; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return data_->adjacency.at(v); }

  std::size_t index_of(std::string_view id) const {
    auto it = data_->index.find(std::string(id));
    if (it == data_->index.end()) throw Error(ErrorKind::UnknownVertex, "no vertex named \"" + std::string(id) + "\"");
    return it->second;
  }

  /// Same shape, new labels (validated again).
  LabeledTree with_labels(const std::vector<Rational>& labels) const {
    RawTree raw;
    raw.vertices = ids();
    for (std::size_t v = 0; v < size(); ++v) raw.labels.emplace_back(id(v), labels.at(v));
    for (const auto& [u, v] : edges()) raw.edges.emplace_back(id(u), id(v));
    return validate_tree(raw);
  }

  RawTree to_raw() const { return RawTree{ids(), label_pairs(), edge_pairs()}; }

  friend bool operator==(const LabeledTree& a, const LabeledTree& b) {
    return a.ids() == b.ids() && a.labels() == b.labels() && a.edges() == b.edges();
  }

 private:
  struct Data {
    std::vector<std::string> ids;
    std::vector<Rational> labels;
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> adjacency;
    std::unordered_map<std::string, std::size_t> index;
  };

  std::vector<std::pair<std::string, Rational>> label_pairs() const {
    std::vector<std::pair<std::string, Rational>> out;
    for (std::size_t v = 0; v < size(); ++v) out.emplace_back(id(v), label(v));
    return out;
  }
  std::vector<std::pair<std::string, std::string>> edge_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [u, v] : edges()) out.emplace_back(id(u), id(v));
    return out;
  }

  friend LabeledTree validate_tree(const RawTree& raw);
  explicit LabeledTree(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Builds a LabeledTree, rejecting cycles, disconnection, missing or
/// negative labels. Errors name the offending vertex or edge.
inline LabeledTree validate_tree(const RawTree& raw) {
  auto data = std::make_shared<LabeledTree::Data>();
  const std::size_t n = raw.vertices.size();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "a tree needs at least one vertex");
  for (std::size_t i = 0; i < n; ++i)
    if (!data->index.emplace(raw.vertices[i], i).second)
      throw Error(ErrorKind::InvalidInput, "duplicate vertex \"" + raw.vertices[i] + "\"");
  data->ids = raw.vertices;

  auto lookup = [&](const std::string& id) {
    auto it = data->index.find(id);
    if (it == data->index.end()) throw Error(ErrorKind::UnknownVertex, "no vertex named \"" + id + "\"");
    return it->second;
  };

  std::vector<std::optional<Rational>> labels(n);
  for (const auto& [id, value] : raw.labels) {
    const std::size_t v = lookup(id);
    if (labels[v]) throw Error(ErrorKind::InvalidInput, "vertex \"" + id + "\" is labeled twice");
    if (value.sign() < 0) throw Error(ErrorKind::NegativeLabel, "vertex \"" + id + "\" has label " + value.str());
    labels[v] = value;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!labels[v]) throw Error(ErrorKind::MissingLabel, "vertex \"" + raw.vertices[v] + "\" has no label");
    data->labels.push_back(*labels[v]);
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  data->adjacency.resize(n);
  for (const auto& [a, b] : raw.edges) {
    const std::size_t u = lookup(a), v = lookup(b);
    const std::string name = "edge {" + a + ", " + b + "}";
    if (u == v) throw Error(ErrorKind::HasCycle, name + " is a self-loop");
    const std::size_t ru = find(u), rv = find(v);
    if (ru == rv) throw Error(ErrorKind::HasCycle, name + " closes a cycle");
    parent[ru] = rv;
    data->edges.emplace_back(u, v);
    data->adjacency[u].push_back(v);
    data->adjacency[v].push_back(u);
  }
  const std::size_t root = find(0);
  for (std::size_t v = 1; v < n; ++v)
    if (find(v) != root)
      throw Error(ErrorKind::NotConnected,
                  "vertex \"" + raw.vertices[v] + "\" is not connected to \"" + raw.vertices[0] + "\"");
  return LabeledTree(std::move(data));
}

struct Nondegeneracy {
  bool nondegenerate = true;
  std::optional<Edge> violating_edge;

  explicit operator bool() const { return nondegenerate; }
};

/// True iff max(l(u), l(v)) > 0 on every edge; otherwise names the first offending edge.
inline Nondegeneracy is_nondegenerate(const LabeledTree& t) {
  for (const Edge& e : t.edges())
    if (t.label(e.first).is_zero() && t.label(e.second).is_zero()) return Nondegeneracy{false, e};
  return {};
}

}  // namespace ultratree
