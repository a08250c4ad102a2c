#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "labeled_tree.hpp"
#include "rational.hpp"

namespace ultratree {

/// Decodes a Pruefer sequence over {0, ..., n-1} (length n - 2) into the edge list of its tree.
inline std::vector<Edge> prufer_to_edges(const std::vector<std::size_t>& code, std::size_t n) {
  if (n < 2 || code.size() != n - 2) throw Error(ErrorKind::InvalidInput, "Pruefer sequence length must be n - 2");
  std::vector<std::size_t> degree(n, 1);
  for (std::size_t v : code) {
    if (v >= n) throw Error(ErrorKind::InvalidInput, "Pruefer entry out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // Linear decoding: ptr scans for the next smallest leaf, and a vertex that
  // becomes a leaf below ptr is used right away.
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (std::size_t v : code) {
    edges.emplace_back(leaf, v);
    degree[leaf] = 0;
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return edges;
}

namespace detail {

/// Unbiased draw from [0, bound) using only the engine's raw output, so a
/// seed replays identically across standard libraries.
inline std::size_t uniform_below(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

}  // namespace detail

/// Uniformly random tree shape (random Pruefer sequence) on vertices v1..vn
/// with labels drawn from the pool; zero-zero edges are then repaired so the
/// labeling is non-degenerate. Deterministic per seed.
inline LabeledTree random_labeled_tree(std::size_t n, const std::vector<Rational>& pool, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be at least 1");
  if (pool.empty()) throw Error(ErrorKind::EmptyPool, "label pool is empty");
  bool has_positive = false;
  for (const Rational& r : pool) {
    if (r.sign() < 0) throw Error(ErrorKind::NegativeLabel, "pool value " + r.str() + " is negative");
    has_positive = has_positive || r.sign() > 0;
  }
  if (n >= 2 && !has_positive)
    throw Error(ErrorKind::EmptyPool, "label pool has no positive value, so no labeling can be non-degenerate");

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  if (n >= 2) {
    std::vector<std::size_t> code(n - 2);
    for (auto& c : code) c = detail::uniform_below(rng, n);
    edges = prufer_to_edges(code, n);
  }

  std::vector<Rational> positive;
  for (const Rational& r : pool)
    if (r.sign() > 0) positive.push_back(r);
  std::vector<Rational> labels(n);
  for (auto& l : labels) l = pool[detail::uniform_below(rng, pool.size())];
  // An edge with two zero labels gets its second endpoint redrawn from the
  // positive part of the pool; a positive label never breaks another edge.
  for (const auto& [u, v] : edges)
    if (labels[u].is_zero() && labels[v].is_zero()) labels[v] = positive[detail::uniform_below(rng, positive.size())];

  RawTree raw;
  for (std::size_t v = 0; v < n; ++v) raw.vertices.push_back("v" + std::to_string(v + 1));
  for (const auto& [u, v] : edges) raw.edges.emplace_back(raw.vertices[u], raw.vertices[v]);
  for (std::size_t v = 0; v < n; ++v) raw.labels.emplace_back(raw.vertices[v], labels[v]);
  return validate_tree(raw);
}

}  // namespace ultratree
