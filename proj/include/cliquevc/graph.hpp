#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cliquevc/bitset.hpp"
#include "cliquevc/error.hpp"

namespace cliquevc {

inline constexpr std::size_t kDefaultMaxVertices = 1'000'000;

// Simple undirected graph on vertices 0..n-1 with one bit row per vertex.
// Immutable once built; construct through GraphBuilder.
class Graph {
 public:
  Graph() = default;

  std::size_t n() const { return adj_.size(); }
  std::size_t m() const { return m_; }

  const DynBitset& neighbors(std::size_t v) const { return adj_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }

  VertexSet empty_set() const { return VertexSet(n()); }
  VertexSet all_vertices() const { return VertexSet::full(n()); }

  // Edges as (min, max) pairs in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(m_);
    for (std::size_t u = 0; u < n(); ++u)
      adj_[u].for_each([&](std::size_t v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  bool is_clique(const VertexSet& s) const {
    bool ok = true;
    s.for_each([&](std::size_t v) {
      if (!ok) return;
      VertexSet rest = s;
      rest.reset(v);
      ok = rest.is_subset_of(adj_[v]);
    });
    return ok;
  }

  // Symmetry, loop-freeness and cached edge count.
  bool check_invariants() const {
    std::size_t total = 0;
    for (std::size_t u = 0; u < n(); ++u) {
      if (adj_[u].size() != n() || adj_[u].test(u)) return false;
      bool sym = true;
      adj_[u].for_each([&](std::size_t v) { sym = sym && adj_[v].test(u); });
      if (!sym) return false;
      total += adj_[u].count();
    }
    return total == 2 * m_;
  }

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;
  std::vector<DynBitset> adj_;
  std::size_t m_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n, std::size_t max_vertices = kDefaultMaxVertices) {
    if (n > max_vertices)
      throw ResourceLimit("vertex count " + std::to_string(n) + " exceeds limit " + std::to_string(max_vertices));
    g_.adj_.assign(n, DynBitset(n));
  }

  std::size_t n() const { return g_.adj_.size(); }

  // Returns false if the edge was already present.
  bool add_edge(std::size_t u, std::size_t v) {
    if (u >= n() || v >= n()) throw InvalidParameter("edge endpoint out of range");
    if (u == v) throw InvalidParameter("self-loop on vertex " + std::to_string(u));
    if (g_.adj_[u].test(v)) return false;
    g_.adj_[u].set(v);
    g_.adj_[v].set(u);
    ++g_.m_;
    return true;
  }

  bool has_edge(std::size_t u, std::size_t v) const { return g_.adj_[u].test(v); }

  Graph build() && { return std::move(g_); }
  Graph build() const& { return g_; }

 private:
  Graph g_;
};

}  // namespace cliquevc
