#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cliquevc/bitset.hpp"
#include "cliquevc/error.hpp"
#include "cliquevc/graph.hpp"
#include "cliquevc/parallel.hpp"
#include "cliquevc/rational.hpp"

namespace cliquevc {

inline constexpr std::size_t kDefaultCliqueCap = 10'000'000;

// All maximal cliques of a graph, sorted by size (descending) and then
// lexicographically by member list.
struct CliqueList {
  std::vector<VertexSet> cliques;
  std::size_t source_n = 0;

  std::size_t size() const { return cliques.size(); }
  std::size_t max_size() const {
    std::size_t best = 0;
    for (const auto& c : cliques) best = std::max(best, c.count());
    return best;
  }
};

inline void sort_canonical(std::vector<VertexSet>& sets) {
  std::vector<std::pair<std::size_t, VertexSet>> keyed;
  keyed.reserve(sets.size());
  for (auto& s : sets) keyed.emplace_back(s.count(), std::move(s));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return lex_less(a.second, b.second);
  });
  sets.clear();
  for (auto& [_, s] : keyed) sets.push_back(std::move(s));
}

namespace detail {

struct CliqueCounter {
  const std::vector<DynBitset>& forward;
  std::vector<DynBitset> stack;

  std::uint64_t count(std::size_t depth, std::size_t need) {
    const DynBitset& cand = stack[depth];
    if (need == 1) return cand.count();
    std::uint64_t total = 0;
    cand.for_each([&](std::size_t u) {
      DynBitset& next = stack[depth + 1];
      next = cand;
      next &= forward[u];
      if (next.count() + 1 >= need) total += count(depth + 1, need - 1);
    });
    return total;
  }
};

inline std::vector<DynBitset> forward_neighborhoods(const Graph& g) {
  std::vector<DynBitset> fwd;
  fwd.reserve(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) {
    DynBitset row = g.neighbors(v);
    for (std::size_t u = 0; u <= v; ++u) row.reset(u);
    fwd.push_back(std::move(row));
  }
  return fwd;
}

}  // namespace detail

// Number of r-vertex subsets inducing K_r. Each clique is counted once, from
// its lowest vertex, by intersecting forward neighborhoods.
inline std::uint64_t count_r_cliques(const Graph& g, std::size_t r, std::size_t threads = 1) {
  if (r == 0) return 1;
  if (r > g.n()) return 0;
  if (r == 1) return g.n();
  if (r == 2) return g.m();
  const auto fwd = detail::forward_neighborhoods(g);
  std::vector<std::uint64_t> per_root(g.n(), 0);
  parallel_for(g.n(), threads, [&](std::size_t v) {
    detail::CliqueCounter counter{fwd, std::vector<DynBitset>(r, DynBitset(g.n()))};
    counter.stack[0] = fwd[v];
    if (counter.stack[0].count() + 1 >= r) per_root[v] = counter.count(0, r - 1);
  });
  std::uint64_t total = 0;
  for (auto c : per_root) total += c;
  return total;
}

struct DensityReport {
  std::size_t r = 0;
  std::uint64_t count = 0;
  BigInt binom = 0;
  Rational c = 0;
  double c_float = 0.0;
};

// Achieved K_r density: count_r_cliques / C(n, r).
inline DensityReport clique_density(const Graph& g, std::size_t r, std::size_t threads = 1) {
  if (r > g.n()) throw InvalidParameter("clique order exceeds vertex count");
  DensityReport rep;
  rep.r = r;
  rep.count = count_r_cliques(g, r, threads);
  rep.binom = binomial(g.n(), r);
  rep.c = Rational(BigInt(rep.count), rep.binom);
  rep.c_float = to_double(rep.c);
  return rep;
}

namespace detail {

class BronKerbosch {
 public:
  BronKerbosch(const Graph& g, std::size_t cap, std::atomic<std::size_t>& found)
      : g_(g), cap_(cap), found_(found) {}

  // Vertex of p | x with the most neighbors in p; lowest index wins ties.
  std::size_t pivot(const DynBitset& p, const DynBitset& x) const {
    std::size_t best = DynBitset::npos, best_deg = 0;
    auto consider = [&](std::size_t u) {
      const std::size_t d = p.intersection_count(g_.neighbors(u));
      if (best == DynBitset::npos || d > best_deg || (d == best_deg && u < best)) {
        best = u;
        best_deg = d;
      }
    };
    p.for_each(consider);
    x.for_each(consider);
    return best;
  }

  void run(DynBitset& r, DynBitset p, DynBitset x) {
    if (p.none()) {
      if (x.none()) emit(r);
      return;
    }
    const std::size_t u = pivot(p, x);
    const DynBitset branch = p - g_.neighbors(u);
    branch.for_each([&](std::size_t v) {
      r.set(v);
      run(r, p & g_.neighbors(v), x & g_.neighbors(v));
      r.reset(v);
      p.reset(v);
      x.set(v);
    });
  }

  std::vector<VertexSet> take() { return std::move(out_); }

 private:
  void emit(const DynBitset& r) {
    if (found_.fetch_add(1) + 1 > cap_)
      throw ResourceLimit("maximal clique count exceeds cap " + std::to_string(cap_));
    out_.push_back(r);
  }

  const Graph& g_;
  std::size_t cap_;
  std::atomic<std::size_t>& found_;
  std::vector<VertexSet> out_;
};

}  // namespace detail

// Pivoting Bron–Kerbosch over bitset candidate/excluded sets. Isolated vertices
// come out as 1-cliques; an empty graph has the single maximal clique {}.
inline CliqueList enumerate_maximal_cliques(const Graph& g, std::size_t cap = kDefaultCliqueCap,
                                            std::size_t threads = 1) {
  CliqueList out;
  out.source_n = g.n();
  std::atomic<std::size_t> found{0};
  if (g.n() == 0) {
    out.cliques.emplace_back(0);
    return out;
  }

  // Split the root into independent first-level branches: branch k sees the
  // candidates left after branches 0..k-1 moved their vertex to the excluded set.
  const DynBitset p0 = g.all_vertices();
  const DynBitset x0 = g.empty_set();
  detail::BronKerbosch root(g, cap, found);
  const auto branch_vertices = (p0 - g.neighbors(root.pivot(p0, x0))).to_vector();

  std::vector<std::vector<VertexSet>> parts(branch_vertices.size());
  parallel_for(branch_vertices.size(), threads, [&](std::size_t k) {
    DynBitset p = p0, x = x0;
    for (std::size_t j = 0; j < k; ++j) {
      p.reset(branch_vertices[j]);
      x.set(branch_vertices[j]);
    }
    const std::size_t v = branch_vertices[k];
    detail::BronKerbosch bk(g, cap, found);
    DynBitset r = g.empty_set();
    r.set(v);
    bk.run(r, p & g.neighbors(v), x & g.neighbors(v));
    parts[k] = bk.take();
  });

  for (auto& part : parts)
    for (auto& c : part) out.cliques.push_back(std::move(c));
  sort_canonical(out.cliques);
  return out;
}

namespace detail {

class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : g_(g), current_(g.n()), best_set_(g.n()) {}

  std::size_t solve() {
    if (g_.n() == 0) return 0;
    expand(g_.all_vertices(), 0);
    return best_;
  }
  const VertexSet& best_set() const { return best_set_; }

 private:
  // Greedy sequential coloring of p; returns vertices in nondecreasing color order.
  void color_sort(const DynBitset& p, std::vector<std::size_t>& order, std::vector<std::size_t>& colors) const {
    DynBitset uncolored = p;
    std::size_t k = 0;
    while (uncolored.any()) {
      ++k;
      DynBitset q = uncolored;
      for (std::size_t v = q.find_first(); v != DynBitset::npos; v = q.find_next(v + 1)) {
        q.subtract(g_.neighbors(v));
        uncolored.reset(v);
        order.push_back(v);
        colors.push_back(k);
      }
    }
  }

  void expand(DynBitset p, std::size_t depth) {
    std::vector<std::size_t> order, colors;
    color_sort(p, order, colors);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth + colors[i] <= best_) return;
      const std::size_t v = order[i];
      current_.set(v);
      DynBitset next = p & g_.neighbors(v);
      if (next.none()) {
        if (depth + 1 > best_) {
          best_ = depth + 1;
          best_set_ = current_;
        }
      } else {
        expand(std::move(next), depth + 1);
      }
      current_.reset(v);
      p.reset(v);
    }
  }

  const Graph& g_;
  std::size_t best_ = 0;
  VertexSet current_;
  VertexSet best_set_;
};

}  // namespace detail

// ω(G) by branch and bound with a greedy-coloring upper bound.
inline std::size_t clique_number(const Graph& g) { return detail::MaxCliqueSearch(g).solve(); }

inline VertexSet maximum_clique(const Graph& g) {
  detail::MaxCliqueSearch s(g);
  s.solve();
  return s.best_set();
}

}  // namespace cliquevc
