#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cliquevc/bitset.hpp"
#include "cliquevc/error.hpp"
#include "cliquevc/graph.hpp"
#include "cliquevc/random.hpp"
#include "cliquevc/rational.hpp"

namespace cliquevc {

enum class BasicKind { complete, cycle, path, independent };

inline Graph gen_basic(BasicKind kind, std::size_t n, std::size_t max_vertices = kDefaultMaxVertices) {
  if (n < 1) throw InvalidParameter("graph needs at least one vertex");
  if (kind == BasicKind::cycle && n < 3) throw InvalidParameter("cycle requires n >= 3");
  GraphBuilder b(n, max_vertices);
  switch (kind) {
    case BasicKind::complete:
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) b.add_edge(u, v);
      break;
    case BasicKind::cycle:
      for (std::size_t u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
      break;
    case BasicKind::path:
      for (std::size_t u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
      break;
    case BasicKind::independent:
      break;
  }
  return std::move(b).build();
}

inline Graph complete_graph(std::size_t n) { return gen_basic(BasicKind::complete, n); }
inline Graph cycle_graph(std::size_t n) { return gen_basic(BasicKind::cycle, n); }
inline Graph path_graph(std::size_t n) { return gen_basic(BasicKind::path, n); }
inline Graph independent_graph(std::size_t n) { return gen_basic(BasicKind::independent, n); }

// G(n, p) with each pair u < v decided in lexicographic order from one seeded stream.
inline Graph gen_random(std::size_t n, double p, std::uint64_t seed, std::size_t max_vertices = kDefaultMaxVertices) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("edge probability must lie in [0, 1]");
  GraphBuilder b(n, max_vertices);
  Rng rng = substream(seed, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (uniform01(rng) < p) b.add_edge(u, v);
  return std::move(b).build();
}

// t-blow-up: vertex v becomes the independent set {v*t, ..., v*t + t - 1}.
inline Graph blow_up(const Graph& g, std::size_t t, std::size_t max_vertices = kDefaultMaxVertices) {
  if (t < 1) throw InvalidParameter("blow-up factor must be >= 1");
  if (g.n() != 0 && t > max_vertices / g.n()) throw ResourceLimit("blow-up exceeds vertex limit");
  GraphBuilder b(g.n() * t, max_vertices);
  for (auto [v, w] : g.edges())
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) b.add_edge(v * t + i, w * t + j);
  return std::move(b).build();
}

// Disjoint union plus every cross edge; h's vertices are shifted by n(g).
inline Graph join(const Graph& g, const Graph& h, std::size_t max_vertices = kDefaultMaxVertices) {
  const std::size_t off = g.n();
  GraphBuilder b(g.n() + h.n(), max_vertices);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(off + u, off + v);
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t v = 0; v < h.n(); ++v) b.add_edge(u, off + v);
  return std::move(b).build();
}

struct ChordalExtremal {
  Graph graph;
  std::size_t t = 0;  // size of the independent part
};

// Smallest t with t >= sqrt(1 - c) * n, computed exactly.
inline std::size_t chordal_extremal_t(std::size_t n, const Rational& c) {
  const Rational target = (Rational(1) - c) * Rational(BigInt(n) * n);
  std::size_t lo = 0, hi = n + 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (Rational(BigInt(mid) * mid) >= target)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

// Complete split graph join(I_t, K_{n-t}) with t = ceil(sqrt(1 - c) * n).
inline ChordalExtremal gen_chordal_extremal(std::size_t n, const Rational& c,
                                            std::size_t max_vertices = kDefaultMaxVertices) {
  if (!(c > 0 && c < 1)) throw InvalidParameter("density c must lie strictly between 0 and 1");
  if (n < 2) throw InvalidParameter("chordal extremal graph needs n >= 2");
  if (n > max_vertices) throw ResourceLimit("vertex count exceeds limit");
  const std::size_t t = chordal_extremal_t(n, c);
  if (t >= n) throw InvalidParameter("c too small for n: independent part would use every vertex");
  return {join(independent_graph(t), complete_graph(n - t), max_vertices), t};
}

enum class InnerPolicy { empty, complete_a, random };

struct ShatterGadget {
  Graph graph;
  VertexSet a_set;
};

// Vertices 0..t-1 form A; vertex t + j is adjacent to exactly the members of A
// selected by the binary digits of j. B stays independent.
inline ShatterGadget build_shatter_gadget(std::size_t t, InnerPolicy policy = InnerPolicy::empty,
                                          std::uint64_t seed = 0,
                                          std::size_t max_vertices = kDefaultMaxVertices) {
  if (t < 1) throw InvalidParameter("gadget needs t >= 1");
  if (t >= 63 || t + (std::size_t{1} << t) > max_vertices) throw ResourceLimit("gadget exceeds vertex limit");
  const std::size_t nb = std::size_t{1} << t;
  GraphBuilder b(t + nb, max_vertices);
  for (std::size_t j = 0; j < nb; ++j)
    for (std::size_t i = 0; i < t; ++i)
      if ((j >> i) & 1U) b.add_edge(i, t + j);
  if (policy != InnerPolicy::empty) {
    Rng rng = substream(seed, 0);
    for (std::size_t u = 0; u < t; ++u)
      for (std::size_t v = u + 1; v < t; ++v)
        if (policy == InnerPolicy::complete_a || (rng() >> 63) != 0) b.add_edge(u, v);
  }
  VertexSet a(t + nb);
  for (std::size_t i = 0; i < t; ++i) a.set(i);
  return {std::move(b).build(), std::move(a)};
}

inline bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Points of PG(2, q) as normalized triples (first nonzero coordinate 1), listed
// in lexicographic order: (0,0,1), (0,1,*), (1,*,*).
inline std::vector<std::array<std::uint32_t, 3>> projective_points(std::uint32_t q) {
  std::vector<std::array<std::uint32_t, 3>> pts;
  pts.reserve(std::size_t{q} * q + q + 1);
  pts.push_back({0, 0, 1});
  for (std::uint32_t b = 0; b < q; ++b) pts.push_back({0, 1, b});
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) pts.push_back({1, a, b});
  return pts;
}

// Erdős–Rényi polarity graph ER_q over the prime field F_q.
inline Graph gen_polarity(std::uint32_t q) {
  if (!is_prime(q) || q > 101) throw InvalidParameter("polarity graph needs a prime q <= 101");
  const auto pts = projective_points(q);
  GraphBuilder b(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto& x = pts[i];
      const auto& y = pts[j];
      if ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0) b.add_edge(i, j);
    }
  return std::move(b).build();
}

// Vertices of s in ascending original order become 0..|s|-1.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  const auto verts = s.to_vector();
  GraphBuilder b(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.adjacent(verts[i], verts[j])) b.add_edge(i, j);
  return std::move(b).build();
}

}  // namespace cliquevc
