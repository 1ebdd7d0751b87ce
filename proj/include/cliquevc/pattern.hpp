#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliquevc/bitset.hpp"
#include "cliquevc/clique.hpp"
#include "cliquevc/error.hpp"
#include "cliquevc/graph.hpp"

// The forbidden family K_r^[2]. Template vertices: u_i is role i and u_i' is
// role r + i (0-based). Every pair of roles is one of
//   required  : u_i u_j, u_i u_j'  (i != j)
//   forbidden : u_i u_i'
//   free      : u_i' u_j'          (i < j), indexed lexicographically in free_mask
// The family has one member per subset of the free pairs.

namespace cliquevc {

inline constexpr std::size_t kDefaultNodeBudget = 100'000'000;

enum class PairClass { required, forbidden, free };

struct PatternSpec {
  std::size_t r = 0;

  explicit PatternSpec(std::size_t parts) : r(parts) {}

  std::size_t num_roles() const { return 2 * r; }
  std::size_t num_free_pairs() const { return r * (r - 1) / 2; }

  PairClass classify(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    const bool a_prime = a >= r, b_prime = b >= r;
    if (a_prime && b_prime) return PairClass::free;
    if (!a_prime && b_prime && b - r == a) return PairClass::forbidden;
    return PairClass::required;
  }

  // Bit index of the free pair u_i' u_j' (i < j).
  std::size_t free_index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * r - i * (i + 1) / 2 + (j - i - 1);
  }
};

struct PatternWitness {
  std::size_t r = 0;
  std::vector<std::size_t> u;
  std::vector<std::size_t> u_prime;
  std::uint64_t free_mask = 0;

  bool operator==(const PatternWitness&) const = default;
};

inline constexpr std::size_t kMaxFamilyOrder = 6;

// Labeled template graph on 2r vertices for a given free-pair subset.
inline Graph family_member(std::size_t r, std::uint64_t free_mask) {
  const PatternSpec spec(r);
  GraphBuilder b(spec.num_roles());
  for (std::size_t a = 0; a < spec.num_roles(); ++a)
    for (std::size_t c = a + 1; c < spec.num_roles(); ++c) {
      const auto cls = spec.classify(a, c);
      if (cls == PairClass::required ||
          (cls == PairClass::free && ((free_mask >> spec.free_index(a - r, c - r)) & 1U)))
        b.add_edge(a, c);
    }
  return std::move(b).build();
}

inline std::vector<Graph> family_members(std::size_t r) {
  if (r < 2 || r > kMaxFamilyOrder) throw InvalidParameter("family order must lie in [2, 6]");
  const std::uint64_t count = std::uint64_t{1} << PatternSpec(r).num_free_pairs();
  std::vector<Graph> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(family_member(r, mask));
  return out;
}

// Pair-by-pair check of a witness against the host graph.
inline bool verify_witness(const Graph& g, const PatternWitness& w) {
  const std::size_t r = w.r;
  if (r < 2 || w.u.size() != r || w.u_prime.size() != r) return false;
  std::vector<std::size_t> roles(w.u);
  roles.insert(roles.end(), w.u_prime.begin(), w.u_prime.end());
  for (auto v : roles)
    if (v >= g.n()) return false;
  auto sorted = roles;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

  const PatternSpec spec(r);
  for (std::size_t a = 0; a < 2 * r; ++a)
    for (std::size_t b = a + 1; b < 2 * r; ++b) {
      const bool edge = g.adjacent(roles[a], roles[b]);
      switch (spec.classify(a, b)) {
        case PairClass::required:
          if (!edge) return false;
          break;
        case PairClass::forbidden:
          if (edge) return false;
          break;
        case PairClass::free:
          if (edge != (((w.free_mask >> spec.free_index(a - r, b - r)) & 1U) != 0)) return false;
          break;
      }
    }
  return true;
}

inline std::uint64_t free_mask_of(const Graph& g, const std::vector<std::size_t>& u_prime) {
  const PatternSpec spec(u_prime.size());
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < u_prime.size(); ++i)
    for (std::size_t j = i + 1; j < u_prime.size(); ++j)
      if (g.adjacent(u_prime[i], u_prime[j])) mask |= std::uint64_t{1} << spec.free_index(i, j);
  return mask;
}

enum class SearchStatus { found, none, budget_exhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<PatternWitness> witness;
  std::uint64_t nodes = 0;
};

namespace detail {

// Backtracking embedding of a 2r-role template with per-pair adjacency
// demands. Roles are filled u_1..u_r, u_1'..u_r' with ascending candidates, and
// u_1 < ... < u_r (part permutations map embeddings to embeddings), so the
// first embedding found is the lexicographic minimum.
class TemplateSearch {
 public:
  TemplateSearch(const Graph& g, std::size_t r, bool induced_blowup, std::uint64_t budget)
      : g_(g), r_(r), budget_(budget), must_adj_(2 * r), must_non_(2 * r) {
    const PatternSpec spec(r);
    for (std::size_t k = 0; k < 2 * r; ++k)
      for (std::size_t j = 0; j < 2 * r; ++j) {
        if (j == k) continue;
        const auto cls = spec.classify(j, k);
        if (cls == PairClass::required || (induced_blowup && cls == PairClass::free))
          must_adj_[k].push_back(j);
        else if (cls == PairClass::forbidden)
          must_non_[k].push_back(j);
      }
  }

  SearchResult run() {
    SearchResult res;
    if (r_ < 2 || 2 * r_ > g_.n()) {
      res.status = SearchStatus::none;
      return res;
    }
    placed_.assign(2 * r_, DynBitset::npos);
    used_ = g_.empty_set();
    exhausted_ = false;
    const bool ok = place(0);
    res.nodes = nodes_;
    if (ok) {
      PatternWitness w;
      w.r = r_;
      w.u.assign(placed_.begin(), placed_.begin() + static_cast<std::ptrdiff_t>(r_));
      w.u_prime.assign(placed_.begin() + static_cast<std::ptrdiff_t>(r_), placed_.end());
      w.free_mask = free_mask_of(g_, w.u_prime);
      res.status = SearchStatus::found;
      res.witness = std::move(w);
    } else {
      res.status = exhausted_ ? SearchStatus::budget_exhausted : SearchStatus::none;
    }
    return res;
  }

 private:
  // Vertices compatible with every already placed role.
  DynBitset candidates(std::size_t role) const {
    DynBitset c = g_.all_vertices();
    c.subtract(used_);
    for (auto j : must_adj_[role])
      if (placed_[j] != DynBitset::npos) c &= g_.neighbors(placed_[j]);
    for (auto j : must_non_[role])
      if (placed_[j] != DynBitset::npos) {
        c.subtract(g_.neighbors(placed_[j]));
        c.reset(placed_[j]);
      }
    return c;
  }

  bool future_feasible(std::size_t from) const {
    for (std::size_t k = from; k < 2 * r_; ++k)
      if (candidates(k).none()) return false;
    return true;
  }

  bool place(std::size_t role) {
    if (role == 2 * r_) return true;
    DynBitset cand = candidates(role);
    if (role > 0 && role < r_) {
      // u roles ascend.
      for (std::size_t v = 0; v <= placed_[role - 1]; ++v) cand.reset(v);
    }
    for (std::size_t v = cand.find_first(); v != DynBitset::npos; v = cand.find_next(v + 1)) {
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      placed_[role] = v;
      used_.set(v);
      if (future_feasible(role + 1) && place(role + 1)) return true;
      used_.reset(v);
      placed_[role] = DynBitset::npos;
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::size_t r_;
  std::uint64_t budget_;
  std::vector<std::vector<std::size_t>> must_adj_, must_non_;
  std::vector<std::size_t> placed_;
  DynBitset used_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

// Semi-induced containment of some member of K_r^[2]: required pairs present,
// the r pairs u_i u_i' absent, pairs inside U' unconstrained. G is induced
// K_r^[2]-free exactly when this finds nothing.
inline SearchResult contains_semi_induced(const Graph& g, std::size_t r, std::uint64_t budget = kDefaultNodeBudget) {
  if (r < 2) throw InvalidParameter("pattern order must be >= 2");
  return detail::TemplateSearch(g, r, false, budget).run();
}

// Induced copy of K_r[2]: as above, but every u_i' u_j' pair must be an edge.
inline SearchResult contains_induced_blowup(const Graph& g, std::size_t r, std::uint64_t budget = kDefaultNodeBudget) {
  if (r < 2) throw InvalidParameter("pattern order must be >= 2");
  return detail::TemplateSearch(g, r, true, budget).run();
}

struct Extraction {
  PatternWitness witness;
  // Whether taking the smallest candidate for each u_i' independently already
  // gave pairwise distinct vertices.
  bool naive_choice_distinct = true;
  bool used_fallback = false;
};

// Builds a K_r^[2] witness from a set S = {u_1 < ... < u_r} whose traces
// S \ {u_i} are all realized by maximal cliques: u_i' is taken from K^i \ S
// among the non-neighbors of u_i.
inline Extraction witness_from_shattered_ex(const Graph& g, const CliqueList& mc, const VertexSet& s) {
  if (s.size() != g.n() || mc.source_n != g.n()) throw InvalidParameter("set width does not match graph");
  const auto u = s.to_vector();
  const std::size_t r = u.size();
  if (r < 2) throw InvalidParameter("witness extraction needs |S| >= 2");

  std::vector<DynBitset> cand(r, g.empty_set());
  std::vector<bool> realized(r, false);
  bool full_trace = false;
  for (const auto& k : mc.cliques) {
    const DynBitset tr = k & s;
    const std::size_t missing = r - tr.count();
    if (missing == 0) full_trace = true;
    if (missing != 1) continue;
    const std::size_t i = static_cast<std::size_t>(std::find(u.begin(), u.end(), (s - tr).find_first()) - u.begin());
    realized[i] = true;
    cand[i] |= (k - s).subtract(g.neighbors(u[i]));
  }
  for (std::size_t i = 0; i < r; ++i)
    if (!realized[i]) throw NotShattered("no maximal clique has trace S minus vertex " + std::to_string(u[i]));
  if (r == 2 && !full_trace) throw NotShattered("no maximal clique contains all of S");
  if (!g.is_clique(s)) throw NotShattered("S is not a clique");

  for (std::size_t i = 0; i < r; ++i)
    if (cand[i].none())
      throw ExtractionFailure("no vertex of K^i \\ S is a non-neighbor of " + std::to_string(u[i]));

  Extraction out;
  {
    std::vector<std::size_t> naive;
    for (const auto& c : cand) naive.push_back(c.find_first());
    auto sorted = naive;
    std::sort(sorted.begin(), sorted.end());
    out.naive_choice_distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  // Distinct representatives, smallest first.
  std::vector<std::size_t> pick(r, DynBitset::npos);
  DynBitset taken = g.empty_set();
  auto assign = [&](auto&& self, std::size_t i) -> bool {
    if (i == r) return true;
    for (std::size_t v = cand[i].find_first(); v != DynBitset::npos; v = cand[i].find_next(v + 1)) {
      if (taken.test(v)) continue;
      taken.set(v);
      pick[i] = v;
      if (self(self, i + 1)) return true;
      taken.reset(v);
    }
    return false;
  };
  if (!assign(assign, 0)) throw ExtractionFailure("no system of distinct representatives for u'");

  out.witness.r = r;
  out.witness.u = u;
  out.witness.u_prime = pick;
  out.witness.free_mask = free_mask_of(g, pick);
  if (!verify_witness(g, out.witness)) throw ExtractionFailure("extracted vertices do not form a K_r^[2] member");
  return out;
}

inline PatternWitness witness_from_shattered(const Graph& g, const CliqueList& mc, const VertexSet& s) {
  return witness_from_shattered_ex(g, mc, s).witness;
}

// Extraction with the general embedding search as a fallback when the direct
// construction fails. NotShattered is not caught.
inline Extraction extract_witness(const Graph& g, const CliqueList& mc, const VertexSet& s,
                                  std::uint64_t budget = kDefaultNodeBudget) {
  try {
    return witness_from_shattered_ex(g, mc, s);
  } catch (const ExtractionFailure&) {
    auto res = contains_semi_induced(g, s.count(), budget);
    if (res.status == SearchStatus::budget_exhausted) throw ResourceLimit("fallback search exhausted its node budget");
    if (!res.witness) throw;
    Extraction out;
    out.witness = *res.witness;
    out.naive_choice_distinct = false;
    out.used_fallback = true;
    return out;
  }
}

}  // namespace cliquevc
