#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliquevc/bitset.hpp"
#include "cliquevc/clique.hpp"
#include "cliquevc/error.hpp"
#include "cliquevc/graph.hpp"
#include "cliquevc/rational.hpp"

namespace cliquevc {

enum class SystemLabel { neighborhood, maximal_cliques, custom };

inline std::string_view label_name(SystemLabel l) {
  switch (l) {
    case SystemLabel::neighborhood: return "neighborhood";
    case SystemLabel::maximal_cliques: return "maximal_cliques";
    case SystemLabel::custom: return "custom";
  }
  return "custom";
}

// A family of subsets of {0..ground_n-1}. Duplicates are removed on
// construction; the first occurrence of each set keeps its relative order.
class SetSystem {
 public:
  SetSystem() = default;
  SetSystem(std::size_t ground_n, std::vector<DynBitset> sets, SystemLabel label = SystemLabel::custom)
      : ground_n_(ground_n), label_(label) {
    for (const auto& s : sets)
      if (s.size() != ground_n) throw InvalidParameter("set width does not match ground set");
    std::vector<std::size_t> idx(sets.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return word_less(sets[a], sets[b]); });
    std::vector<char> keep(sets.size(), 0);
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (i == 0 || sets[idx[i - 1]] != sets[idx[i]]) keep[idx[i]] = 1;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (keep[i]) sets_.push_back(std::move(sets[i]));
  }

  std::size_t ground_n() const { return ground_n_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const std::vector<DynBitset>& sets() const { return sets_; }
  const DynBitset& operator[](std::size_t i) const { return sets_[i]; }
  SystemLabel label() const { return label_; }

 private:
  std::size_t ground_n_ = 0;
  std::vector<DynBitset> sets_;
  SystemLabel label_ = SystemLabel::custom;
};

inline SetSystem neighborhood_system(const Graph& g) {
  std::vector<DynBitset> sets;
  sets.reserve(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) sets.push_back(g.neighbors(v));
  return SetSystem(g.n(), std::move(sets), SystemLabel::neighborhood);
}

inline SetSystem maximal_clique_system(const CliqueList& mc) {
  return SetSystem(mc.source_n, mc.cliques, SystemLabel::maximal_cliques);
}

inline SetSystem maximal_clique_system(const Graph& g, std::size_t cap = kDefaultCliqueCap) {
  return maximal_clique_system(enumerate_maximal_cliques(g, cap));
}

// F ∩ S for every F, re-indexed onto 0..|S|-1 in ascending order of S.
inline SetSystem trace(const SetSystem& f, const VertexSet& s) {
  if (s.size() != f.ground_n()) throw InvalidParameter("trace set width does not match ground set");
  const auto members = s.to_vector();
  std::vector<DynBitset> out;
  out.reserve(f.size());
  for (const auto& set : f.sets()) {
    DynBitset t(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      if (set.test(members[i])) t.set(i);
    out.push_back(std::move(t));
  }
  return SetSystem(members.size(), std::move(out), f.label());
}

namespace detail {

// Traces of every set on `elems` (at most 64 of them) as bit masks.
inline std::vector<std::uint64_t> trace_masks(const SetSystem& f, const std::vector<std::size_t>& elems) {
  std::vector<std::uint64_t> masks;
  masks.reserve(f.size());
  for (const auto& set : f.sets()) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (set.test(elems[i])) m |= std::uint64_t{1} << i;
    masks.push_back(m);
  }
  return masks;
}

inline std::size_t distinct_count(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end());
  return static_cast<std::size_t>(std::unique(masks.begin(), masks.end()) - masks.begin());
}

}  // namespace detail

inline constexpr std::size_t kMaxShatterCheck = 30;

struct ShatterCertificate {
  VertexSet witness;
  // realizers[mask] is the index of a set F with F ∩ A equal to the subset of
  // A selected by mask (bit i = i-th smallest member of A).
  std::vector<std::size_t> realizers;
};

inline std::optional<ShatterCertificate> is_shattered(const SetSystem& f, const VertexSet& a) {
  if (a.size() != f.ground_n()) throw InvalidParameter("set width does not match ground set");
  const auto elems = a.to_vector();
  if (elems.size() > kMaxShatterCheck) throw InvalidParameter("shatter check limited to sets of size <= 30");
  const std::size_t need = std::size_t{1} << elems.size();
  if (f.size() < need) return std::nullopt;

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> realizers(need, kUnset);
  const auto masks = detail::trace_masks(f, elems);
  std::size_t filled = 0;
  for (std::size_t i = 0; i < masks.size() && filled < need; ++i)
    if (realizers[masks[i]] == kUnset) {
      realizers[masks[i]] = i;
      ++filled;
    }
  if (filled < need) return std::nullopt;
  return ShatterCertificate{a, std::move(realizers)};
}

struct VcResult {
  long k = -1;  // -1 for the empty family
  VertexSet witness;
};

// Exact VC-dimension by level-wise search over shattered sets. A candidate of
// size s is only tested if it extends a shattered (s-1)-set by a larger element
// and all of its (s-1)-subsets are shattered. The witness is the
// lexicographically smallest shattered set of maximum size.
inline VcResult vc_dimension(const SetSystem& f) {
  VcResult res{-1, VertexSet(f.ground_n())};
  if (f.empty()) return res;
  res.k = 0;

  // Elements that are in some set and missing from another.
  std::vector<std::size_t> splitting;
  DynBitset in_any(f.ground_n()), in_all = DynBitset::full(f.ground_n());
  for (const auto& s : f.sets()) {
    in_any |= s;
    in_all &= s;
  }
  (in_any - in_all).for_each([&](std::size_t e) { splitting.push_back(e); });

  using Level = std::vector<std::vector<std::size_t>>;
  Level level;
  for (auto e : splitting) level.push_back({e});
  std::size_t s = 1;
  while (!level.empty() && (std::size_t{1} << s) <= f.size() && s <= 63) {
    Level shattered;
    for (auto& cand : level) {
      // Every shattered s-set needs all 2^s traces realized.
      if (detail::distinct_count(detail::trace_masks(f, cand)) == (std::size_t{1} << s))
        shattered.push_back(std::move(cand));
    }
    if (shattered.empty()) break;
    res.k = static_cast<long>(s);
    res.witness = VertexSet(f.ground_n());
    for (auto e : shattered.front()) res.witness.set(e);

    // Build level s+1 by prefix extension; the output stays lexicographically sorted.
    Level next;
    for (std::size_t i = 0; i < shattered.size(); ++i) {
      const auto& base = shattered[i];
      for (auto e : splitting) {
        if (e <= base.back()) continue;
        std::vector<std::size_t> ext = base;
        ext.push_back(e);
        bool all_sub = true;
        for (std::size_t drop = 0; drop + 1 < ext.size() && all_sub; ++drop) {
          std::vector<std::size_t> sub;
          sub.reserve(s);
          for (std::size_t j = 0; j < ext.size(); ++j)
            if (j != drop) sub.push_back(ext[j]);
          all_sub = std::binary_search(shattered.begin(), shattered.end(), sub);
        }
        if (all_sub) next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
    ++s;
  }
  return res;
}

// Σ_{i=0}^{min(k,m)} C(m, i); zero for k < 0.
inline BigInt sauer_shelah_bound(std::size_t m, long k) {
  BigInt total = 0;
  if (k < 0) return total;
  const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(k), m);
  for (std::size_t i = 0; i <= top; ++i) total += binomial(m, i);
  return total;
}

}  // namespace cliquevc
