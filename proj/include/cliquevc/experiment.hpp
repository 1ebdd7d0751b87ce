#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cliquevc/clique.hpp"
#include "cliquevc/error.hpp"
#include "cliquevc/graph.hpp"
#include "cliquevc/parallel.hpp"
#include "cliquevc/random.hpp"
#include "cliquevc/rational.hpp"
#include "cliquevc/set_system.hpp"

// Monte Carlo mirror of the double-counting argument. Sample i draws S_m as the
// first m entries of a partial Fisher–Yates shuffle on substream(seed, i);
// S_r is the first r entries of the same prefix, so (S_r, S_m) is a uniform
// nested pair.

namespace cliquevc {

struct ExperimentConfig {
  std::size_t r = 2;
  std::size_t m = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  bool compute_traces = true;  // off: only S_r statistics
};

struct ExperimentStats {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t m = 0;
  std::size_t r = 0;
  std::size_t mc_size = 0;
  std::vector<std::size_t> trace_sizes;  // |MC(G)|_{S_m}| per sample
  std::vector<bool> is_clique_sample;    // S_r is a clique
  std::vector<bool> realized;            // S_r = S_m ∩ K for some maximal clique K
  std::size_t max_trace = 0;
  double mean_trace = 0.0;
  double p_clique_hat = 0.0;
  double p_realized_hat = 0.0;
  Rational density = 0;   // exact K_r density of the graph
  BigInt ss_cap = 0;      // sauer_shelah_bound(m, r - 1)
  Rational paper_cap = 0; // c C(m, r) / 4
  std::size_t ss_cap_violations = 0;
};

namespace detail {

inline std::size_t count_distinct_rows(std::vector<std::uint64_t>& flat, std::size_t width) {
  if (width == 1) {
    std::sort(flat.begin(), flat.end());
    return static_cast<std::size_t>(std::unique(flat.begin(), flat.end()) - flat.begin());
  }
  const std::size_t rows = flat.size() / width;
  std::vector<std::size_t> idx(rows);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  auto row = [&](std::size_t i) { return flat.begin() + static_cast<std::ptrdiff_t>(i * width); };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(width), row(b),
                                        row(b) + static_cast<std::ptrdiff_t>(width));
  });
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < rows; ++i)
    if (i == 0 || !std::equal(row(idx[i]), row(idx[i]) + static_cast<std::ptrdiff_t>(width), row(idx[i - 1])))
      ++distinct;
  return distinct;
}

}  // namespace detail

inline ExperimentStats trace_experiment(const Graph& g, const CliqueList& mc, const ExperimentConfig& cfg) {
  if (cfg.r < 1 || cfg.r > cfg.m) throw InvalidParameter("need 1 <= r <= m");
  if (cfg.m > g.n()) throw InvalidParameter("m exceeds vertex count");
  if (mc.source_n != g.n()) throw InvalidParameter("clique list does not belong to this graph");

  ExperimentStats st;
  st.samples = cfg.samples;
  st.seed = cfg.seed;
  st.m = cfg.m;
  st.r = cfg.r;
  st.mc_size = mc.size();
  st.trace_sizes.assign(cfg.samples, 0);
  st.is_clique_sample.assign(cfg.samples, false);
  st.realized.assign(cfg.samples, false);
  st.density = clique_density(g, cfg.r, cfg.threads).c;
  st.ss_cap = sauer_shelah_bound(cfg.m, static_cast<long>(cfg.r) - 1);
  st.paper_cap = st.density * Rational(binomial(cfg.m, cfg.r)) / 4;

  // members[v] = indices of maximal cliques containing v.
  std::vector<std::vector<std::uint32_t>> members(g.n());
  if (cfg.compute_traces)
    for (std::size_t k = 0; k < mc.size(); ++k)
      mc.cliques[k].for_each([&](std::size_t v) { members[v].push_back(static_cast<std::uint32_t>(k)); });

  const std::size_t width = DynBitset::word_count(cfg.m);
  std::vector<char> clique_flag(cfg.samples, 0), realized_flag(cfg.samples, 0);

  parallel_for(cfg.samples, cfg.threads, [&](std::size_t i) {
    Rng rng = substream(cfg.seed, i);
    std::vector<std::size_t> perm;
    sample_prefix(g.n(), cfg.m, rng, perm);

    VertexSet s_r(g.n());
    for (std::size_t j = 0; j < cfg.r; ++j) s_r.set(perm[j]);
    clique_flag[i] = g.is_clique(s_r) ? 1 : 0;
    if (!cfg.compute_traces) return;

    std::vector<std::uint64_t> flat(mc.size() * width, 0);
    for (std::size_t j = 0; j < cfg.m; ++j)
      for (auto k : members[perm[j]]) flat[k * width + j / 64] |= std::uint64_t{1} << (j % 64);

    // S_r occupies positions 0..r-1 of the sample.
    std::vector<std::uint64_t> target(width, 0);
    for (std::size_t j = 0; j < cfg.r; ++j) target[j / 64] |= std::uint64_t{1} << (j % 64);
    for (std::size_t k = 0; k < mc.size() && !realized_flag[i]; ++k)
      if (std::equal(target.begin(), target.end(), flat.begin() + static_cast<std::ptrdiff_t>(k * width)))
        realized_flag[i] = 1;

    st.trace_sizes[i] = detail::count_distinct_rows(flat, width);
  });

  std::size_t total = 0, cliques = 0, realized = 0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    st.is_clique_sample[i] = clique_flag[i] != 0;
    st.realized[i] = realized_flag[i] != 0;
    cliques += clique_flag[i];
    realized += realized_flag[i];
    total += st.trace_sizes[i];
    st.max_trace = std::max(st.max_trace, st.trace_sizes[i]);
    if (cfg.compute_traces && BigInt(st.trace_sizes[i]) > st.ss_cap) ++st.ss_cap_violations;
  }
  if (cfg.samples > 0) {
    const double s = static_cast<double>(cfg.samples);
    st.mean_trace = static_cast<double>(total) / s;
    st.p_clique_hat = static_cast<double>(cliques) / s;
    st.p_realized_hat = static_cast<double>(realized) / s;
  }
  return st;
}

inline ExperimentStats trace_experiment(const Graph& g, const ExperimentConfig& cfg,
                                        std::size_t clique_cap = kDefaultCliqueCap) {
  if (!cfg.compute_traces) {
    CliqueList none;
    none.source_n = g.n();
    return trace_experiment(g, none, cfg);
  }
  return trace_experiment(g, enumerate_maximal_cliques(g, clique_cap, cfg.threads), cfg);
}

// One row per sample: index,trace_size,is_clique_sample
inline std::string experiment_csv(const ExperimentStats& st) {
  std::string out = "index,trace_size,is_clique_sample\n";
  for (std::size_t i = 0; i < st.samples; ++i) {
    out += std::to_string(i);
    out += ',';
    out += std::to_string(st.trace_sizes[i]);
    out += ',';
    out += st.is_clique_sample[i] ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace cliquevc
