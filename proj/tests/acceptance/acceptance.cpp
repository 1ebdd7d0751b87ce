// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cliquevc/cliquevc.hpp"
#include "cliquevc/io.hpp"
#include "oracles.hpp"

using namespace cliquevc;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream detail;
  std::vector<std::string> failures;
  void fail(const std::string& why) {
    ok = false;
    failures.push_back(why);
  }
  void check(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

constexpr double kNoLimit = 1e300;

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<void(Verdict&)> body;
};

// Graphs that came out free in criterion 2, reused by criterion 5.
std::vector<std::pair<Graph, std::size_t>> g_free_graphs;

bool independent_witness_ok(const Graph& g, const PatternWitness& w, std::size_t r) {
  if (w.r != r || w.u.size() != r || w.u_prime.size() != r) return false;
  std::set<std::size_t> all;
  for (std::size_t i = 0; i < r; ++i) {
    if (w.u[i] >= g.n() || w.u_prime[i] >= g.n()) return false;
    all.insert(w.u[i]);
    all.insert(w.u_prime[i]);
  }
  return all.size() == 2 * r && oracle::checks_semi(g, w.u, w.u_prime);
}

bool isomorphic_small(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  std::vector<std::size_t> perm(a.n());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    bool same = true;
    for (std::size_t u = 0; u < a.n() && same; ++u)
      for (std::size_t v = u + 1; v < a.n() && same; ++v) same = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::vector<std::size_t>> as_lists(const CliqueList& mc) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& c : mc.cliques) out.push_back(c.to_vector());
  return out;
}

void c1_family(Verdict& v) {
  const std::size_t want[] = {2, 8, 64};
  for (std::size_t r = 2; r <= 4; ++r) {
    const auto fam = family_members(r);
    v.check(fam.size() == want[r - 2], "r=" + std::to_string(r) + " has " + std::to_string(fam.size()) + " members");
    for (const auto& g : fam) v.check(g.n() == 2 * r, "member on wrong vertex count");
  }
  const auto fam2 = family_members(2);
  const Graph p4 = path_graph(4), c4 = cycle_graph(4);
  const bool iso = (isomorphic_small(fam2[0], p4) && isomorphic_small(fam2[1], c4)) ||
                   (isomorphic_small(fam2[0], c4) && isomorphic_small(fam2[1], p4));
  v.check(iso, "r=2 members are not {P4, C4}");
  v.detail << "counts 2/8/64, r=2 members ~ {P4, C4}";
}

void c2_claim(Verdict& v) {
  const double ps[] = {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
  std::size_t graphs = 0, free_cases = 0, shattered_cases = 0, extractions = 0, fallbacks = 0, oracle_checks = 0;
  for (std::uint64_t i = 0; i < 560; ++i) {
    const std::size_t n = 6 + i % 9;
    const double p = ps[i % 7];
    const Graph g = gen_random(n, p, 1000 + i);
    ++graphs;
    const CliqueList mc = enumerate_maximal_cliques(g);
    const VcResult vc = vc_dimension(maximal_clique_system(mc));
    for (std::size_t r = 2; r <= 3; ++r) {
      const SearchResult res = contains_semi_induced(g, r);
      if (res.status == SearchStatus::budget_exhausted) {
        v.fail("search budget exhausted at graph " + std::to_string(i));
        continue;
      }
      if (r == 2) {
        ++oracle_checks;
        v.check((res.status == SearchStatus::found) == oracle::has_semi_r2(g),
                "r=2 search disagrees with brute force at graph " + std::to_string(i));
      }
      if (res.status == SearchStatus::found && !independent_witness_ok(g, *res.witness, r))
        v.fail("search witness rejected at graph " + std::to_string(i));
      if (res.status == SearchStatus::none) {
        ++free_cases;
        g_free_graphs.emplace_back(g, r);
        v.check(vc.k <= static_cast<long>(r) - 1,
                "free graph " + std::to_string(i) + " has vc=" + std::to_string(vc.k) + " >= r=" + std::to_string(r));
      }
      if (vc.k >= static_cast<long>(r)) {
        ++shattered_cases;
        // Every r-subset of the maximum shattered set is shattered.
        const auto w = vc.witness.to_vector();
        std::vector<bool> pick(w.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(r), true);
        do {
          VertexSet s(n);
          for (std::size_t j = 0; j < w.size(); ++j)
            if (pick[j]) s.set(w[j]);
          try {
            const Extraction ex = extract_witness(g, mc, s);
            ++extractions;
            if (ex.used_fallback) ++fallbacks;
            v.check(independent_witness_ok(g, ex.witness, r),
                    "extracted witness rejected at graph " + std::to_string(i));
          } catch (const std::exception& e) {
            v.fail("extraction threw at graph " + std::to_string(i) + ": " + e.what());
          }
        } while (std::prev_permutation(pick.begin(), pick.end()));
      }
    }
  }
  v.check(graphs >= 500, "fewer than 500 graphs");
  v.detail << graphs << " graphs; " << free_cases << " free (graph,r) pairs with vc<=r-1; " << shattered_cases
           << " pairs with vc>=r, " << extractions << " extractions verified (" << fallbacks << " via fallback); "
           << oracle_checks << " r=2 verdicts matched brute force";
}

void c3_sauer_shelah(Verdict& v) {
  Rng rng = substream(3, 0);
  std::size_t systems = 0, subsets = 0;
  for (int it = 0; it < 1000; ++it) {
    const std::size_t ground = 1 + uniform_below(rng, 12);
    const std::size_t count = 1 + uniform_below(rng, 120);
    const double p = 0.1 + 0.8 * uniform01(rng);
    std::vector<DynBitset> sets;
    for (std::size_t j = 0; j < count; ++j) {
      DynBitset s(ground);
      for (std::size_t e = 0; e < ground; ++e)
        if (uniform01(rng) < p) s.set(e);
      sets.push_back(std::move(s));
    }
    const SetSystem f(ground, std::move(sets));
    std::vector<oracle::Mask> masks;
    for (const auto& s : f.sets()) {
      oracle::Mask m = 0;
      s.for_each([&](std::size_t e) { m |= oracle::Mask{1} << e; });
      masks.push_back(m);
    }
    const oracle::Vc exact = oracle::vc_dimension(masks, ground);
    const VcResult pruned = vc_dimension(f);
    if (pruned.k != exact.k || pruned.witness.to_vector() != exact.witness)
      v.fail("pruned vc differs from naive on system " + std::to_string(it));
    ++systems;
    for (int k = 0; k < 50; ++k) {
      const auto sm = static_cast<oracle::Mask>(uniform_below(rng, std::uint64_t{1} << ground));
      const std::size_t size = oracle::trace_size(masks, sm);
      ++subsets;
      if (BigInt(size) > sauer_shelah_bound(static_cast<std::size_t>(__builtin_popcount(sm)), exact.k))
        v.fail("trace exceeds Sauer-Shelah bound on system " + std::to_string(it));
    }
  }
  v.detail << systems << " systems, " << subsets << " sampled subsets, pruned vc == naive vc on all";
}

void c4_chordal(Verdict& v) {
  const auto ext = gen_chordal_extremal(100, Rational(3, 4));
  const std::size_t omega = clique_number(ext.graph);
  const BigInt need = ceil_of(Rational(3, 4) * Rational(binomial(100, 2)));
  v.check(ext.t == 50, "t=" + std::to_string(ext.t));
  v.check(ext.graph.m() == 3725, "m=" + std::to_string(ext.graph.m()));
  v.check(need == 3713, "ceil(0.75 C(100,2)) != 3713");
  v.check(BigInt(ext.graph.m()) >= need, "m below ceil(c C(n,2)) at (100, 3/4)");
  v.check(omega == 51, "omega=" + std::to_string(omega));
  v.check(static_cast<double>(omega) >= bound_chordal(100, 0.75) - kFloatSlack, "omega below chordal bound");
  v.check(std::fabs(bound_chordal(100, 0.75) - 50.0) <= kFloatSlack, "bound_chordal(100,0.75) != 50");
  v.detail << "(100,3/4): t=50 m=3725>=3713 omega=51>=50; grid:";

  const std::pair<Rational, double> cs[] = {
      {Rational(3, 10), 0.3}, {Rational(1, 2), 0.5}, {Rational(3, 4), 0.75}, {Rational(9, 10), 0.9}};
  std::size_t edge_fails = 0, omega_fails = 0;
  for (std::size_t n : {50u, 100u, 200u})
    for (const auto& [c, cd] : cs) {
      const auto e = gen_chordal_extremal(n, c);
      const BigInt need_e = ceil_of(c * Rational(binomial(n, 2)));
      const std::size_t w = clique_number(e.graph);
      if (BigInt(e.graph.m()) < need_e) {
        ++edge_fails;
        std::ostringstream o;
        o << "edges at (" << n << "," << cd << "): " << e.graph.m() << " < " << need_e;
        v.fail(o.str());
      }
      if (static_cast<double>(w) < bound_chordal(n, cd) - kFloatSlack) {
        ++omega_fails;
        v.fail("omega below chordal bound at n=" + std::to_string(n));
      }
    }
  v.detail << " edge-count short at " << edge_fails << "/12 points, omega >= bound_chordal failed at " << omega_fails
           << "/12";
}

void c5_no_counterexample(Verdict& v) {
  std::size_t reports = 0, applicable = 0, violations = 0, unknown = 0;
  auto scan = [&](const Graph& g, std::size_t r, const std::string& label) {
    if (r > g.n()) return;
    const BoundReport rep = verify_graph(g, r);
    ++reports;
    if (rep.free == Freeness::unknown) ++unknown;
    if (rep.implication_applicable) ++applicable;
    if (rep.violation) {
      ++violations;
      v.fail("implication violated on " + label + " r=" + std::to_string(r));
    }
  };
  const std::pair<Rational, std::string> cs[] = {
      {Rational(3, 10), "0.3"}, {Rational(1, 2), "0.5"}, {Rational(3, 4), "0.75"}, {Rational(9, 10), "0.9"}};
  for (std::size_t n : {50u, 100u, 200u})
    for (const auto& [c, name] : cs)
      for (std::size_t r = 2; r <= 3; ++r)
        scan(gen_chordal_extremal(n, c).graph, r, "split(" + std::to_string(n) + "," + name + ")");
  // Large enough for n >= n_min, so the implication is actually exercised.
  for (std::size_t n : {1000u, 2000u})
    for (std::size_t r = 2; r <= 3; ++r)
      scan(gen_chordal_extremal(n, Rational(9, 10)).graph, r, "split(" + std::to_string(n) + ",0.9)");
  for (std::size_t n = 1; n <= 60; ++n)
    for (std::size_t r = 2; r <= 3; ++r) scan(complete_graph(n), r, "K_" + std::to_string(n));
  for (const auto& [g, r] : g_free_graphs) scan(g, r, "random free graph");
  v.check(unknown == 0, std::to_string(unknown) + " reports with unknown freeness");
  v.detail << reports << " reports, " << violations << " violations, " << applicable
           << " with n >= n_min (implication checked), rest skipped per n_large_enough";
}

ExperimentStats c6_run(std::size_t threads) {
  static const auto ext = gen_chordal_extremal(3000, Rational(1, 2));
  static const CliqueList mc = enumerate_maximal_cliques(ext.graph);
  ExperimentConfig cfg{2, 36, 10000, 0, threads, true};
  return trace_experiment(ext.graph, mc, cfg);
}

void c6_inequality(Verdict& v) {
  const ExperimentStats st = c6_run(1);
  v.check(st.ss_cap == 37, "ss_cap=" + st.ss_cap.str());
  v.check(sauer_shelah_bound(36, 1) == 37, "sauer_shelah_bound(36,1) != 37");
  v.check(st.samples == 10000, "sample count");
  v.check(BigInt(st.max_trace) <= 37, "max_trace=" + std::to_string(st.max_trace));
  v.check(st.ss_cap_violations == 0, std::to_string(st.ss_cap_violations) + " violations");
  v.detail << "n=3000 |MC|=" << st.mc_size << " max_trace=" << st.max_trace << " mean_trace=" << st.mean_trace
           << " cap=37 violations=" << st.ss_cap_violations;
}

void c7_params(Verdict& v) {
  std::size_t points = 0, eq2_checked = 0;
  for (std::size_t r = 2; r <= 8; ++r)
    for (int k = 1; k <= 19; ++k) {
      ++points;
      try {
        const ParamSet p = make_params(r, Rational(k, 20));
        v.check(p.chain_holds && p.ss_sum <= p.two_binom && Rational(p.two_binom) < p.cap,
                "chain fails at r=" + std::to_string(r) + " c=" + std::to_string(k) + "/20");
        const std::size_t n0 = p.n_min.convert_to<std::size_t>();
        for (std::size_t n : {n0, n0 + 1, 2 * n0, 10 * n0}) {
          const Eq2Chain e = eq2_chain(n, p.m, p.c_prime, r);
          if (e.status != Eq2Status::ok) continue;
          ++eq2_checked;
          v.check(e.holds && e.ratio >= 0.25,
                  "eq2 fails at r=" + std::to_string(r) + " c=" + std::to_string(k) + "/20 n=" + std::to_string(n));
        }
      } catch (const std::exception& ex) {
        v.fail(std::string("make_params threw: ") + ex.what());
      }
    }
  const ParamSet p = make_params(2, Rational(1, 2));
  v.check(p.n_min == 2592, "n_min(2,1/2)=" + p.n_min.str());
  const Eq2Chain ref = eq2_chain(2592, p.m, p.c_prime, 2);
  v.check(std::fabs(ref.exponential - std::exp(-1.0)) <= 1e-9, "reference exponential off");
  v.check(ref.holds, "reference chain does not hold");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu (r,c) points, %zu eq2 evaluations hold; (2,1/2,2592): exp=%.12f ratio=%.6f",
                points, eq2_checked, ref.exponential, ref.ratio);
  v.detail << buf;
}

void c8_oracles(Verdict& v) {
  std::vector<std::pair<std::string, Graph>> corpus;
  for (std::size_t n = 1; n <= 12; ++n) {
    corpus.emplace_back("K" + std::to_string(n), complete_graph(n));
    corpus.emplace_back("P" + std::to_string(n), path_graph(n));
    corpus.emplace_back("I" + std::to_string(n), independent_graph(n));
    if (n >= 3) corpus.emplace_back("C" + std::to_string(n), cycle_graph(n));
    for (std::size_t t = 1; t < n; ++t)
      corpus.emplace_back("split", join(independent_graph(t), complete_graph(n - t)));
  }
  for (std::size_t r = 1; r <= 6; ++r) corpus.emplace_back("blowup", blow_up(complete_graph(r), 2));
  corpus.emplace_back("blowup-C4x3", blow_up(cycle_graph(4), 3));
  corpus.emplace_back("polarity2", gen_polarity(2));
  for (std::size_t n : {4u, 8u, 12u})
    for (int k : {5, 7, 9}) corpus.emplace_back("chordal", gen_chordal_extremal(n, Rational(k, 10)).graph);
  for (std::size_t t = 1; t <= 3; ++t)
    for (auto pol : {InnerPolicy::empty, InnerPolicy::complete_a, InnerPolicy::random})
      corpus.emplace_back("gadget", build_shatter_gadget(t, pol, 7).graph);
  for (std::size_t r = 2; r <= 4; ++r)
    for (auto& g : family_members(r)) corpus.emplace_back("family", std::move(g));
  for (std::uint64_t i = 0; i < 200; ++i)
    corpus.emplace_back("random", gen_random(1 + i % 12, 0.05 + 0.9 * static_cast<double>(i % 19) / 18.0, 7000 + i));

  std::size_t counts = 0;
  for (const auto& [name, g] : corpus) {
    v.check(g.n() <= 12, name + " exceeds 12 vertices");
    for (std::size_t r = 0; r <= g.n(); ++r, ++counts)
      if (count_r_cliques(g, r) != oracle::count_cliques(g, r)) v.fail("count mismatch on " + name);
    const auto mc = enumerate_maximal_cliques(g);
    if (as_lists(mc) != oracle::maximal_cliques(g)) v.fail("maximal cliques mismatch on " + name);
    if (clique_number(g) != oracle::clique_number(g)) v.fail("clique number mismatch on " + name);
  }
  v.check(clique_number(cycle_graph(5)) == 2, "omega(C5) != 2");
  v.check(clique_number(complete_graph(7)) == 7, "omega(K7) != 7");
  v.check(count_r_cliques(complete_graph(5), 3) == 10, "count(K5,3) != 10");
  v.detail << corpus.size() << " graphs, " << counts << " clique counts and all MC lists match brute force";
}

void c9_determinism(Verdict& v) {
  const ExperimentStats a = c6_run(1), b = c6_run(1), c = c6_run(8);
  const std::string ca = experiment_csv(a), cb = experiment_csv(b), cc = experiment_csv(c);
  v.check(ca == cb, "repeated run CSV differs");
  v.check(ca == cc, "1 vs 8 threads CSV differs");
  v.check(to_json(a).dump() == to_json(c).dump(), "1 vs 8 threads stats differ");
  v.detail << "CSV " << ca.size() << " bytes identical across repeat and 1/8 threads";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "family cardinality", 1.0, c1_family},
      {2, "maximal-clique VC vs semi-induced freeness", 120.0, c2_claim},
      {3, "Sauer-Shelah on random set systems", 120.0, c3_sauer_shelah},
      {4, "chordal extremal numbers", 10.0, c4_chordal},
      {5, "no counterexample to the linear clique bound", kNoLimit, c5_no_counterexample},
      {6, "trace cap on chordal extremal graph", 60.0, c6_inequality},
      {7, "parameter arithmetic and probability chain", 1.0, c7_params},
      {8, "clique engine vs brute force", 60.0, c8_oracles},
      {9, "experiment determinism", kNoLimit, c9_determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(v);
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) v.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
    if (!v.ok) ++failed;
    std::printf("%s criterion %d: %s (%.2f s) -- %s\n", v.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                v.detail.str().c_str());
    for (std::size_t i = 0; i < v.failures.size() && i < 12; ++i) std::printf("    %s\n", v.failures[i].c_str());
    if (v.failures.size() > 12) std::printf("    ... %zu more\n", v.failures.size() - 12);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
