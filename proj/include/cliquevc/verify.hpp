#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "cliquevc/bounds.hpp"
#include "cliquevc/clique.hpp"
#include "cliquevc/graph.hpp"
#include "cliquevc/pattern.hpp"
#include "cliquevc/rational.hpp"
#include "cliquevc/set_system.hpp"

namespace cliquevc {

enum class Freeness { free, contains, unknown };

struct Budgets {
  std::size_t clique_cap = kDefaultCliqueCap;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::size_t threads = 1;
};

struct BoundReport {
  std::size_t n = 0;
  std::size_t r = 0;
  DensityReport density;
  std::size_t omega = 0;
  std::size_t mc_size = 0;
  Rational bound_main = 0;
  std::optional<double> bound_holmsen;  // r = 2 only
  std::optional<double> bound_chordal;  // r = 2 only
  Freeness free = Freeness::unknown;
  std::optional<PatternWitness> witness;
  long vc_mc = -1;
  VertexSet vc_witness;
  std::optional<ParamSet> params;  // present when c > 0
  bool n_large_enough = false;
  // Free, c > 0 and n >= n_min: then omega >= c n / (18 r) must hold.
  bool implication_applicable = false;
  bool omega_meets_main = false;
  bool violation = false;
};

inline BoundReport verify_graph(const Graph& g, std::size_t r, const Budgets& budgets = {}) {
  if (r < 2) throw InvalidParameter("r must be >= 2");
  if (r > g.n()) throw InvalidParameter("r exceeds vertex count");
  BoundReport rep;
  rep.n = g.n();
  rep.r = r;
  rep.density = clique_density(g, r, budgets.threads);
  rep.omega = clique_number(g);

  const CliqueList mc = enumerate_maximal_cliques(g, budgets.clique_cap, budgets.threads);
  rep.mc_size = mc.size();
  const VcResult vc = vc_dimension(maximal_clique_system(mc));
  rep.vc_mc = vc.k;
  rep.vc_witness = vc.witness;

  const SearchResult search = contains_semi_induced(g, r, budgets.node_budget);
  switch (search.status) {
    case SearchStatus::found:
      rep.free = Freeness::contains;
      rep.witness = search.witness;
      break;
    case SearchStatus::none: rep.free = Freeness::free; break;
    case SearchStatus::budget_exhausted: rep.free = Freeness::unknown; break;
  }

  const Rational& c = rep.density.c;
  rep.bound_main = bound_main(g.n(), c, r);
  rep.omega_meets_main = Rational(BigInt(rep.omega)) >= rep.bound_main;
  if (c > 0) {
    if (r == 2) {
      rep.bound_holmsen = bound_holmsen_k22(g.n(), rep.density.c_float);
      rep.bound_chordal = bound_chordal(g.n(), rep.density.c_float);
    }
    rep.params = detail::derive_params(r, c);
    rep.n_large_enough = BigInt(g.n()) >= rep.params->n_min;
  }
  rep.implication_applicable = rep.free == Freeness::free && c > 0 && rep.n_large_enough;
  rep.violation = rep.implication_applicable && !rep.omega_meets_main;
  return rep;
}

}  // namespace cliquevc
