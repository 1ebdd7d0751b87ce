#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cliquevc/cliquevc.hpp"
#include "cliquevc/io.hpp"

namespace cliquevc::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kResource = 3 };

struct RunConfig {
  std::string command;
  std::string input;  // path, "-" for stdin, empty when a generator is used
  std::string kind;   // generator kind, empty when reading input
  std::size_t n = 0;
  std::string c;      // kept as typed; parsed exactly
  std::size_t t = 0;
  std::uint32_t q = 0;
  double p = 0.5;
  std::string inner = "empty";
  std::size_t r = 2;
  std::size_t m = 0;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string system = "mc";
  std::string pattern = "semi";
  std::string out;
  std::string out_dir;
  std::string csv;
  std::string cliques_out;
  bool check_free = false;
  std::size_t clique_cap = kDefaultCliqueCap;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::size_t threads = 1;
};

inline Json to_json(const RunConfig& c) {
  auto opt_str = [](const std::string& s) { return s.empty() ? Json(nullptr) : Json(s); };
  Json gen = nullptr;
  if (!c.kind.empty())
    gen = Json{{"kind", c.kind}, {"n", c.n}, {"c", opt_str(c.c)}, {"t", c.t},
               {"q", c.q}, {"p", c.p}, {"inner", c.inner}};
  return Json{{"command", c.command},
              {"input", opt_str(c.input)},
              {"generator", gen},
              {"r", c.r},
              {"c", opt_str(c.c)},
              {"m", c.m},
              {"samples", c.samples},
              {"seed", c.seed},
              {"format", c.format},
              {"system", c.system},
              {"pattern", c.pattern},
              {"check_free", c.check_free},
              {"clique_cap", c.clique_cap},
              {"node_budget", c.node_budget},
              {"threads", c.threads}};
}

class UsageError : public Error {
 public:
  using Error::Error;
};

inline std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

inline InnerPolicy parse_inner(const std::string& s) {
  if (s == "empty") return InnerPolicy::empty;
  if (s == "complete-a") return InnerPolicy::complete_a;
  if (s == "random") return InnerPolicy::random;
  throw UsageError("unknown --inner policy '" + s + "'");
}

inline Graph generate(const RunConfig& cfg, std::istream& in, std::string* note) {
  const std::string& k = cfg.kind;
  if (k == "complete") return gen_basic(BasicKind::complete, cfg.n);
  if (k == "cycle") return gen_basic(BasicKind::cycle, cfg.n);
  if (k == "path") return gen_basic(BasicKind::path, cfg.n);
  if (k == "independent") return gen_basic(BasicKind::independent, cfg.n);
  if (k == "random") return gen_random(cfg.n, cfg.p, cfg.seed);
  if (k == "polarity") return gen_polarity(cfg.q);
  if (k == "split") {
    if (cfg.t > cfg.n) throw InvalidParameter("split graph needs t <= n");
    return join(independent_graph(cfg.t), complete_graph(cfg.n - cfg.t));
  }
  if (k == "chordal-extremal") {
    if (cfg.c.empty()) throw UsageError("chordal-extremal needs --c");
    auto res = gen_chordal_extremal(cfg.n, parse_rational(cfg.c));
    if (note) *note = "t=" + std::to_string(res.t);
    return std::move(res.graph);
  }
  if (k == "gadget") {
    auto res = build_shatter_gadget(cfg.t, parse_inner(cfg.inner), cfg.seed);
    if (note) {
      *note = "A=";
      for (auto v : res.a_set.to_vector()) *note += (note->size() > 2 ? "," : "") + std::to_string(v);
    }
    return std::move(res.graph);
  }
  if (k == "blowup") {
    if (cfg.input.empty()) throw UsageError("blowup needs --input for the base graph");
    std::string text;
    if (cfg.input == "-") {
      text = read_all(in);
    } else {
      std::ifstream f(cfg.input, std::ios::binary);
      if (!f) throw UsageError("cannot read " + cfg.input);
      text = read_all(f);
    }
    return blow_up(parse_edge_list(text).graph, cfg.t);
  }
  throw UsageError("unknown generator kind '" + k + "'");
}

inline Graph load_graph(const RunConfig& cfg, std::istream& in) {
  if (!cfg.input.empty() && !cfg.kind.empty()) throw UsageError("give either --input or --kind, not both");
  if (!cfg.kind.empty()) return generate(cfg, in, nullptr);
  if (cfg.input.empty()) throw UsageError("an input graph is required (--input PATH, '-' for stdin, or --kind)");
  std::string text;
  if (cfg.input == "-") {
    text = read_all(in);
  } else {
    std::ifstream f(cfg.input, std::ios::binary);
    if (!f) throw UsageError("cannot read " + cfg.input);
    text = read_all(f);
  }
  return parse_edge_list(text).graph;
}

inline void emit(std::ostream& out, const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty())
    out << text;
  else
    write_file(cfg.out, text);
}

inline void emit_json(std::ostream& out, const RunConfig& cfg, Json result) {
  Json doc{{"config", to_json(cfg)}, {"result", std::move(result)}};
  emit(out, cfg, doc.dump(2) + "\n");
}

inline std::size_t env_default(const char* name, std::size_t fallback) {
  if (const char* v = std::getenv(name)) {
    try {
      return static_cast<std::size_t>(std::stoull(v));
    } catch (const std::exception&) {
    }
  }
  return fallback;
}

inline int cmd_gen(RunConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.kind.empty()) throw UsageError("gen needs --kind");
  std::string note;
  const Graph g = generate(cfg, in, &note);
  if (cfg.format == "json") {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    emit_json(out, cfg, Json{{"n", g.n()}, {"m", g.m()}, {"note", note}, {"edges", edges}});
    return kOk;
  }
  std::string header = "# cliquevc gen kind=" + cfg.kind + " seed=" + std::to_string(cfg.seed);
  if (!note.empty()) header += " " + note;
  emit(out, cfg, header + "\n" + serialize_edge_list(g));
  return kOk;
}

inline int cmd_analyze(RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(cfg, in);
  if (cfg.r > g.n()) throw InvalidParameter("r exceeds vertex count");
  const auto density = clique_density(g, cfg.r, cfg.threads);
  const auto mc = enumerate_maximal_cliques(g, cfg.clique_cap, cfg.threads);
  if (!cfg.cliques_out.empty()) write_file(cfg.cliques_out, to_lines(mc));
  emit_json(out, cfg,
            Json{{"n", g.n()}, {"m", g.m()}, {"density", to_json(density)}, {"omega", clique_number(g)},
                 {"mc_count", mc.size()}});
  return kOk;
}

inline int cmd_check_free(RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(cfg, in);
  SearchResult res;
  if (cfg.pattern == "semi")
    res = contains_semi_induced(g, cfg.r, cfg.node_budget);
  else if (cfg.pattern == "blowup")
    res = contains_induced_blowup(g, cfg.r, cfg.node_budget);
  else
    throw UsageError("--pattern must be semi or blowup");
  emit_json(out, cfg,
            Json{{"verdict", to_string(res.status)},
                 {"witness", res.witness ? to_json(*res.witness) : Json(nullptr)},
                 {"nodes", res.nodes}});
  return res.status == SearchStatus::budget_exhausted ? kResource : kOk;
}

inline int cmd_vc(RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(cfg, in);
  SetSystem f;
  if (cfg.system == "mc")
    f = maximal_clique_system(g, cfg.clique_cap);
  else if (cfg.system == "neighborhood")
    f = neighborhood_system(g);
  else
    throw UsageError("--system must be mc or neighborhood");
  const VcResult vc = vc_dimension(f);
  Json cert = nullptr;
  if (vc.k >= 0 && static_cast<std::size_t>(vc.k) <= kMaxShatterCheck)
    if (auto c = is_shattered(f, vc.witness)) cert = to_json(*c);
  emit_json(out, cfg,
            Json{{"system", label_name(f.label())}, {"family_size", f.size()}, {"k", vc.k},
                 {"witness", vertex_list(vc.witness)}, {"certificate", cert}});
  return kOk;
}

inline int cmd_verify(RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(cfg, in);
  const BoundReport rep = verify_graph(g, cfg.r, Budgets{cfg.clique_cap, cfg.node_budget, cfg.threads});
  emit_json(out, cfg, to_json(rep));
  return rep.violation ? kViolation : kOk;
}

inline int cmd_experiment(RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(cfg, in);
  ExperimentConfig ec{cfg.r, cfg.m, cfg.samples, cfg.seed, cfg.threads, true};
  const ExperimentStats st = trace_experiment(g, ec, cfg.clique_cap);
  if (!cfg.csv.empty()) write_file(cfg.csv, experiment_csv(st));
  Json result = to_json(st);
  bool violation = false;
  if (cfg.check_free) {
    const auto res = contains_semi_induced(g, cfg.r, cfg.node_budget);
    result["free"] = to_string(res.status);
    violation = res.status == SearchStatus::none && st.ss_cap_violations > 0;
  }
  if (cfg.format == "csv")
    emit(out, cfg, experiment_csv(st));
  else
    emit_json(out, cfg, std::move(result));
  return violation ? kViolation : kOk;
}

inline int cmd_family(RunConfig& cfg, std::ostream& out) {
  const auto members = family_members(cfg.r);
  Json files = Json::array();
  std::string combined;
  for (std::size_t mask = 0; mask < members.size(); ++mask) {
    const std::string text = "# K_" + std::to_string(cfg.r) + "^[2] member free_mask=" + std::to_string(mask) +
                             "\n" + serialize_edge_list(members[mask]);
    if (!cfg.out_dir.empty()) {
      std::filesystem::create_directories(cfg.out_dir);
      const auto path = std::filesystem::path(cfg.out_dir) / ("member_" + std::to_string(mask) + ".txt");
      write_file(path.string(), text);
      files.push_back(path.filename().string());
    } else {
      combined += text;
    }
  }
  if (cfg.out_dir.empty() && cfg.format == "edgelist") {
    emit(out, cfg, combined);
    return kOk;
  }
  emit_json(out, cfg, Json{{"count", members.size()}, {"files", files}});
  return kOk;
}

inline int cmd_params(RunConfig& cfg, std::ostream& out) {
  if (cfg.c.empty()) throw UsageError("params needs --c");
  const ParamSet p = make_params(cfg.r, parse_rational(cfg.c));
  Json result{{"params", to_json(p)}};
  const std::size_t n = cfg.n != 0 ? cfg.n : p.n_min.convert_to<std::size_t>();
  result["eq2"] = to_json(eq2_chain(n, p.m, p.c_prime, p.r));
  result["eq2_n"] = n;
  emit_json(out, cfg, std::move(result));
  return kOk;
}

// Entry point; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.clique_cap = env_default("CLIQUEVC_CLIQUE_CAP", kDefaultCliqueCap);
  cfg.node_budget = env_default("CLIQUEVC_NODE_BUDGET", kDefaultNodeBudget);

  CLI::App app{"cliquevc: clique, VC-dimension and forbidden-pattern toolkit"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input,-i", cfg.input, "edge-list file, '-' for stdin");
    sub->add_option("--kind", cfg.kind,
                    "generator: complete|cycle|path|independent|random|split|chordal-extremal|polarity|gadget|blowup");
    sub->add_option("--n", cfg.n, "vertex count for generators");
    sub->add_option("--t", cfg.t, "split size / gadget size / blow-up factor");
    sub->add_option("--q", cfg.q, "prime for the polarity graph");
    sub->add_option("--p", cfg.p, "edge probability for random graphs");
    sub->add_option("--inner", cfg.inner, "gadget inside-A edges: empty|complete-a|random");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--r", cfg.r, "clique / pattern order");
    sub->add_option("--c", cfg.c, "density as decimal or p/q");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--format", cfg.format, "json|csv|edgelist");
    sub->add_option("--out,-o", cfg.out, "write output here instead of stdout");
    sub->add_option("--clique-cap", cfg.clique_cap, "maximal clique enumeration cap");
    sub->add_option("--node-budget", cfg.node_budget, "pattern search node budget");
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* gen = app.add_subcommand("gen", "generate a graph");
  auto* analyze = app.add_subcommand("analyze", "clique density, clique number, maximal clique count");
  auto* check = app.add_subcommand("check-free", "search for a K_r^[2] member (or induced K_r[2])");
  auto* vc = app.add_subcommand("vc", "VC-dimension of the neighborhood or maximal-clique system");
  auto* verify = app.add_subcommand("verify", "full bound report");
  auto* experiment = app.add_subcommand("experiment", "sampled trace experiment");
  auto* family = app.add_subcommand("family", "write all K_r^[2] members");
  auto* params = app.add_subcommand("params", "parameter arithmetic and probability chain");
  for (auto* sub : {gen, analyze, check, vc, verify, experiment, family, params}) add_common(sub);
  for (auto* sub : {gen, analyze, check, vc, verify, experiment}) add_input(sub);
  params->add_option("--n", cfg.n, "graph size for the probability chain (default n_min)");
  analyze->add_option("--cliques", cfg.cliques_out, "write maximal cliques, one per line");
  check->add_option("--pattern", cfg.pattern, "semi|blowup");
  vc->add_option("--system", cfg.system, "mc|neighborhood");
  experiment->add_option("--m", cfg.m, "sample size |S_m|")->required();
  experiment->add_option("--samples", cfg.samples, "number of sampled S_m");
  experiment->add_option("--csv", cfg.csv, "also write per-sample CSV here");
  experiment->add_flag("--check-free", cfg.check_free, "run the freeness search and fail on cap violations");
  family->add_option("--out-dir", cfg.out_dir, "directory for member_<mask>.txt files");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (gen->parsed()) return cmd_gen(cfg, in, out);
    if (analyze->parsed()) return cmd_analyze(cfg, in, out);
    if (check->parsed()) return cmd_check_free(cfg, in, out);
    if (vc->parsed()) return cmd_vc(cfg, in, out);
    if (verify->parsed()) return cmd_verify(cfg, in, out);
    if (experiment->parsed()) return cmd_experiment(cfg, in, out);
    if (family->parsed()) return cmd_family(cfg, out);
    if (params->parsed()) return cmd_params(cfg, out);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::logic_error& e) {
    err << "assertion violated: " << e.what() << "\n";
    return kViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace cliquevc::cli
