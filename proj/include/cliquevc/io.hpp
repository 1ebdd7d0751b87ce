#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

#include <json.hpp>

#include "cliquevc/bounds.hpp"
#include "cliquevc/clique.hpp"
#include "cliquevc/experiment.hpp"
#include "cliquevc/pattern.hpp"
#include "cliquevc/set_system.hpp"
#include "cliquevc/verify.hpp"

// Text and JSON encodings. JSON keys are part of the CLI contract; see README.

namespace cliquevc {

using Json = nlohmann::json;

// Integers that fit in 64 bits are emitted as numbers, larger ones as decimal strings.
inline Json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) return v.convert_to<std::uint64_t>();
  return v.str();
}

inline Json rational_to_json(const Rational& q) {
  return Json{{"num", big_to_json(boost::multiprecision::numerator(q))},
              {"den", big_to_json(boost::multiprecision::denominator(q))},
              {"float", to_double(q)}};
}

inline Json vertex_list(const VertexSet& s) { return s.to_vector(); }

// One line per set, members ascending and space separated; empty set is an empty line.
inline std::string sets_to_lines(const std::vector<VertexSet>& sets) {
  std::string out;
  for (const auto& s : sets) {
    bool first = true;
    s.for_each([&](std::size_t v) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    });
    out += '\n';
  }
  return out;
}

inline std::string to_lines(const CliqueList& mc) { return sets_to_lines(mc.cliques); }
inline std::string to_lines(const SetSystem& f) { return sets_to_lines(f.sets()); }

inline Json to_json(const DensityReport& d) {
  return Json{{"r", d.r},
              {"count", d.count},
              {"binom", big_to_json(d.binom)},
              {"c_num", big_to_json(boost::multiprecision::numerator(d.c))},
              {"c_den", big_to_json(boost::multiprecision::denominator(d.c))},
              {"c_float", d.c_float}};
}

inline Json to_json(const PatternWitness& w) {
  return Json{{"r", w.r}, {"u", w.u}, {"u_prime", w.u_prime}, {"free_mask", w.free_mask}};
}

inline Json to_json(const ShatterCertificate& cert) {
  Json realizers = Json::object();
  for (std::size_t mask = 0; mask < cert.realizers.size(); ++mask)
    realizers[std::to_string(mask)] = cert.realizers[mask];
  return Json{{"witness", vertex_list(cert.witness)}, {"realizers", realizers}};
}

inline std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "contains";
    case SearchStatus::none: return "free";
    case SearchStatus::budget_exhausted: return "unknown";
  }
  return "unknown";
}

inline std::string_view to_string(Freeness f) {
  switch (f) {
    case Freeness::free: return "free";
    case Freeness::contains: return "contains";
    case Freeness::unknown: return "unknown";
  }
  return "unknown";
}

inline Json to_json(const ParamSet& p) {
  return Json{{"r", p.r},
              {"c", rational_to_json(p.c)},
              {"m", p.m},
              {"c_prime", rational_to_json(p.c_prime)},
              {"ss_sum", big_to_json(p.ss_sum)},
              {"two_binom", big_to_json(p.two_binom)},
              {"cap", rational_to_json(p.cap)},
              {"n_min", big_to_json(p.n_min)},
              {"chain_holds", p.chain_holds}};
}

inline Json to_json(const Eq2Chain& e) {
  std::string_view status = e.status == Eq2Status::ok            ? "ok"
                            : e.status == Eq2Status::n_too_small ? "n_too_small"
                                                                 : "c_prime_too_large";
  return Json{{"status", status},
              {"ratio", e.ratio},
              {"product", e.product},
              {"power", e.power},
              {"linear", e.linear},
              {"exponential", e.exponential},
              {"ratio_ge_product", e.ratio_ge_product},
              {"product_ge_power", e.product_ge_power},
              {"power_ge_linear", e.power_ge_linear},
              {"linear_ge_quarter", e.linear_ge_quarter},
              {"linear_ge_exponential", e.linear_ge_exponential},
              {"exponential_ge_quarter", e.exponential_ge_quarter},
              {"holds", e.holds}};
}

inline Json to_json(const BoundReport& b) {
  Json j{{"n", b.n},
         {"r", b.r},
         {"density", to_json(b.density)},
         {"omega", b.omega},
         {"mc_size", b.mc_size},
         {"bound_main", rational_to_json(b.bound_main)},
         {"bound_holmsen", b.bound_holmsen ? Json(*b.bound_holmsen) : Json(nullptr)},
         {"bound_chordal", b.bound_chordal ? Json(*b.bound_chordal) : Json(nullptr)},
         {"free", to_string(b.free)},
         {"witness", b.witness ? to_json(*b.witness) : Json(nullptr)},
         {"vc_mc", b.vc_mc},
         {"vc_witness", vertex_list(b.vc_witness)},
         {"params", b.params ? to_json(*b.params) : Json(nullptr)},
         {"n_min", b.params ? big_to_json(b.params->n_min) : Json(nullptr)},
         {"n_large_enough", b.n_large_enough},
         {"implication_applicable", b.implication_applicable},
         {"omega_meets_main", b.omega_meets_main},
         {"violation", b.violation}};
  return j;
}

inline Json to_json(const ExperimentStats& s) {
  return Json{{"samples", s.samples},
              {"seed", s.seed},
              {"m", s.m},
              {"r", s.r},
              {"mc_size", s.mc_size},
              {"max_trace", s.max_trace},
              {"mean_trace", s.mean_trace},
              {"p_clique_hat", s.p_clique_hat},
              {"p_realized_hat", s.p_realized_hat},
              {"density", rational_to_json(s.density)},
              {"ss_cap", big_to_json(s.ss_cap)},
              {"paper_cap", rational_to_json(s.paper_cap)},
              {"ss_cap_violations", s.ss_cap_violations}};
}

}  // namespace cliquevc
