#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "cliquevc/error.hpp"
#include "cliquevc/rational.hpp"

namespace cliquevc {

// Slack for comparisons that involve sqrt or exp.
inline constexpr double kFloatSlack = 1e-12;

// c * n / (18 r), exact.
inline Rational bound_main(std::size_t n, const Rational& c, std::size_t r) {
  if (r < 2) throw InvalidParameter("bound_main needs r >= 2");
  return c * Rational(BigInt(n)) / Rational(BigInt(18 * r));
}

// (1 - sqrt(1 - c))^2 n, for induced-K_{2,2}-free graphs with c C(n,2) edges.
inline double bound_holmsen_k22(std::size_t n, double c) {
  if (!(c > 0.0 && c <= 1.0)) throw InvalidParameter("density must lie in (0, 1]");
  const double s = 1.0 - std::sqrt(1.0 - c);
  return s * s * static_cast<double>(n);
}

// (1 - sqrt(1 - c)) n, for chordal graphs with c C(n,2) edges.
inline double bound_chordal(std::size_t n, double c) {
  if (!(c > 0.0 && c <= 1.0)) throw InvalidParameter("density must lie in (0, 1]");
  return (1.0 - std::sqrt(1.0 - c)) * static_cast<double>(n);
}

// Parameters of the double-counting argument for K_r density c.
struct ParamSet {
  std::size_t r = 0;
  Rational c;
  std::size_t m = 0;       // floor(9r / c)
  Rational c_prime;        // c / (18 r)
  BigInt ss_sum;           // sum_{i<r} C(m, i)
  BigInt two_binom;        // 2 C(m, r-1)
  Rational cap;            // c C(m, r) / 4
  BigInt n_min;            // least n with c' n >= m
  bool chain_holds = false;
};

namespace detail {

inline ParamSet derive_params(std::size_t r, const Rational& c) {
  ParamSet p;
  p.r = r;
  p.c = c;
  p.m = floor_of(Rational(BigInt(9 * r)) / c).convert_to<std::size_t>();
  p.c_prime = c / Rational(BigInt(18 * r));
  for (std::size_t i = 0; i < r; ++i) p.ss_sum += binomial(p.m, i);
  p.two_binom = 2 * binomial(p.m, r - 1);
  p.cap = c * Rational(binomial(p.m, r)) / 4;
  p.n_min = ceil_of(Rational(BigInt(p.m)) / p.c_prime);
  p.chain_holds = p.ss_sum <= p.two_binom && Rational(p.two_binom) < p.cap;
  return p;
}

}  // namespace detail

// Throws std::logic_error if sum_{i<r} C(m,i) <= 2 C(m,r-1) < c C(m,r)/4 fails.
inline ParamSet make_params(std::size_t r, const Rational& c) {
  if (r < 2) throw InvalidParameter("r must be >= 2");
  if (!(c > 0 && c < 1)) throw InvalidParameter("c must lie strictly between 0 and 1");
  ParamSet p = detail::derive_params(r, c);
  if (!p.chain_holds)
    throw std::logic_error("parameter chain failed for r=" + std::to_string(r) + ", c=" + to_string(c));
  return p;
}

enum class Eq2Status { ok, n_too_small, c_prime_too_large };

// The lower-bound chain for the probability that S_m \ S_r avoids a clique of
// size ceil(c' n):
//   ratio = C(n - ceil(c'n), m - r) / C(n - r, m - r)
//         >= prod_{i < m-r} (n - c'n - i) / (n - i)      (product)
//         >= ((n - c'n - m) / (n - m))^m                  (power)
//         >= (1 - 2c')^m                                   (linear)
//         >= (1 - 1/m)^m >= 1/4                            (c' <= 1/(2m), m >= 2)
// The exponential e^{-2c'm} is reported with its own comparisons; it is an
// upper bound on (1 - 2c')^m, not a lower one.
struct Eq2Chain {
  Eq2Status status = Eq2Status::ok;
  double ratio = 1.0;
  double product = 1.0;
  double power = 1.0;
  double linear = 1.0;
  double exponential = 1.0;
  bool ratio_ge_product = true;
  bool product_ge_power = true;
  bool power_ge_linear = true;
  bool linear_ge_quarter = true;
  bool linear_ge_exponential = true;
  bool exponential_ge_quarter = true;
  bool holds = true;
};

inline Eq2Chain eq2_chain(std::size_t n, std::size_t m, const Rational& c_prime, std::size_t r) {
  Eq2Chain out;
  if (c_prime < 0) throw InvalidParameter("c' must be nonnegative");
  if (r > m) throw InvalidParameter("r must not exceed m");
  if (c_prime == 0) return out;

  const Rational cn = c_prime * Rational(BigInt(n));
  if (cn < Rational(BigInt(m)) || m >= n) {
    out.status = Eq2Status::n_too_small;
    out.holds = false;
    return out;
  }
  if (c_prime * Rational(BigInt(2 * m)) > 1) {
    out.status = Eq2Status::c_prime_too_large;
    out.holds = false;
    return out;
  }

  const long double nd = static_cast<long double>(n);
  const long double x = to_long_double(cn);
  const long double cp = to_long_double(c_prime);
  const std::size_t k = ceil_of(cn).convert_to<std::size_t>();

  long double log_ratio = 0.0L, log_product = 0.0L;
  for (std::size_t i = 0; i + r < m; ++i) {
    const long double id = static_cast<long double>(i);
    log_ratio += std::log((nd - static_cast<long double>(k) - id) / (nd - static_cast<long double>(r) - id));
    log_product += std::log((nd - x - id) / (nd - id));
  }
  const long double md = static_cast<long double>(m);
  out.ratio = static_cast<double>(std::exp(log_ratio));
  out.product = static_cast<double>(std::exp(log_product));
  out.power = static_cast<double>(std::pow((nd - x - md) / (nd - md), md));
  out.linear = static_cast<double>(std::pow(1.0L - 2.0L * cp, md));
  out.exponential = static_cast<double>(std::exp(-2.0L * cp * md));

  const double quarter_floor = static_cast<double>(std::pow(1.0L - 1.0L / md, md));
  out.ratio_ge_product = out.ratio >= out.product - kFloatSlack;
  out.product_ge_power = out.product >= out.power - kFloatSlack;
  out.power_ge_linear = out.power >= out.linear - kFloatSlack;
  out.linear_ge_quarter = out.linear >= quarter_floor - kFloatSlack && quarter_floor >= 0.25 - kFloatSlack;
  out.linear_ge_exponential = out.linear >= out.exponential - kFloatSlack;
  out.exponential_ge_quarter = out.exponential >= 0.25 - kFloatSlack;
  out.holds = out.ratio_ge_product && out.product_ge_power && out.power_ge_linear && out.linear_ge_quarter &&
              out.exponential_ge_quarter && out.ratio >= 0.25;
  return out;
}

}  // namespace cliquevc
