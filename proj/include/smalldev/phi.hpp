#pragma once

// Phi(mu, rho) = (1/mu) log(1 - mu/(1+rho)), extended to mu = 0 by
// -1/(1+rho), and the auxiliary functions used to bound it:
//   phi_series  s -> log(1-s)/s            (strictly decreasing on [0,1))
//   h_alpha     t -> Phi(t, alpha t)       (concave on [0,1])
//   eta         t^3 h_alpha''(t), eta_prime its derivative
//   f_lemma1, g_prime_lemma3, partial2_phi
// Margin functions return signed reals; callers own the tolerances.

#include <smalldev/numeric.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace smalldev::phi {

inline constexpr double kE = std::numbers::e;
inline constexpr double kInvE = 1.0 / std::numbers::e;

/// Below this argument phi_series switches from log1p to a power series.
inline constexpr double kSeriesCutoff = 1e-4;

/// A point of Phi's domain [0,1] x (0, inf).
struct PhiPoint {
  double mu;
  double rho;
};

/// Slice parameter alpha > 0 of t -> Phi(t, alpha t).
struct AlphaSlice {
  double alpha;
};

namespace detail {

inline void require(bool ok, const char* code, const std::string& message) {
  if (!ok) throw InputError(code, message);
}

inline void check_point(PhiPoint p) {
  require(p.mu >= 0.0 && p.mu <= 1.0, "phi-domain", "mu must lie in [0,1], got " + format_number(p.mu));
  require(p.rho > 0.0 && std::isfinite(p.rho), "phi-domain", "rho must be > 0, got " + format_number(p.rho));
}

inline void check_interior_mu(PhiPoint p) {
  check_point(p);
  require(p.mu > 0.0 && p.mu < 1.0, "phi-domain", "mu must lie in (0,1), got " + format_number(p.mu));
}

inline void check_alpha(AlphaSlice a) {
  require(a.alpha > 0.0 && std::isfinite(a.alpha), "alpha-domain", "alpha must be > 0");
}

inline void check_open_unit(double t) {
  require(t > 0.0 && t < 1.0, "t-domain", "t must lie in (0,1), got " + format_number(t));
}

inline void check_closed_unit(double t) {
  require(t >= 0.0 && t <= 1.0, "t-domain", "t must lie in [0,1], got " + format_number(t));
}

}  // namespace detail

/// log(1-s)/s on [0,1), with the value -1 at s = 0.
inline double phi_series(double s) {
  detail::require(s >= 0.0 && s < 1.0, "s-domain", "s must lie in [0,1), got " + format_number(s));
  if (s < kSeriesCutoff) {
    // -(1 + s/2 + s^2/3 + s^3/4); the dropped tail is below s^4/5 < 2e-17.
    return -(1.0 + s * (0.5 + s * (1.0 / 3.0 + s * 0.25)));
  }
  return std::log1p(-s) / s;
}

inline double phi(PhiPoint p) {
  detail::check_point(p);
  const double scale = 1.0 / (1.0 + p.rho);
  if (p.mu * scale > 0.5) {
    // 1 - mu/(1+rho) cancels badly here; 1 - mu is exact for mu >= 1/2.
    return (std::log((1.0 - p.mu) + p.rho) - std::log1p(p.rho)) / p.mu;
  }
  return scale * phi_series(p.mu * scale);
}

inline double phi(double mu, double rho) { return phi(PhiPoint{mu, rho}); }

/// t -> Phi(t, alpha t); the value at t = 0 is the continuous limit -1.
inline double h_alpha(AlphaSlice a, double t) {
  detail::check_alpha(a);
  detail::check_closed_unit(t);
  if (t == 0.0) return -1.0;
  return phi(PhiPoint{t, a.alpha * t});
}

/// t^3 h_alpha''(t) in closed form.
inline double eta(AlphaSlice a, double t) {
  detail::check_alpha(a);
  detail::check_open_unit(t);
  const double al = a.alpha;
  const double u = 1.0 - t + al * t;
  const double v = 1.0 + al * t;
  const double rational = t * (2.0 + (6.0 * al - 3.0) * t + 4.0 * (al * al - al) * t * t) / (u * u * v * v);
  return rational + 2.0 * std::log1p(-t / v);
}

inline double eta_prime(AlphaSlice a, double t) {
  detail::check_alpha(a);
  detail::check_open_unit(t);
  const double al = a.alpha;
  const double u = 1.0 - t + al * t;
  const double v = 1.0 + al * t;
  const double w = 1.0 - 2.0 * al + 2.0 * (al - al * al) * t;
  return -(t * t * (1.0 + 3.0 * w * w)) / (2.0 * u * u * u * v * v * v);
}

/// (1 + t/(e-1))(1 - e^{-t}) - t, non-negative on [0,1].
inline double f_lemma1(double t) {
  detail::check_closed_unit(t);
  return (1.0 + t / (kE - 1.0)) * -std::expm1(-t) - t;
}

/// 1 - t/(1 + t/(e-1)) - e^{-t}, non-negative on [0,1].
inline double check_lemma1(double t) {
  detail::check_closed_unit(t);
  return 1.0 - t / (1.0 + t / (kE - 1.0)) - std::exp(-t);
}

/// Phi(mu,rho) - log(min(rho/(mu+rho), 1/e)), non-negative on the domain.
inline double check_lemma3(PhiPoint p) {
  const double lhs = phi(p);
  const double ratio = p.rho / (p.mu + p.rho);
  return lhs - (ratio < kInvE ? std::log(ratio) : -1.0);
}

/// g(rho) = Phi(mu, rho) - log(rho/(mu+rho)) for fixed mu; g_prime_lemma3 is its closed-form derivative.
inline double g_lemma3(PhiPoint p) {
  detail::check_point(p);
  return phi(p) - std::log(p.rho / (p.mu + p.rho));
}

inline double g_prime_lemma3(PhiPoint p) {
  detail::check_interior_mu(p);
  const double mu = p.mu;
  const double rho = p.rho;
  const double numerator = (1.0 - mu) * ((1.0 + rho) * mu - rho * rho);
  return -numerator / (rho * (1.0 + rho) * (1.0 + rho - mu) * (mu + rho));
}

/// d Phi / d rho.
inline double partial2_phi(PhiPoint p) {
  detail::check_interior_mu(p);
  return 1.0 / ((1.0 + p.rho) * (1.0 + p.rho - p.mu));
}

}  // namespace smalldev::phi
