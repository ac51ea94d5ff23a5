#pragma once

// The equality-achieving two-point constructions:
//   feige_extremal    X_1 on {0, (delta+M)/M}, everything else constant 1
//   samuels_extremal  for j <= i, X_j on {0, (sigma_i+delta)/mu_j}; j > i constant 1
//   iid_extremal      uniform weights, each X on {0, n(1+delta)}
// and the check that the exact engine reproduces the closed forms.

#include <smalldev/bounds.hpp>
#include <smalldev/core_model.hpp>
#include <smalldev/exact_prob.hpp>

#include <cassert>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace smalldev {

namespace detail {

// Mass `high_prob` on `high`, the rest on zero.
template <Scalar Num>
DiscreteVar<Num> zero_or(const Num& high, const Num& high_prob) {
  return DiscreteVar<Num>::unchecked({{Num(0), Num(1) - high_prob}, {high, high_prob}});
}

}  // namespace detail

template <Scalar Num>
Instance<Num> feige_extremal(const WeightVector<Num>& w, const DeltaThreshold<Num>& d) {
  const Num& m = w.max_weight();
  const Num top_prob = m / (d.delta() + m);
  std::vector<DiscreteVar<Num>> vars;
  vars.push_back(detail::zero_or<Num>((d.delta() + m) / m, top_prob));
  for (std::size_t k = 1; k < w.size(); ++k) vars.push_back(DiscreteVar<Num>::constant_one());
  return Instance<Num>::unchecked(w, std::move(vars));
}

template <Scalar Num>
Instance<Num> samuels_extremal(const WeightVector<Num>& w, const DeltaThreshold<Num>& d, std::size_t index) {
  if (index < 1 || index > w.size()) {
    throw InputError("index-range", "prefix index " + std::to_string(index) + " outside [1, " +
                                        std::to_string(w.size()) + "]");
  }
  const Num level = w.sigma(index) + d.delta();
  std::vector<DiscreteVar<Num>> vars;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j < index) {
      // mu_j <= sigma_i < sigma_i + delta, so the zero atom keeps positive mass.
      assert(w[j] < level);
      vars.push_back(detail::zero_or<Num>(level / w[j], w[j] / level));
    } else {
      vars.push_back(DiscreteVar<Num>::constant_one());
    }
  }
  return Instance<Num>::unchecked(w, std::move(vars));
}

template <Scalar Num>
Instance<Num> iid_extremal(std::size_t n, const DeltaThreshold<Num>& d) {
  if (n < 1) throw InputError("empty-weights", "iid construction needs n >= 1");
  const Num share = Num(1) / Num(static_cast<long long>(n));
  const Num top = Num(static_cast<long long>(n)) * d.threshold();
  auto w = WeightVector<Num>::unchecked(std::vector<Num>(n, share));
  std::vector<DiscreteVar<Num>> vars(n, detail::zero_or<Num>(top, Num(1) / top));
  return Instance<Num>::unchecked(std::move(w), std::move(vars));
}

/// (1 - 1/(n(1+delta)))^n; exact for rationals.
template <Scalar Num>
Num iid_closed_form(std::size_t n, const DeltaThreshold<Num>& d) {
  const Num factor = Num(1) - Num(1) / (Num(static_cast<long long>(n)) * d.threshold());
  if constexpr (is_exact<Num>()) {
    Num r(1);
    for (std::size_t k = 0; k < n; ++k) r *= factor;
    return r;
  } else {
    return std::exp(static_cast<double>(n) * std::log1p(-1.0 / (static_cast<double>(n) * d.threshold())));
  }
}

/// n -> infinity limit of iid_closed_form: e^{-1/(1+delta)}.
inline double iid_limit(double delta) {
  if (!(delta > 0.0)) throw InputError("non-positive-delta", "delta must be > 0");
  return std::exp(-1.0 / (1.0 + delta));
}

template <Scalar Num>
struct EqualityCheck {
  std::string kind;   // "samuels" or "feige"
  std::size_t index;  // prefix index for samuels checks, 1 for feige
  Num engine;         // exact_prob_below of the construction
  Num closed_form;
  bool equal;
};

template <Scalar Num>
struct EqualityReport {
  std::vector<EqualityCheck<Num>> checks;

  bool all_equal() const {
    for (const auto& c : checks) {
      if (!c.equal) return false;
    }
    return true;
  }
};

/// Builds samuels_extremal for every prefix index and feige_extremal, runs the
/// exact engine on each, and compares with the closed-form value. Equality is
/// literal in rational mode.
template <Scalar Num>
EqualityReport<Num> verify_extremal_equality(const WeightVector<Num>& w, const DeltaThreshold<Num>& d,
                                             const EnumerationOptions& options = {}) {
  EqualityReport<Num> report;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    const Num engine = exact_prob_below(samuels_extremal(w, d, i), d, options).prob_below;
    const Num closed = samuels_term(w, d, i);
    report.checks.push_back({"samuels", i, engine, closed, same_value(engine, closed)});
  }
  const Num engine = exact_prob_below(feige_extremal(w, d), d, options).prob_below;
  const Num closed = d.delta() / (d.delta() + w.max_weight());
  report.checks.push_back({"feige", 1, engine, closed, same_value(engine, closed)});
  return report;
}

}  // namespace smalldev
