#pragma once

// The two lower bounds on P(Z < 1 + delta):
//   Feige:   min(delta/(delta+M), 1/e)
//   Samuels: min over i of prod_{j<=i} (1 - mu_j/(sigma_i + delta))
// plus the margin samuels - feige and the step-by-step chain of
// inequalities that shows the margin is non-negative.

#include <smalldev/core_model.hpp>
#include <smalldev/phi.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace smalldev {

/// Above this many factors float-mode products are accumulated as log sums.
inline constexpr std::size_t kDirectProductLimit = 32;

/// The i-th candidate Samuels bound, i in [1, n]. T - sum_{k>i} mu_k is
/// evaluated as sigma_i + delta.
template <Scalar Num>
Num samuels_term(const WeightVector<Num>& w, const DeltaThreshold<Num>& d, std::size_t index) {
  if (index < 1 || index > w.size()) {
    throw InputError("index-range", "prefix index " + std::to_string(index) + " outside [1, " +
                                        std::to_string(w.size()) + "]");
  }
  const Num denom = w.sigma(index) + d.delta();
  if constexpr (std::same_as<Num, double>) {
    if (w.size() > kDirectProductLimit) {
      double log_sum = 0.0;
      for (std::size_t j = 0; j < index; ++j) log_sum += std::log1p(-w[j] / denom);
      return std::exp(log_sum);
    }
  }
  Num product(1);
  for (std::size_t j = 0; j < index; ++j) product *= Num(1) - w[j] / denom;
  return product;
}

template <Scalar Num>
struct SamuelsResult {
  Num value;
  std::size_t argmin_index;  // 1-based, smallest minimizer
  std::vector<Num> terms;    // terms[i-1] = samuels_term(w, d, i)
};

template <Scalar Num>
SamuelsResult<Num> samuels_bound(const WeightVector<Num>& w, const DeltaThreshold<Num>& d) {
  SamuelsResult<Num> r{Num(0), 0, {}};
  r.terms.reserve(w.size());
  for (std::size_t i = 1; i <= w.size(); ++i) {
    r.terms.push_back(samuels_term(w, d, i));
    if (i == 1 || r.terms.back() < r.value) {
      r.value = r.terms.back();
      r.argmin_index = i;
    }
  }
  return r;
}

/// min(delta/(delta+M), 1/e).
inline double feige_bound(double max_weight, double delta) {
  if (!(max_weight > 0.0 && max_weight <= 1.0)) {
    throw InputError("max-weight-range", "M must lie in (0,1], got " + format_number(max_weight));
  }
  if (!(delta > 0.0)) throw InputError("non-positive-delta", "delta must be > 0");
  return std::min(delta / (delta + max_weight), phi::kInvE);
}

template <Scalar Num>
double feige_bound(const WeightVector<Num>& w, const DeltaThreshold<Num>& d) {
  if (!(w.max_weight() > 0 && w.max_weight() <= 1)) {
    throw InputError("max-weight-range", "M must lie in (0,1]");
  }
  // delta/(delta+M) is formed in the native mode so rational inputs round once.
  const Num ratio = d.delta() / (d.delta() + w.max_weight());
  return std::min(to_double(ratio), phi::kInvE);
}

struct BoundReport {
  double samuels = 0.0;
  std::size_t argmin_index = 0;
  double feige = 0.0;
  double implication_margin = 0.0;  // samuels - feige
  std::vector<double> per_index_terms;
  std::vector<std::string> per_index_terms_exact;  // "p/q" strings, rational mode only
};

template <Scalar Num>
BoundReport implication_margin(const WeightVector<Num>& w, const DeltaThreshold<Num>& d) {
  const auto s = samuels_bound(w, d);
  BoundReport r;
  r.samuels = to_double(s.value);
  r.argmin_index = s.argmin_index;
  r.feige = feige_bound(w, d);
  r.implication_margin = r.samuels - r.feige;
  for (const auto& t : s.terms) {
    r.per_index_terms.push_back(to_double(t));
    if constexpr (is_exact<Num>()) r.per_index_terms_exact.push_back(format_number(t));
  }
  return r;
}

struct ChainStep {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // lhs - rhs
};

inline constexpr std::array<const char*, 4> kChainLabels = {"sum-identity", "phi-monotone",
                                                            "concavity-min", "lemma3-floor"};

struct ChainReport {
  std::size_t index = 0;  // prefix index the chain is evaluated at
  double sigma_star = 0.0;
  std::vector<ChainStep> steps;
};

/// Evaluates, at i* = argmin index (or a forced index), the chain
///   log S >= sum_j (mu_j/s) Phi(mu_j/s, delta/s)        (identity)
///         >= Phi(M/s, delta/s)                           (Phi decreasing in mu)
///         >= min(Phi(1, delta/M), Phi(M, delta))         (concavity along rays)
///         >= log(feige)                                  (lower bound for Phi)
/// with s = sigma_{i*}. Inputs are evaluated in float64.
template <Scalar Num>
ChainReport proof_chain(const WeightVector<Num>& w_in, const DeltaThreshold<Num>& d_in,
                        std::optional<std::size_t> forced_index = std::nullopt) {
  std::vector<double> weights;
  for (const auto& x : w_in.weights()) weights.push_back(to_double(x));
  const auto w = WeightVector<double>::unchecked(std::move(weights));
  const auto d = DeltaThreshold<double>::unchecked(to_double(d_in.delta()));
  const double delta = d.delta();
  const double big_m = w.max_weight();

  const std::size_t index = forced_index.value_or(samuels_bound(w_in, d_in).argmin_index);
  const double log_term = std::log(to_double(samuels_term(w_in, d_in, index)));
  const double sigma = w.sigma(index);

  double weighted = 0.0;
  for (std::size_t j = 0; j < index; ++j) {
    const double share = std::min(w[j] / sigma, 1.0);
    weighted += share * phi::phi(share, delta / sigma);
  }
  const double at_max = phi::phi(std::min(big_m / sigma, 1.0), delta / sigma);
  const double endpoints = std::min(phi::phi(1.0, delta / big_m), phi::phi(big_m, delta));
  const double log_feige = std::log(feige_bound(w_in, d_in));

  ChainReport r;
  r.index = index;
  r.sigma_star = sigma;
  const std::array<std::pair<double, double>, 4> sides = {
      std::pair{log_term, weighted}, {weighted, at_max}, {at_max, endpoints}, {endpoints, log_feige}};
  for (std::size_t k = 0; k < sides.size(); ++k) {
    r.steps.push_back({kChainLabels[k], sides[k].first, sides[k].second, sides[k].first - sides[k].second});
  }
  return r;
}

}  // namespace smalldev
