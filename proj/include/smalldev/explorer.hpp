#pragma once

// Randomized and grid sweeps over the bounds and the Phi lemmas, and a
// Nelder-Mead search over two-point distributions that tries to push
// P(Z < T) below the Samuels bound.

#include <smalldev/bounds.hpp>
#include <smalldev/core_model.hpp>
#include <smalldev/exact_prob.hpp>
#include <smalldev/extremal.hpp>
#include <smalldev/nelder_mead.hpp>
#include <smalldev/phi.hpp>
#include <smalldev/rng.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smalldev {

enum class WeightSampler { dirichlet_uniform, geometric_decay, one_dominant };

inline constexpr std::array<WeightSampler, 3> kAllSamplers = {
    WeightSampler::dirichlet_uniform, WeightSampler::geometric_decay, WeightSampler::one_dominant};

inline std::string_view sampler_name(WeightSampler s) {
  switch (s) {
    case WeightSampler::dirichlet_uniform: return "dirichlet-uniform";
    case WeightSampler::geometric_decay: return "geometric-decay";
    case WeightSampler::one_dominant: return "one-dominant";
  }
  return "unknown";
}

inline WeightSampler parse_sampler(std::string_view name) {
  for (auto s : kAllSamplers) {
    if (sampler_name(s) == name) return s;
  }
  throw InputError("unknown-sampler", "unknown weight sampler '" + std::string(name) + "'");
}

/// Random weight vector, deterministic in (n, sampler, seed).
inline WeightVector<double> sample_weights(std::size_t n, WeightSampler sampler, std::uint64_t seed) {
  if (n < 1) throw InputError("empty-weights", "n must be >= 1");
  if (n == 1) return make_weight_vector<double>({1.0});
  Engine eng = make_engine(seed);
  std::vector<double> raw(n);
  switch (sampler) {
    case WeightSampler::dirichlet_uniform:
      for (auto& x : raw) {
        // Guard against an exact zero draw; the exponential is positive a.s.
        do x = exponential01(eng); while (!(x > 0.0));
      }
      break;
    case WeightSampler::geometric_decay: {
      const double r = uniform(eng, 0.2, 0.95);
      double x = 1.0;
      for (auto& v : raw) {
        v = x;
        x *= r;
      }
      break;
    }
    case WeightSampler::one_dominant: {
      const double head = uniform(eng, 0.5, 0.99);
      raw.assign(n, (1.0 - head) / static_cast<double>(n - 1));
      raw[0] = head;
      break;
    }
  }
  return make_weight_vector(std::move(raw), /*normalize=*/true);
}

struct SweepConfig {
  std::uint64_t instance_count = 100000;
  std::size_t n_min = 1;
  std::size_t n_max = 16;
  double delta_min = 1e-4;  // sampled log-uniformly
  double delta_max = 10.0;
  std::uint64_t seed = 0;
  std::vector<WeightSampler> samplers{kAllSamplers.begin(), kAllSamplers.end()};
  double tolerance = 1e-12;           // implication and chain steps 2-4
  double identity_tolerance = 1e-10;  // |chain step 1|
  bool keep_records = false;

  void validate() const {
    if (instance_count < 1) throw InputError("bad-config", "instance_count must be >= 1");
    if (n_min < 1 || n_min > n_max) throw InputError("bad-config", "n range must satisfy 1 <= min <= max");
    if (!(delta_min > 0.0) || delta_min > delta_max) {
      throw InputError("bad-config", "delta range must satisfy 0 < min <= max");
    }
    if (samplers.empty()) throw InputError("bad-config", "at least one weight sampler is required");
  }
};

struct SweepRecord {
  std::uint64_t index = 0;
  WeightSampler sampler = WeightSampler::dirichlet_uniform;
  std::vector<double> weights;
  double delta = 0.0;
  BoundReport bounds;
  std::array<double, 4> chain_margins{};
};

struct SweepFailure {
  std::uint64_t index = 0;
  std::string kind;  // "implication" or a chain step label
  double value = 0.0;
  std::vector<double> weights;
  double delta = 0.0;
};

struct HistogramBin {
  std::string label;
  double upper;  // exclusive upper edge
  std::uint64_t count = 0;
};

struct SweepReport {
  std::uint64_t instances = 0;
  double tolerance = 0.0;
  double worst_margin = std::numeric_limits<double>::infinity();  // implication and steps 2-4
  double worst_implication_margin = std::numeric_limits<double>::infinity();
  std::vector<double> worst_case_weights;
  double worst_case_delta = 0.0;
  double worst_identity_error = 0.0;  // max |step 1 margin|
  std::array<double, 4> worst_step_margins{};
  std::vector<HistogramBin> histogram;
  std::vector<SweepFailure> failures;
  std::vector<SweepRecord> records;

  bool passed() const { return failures.empty(); }
};

inline std::vector<HistogramBin> margin_histogram_bins(double tolerance) {
  const double inf = std::numeric_limits<double>::infinity();
  return {{"< -tol", -tolerance, 0}, {"[-tol, 1e-9)", 1e-9, 0}, {"[1e-9, 1e-6)", 1e-6, 0},
          {"[1e-6, 1e-3)", 1e-3, 0}, {"[1e-3, 1e-2)", 1e-2, 0}, {"[1e-2, 1e-1)", 1e-1, 0},
          {">= 1e-1", inf, 0}};
}

/// Weights, delta, and sampler of the `index`-th sweep instance.
inline SweepRecord sweep_instance(const SweepConfig& cfg, std::uint64_t index) {
  Engine eng = make_engine(cfg.seed, 2 * index);
  SweepRecord rec;
  rec.index = index;
  rec.sampler = cfg.samplers[index % cfg.samplers.size()];
  const auto n = static_cast<std::size_t>(uniform_int(eng, cfg.n_min, cfg.n_max));
  rec.delta = std::exp(uniform(eng, std::log(cfg.delta_min), std::log(cfg.delta_max)));
  rec.weights = sample_weights(n, rec.sampler, derive_seed(cfg.seed, 2 * index + 1)).weights();
  return rec;
}

/// Implication margin and full chain for every sampled (w, delta). Records
/// are assembled in instance order.
inline SweepReport sweep_implication(const SweepConfig& cfg) {
  cfg.validate();
  SweepReport report;
  report.instances = cfg.instance_count;
  report.tolerance = cfg.tolerance;
  report.histogram = margin_histogram_bins(cfg.tolerance);
  report.worst_step_margins.fill(std::numeric_limits<double>::infinity());

  for (std::uint64_t idx = 0; idx < cfg.instance_count; ++idx) {
    SweepRecord rec = sweep_instance(cfg, idx);
    const auto w = WeightVector<double>::unchecked(rec.weights);
    const auto d = make_delta(rec.delta);
    rec.bounds = implication_margin(w, d);
    const ChainReport chain = proof_chain(w, d);
    for (std::size_t k = 0; k < 4; ++k) rec.chain_margins[k] = chain.steps[k].margin;

    auto fail = [&](std::string kind, double value) {
      report.failures.push_back({idx, std::move(kind), value, rec.weights, rec.delta});
    };
    const double m = rec.bounds.implication_margin;
    if (m < report.worst_implication_margin) report.worst_implication_margin = m;
    double worst_here = m;
    if (m < -cfg.tolerance) fail("implication", m);

    report.worst_identity_error = std::max(report.worst_identity_error, std::abs(rec.chain_margins[0]));
    if (std::abs(rec.chain_margins[0]) > cfg.identity_tolerance) fail(kChainLabels[0], rec.chain_margins[0]);
    report.worst_step_margins[0] = std::min(report.worst_step_margins[0], rec.chain_margins[0]);
    for (std::size_t k = 1; k < 4; ++k) {
      report.worst_step_margins[k] = std::min(report.worst_step_margins[k], rec.chain_margins[k]);
      worst_here = std::min(worst_here, rec.chain_margins[k]);
      if (rec.chain_margins[k] < -cfg.tolerance) fail(kChainLabels[k], rec.chain_margins[k]);
    }
    if (worst_here < report.worst_margin) {
      report.worst_margin = worst_here;
      report.worst_case_weights = rec.weights;
      report.worst_case_delta = rec.delta;
    }
    for (auto& bin : report.histogram) {
      if (m < bin.upper) {
        ++bin.count;
        break;
      }
    }
    if (cfg.keep_records) report.records.push_back(std::move(rec));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Lemma grids

struct LemmaGrid {
  double lemma1_step = 1e-3;
  double mu_step = 0.01;
  double rho_min = 1e-3;
  double rho_max = 1e3;
  int rho_per_decade = 10;
  std::vector<double> alphas{0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0};
  double t_step = 1e-3;           // interior t grid for concavity and eta
  double second_diff_step = 1e-4;
  double first_diff_step = 1e-6;
  double eta_origin_t = 1e-6;
  double deriv_margin = 1e-2;     // distance of derivative probes from endpoints
  double deriv_t_step = 5e-3;

  double margin_tolerance = 1e-12;
  double concavity_tolerance = 1e-8;
  double eta_origin_tolerance = 1e-5;
  double continuity_tolerance = 1e-8;
  double derivative_tolerance = 1e-4;  // relative
};

enum class Relation { at_least, at_most, greater, less };

inline std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::at_least: return ">=";
    case Relation::at_most: return "<=";
    case Relation::greater: return ">";
    case Relation::less: return "<";
  }
  return "?";
}

struct LemmaCheck {
  std::string name;
  double value = 0.0;  // worst observed
  Relation relation = Relation::at_least;
  double bound = 0.0;
  std::uint64_t points = 0;
  bool passed = false;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
  }
  const LemmaCheck* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

inline std::vector<double> log_grid(double lo, double hi, int per_decade) {
  std::vector<double> g;
  const int steps = static_cast<int>(std::lround(std::log10(hi / lo) * per_decade));
  for (int k = 0; k <= steps; ++k) g.push_back(lo * std::pow(10.0, static_cast<double>(k) / per_decade));
  return g;
}

/// lo, lo+step, ..., hi (hi included when it lies on the grid).
inline std::vector<double> linear_grid(double lo, double hi, double step) {
  std::vector<double> g;
  const auto steps = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long k = 0; k <= steps; ++k) g.push_back(std::min(hi, lo + static_cast<double>(k) * step));
  return g;
}

namespace detail {

inline LemmaCheck make_check(std::string name, double value, Relation rel, double bound, std::uint64_t points) {
  bool ok = false;
  switch (rel) {
    case Relation::at_least: ok = value >= bound; break;
    case Relation::at_most: ok = value <= bound; break;
    case Relation::greater: ok = value > bound; break;
    case Relation::less: ok = value < bound; break;
  }
  return {std::move(name), value, rel, bound, points, ok};
}

inline double relative_error(double approx, double exact) {
  return std::abs(approx - exact) / std::abs(exact);
}

}  // namespace detail

/// Grid checks of every Phi lemma plus finite-difference cross-checks of the
/// closed-form derivatives. Each check reports its worst value.
inline LemmaReport sweep_lemmas(const LemmaGrid& g = {}) {
  using namespace phi;
  const double inf = std::numeric_limits<double>::infinity();
  LemmaReport r;
  const auto rhos = log_grid(g.rho_min, g.rho_max, g.rho_per_decade);
  const auto mus = linear_grid(0.0, 1.0, g.mu_step);

  {
    double worst_margin = inf;
    double worst_f = inf;
    const auto ts = linear_grid(0.0, 1.0, g.lemma1_step);
    for (double t : ts) {
      worst_margin = std::min(worst_margin, check_lemma1(t));
      worst_f = std::min(worst_f, f_lemma1(t));
    }
    r.checks.push_back(smalldev::detail::make_check("lemma1-margin", worst_margin, Relation::at_least, -g.margin_tolerance, ts.size()));
    r.checks.push_back(smalldev::detail::make_check("lemma1-f", worst_f, Relation::at_least, -g.margin_tolerance, ts.size()));
  }

  {
    double worst = 0.0;
    for (double rho : rhos) worst = std::max(worst, std::abs(phi::phi(1e-9, rho) - phi::phi(0.0, rho)));
    r.checks.push_back(smalldev::detail::make_check("phi-continuity", worst, Relation::at_most, g.continuity_tolerance, rhos.size()));
  }

  {
    // Smallest phi(lambda) - phi(mu) over all grid pairs lambda < mu.
    double worst_gap = inf;
    std::uint64_t pairs = 0;
    std::vector<double> vals(mus.size());
    for (double rho : rhos) {
      for (std::size_t k = 0; k < mus.size(); ++k) vals[k] = phi::phi(mus[k], rho);
      for (std::size_t hi = 1; hi < mus.size(); ++hi) {
        for (std::size_t lo = 0; lo < hi; ++lo) {
          worst_gap = std::min(worst_gap, vals[lo] - vals[hi]);
          ++pairs;
        }
      }
    }
    r.checks.push_back(smalldev::detail::make_check("lemma2-strict-decrease", worst_gap, Relation::greater, 0.0, pairs));
  }

  {
    double worst = inf;
    std::uint64_t points = 0;
    for (double mu : mus) {
      for (double rho : rhos) {
        worst = std::min(worst, check_lemma3({mu, rho}));
        ++points;
      }
    }
    r.checks.push_back(smalldev::detail::make_check("lemma3-margin", worst, Relation::at_least, -g.margin_tolerance, points));
  }

  {
    const double h = g.second_diff_step;
    double worst_second = -inf;
    double worst_eta = -inf;
    double worst_eta_prime = -inf;
    double worst_origin = 0.0;
    std::uint64_t points = 0;
    const auto ts = linear_grid(g.t_step, 1.0 - g.t_step, g.t_step);
    for (double alpha : g.alphas) {
      const AlphaSlice a{alpha};
      for (double t : ts) {
        const double second = (h_alpha(a, t + h) - 2.0 * h_alpha(a, t) + h_alpha(a, t - h)) / (h * h);
        worst_second = std::max(worst_second, second);
        worst_eta = std::max(worst_eta, eta(a, t));
        worst_eta_prime = std::max(worst_eta_prime, eta_prime(a, t));
        ++points;
      }
      worst_origin = std::max(worst_origin, std::abs(eta(a, g.eta_origin_t)));
    }
    r.checks.push_back(smalldev::detail::make_check("lemma4-second-difference", worst_second, Relation::at_most, g.concavity_tolerance, points));
    r.checks.push_back(smalldev::detail::make_check("lemma4-eta-negative", worst_eta, Relation::less, 0.0, points));
    r.checks.push_back(smalldev::detail::make_check("lemma4-eta-prime-negative", worst_eta_prime, Relation::less, 0.0, points));
    r.checks.push_back(smalldev::detail::make_check("lemma4-eta-origin", worst_origin, Relation::at_most, g.eta_origin_tolerance, g.alphas.size()));
  }

  {
    const double h2 = g.second_diff_step;
    const double h1 = g.first_diff_step;
    const auto ts = linear_grid(g.deriv_margin, 1.0 - g.deriv_margin, g.deriv_t_step);
    double worst_eta = 0.0;
    double worst_eta_prime = 0.0;
    std::uint64_t points = 0;
    for (double alpha : g.alphas) {
      const AlphaSlice a{alpha};
      for (double t : ts) {
        const double second = (h_alpha(a, t + h2) - 2.0 * h_alpha(a, t) + h_alpha(a, t - h2)) / (h2 * h2);
        worst_eta = std::max(worst_eta, smalldev::detail::relative_error(t * t * t * second, eta(a, t)));
        const double slope = (eta(a, t + h1) - eta(a, t - h1)) / (2.0 * h1);
        worst_eta_prime = std::max(worst_eta_prime, smalldev::detail::relative_error(slope, eta_prime(a, t)));
        ++points;
      }
    }
    r.checks.push_back(smalldev::detail::make_check("deriv-eta", worst_eta, Relation::at_most, g.derivative_tolerance, points));
    r.checks.push_back(smalldev::detail::make_check("deriv-eta-prime", worst_eta_prime, Relation::at_most, g.derivative_tolerance, points));

    // g' is probed on rho in (0, mu/(e-1)], the regime where its sign is used.
    const auto interior_mus = linear_grid(g.deriv_margin, 1.0 - g.deriv_margin, g.mu_step);
    const auto fractions = linear_grid(0.05, 1.0, 0.05);
    double worst_g = 0.0;
    std::uint64_t g_points = 0;
    for (double mu : interior_mus) {
      for (double frac : fractions) {
        const double rho = frac * mu / (kE - 1.0);
        const double slope = (g_lemma3({mu, rho + h1}) - g_lemma3({mu, rho - h1})) / (2.0 * h1);
        worst_g = std::max(worst_g, smalldev::detail::relative_error(slope, g_prime_lemma3({mu, rho})));
        ++g_points;
      }
    }
    r.checks.push_back(smalldev::detail::make_check("deriv-g-prime", worst_g, Relation::at_most, g.derivative_tolerance, g_points));

    const auto deriv_rhos = log_grid(g.deriv_margin, 1.0 / g.deriv_margin, g.rho_per_decade);
    double worst_p2 = 0.0;
    std::uint64_t p2_points = 0;
    for (double mu : interior_mus) {
      for (double rho : deriv_rhos) {
        const double slope = (phi::phi(mu, rho + h1) - phi::phi(mu, rho - h1)) / (2.0 * h1);
        worst_p2 = std::max(worst_p2, smalldev::detail::relative_error(slope, partial2_phi({mu, rho})));
        ++p2_points;
      }
    }
    r.checks.push_back(smalldev::detail::make_check("deriv-partial2-phi", worst_p2, Relation::at_most, g.derivative_tolerance, p2_points));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Counterexample search

struct SearchConfig {
  std::size_t restarts = 50;
  std::size_t max_evals = 2000;  // per restart
  SimplexCoefficients coefficients;
  double diameter_tolerance = 1e-10;
  double initial_step = 0.5;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultLeafBudget;

  void validate() const {
    if (!coefficients.valid()) throw InputError("bad-config", "simplex coefficients out of range");
    if (max_evals < 1) throw InputError("bad-config", "max_evals must be >= 1");
  }
};

/// Per-coordinate two-point parameters: X_i on {low_i, high_i}, mass fixed by
/// the unit mean. low_i == 1 denotes the constant variable X_i = 1.
struct TwoPointParams {
  std::vector<double> low;   // in [0, 1]
  std::vector<double> high;  // > 1
};

inline Instance<double> two_point_instance(const WeightVector<double>& w, const TwoPointParams& p) {
  std::vector<DiscreteVar<double>> vars;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double a = p.low[k];
    const double b = p.high[k];
    if (a >= 1.0) {
      vars.push_back(DiscreteVar<double>::constant_one());
    } else {
      vars.push_back(DiscreteVar<double>::unchecked({{a, (b - 1.0) / (b - a)}, {b, (1.0 - a) / (b - a)}}));
    }
  }
  return Instance<double>::unchecked(w, std::move(vars));
}

/// The samuels_extremal construction for prefix index i as two-point parameters.
inline TwoPointParams extremal_params(const WeightVector<double>& w, double delta, std::size_t index) {
  TwoPointParams p;
  const double level = w.sigma(index) + delta;
  for (std::size_t j = 0; j < w.size(); ++j) {
    p.low.push_back(j < index ? 0.0 : 1.0);
    p.high.push_back(j < index ? level / w[j] : 2.0);
  }
  return p;
}

struct RestartSummary {
  std::string kind;       // "warm" or "random"
  std::size_t index = 0;  // prefix index for warm starts
  double start_value = 0.0;
  double best_value = 0.0;
  std::size_t evals = 0;
  bool converged = false;
};

struct SearchReport {
  std::string family = "two-point";
  double best_prob = 0.0;
  double samuels = 0.0;
  std::size_t samuels_index = 0;
  double gap_vs_samuels = 0.0;  // best_prob - samuels
  TwoPointParams best_params;
  std::optional<Instance<double>> best_instance;
  std::vector<RestartSummary> restarts;
};

/// Maps unconstrained coordinates to 0 < low < 1 < high < cap.
class TwoPointTransform {
 public:
  static constexpr double kClamp = 30.0;

  TwoPointTransform(std::size_t n, double cap) : n_(n), cap_(cap) {}

  double cap() const { return cap_; }

  TwoPointParams decode(const std::vector<double>& x) const {
    TwoPointParams p;
    for (std::size_t k = 0; k < n_; ++k) {
      p.low.push_back(logistic(x[k]));
      p.high.push_back(1.0 + (cap_ - 1.0) * logistic(x[n_ + k]));
    }
    return p;
  }

  std::vector<double> encode(const TwoPointParams& p) const {
    std::vector<double> x(2 * n_);
    for (std::size_t k = 0; k < n_; ++k) {
      x[k] = logit(p.low[k]);
      x[n_ + k] = logit((p.high[k] - 1.0) / (cap_ - 1.0));
    }
    return x;
  }

 private:
  static double logistic(double u) {
    u = std::clamp(u, -kClamp, kClamp);
    return 1.0 / (1.0 + std::exp(-u));
  }
  static double logit(double p) {
    if (p <= 0.0) return -kClamp;
    if (p >= 1.0) return kClamp;
    return std::clamp(std::log(p / (1.0 - p)), -kClamp, kClamp);
  }

  std::size_t n_;
  double cap_;
};

/// Nelder-Mead over the two-point family minimizing exact P(Z < T). One
/// restart is warm-started at the extremal construction of each prefix index;
/// the remaining restarts start from seeded random points.
inline SearchReport search_counterexample(const WeightVector<double>& w, const DeltaThreshold<double>& d,
                                          const SearchConfig& cfg) {
  cfg.validate();
  const std::size_t n = w.size();
  if ((std::uint64_t{1} << std::min<std::size_t>(n, 63)) > cfg.budget) {
    throw BudgetExceeded("two-point support 2^" + std::to_string(n) + " exceeds the budget");
  }
  const double delta = d.delta();
  // Large enough for every extremal atom (sigma_i + delta)/mu_j <= (1+delta)/mu_n.
  const double cap = std::max(10.0 * static_cast<double>(n) * (1.0 + delta), 2.0 * (1.0 + delta) / w[n - 1]);
  const TwoPointTransform transform(n, cap);
  const EnumerationOptions enum_opts{cfg.budget, true};

  auto objective_natural = [&](const TwoPointParams& p) {
    return exact_prob_below(two_point_instance(w, p), d, enum_opts).prob_below;
  };
  auto objective = [&](const std::vector<double>& x) { return objective_natural(transform.decode(x)); };

  SearchReport report;
  const auto samuels = samuels_bound(w, d);
  report.samuels = samuels.value;
  report.samuels_index = samuels.argmin_index;
  report.best_prob = std::numeric_limits<double>::infinity();

  auto consider = [&](double value, const TwoPointParams& p) {
    if (value < report.best_prob) {
      report.best_prob = value;
      report.best_params = p;
    }
  };

  NelderMeadOptions nm;
  nm.coefficients = cfg.coefficients;
  nm.max_evals = cfg.max_evals;
  nm.diameter_tolerance = cfg.diameter_tolerance;
  nm.initial_step = cfg.initial_step;

  const std::size_t random_starts = cfg.restarts > n ? cfg.restarts - n : 0;
  for (std::size_t r = 0; r < n + random_starts; ++r) {
    RestartSummary summary;
    std::vector<double> start;
    if (r < n) {
      summary.kind = "warm";
      summary.index = r + 1;
      const auto params = extremal_params(w, delta, r + 1);
      summary.start_value = objective_natural(params);
      consider(summary.start_value, params);
      start = transform.encode(params);
    } else {
      summary.kind = "random";
      Engine eng = make_engine(cfg.seed, r);
      start.resize(2 * n);
      for (auto& x : start) x = uniform(eng, -3.0, 3.0);
      summary.start_value = objective(start);
    }
    const auto res = nelder_mead(objective, start, nm);
    summary.best_value = std::min(summary.start_value, res.value);
    summary.evals = res.evals;
    summary.converged = res.converged;
    consider(res.value, transform.decode(res.x));
    report.restarts.push_back(summary);
  }

  report.gap_vs_samuels = report.best_prob - report.samuels;
  report.best_instance = two_point_instance(w, report.best_params);
  return report;
}

}  // namespace smalldev
