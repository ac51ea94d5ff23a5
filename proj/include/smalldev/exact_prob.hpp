#pragma once

// P(Z < T) for an Instance, exactly, by depth-first enumeration of the
// product support; and a seeded Monte Carlo estimate used as an oracle.

#include <smalldev/core_model.hpp>
#include <smalldev/rng.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <thread>
#include <vector>

namespace smalldev {

inline constexpr std::uint64_t kSupportSaturated = std::numeric_limits<std::uint64_t>::max();
inline constexpr std::uint64_t kDefaultLeafBudget = std::uint64_t{1} << 24;

/// Thrown when the support is larger than the enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// prod_i |atoms(X_i)|, saturating at kSupportSaturated.
template <Scalar Num>
std::uint64_t support_size(const Instance<Num>& inst) {
  std::uint64_t total = 1;
  for (const auto& v : inst.vars()) {
    const std::uint64_t k = v.size();
    if (k != 0 && total > kSupportSaturated / k) return kSupportSaturated;
    total *= k;
  }
  return total;
}

struct EnumerationOptions {
  std::uint64_t budget = kDefaultLeafBudget;
  bool prune = true;
};

template <Scalar Num>
struct ProbResult {
  Num prob_below;
  Num atoms_at_threshold;  // mass with Z == T (float: |Z - T| <= kFloatTolerance)
  std::uint64_t enumerated_count = 0;  // leaves visited
  std::uint64_t pruned_count = 0;      // subtrees cut because Z must exceed T
};

namespace detail {

template <Scalar Num>
struct Enumerator {
  struct Level {
    Num weight;
    std::vector<Atom<Num>> atoms;  // value descending
  };

  std::vector<Level> levels;
  std::vector<Num> min_completion;  // min_completion[k] = sum_{m >= k} w_m * min atom_m
  Num threshold;
  bool prune;
  ProbResult<Num> result{Num(0), Num(0), 0, 0};

  // Strictly past the threshold band, so pruned mass can never be threshold mass.
  bool beyond(const Num& z) const {
    if constexpr (is_exact<Num>()) {
      return z > threshold;
    } else {
      return z > threshold + kFloatTolerance;
    }
  }

  void leaf(const Num& z, const Num& p) {
    ++result.enumerated_count;
    if constexpr (is_exact<Num>()) {
      if (z < threshold) {
        result.prob_below += p;
      } else if (z == threshold) {
        result.atoms_at_threshold += p;
      }
    } else {
      if (std::abs(z - threshold) <= kFloatTolerance) {
        result.atoms_at_threshold += p;
      } else if (z < threshold) {
        result.prob_below += p;
      }
    }
  }

  void descend(std::size_t k, const Num& partial, const Num& mass) {
    if (k == levels.size()) {
      leaf(partial, mass);
      return;
    }
    if (prune && beyond(partial + min_completion[k])) {
      ++result.pruned_count;
      return;
    }
    const Level& level = levels[k];
    for (const auto& a : level.atoms) descend(k + 1, partial + level.weight * a.value, mass * a.prob);
  }
};

}  // namespace detail

/// Exact P(Z < T). Variables are visited by weight descending and atoms by
/// value descending so that branches exceeding T are cut early.
template <Scalar Num>
ProbResult<Num> exact_prob_below(const Instance<Num>& inst, const DeltaThreshold<Num>& d,
                                 const EnumerationOptions& options = {}) {
  if (inst.vars().size() != inst.weights().size()) {
    throw InputError("length-mismatch", "instance has mismatched weights and variables");
  }
  const std::uint64_t support = support_size(inst);
  if (support > options.budget) {
    throw BudgetExceeded("support of " +
                         (support == kSupportSaturated ? std::string("> 2^64") : std::to_string(support)) +
                         " leaves exceeds the budget of " + std::to_string(options.budget));
  }

  std::vector<std::size_t> order(inst.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.weights()[a] > inst.weights()[b];
  });

  detail::Enumerator<Num> e{{}, {}, d.threshold(), options.prune};
  for (std::size_t k : order) {
    auto atoms = inst.vars()[k].atoms();
    std::sort(atoms.begin(), atoms.end(), [](const auto& a, const auto& b) { return a.value > b.value; });
    e.levels.push_back({inst.weights()[k], std::move(atoms)});
  }
  e.min_completion.assign(e.levels.size() + 1, Num(0));
  for (std::size_t k = e.levels.size(); k-- > 0;) {
    const auto& atoms = e.levels[k].atoms;
    const Num& smallest = atoms.empty() ? Num(0) : atoms.back().value;
    e.min_completion[k] = e.min_completion[k + 1] + e.levels[k].weight * smallest;
  }
  if (support == 0) return e.result;
  e.descend(0, Num(0), Num(1));
  return e.result;
}

struct McResult {
  double estimate = 0.0;
  double half_width_95 = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t below = 0;
};

inline constexpr double kZ95 = 1.96;
inline constexpr std::uint64_t kMonteCarloChunk = std::uint64_t{1} << 16;

/// 95% half-width: normal approximation, or the distance from the estimate to
/// the far Wilson bound when the estimate is 0 or 1.
inline double mc_half_width(double estimate, std::uint64_t samples) {
  const double n = static_cast<double>(samples);
  if (estimate <= 0.0 || estimate >= 1.0) return kZ95 * kZ95 / (n + kZ95 * kZ95);
  return kZ95 * std::sqrt(estimate * (1.0 - estimate) / n);
}

/// Fraction of draws with Z < T (strict float comparison). Samples are split
/// into fixed chunks, each with its own stream derived from `seed`, so the
/// result does not depend on `threads`.
template <Scalar Num>
McResult monte_carlo_below(const Instance<Num>& inst_in, const DeltaThreshold<Num>& d, std::uint64_t samples,
                           std::uint64_t seed, unsigned threads = 0) {
  if (samples < 100) throw InputError("too-few-samples", "monte carlo needs at least 100 samples");
  const auto inst = convert_instance<double>(inst_in);
  const double threshold = to_double(d.threshold());

  struct Sampler {
    double weight;
    std::vector<double> values;
    std::vector<double> cumulative;
  };
  std::vector<Sampler> samplers;
  double fixed = 0.0;
  for (std::size_t k = 0; k < inst.size(); ++k) {
    const auto& atoms = inst.vars()[k].atoms();
    if (atoms.size() == 1) {
      fixed += inst.weights()[k] * atoms.front().value;
      continue;
    }
    Sampler s{inst.weights()[k], {}, {}};
    double c = 0.0;
    for (const auto& a : atoms) {
      c += a.prob;
      s.values.push_back(a.value);
      s.cumulative.push_back(c);
    }
    samplers.push_back(std::move(s));
  }

  const std::uint64_t chunks = (samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
  std::vector<std::uint64_t> below(chunks, 0);
  auto run_chunk = [&](std::uint64_t c) {
    Engine eng = make_engine(seed, c);
    const std::uint64_t count = std::min(kMonteCarloChunk, samples - c * kMonteCarloChunk);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < count; ++s) {
      double z = fixed;
      for (const auto& smp : samplers) {
        const double u = uniform01(eng) * smp.cumulative.back();
        const auto it = std::upper_bound(smp.cumulative.begin(), smp.cumulative.end(), u);
        const std::size_t idx = std::min<std::size_t>(it - smp.cumulative.begin(), smp.values.size() - 1);
        z += smp.weight * smp.values[idx];
      }
      if (z < threshold) ++hits;
    }
    below[c] = hits;
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t c = w; c < chunks; c += workers) run_chunk(c);
      });
    }
  }

  McResult r;
  r.samples = samples;
  r.seed = seed;
  r.below = std::accumulate(below.begin(), below.end(), std::uint64_t{0});
  r.estimate = static_cast<double>(r.below) / static_cast<double>(samples);
  r.half_width_95 = mc_half_width(r.estimate, samples);
  return r;
}

}  // namespace smalldev
