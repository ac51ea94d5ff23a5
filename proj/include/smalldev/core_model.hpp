#pragma once

// Value objects for a small-deviation problem: the weight vector, the slack
// delta with its threshold T = 1 + delta, unit-mean discrete variables, and
// the instance tying one variable to each weight.
//
// Checked factories (`make_*`) throw InputError on the first violated
// invariant. `unchecked` factories exist for parsers and for
// validate_instance, which reports every violation as data.

#include <smalldev/numeric.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace smalldev {

struct Diagnostic {
  std::string code;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Positive weights mu_1 >= ... >= mu_n summing to one, with prefix sums
/// sigma_i. Containers are 0-based; bound and construction APIs that take a
/// prefix index use the 1-based index i in [1, n].
template <Scalar Num>
class WeightVector {
 public:
  static WeightVector unchecked(std::vector<Num> weights) {
    WeightVector w;
    w.weights_ = std::move(weights);
    w.prefix_.reserve(w.weights_.size());
    Num running(0);
    for (const Num& x : w.weights_) {
      running += x;
      w.prefix_.push_back(running);
    }
    return w;
  }

  std::size_t size() const noexcept { return weights_.size(); }
  const std::vector<Num>& weights() const noexcept { return weights_; }
  const std::vector<Num>& prefix() const noexcept { return prefix_; }
  const Num& operator[](std::size_t k) const { return weights_[k]; }

  /// M = mu_1.
  const Num& max_weight() const { return weights_.front(); }

  /// sigma_i for the 1-based prefix index i.
  const Num& sigma(std::size_t i) const { return prefix_.at(i - 1); }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  WeightVector() = default;

  std::vector<Num> weights_;
  std::vector<Num> prefix_;
};

template <Scalar Num>
std::vector<Diagnostic> weight_diagnostics(const WeightVector<Num>& w) {
  std::vector<Diagnostic> out;
  if (w.size() == 0) {
    out.push_back({"empty-weights", "weight vector must have at least one entry"});
    return out;
  }
  Num total(0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!is_finite(w[k])) {
      out.push_back({"non-finite", "weight " + std::to_string(k + 1) + " is not finite"});
      return out;
    }
    if (!(w[k] > 0)) {
      out.push_back({"non-positive-weight", "weight " + std::to_string(k + 1) + " is not positive"});
    }
    if (k > 0 && w[k] > w[k - 1]) {
      out.push_back({"weights-order", "weights must be non-increasing (entry " +
                                          std::to_string(k + 1) + " exceeds its predecessor)"});
    }
    total += w[k];
  }
  if (!same_value(total, Num(1))) {
    out.push_back({"weights-sum", "weights sum to " + format_number(total) + ", not 1"});
  }
  return out;
}

/// Sorts descending and optionally rescales to unit sum.
template <Scalar Num>
WeightVector<Num> make_weight_vector(std::vector<Num> raw, bool normalize = false) {
  if (raw.empty()) throw InputError("empty-weights", "weight vector must have at least one entry");
  Num total(0);
  for (const Num& x : raw) {
    if (!is_finite(x)) throw InputError("non-finite", "weights must be finite");
    if (!(x > 0)) throw InputError("non-positive-weight", "weights must be strictly positive");
    total += x;
  }
  std::sort(raw.begin(), raw.end(), std::greater<>());
  if (normalize) {
    for (Num& x : raw) x /= total;
  } else if (!same_value(total, Num(1))) {
    throw InputError("weights-sum", "weights sum to " + format_number(total) +
                                        ", not 1 (pass normalize to rescale)");
  }
  return WeightVector<Num>::unchecked(std::move(raw));
}

/// The slack delta > 0 and the threshold T = 1 + delta.
template <Scalar Num>
class DeltaThreshold {
 public:
  static DeltaThreshold unchecked(Num delta) {
    DeltaThreshold d;
    d.threshold_ = Num(1) + delta;
    d.delta_ = std::move(delta);
    return d;
  }

  const Num& delta() const noexcept { return delta_; }
  const Num& threshold() const noexcept { return threshold_; }

  friend bool operator==(const DeltaThreshold&, const DeltaThreshold&) = default;

 private:
  DeltaThreshold() = default;

  Num delta_{};
  Num threshold_{};
};

template <Scalar Num>
DeltaThreshold<Num> make_delta(Num delta) {
  if (!is_finite(delta)) throw InputError("non-finite", "delta must be finite");
  if (!(delta > 0)) throw InputError("non-positive-delta", "delta must be > 0, got " + format_number(delta));
  return DeltaThreshold<Num>::unchecked(std::move(delta));
}

template <Scalar Num>
struct Atom {
  Num value;
  Num prob;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite-support non-negative distribution with mean one.
template <Scalar Num>
class DiscreteVar {
 public:
  static DiscreteVar unchecked(std::vector<Atom<Num>> atoms) {
    DiscreteVar v;
    v.atoms_ = std::move(atoms);
    return v;
  }

  static DiscreteVar constant_one() { return unchecked({{Num(1), Num(1)}}); }

  const std::vector<Atom<Num>>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  Num mean() const {
    Num m(0);
    for (const auto& a : atoms_) m += a.value * a.prob;
    return m;
  }

  Num total_prob() const {
    Num p(0);
    for (const auto& a : atoms_) p += a.prob;
    return p;
  }

  friend bool operator==(const DiscreteVar&, const DiscreteVar&) = default;

 private:
  DiscreteVar() = default;

  std::vector<Atom<Num>> atoms_;
};

template <Scalar Num>
std::vector<Diagnostic> var_diagnostics(const DiscreteVar<Num>& var, const std::string& where = "") {
  const std::string at = where.empty() ? std::string() : " (" + where + ")";
  std::vector<Diagnostic> out;
  if (var.size() == 0) {
    out.push_back({"empty-support", "variable has no atoms" + at});
    return out;
  }
  for (const auto& a : var.atoms()) {
    if (!is_finite(a.value) || !is_finite(a.prob)) {
      out.push_back({"non-finite", "atom is not finite" + at});
      return out;
    }
  }
  for (std::size_t k = 0; k < var.size(); ++k) {
    const auto& a = var.atoms()[k];
    if (a.value < 0) out.push_back({"negative-value", "atom value " + format_number(a.value) + " is negative" + at});
    if (!(a.prob > 0)) out.push_back({"non-positive-prob", "atom probability " + format_number(a.prob) + " is not positive" + at});
    for (std::size_t m = 0; m < k; ++m) {
      if (var.atoms()[m].value == a.value) {
        out.push_back({"duplicate-value", "atom value " + format_number(a.value) + " appears twice" + at});
      }
    }
  }
  if (const Num p = var.total_prob(); !same_value(p, Num(1))) {
    out.push_back({"prob-sum-violation", "probabilities sum to " + format_number(p) + at});
  }
  if (const Num m = var.mean(); !same_value(m, Num(1))) {
    out.push_back({"mean-violation", "mean is " + format_number(m) + ", not 1" + at});
  }
  return out;
}

template <Scalar Num>
DiscreteVar<Num> make_discrete_var(std::vector<Atom<Num>> atoms) {
  auto var = DiscreteVar<Num>::unchecked(std::move(atoms));
  if (auto diags = var_diagnostics(var); !diags.empty()) {
    throw InputError(diags.front().code, diags.front().message);
  }
  return var;
}

/// A weight vector with one variable per weight; Z = sum_i mu_i X_i.
template <Scalar Num>
class Instance {
 public:
  static Instance unchecked(WeightVector<Num> weights, std::vector<DiscreteVar<Num>> vars) {
    return Instance(std::move(weights), std::move(vars));
  }

  const WeightVector<Num>& weights() const noexcept { return weights_; }
  const std::vector<DiscreteVar<Num>>& vars() const noexcept { return vars_; }
  std::size_t size() const noexcept { return weights_.size(); }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Instance(WeightVector<Num> w, std::vector<DiscreteVar<Num>> v)
      : weights_(std::move(w)), vars_(std::move(v)) {}

  WeightVector<Num> weights_;
  std::vector<DiscreteVar<Num>> vars_;
};

/// Every violated invariant, in a stable order. Empty means valid.
template <Scalar Num>
std::vector<Diagnostic> validate_instance(const Instance<Num>& inst) {
  std::vector<Diagnostic> out = weight_diagnostics(inst.weights());
  if (inst.vars().size() != inst.weights().size()) {
    out.push_back({"length-mismatch", std::to_string(inst.vars().size()) + " variables for " +
                                          std::to_string(inst.weights().size()) + " weights"});
  }
  for (std::size_t k = 0; k < inst.vars().size(); ++k) {
    auto diags = var_diagnostics(inst.vars()[k], "X_" + std::to_string(k + 1));
    out.insert(out.end(), diags.begin(), diags.end());
  }
  return out;
}

template <Scalar Num>
Instance<Num> make_instance(WeightVector<Num> weights, std::vector<DiscreteVar<Num>> vars) {
  auto inst = Instance<Num>::unchecked(std::move(weights), std::move(vars));
  if (auto diags = validate_instance(inst); !diags.empty()) {
    throw InputError(diags.front().code, diags.front().message);
  }
  return inst;
}

template <Scalar To, Scalar From>
Instance<To> convert_instance(const Instance<From>& inst) {
  auto conv = [](const From& x) -> To {
    if constexpr (std::same_as<To, From>) {
      return x;
    } else if constexpr (std::same_as<To, double>) {
      return to_double(x);
    } else {
      return Rational(x);
    }
  };
  std::vector<To> w;
  for (const auto& x : inst.weights().weights()) w.push_back(conv(x));
  std::vector<DiscreteVar<To>> vars;
  for (const auto& v : inst.vars()) {
    std::vector<Atom<To>> atoms;
    for (const auto& a : v.atoms()) atoms.push_back({conv(a.value), conv(a.prob)});
    vars.push_back(DiscreteVar<To>::unchecked(std::move(atoms)));
  }
  return Instance<To>::unchecked(WeightVector<To>::unchecked(std::move(w)), std::move(vars));
}

}  // namespace smalldev
