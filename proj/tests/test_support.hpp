#pragma once

// Shared generators and an independent brute-force oracle for the tests.

#include <smalldev/core_model.hpp>
#include <smalldev/rng.hpp>

#include <algorithm>
#include <limits>
#include <vector>

namespace smalldev::testing {

// Random rational instance: weights from small integers, each variable with
// 1-`max_atoms` atoms at distinct small-integer values rescaled to mean one.
inline Instance<Rational> random_rational_instance(Engine& eng, std::size_t max_n, std::size_t max_atoms) {
  const std::size_t n = 1 + uniform_int(eng, 0, max_n - 1);
  std::vector<Rational> raw;
  for (std::size_t k = 0; k < n; ++k) raw.push_back(Rational(static_cast<long long>(uniform_int(eng, 1, 12))));
  auto w = make_weight_vector(raw, true);
  std::vector<DiscreteVar<Rational>> vars;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t atoms = 1 + uniform_int(eng, 0, max_atoms - 1);
    if (atoms == 1) {
      vars.push_back(DiscreteVar<Rational>::constant_one());
      continue;
    }
    std::vector<long long> values;
    while (values.size() < atoms) {
      const auto v = static_cast<long long>(uniform_int(eng, 0, 9));
      if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
    }
    if (std::all_of(values.begin(), values.end(), [](long long v) { return v == 0; })) values[0] = 1;
    std::vector<Rational> probs;
    Rational mass(0), mean(0);
    for (std::size_t a = 0; a < atoms; ++a) {
      probs.push_back(Rational(static_cast<long long>(uniform_int(eng, 1, 6))));
      mass += probs.back();
    }
    for (std::size_t a = 0; a < atoms; ++a) {
      probs[a] /= mass;
      mean += Rational(values[a]) * probs[a];
    }
    std::vector<Atom<Rational>> list;
    for (std::size_t a = 0; a < atoms; ++a) list.push_back({Rational(values[a]) / mean, probs[a]});
    vars.push_back(DiscreteVar<Rational>::unchecked(std::move(list)));
  }
  return make_instance(std::move(w), std::move(vars));
}

// Random float instance with continuous atom values (no mass near T a.s.).
inline Instance<double> random_float_instance(Engine& eng, std::size_t max_n, std::size_t max_atoms) {
  const std::size_t n = 1 + uniform_int(eng, 0, max_n - 1);
  std::vector<double> raw;
  for (std::size_t k = 0; k < n; ++k) raw.push_back(exponential01(eng) + 1e-3);
  auto w = make_weight_vector(raw, true);
  std::vector<DiscreteVar<double>> vars;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t atoms = 1 + uniform_int(eng, 0, max_atoms - 1);
    if (atoms == 1) {
      vars.push_back(DiscreteVar<double>::constant_one());
      continue;
    }
    std::vector<double> values, probs;
    double mass = 0.0, mean = 0.0;
    for (std::size_t a = 0; a < atoms; ++a) {
      values.push_back(uniform(eng, 0.0, 3.0));
      probs.push_back(uniform(eng, 0.05, 1.0));
      mass += probs.back();
    }
    for (std::size_t a = 0; a < atoms; ++a) {
      probs[a] /= mass;
      mean += values[a] * probs[a];
    }
    std::vector<Atom<double>> list;
    for (std::size_t a = 0; a < atoms; ++a) list.push_back({values[a] / mean, probs[a]});
    vars.push_back(DiscreteVar<double>::unchecked(std::move(list)));
  }
  return Instance<double>::unchecked(std::move(w), std::move(vars));
}

// Mixed-radix enumeration of every support point, in input order, no pruning.
template <Scalar Num, class Visit>
void for_each_support_point(const Instance<Num>& inst, Visit&& visit) {
  const std::size_t n = inst.size();
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    Num z(0), p(1);
    for (std::size_t k = 0; k < n; ++k) {
      const auto& a = inst.vars()[k].atoms()[digit[k]];
      z += inst.weights()[k] * a.value;
      p *= a.prob;
    }
    visit(z, p);
    std::size_t k = 0;
    while (k < n && ++digit[k] == inst.vars()[k].size()) digit[k++] = 0;
    if (k == n) break;
  }
}

template <Scalar Num>
Num brute_force_below(const Instance<Num>& inst, const Num& threshold) {
  Num below(0);
  for_each_support_point(inst, [&](const Num& z, const Num& p) {
    if (z < threshold) below += p;
  });
  return below;
}

// Distance from T to the nearest support point.
inline double min_distance_to_threshold(const Instance<Rational>& inst, const Rational& threshold) {
  double best = std::numeric_limits<double>::infinity();
  for_each_support_point(inst, [&](const Rational& z, const Rational&) {
    best = std::min(best, std::abs(to_double(z - threshold)));
  });
  return best;
}

}  // namespace smalldev::testing
