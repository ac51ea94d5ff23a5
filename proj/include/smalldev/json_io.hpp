#pragma once

// JSON and CSV forms of instances and reports.
//
// Instance schema:
//   {"mode": "rational" | "float",
//    "weights": [w_1, ...],
//    "vars": [[{"value": v, "prob": p}, ...], ...]}
// Rationals are "p/q" strings, floats are JSON numbers.

#include <smalldev/bounds.hpp>
#include <smalldev/core_model.hpp>
#include <smalldev/exact_prob.hpp>
#include <smalldev/explorer.hpp>
#include <smalldev/extremal.hpp>

#include <json.hpp>

#include <cstdint>
#include <cstring>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace smalldev {

using nlohmann::json;

using AnyInstance = std::variant<Instance<double>, Instance<Rational>>;

inline json number_to_json(double x) { return x; }
inline json number_to_json(const Rational& x) { return format_number(x); }

template <Scalar Num>
Num number_from_json(const json& j) {
  if (j.is_string()) return parse_number<Num>(j.get<std::string>());
  if (j.is_number()) {
    if constexpr (is_exact<Num>()) {
      // Integers are exact; other JSON numbers go through their decimal text.
      if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
      return parse_number<Rational>(j.dump());
    } else {
      return j.get<double>();
    }
  }
  throw InputError("bad-number", "expected a number or \"p/q\" string, got " + j.dump());
}

template <Scalar Num>
json to_json(const Instance<Num>& inst) {
  json weights = json::array();
  for (const auto& x : inst.weights().weights()) weights.push_back(number_to_json(x));
  json vars = json::array();
  for (const auto& v : inst.vars()) {
    json atoms = json::array();
    for (const auto& a : v.atoms()) atoms.push_back({{"value", number_to_json(a.value)}, {"prob", number_to_json(a.prob)}});
    vars.push_back(std::move(atoms));
  }
  return {{"mode", mode_name(mode_of<Num>())}, {"weights", std::move(weights)}, {"vars", std::move(vars)}};
}

/// Structural parse only; call validate_instance for the model invariants.
template <Scalar Num>
Instance<Num> instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("weights") || !j.contains("vars") || !j["weights"].is_array() ||
      !j["vars"].is_array()) {
    throw InputError("bad-schema", "instance must be an object with 'weights' and 'vars' arrays");
  }
  std::vector<Num> weights;
  for (const auto& x : j["weights"]) weights.push_back(number_from_json<Num>(x));
  std::vector<DiscreteVar<Num>> vars;
  for (const auto& v : j["vars"]) {
    if (!v.is_array()) throw InputError("bad-schema", "each variable must be an array of atoms");
    std::vector<Atom<Num>> atoms;
    for (const auto& a : v) {
      if (!a.is_object() || !a.contains("value") || !a.contains("prob")) {
        throw InputError("bad-schema", "each atom must be an object with 'value' and 'prob'");
      }
      atoms.push_back({number_from_json<Num>(a["value"]), number_from_json<Num>(a["prob"])});
    }
    vars.push_back(DiscreteVar<Num>::unchecked(std::move(atoms)));
  }
  return Instance<Num>::unchecked(WeightVector<Num>::unchecked(std::move(weights)), std::move(vars));
}

inline AnyInstance any_instance_from_json(const json& j) {
  const NumericMode mode = j.is_object() && j.contains("mode") && j["mode"].is_string()
                               ? parse_mode(j["mode"].get<std::string>())
                               : NumericMode::float64;
  if (mode == NumericMode::rational) return instance_from_json<Rational>(j);
  return instance_from_json<double>(j);
}

inline json diagnostics_to_json(const std::vector<Diagnostic>& diags) {
  json out = json::array();
  for (const auto& d : diags) out.push_back({{"code", d.code}, {"message", d.message}});
  return out;
}

inline json to_json(const BoundReport& r) {
  json j = {{"samuels", r.samuels},
            {"argmin_index", r.argmin_index},
            {"feige", r.feige},
            {"implication_margin", r.implication_margin},
            {"per_index_terms", r.per_index_terms}};
  if (!r.per_index_terms_exact.empty()) j["per_index_terms_exact"] = r.per_index_terms_exact;
  return j;
}

inline json to_json(const ChainReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"label", s.label}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"margin", s.margin}});
  }
  return {{"index", r.index}, {"sigma_star", r.sigma_star}, {"steps", std::move(steps)}};
}

template <Scalar Num>
json to_json(const ProbResult<Num>& r) {
  json j = {{"mode", mode_name(mode_of<Num>())},
            {"prob_below", number_to_json(r.prob_below)},
            {"atoms_at_threshold", number_to_json(r.atoms_at_threshold)},
            {"enumerated_count", r.enumerated_count},
            {"pruned_count", r.pruned_count}};
  if constexpr (is_exact<Num>()) {
    j["prob_below_float"] = to_double(r.prob_below);
    j["atoms_at_threshold_float"] = to_double(r.atoms_at_threshold);
  }
  return j;
}

inline json to_json(const McResult& r) {
  return {{"estimate", r.estimate}, {"half_width_95", r.half_width_95}, {"samples", r.samples},
          {"seed", r.seed},         {"below", r.below},                 {"generator", kGeneratorName}};
}

template <Scalar Num>
json to_json(const EqualityReport<Num>& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json item = {{"kind", c.kind},
                 {"index", c.index},
                 {"engine", number_to_json(c.engine)},
                 {"closed_form", number_to_json(c.closed_form)},
                 {"equal", c.equal}};
    if constexpr (is_exact<Num>()) item["engine_float"] = to_double(c.engine);
    checks.push_back(std::move(item));
  }
  return {{"all_equal", r.all_equal()}, {"checks", std::move(checks)}};
}

inline json to_json(const SweepReport& r) {
  json hist = json::array();
  for (const auto& b : r.histogram) hist.push_back({{"bin", b.label}, {"count", b.count}});
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"index", f.index}, {"kind", f.kind}, {"value", f.value}, {"weights", f.weights}, {"delta", f.delta}});
  }
  json steps = json::object();
  for (std::size_t k = 0; k < 4; ++k) steps[kChainLabels[k]] = r.worst_step_margins[k];
  return {{"instances", r.instances},
          {"tolerance", r.tolerance},
          {"passed", r.passed()},
          {"worst_margin", r.worst_margin},
          {"worst_implication_margin", r.worst_implication_margin},
          {"worst_case", {{"weights", r.worst_case_weights}, {"delta", r.worst_case_delta}}},
          {"worst_identity_error", r.worst_identity_error},
          {"worst_step_margins", std::move(steps)},
          {"histogram", std::move(hist)},
          {"failures", std::move(failures)}};
}

inline json to_json(const LemmaReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"worst", c.value},
                      {"relation", relation_symbol(c.relation)},
                      {"bound", c.bound},
                      {"points", c.points},
                      {"passed", c.passed}});
  }
  return {{"passed", r.passed()}, {"checks", std::move(checks)}};
}

inline json to_json(const TwoPointParams& p) { return {{"low", p.low}, {"high", p.high}}; }

inline json to_json(const SearchReport& r) {
  json restarts = json::array();
  for (const auto& s : r.restarts) {
    restarts.push_back({{"kind", s.kind},
                        {"index", s.index},
                        {"start_value", s.start_value},
                        {"best_value", s.best_value},
                        {"evals", s.evals},
                        {"converged", s.converged}});
  }
  json j = {{"family", r.family},
            {"scope", "within the two-point family"},
            {"best_prob", r.best_prob},
            {"samuels", r.samuels},
            {"samuels_index", r.samuels_index},
            {"gap_vs_samuels", r.gap_vs_samuels},
            {"best_params", to_json(r.best_params)},
            {"restarts", std::move(restarts)}};
  if (r.best_instance) j["best_instance"] = to_json(*r.best_instance);
  return j;
}

// ---------------------------------------------------------------------------
// CSV

/// FNV-1a over the IEEE bit patterns; stable across runs and builds.
inline std::string weights_digest(const std::vector<double>& w) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double x : w) {
    std::uint64_t bits = 0;
    std::memcpy(&bits, &x, sizeof bits);
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

inline void write_sweep_csv(std::ostream& os, const SweepReport& r) {
  os << "index,n,delta,sampler,weights_digest,samuels,feige,margin";
  for (const char* label : kChainLabels) os << ",chain_" << label;
  os << '\n';
  for (const auto& rec : r.records) {
    os << rec.index << ',' << rec.weights.size() << ',' << format_number(rec.delta) << ','
       << sampler_name(rec.sampler) << ',' << weights_digest(rec.weights) << ',' << format_number(rec.bounds.samuels)
       << ',' << format_number(rec.bounds.feige) << ',' << format_number(rec.bounds.implication_margin);
    for (double m : rec.chain_margins) os << ',' << format_number(m);
    os << '\n';
  }
}

inline void write_bounds_csv(std::ostream& os, const BoundReport& r) {
  os << "index,term,is_argmin,samuels,feige,margin\n";
  for (std::size_t k = 0; k < r.per_index_terms.size(); ++k) {
    os << k + 1 << ',' << format_number(r.per_index_terms[k]) << ',' << (k + 1 == r.argmin_index ? 1 : 0) << ','
       << format_number(r.samuels) << ',' << format_number(r.feige) << ',' << format_number(r.implication_margin)
       << '\n';
  }
}

inline void write_chain_csv(std::ostream& os, const ChainReport& r) {
  os << "step,label,lhs,rhs,margin\n";
  for (std::size_t k = 0; k < r.steps.size(); ++k) {
    const auto& s = r.steps[k];
    os << k + 1 << ',' << s.label << ',' << format_number(s.lhs) << ',' << format_number(s.rhs) << ','
       << format_number(s.margin) << '\n';
  }
}

inline void write_lemmas_csv(std::ostream& os, const LemmaReport& r) {
  os << "name,worst,relation,bound,points,passed\n";
  for (const auto& c : r.checks) {
    os << c.name << ',' << format_number(c.value) << ',' << relation_symbol(c.relation) << ','
       << format_number(c.bound) << ',' << c.points << ',' << (c.passed ? 1 : 0) << '\n';
  }
}

inline void write_search_csv(std::ostream& os, const SearchReport& r) {
  os << "restart,kind,index,start_value,best_value,evals,converged,samuels\n";
  for (std::size_t k = 0; k < r.restarts.size(); ++k) {
    const auto& s = r.restarts[k];
    os << k << ',' << s.kind << ',' << s.index << ',' << format_number(s.start_value) << ','
       << format_number(s.best_value) << ',' << s.evals << ',' << (s.converged ? 1 : 0) << ','
       << format_number(r.samuels) << '\n';
  }
}

}  // namespace smalldev
