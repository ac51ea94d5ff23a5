#pragma once

// `smalldev` command-line front end. Exit codes: 0 success with every margin
// within tolerance, 1 a property violation, 2 usage or input errors.

#include <smalldev/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace smalldev::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

struct GlobalOptions {
  std::string mode = "float";
  bool mode_given = false;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  double tolerance = 1e-12;
};

struct WeightInput {
  std::string inline_list;
  std::string file;
  bool normalize = false;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("unreadable-file", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

template <Scalar Num>
WeightVector<Num> read_weights(const WeightInput& in) {
  std::vector<Num> raw;
  if (!in.file.empty()) {
    const std::string text = read_file(in.file);
    const json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_array()) {
      for (const auto& x : j) raw.push_back(number_from_json<Num>(x));
    } else {
      for (const auto& tok : split_list(text)) raw.push_back(parse_number<Num>(tok));
    }
  } else {
    for (const auto& tok : split_list(in.inline_list)) raw.push_back(parse_number<Num>(tok));
  }
  if (raw.empty()) throw InputError("empty-weights", "no weights given (use --weights or --weights-file)");
  return make_weight_vector(std::move(raw), in.normalize);
}

template <Scalar Num>
DeltaThreshold<Num> read_delta(const std::string& text) {
  if (text.empty()) throw InputError("missing-delta", "--delta is required");
  return make_delta(parse_number<Num>(text));
}

class Output {
 public:
  Output(const GlobalOptions& g, std::ostream& fallback) : fallback_(fallback) {
    if (!g.out.empty()) {
      file_.open(g.out);
      if (!file_) throw InputError("unwritable-file", "cannot open '" + g.out + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : fallback_; }

 private:
  std::ostream& fallback_;
  std::ofstream file_;
};

inline void emit_json(const GlobalOptions& g, std::ostream& out, const json& j) {
  Output o(g, out);
  o.stream() << j.dump(2) << '\n';
}

template <class CsvWriter>
void emit(const GlobalOptions& g, std::ostream& out, const json& j, CsvWriter&& csv) {
  if (g.format == "csv") {
    Output o(g, out);
    csv(o.stream());
  } else {
    emit_json(g, out, j);
  }
}

inline void require_json(const GlobalOptions& g, const std::string& command) {
  if (g.format != "json") throw InputError("unsupported-format", "'" + command + "' only emits json");
}

template <class F>
int with_mode(const GlobalOptions& g, F&& f) {
  if (parse_mode(g.mode) == NumericMode::rational) return f(Rational{});
  return f(double{});
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using namespace detail;
  CLI::App app{"Small-deviation bounds for weighted sums of unit-mean variables", "smalldev"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--mode", g.mode, "Numeric mode: rational or float")
      ->check(CLI::IsMember({"rational", "float"}))
      ->each([&](const std::string&) { g.mode_given = true; });
  app.add_option("--seed", g.seed, "Master seed");
  app.add_option("--out", g.out, "Write output to FILE instead of stdout");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tolerance", g.tolerance, "Margin tolerance");

  auto add_weights = [](CLI::App* cmd, WeightInput& w) {
    cmd->add_option("--weights", w.inline_list, "Comma-separated weights (decimals or p/q)");
    cmd->add_option("--weights-file", w.file, "File with weights (JSON array or list)");
    cmd->add_flag("--normalize", w.normalize, "Rescale weights to sum to one");
  };

  // bounds / chain
  WeightInput bw;
  std::string bdelta;
  auto* bounds = app.add_subcommand("bounds", "Samuels and Feige bounds and their margin");
  add_weights(bounds, bw);
  bounds->add_option("--delta", bdelta, "Slack delta > 0")->required();

  WeightInput cw;
  std::string cdelta;
  std::optional<std::size_t> cindex;
  auto* chain = app.add_subcommand("chain", "Step-by-step inequality chain from Samuels to Feige");
  add_weights(chain, cw);
  chain->add_option("--delta", cdelta, "Slack delta > 0")->required();
  chain->add_option("--index", cindex, "Force the prefix index (default: Samuels argmin)");

  // phi
  std::optional<double> pmu, prho, palpha, pt;
  auto* phicmd = app.add_subcommand("phi", "Evaluate Phi and its auxiliary functions");
  phicmd->add_option("--mu", pmu);
  phicmd->add_option("--rho", prho);
  phicmd->add_option("--alpha", palpha);
  phicmd->add_option("--t", pt);

  // lemmas
  double concavity_tol = 1e-8;
  auto* lemmas = app.add_subcommand("lemmas", "Grid checks of the Phi lemmas and derivative formulas");
  lemmas->add_option("--concavity-tolerance", concavity_tol);

  // exact / mc
  std::string einst, edelta;
  bool no_prune = false;
  std::uint64_t budget = kDefaultLeafBudget;
  auto* exact = app.add_subcommand("exact", "Exact P(Z < T) for an instance file");
  exact->add_option("--instance", einst, "Instance JSON file")->required();
  exact->add_option("--delta", edelta)->required();
  exact->add_flag("--no-prune", no_prune);
  exact->add_option("--budget", budget, "Leaf budget");

  std::string minst, mdelta;
  std::uint64_t samples = 1000000;
  unsigned threads = 0;
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of P(Z < T)");
  mc->add_option("--instance", minst)->required();
  mc->add_option("--delta", mdelta)->required();
  mc->add_option("--samples", samples);
  mc->add_option("--threads", threads);

  // extremal
  WeightInput xw;
  std::string xdelta;
  bool xfeige = false, xsamuels = false, xiid = false, xverify = false;
  std::optional<std::size_t> xindex;
  std::size_t xn = 0;
  auto* extremal = app.add_subcommand("extremal", "Build an equality-achieving instance");
  add_weights(extremal, xw);
  extremal->add_option("--delta", xdelta)->required();
  auto* kind_feige = extremal->add_flag("--feige", xfeige);
  auto* kind_samuels = extremal->add_flag("--samuels", xsamuels);
  auto* kind_iid = extremal->add_flag("--iid", xiid);
  kind_feige->excludes(kind_samuels)->excludes(kind_iid);
  kind_samuels->excludes(kind_iid);
  extremal->add_option("--index", xindex, "Prefix index for --samuels");
  extremal->add_option("--n", xn, "Size for --iid");
  extremal->add_flag("--verify", xverify, "Check the exact engine against the closed form");

  // sweep
  SweepConfig scfg;
  std::vector<std::string> sampler_names;
  bool scsv = false;
  auto* sweep = app.add_subcommand("sweep", "Random sweep of the implication margin and chain");
  sweep->add_option("--count", scfg.instance_count);
  sweep->add_option("--n-min", scfg.n_min);
  sweep->add_option("--n-max", scfg.n_max);
  sweep->add_option("--delta-min", scfg.delta_min);
  sweep->add_option("--delta-max", scfg.delta_max);
  sweep->add_option("--samplers", sampler_names)->delimiter(',');
  sweep->add_flag("--csv", scsv, "Same as --format csv");

  // search
  WeightInput sw;
  std::string sdelta;
  SearchConfig qcfg;
  auto* search = app.add_subcommand("search", "Nelder-Mead search over two-point distributions");
  add_weights(search, sw);
  search->add_option("--delta", sdelta)->required();
  search->add_option("--restarts", qcfg.restarts);
  search->add_option("--max-evals", qcfg.max_evals);
  search->add_option("--reflection", qcfg.coefficients.reflection);
  search->add_option("--expansion", qcfg.coefficients.expansion);
  search->add_option("--contraction", qcfg.coefficients.contraction);
  search->add_option("--shrink", qcfg.coefficients.shrink);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, ee;
    const int code = app.exit(e, o, ee);
    out << o.str();
    err << ee.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bounds) {
      return with_mode(g, [&]<class Num>(Num) {
        const auto w = read_weights<Num>(bw);
        const auto d = read_delta<Num>(bdelta);
        const BoundReport r = implication_margin(w, d);
        json j = to_json(r);
        j["mode"] = mode_name(mode_of<Num>());
        emit(g, out, j, [&](std::ostream& os) { write_bounds_csv(os, r); });
        return r.implication_margin < -g.tolerance ? kExitViolation : kExitOk;
      });
    }
    if (*chain) {
      return with_mode(g, [&]<class Num>(Num) {
        const auto w = read_weights<Num>(cw);
        const auto d = read_delta<Num>(cdelta);
        if (cindex && (*cindex < 1 || *cindex > w.size())) {
          throw InputError("index-range", "--index must lie in [1, n]");
        }
        const ChainReport r = proof_chain(w, d, cindex);
        emit(g, out, to_json(r), [&](std::ostream& os) { write_chain_csv(os, r); });
        bool ok = std::abs(r.steps[0].margin) <= 1e-10;
        for (std::size_t k = 1; k < r.steps.size(); ++k) ok = ok && r.steps[k].margin >= -g.tolerance;
        return ok ? kExitOk : kExitViolation;
      });
    }
    if (*phicmd) {
      require_json(g, "phi");
      json j = json::object();
      if (pmu && prho) {
        const phi::PhiPoint p{*pmu, *prho};
        j["phi"] = phi::phi(p);
        j["lemma3_margin"] = phi::check_lemma3(p);
        if (*pmu > 0.0 && *pmu < 1.0) {
          j["g_prime_lemma3"] = phi::g_prime_lemma3(p);
          j["partial2_phi"] = phi::partial2_phi(p);
        }
      }
      if (palpha && pt) {
        const phi::AlphaSlice a{*palpha};
        j["h_alpha"] = phi::h_alpha(a, *pt);
        if (*pt > 0.0 && *pt < 1.0) {
          j["eta"] = phi::eta(a, *pt);
          j["eta_prime"] = phi::eta_prime(a, *pt);
        }
      } else if (pt) {
        j["f_lemma1"] = phi::f_lemma1(*pt);
        j["lemma1_margin"] = phi::check_lemma1(*pt);
      }
      if (j.empty()) throw InputError("missing-point", "give --mu/--rho, --alpha/--t, or --t");
      emit_json(g, out, j);
      const bool bad = (j.contains("lemma3_margin") && j["lemma3_margin"].get<double>() < -g.tolerance) ||
                       (j.contains("lemma1_margin") && j["lemma1_margin"].get<double>() < -g.tolerance) ||
                       (j.contains("eta") && j["eta"].get<double>() >= 0.0);
      return bad ? kExitViolation : kExitOk;
    }
    if (*lemmas) {
      LemmaGrid grid;
      grid.margin_tolerance = g.tolerance;
      grid.concavity_tolerance = concavity_tol;
      const LemmaReport r = sweep_lemmas(grid);
      emit(g, out, to_json(r), [&](std::ostream& os) { write_lemmas_csv(os, r); });
      return r.passed() ? kExitOk : kExitViolation;
    }
    if (*exact || *mc) {
      require_json(g, exact->parsed() ? "exact" : "mc");
      const std::string path = *exact ? einst : minst;
      const json j = json::parse(read_file(path), nullptr, /*allow_exceptions=*/false);
      if (j.is_discarded()) throw InputError("bad-json", "'" + path + "' is not valid JSON");
      const AnyInstance any = any_instance_from_json(j);
      return std::visit(
          [&]<class Num>(const Instance<Num>& inst) {
            if (g.mode_given && parse_mode(g.mode) != mode_of<Num>()) {
              throw InputError("mode-mismatch", "instance is in " + std::string(mode_name(mode_of<Num>())) +
                                                    " mode but --mode is " + g.mode);
            }
            if (auto diags = validate_instance(inst); !diags.empty()) {
              throw InputError(diags.front().code, diags.front().message);
            }
            if (*exact) {
              const auto d = read_delta<Num>(edelta);
              const auto r = exact_prob_below(inst, d, EnumerationOptions{budget, !no_prune});
              emit_json(g, out, to_json(r));
            } else {
              const auto d = read_delta<Num>(mdelta);
              emit_json(g, out, to_json(monte_carlo_below(inst, d, samples, g.seed, threads)));
            }
            return kExitOk;
          },
          any);
    }
    if (*extremal) {
      require_json(g, "extremal");
      if (!xfeige && !xsamuels && !xiid) throw InputError("missing-kind", "choose --feige, --samuels, or --iid");
      return with_mode(g, [&]<class Num>(Num) {
        const auto d = read_delta<Num>(xdelta);
        json j = json::object();
        bool ok = true;
        if (xiid) {
          if (xn < 1) throw InputError("missing-n", "--iid needs --n >= 1");
          const auto inst = iid_extremal<Num>(xn, d);
          j["kind"] = "iid";
          j["instance"] = to_json(inst);
          if (xverify) {
            const auto prob = exact_prob_below(inst, d).prob_below;
            const Num closed = iid_closed_form<Num>(xn, d);
            ok = same_value(prob, closed);
            j["verification"] = {{"prob", number_to_json(prob)},
                                 {"closed_form", number_to_json(closed)},
                                 {"prob_float", to_double(prob)},
                                 {"limit", iid_limit(to_double(d.delta()))},
                                 {"equal", ok}};
          }
        } else {
          const auto w = read_weights<Num>(xw);
          if (xfeige) {
            const auto inst = feige_extremal(w, d);
            j["kind"] = "feige";
            j["instance"] = to_json(inst);
            if (xverify) {
              const auto prob = exact_prob_below(inst, d).prob_below;
              const Num closed = d.delta() / (d.delta() + w.max_weight());
              ok = same_value(prob, closed);
              j["verification"] = {{"prob", number_to_json(prob)}, {"closed_form", number_to_json(closed)}, {"equal", ok}};
            }
          } else {
            const std::size_t index = xindex.value_or(samuels_bound(w, d).argmin_index);
            const auto inst = samuels_extremal(w, d, index);
            j["kind"] = "samuels";
            j["index"] = index;
            j["instance"] = to_json(inst);
            if (xverify) {
              const auto report = verify_extremal_equality(w, d);
              ok = report.all_equal();
              j["verification"] = to_json(report);
            }
          }
        }
        emit_json(g, out, j);
        return ok ? kExitOk : kExitViolation;
      });
    }
    if (*sweep) {
      if (scsv) g.format = "csv";
      scfg.seed = g.seed;
      scfg.tolerance = g.tolerance;
      if (!sampler_names.empty()) {
        scfg.samplers.clear();
        for (const auto& s : sampler_names) scfg.samplers.push_back(parse_sampler(s));
      }
      scfg.keep_records = g.format == "csv";
      const SweepReport r = sweep_implication(scfg);
      emit(g, out, to_json(r), [&](std::ostream& os) { write_sweep_csv(os, r); });
      return r.passed() ? kExitOk : kExitViolation;
    }
    if (*search) {
      if (parse_mode(g.mode) != NumericMode::float64) {
        throw InputError("unsupported-mode", "search runs in float mode");
      }
      qcfg.seed = g.seed;
      const auto w = read_weights<double>(sw);
      const auto d = read_delta<double>(sdelta);
      const SearchReport r = search_counterexample(w, d, qcfg);
      emit(g, out, to_json(r), [&](std::ostream& os) { write_search_csv(os, r); });
      return r.gap_vs_samuels < -1e-9 ? kExitViolation : kExitOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: budget-exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: bad-json: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args);
}

}  // namespace smalldev::cli
