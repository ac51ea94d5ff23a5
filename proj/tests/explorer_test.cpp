#include <smalldev/explorer.hpp>

#include <gtest/gtest.h>

#include <set>

namespace smalldev {
namespace {

TEST(SamplerTest, NamesRoundTrip) {
  for (auto s : kAllSamplers) EXPECT_EQ(parse_sampler(sampler_name(s)), s);
  EXPECT_THROW(parse_sampler("uniform"), InputError);
}

TEST(SamplerTest, WeightsAreValidAndDeterministic) {
  for (auto s : kAllSamplers) {
    for (std::size_t n : {1u, 2u, 7u, 16u}) {
      const auto w = sample_weights(n, s, 77);
      EXPECT_EQ(w.size(), n);
      EXPECT_TRUE(weight_diagnostics(w).empty()) << sampler_name(s) << ' ' << n;
      EXPECT_EQ(w.weights(), sample_weights(n, s, 77).weights());
    }
  }
  EXPECT_NE(sample_weights(5, WeightSampler::dirichlet_uniform, 1).weights(),
            sample_weights(5, WeightSampler::dirichlet_uniform, 2).weights());
  EXPECT_GE(sample_weights(9, WeightSampler::one_dominant, 3).max_weight(), 0.5);
  EXPECT_THROW(sample_weights(0, WeightSampler::geometric_decay, 1), InputError);
}

TEST(SweepTest, SmallSweepPasses) {
  SweepConfig cfg;
  cfg.instance_count = 3000;
  cfg.seed = 4;
  cfg.keep_records = true;
  const auto r = sweep_implication(cfg);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.records.size(), 3000u);
  EXPECT_GE(r.worst_implication_margin, -1e-12);
  EXPECT_LE(r.worst_identity_error, 1e-10);
  std::uint64_t total = 0;
  for (const auto& b : r.histogram) total += b.count;
  EXPECT_EQ(total, 3000u);
  std::set<WeightSampler> seen;
  for (const auto& rec : r.records) {
    seen.insert(rec.sampler);
    EXPECT_GE(rec.weights.size(), 1u);
    EXPECT_LE(rec.weights.size(), 16u);
    EXPECT_GE(rec.delta, 1e-4);
    EXPECT_LE(rec.delta, 10.0);
  }
  EXPECT_EQ(seen.size(), 3u);
}

TEST(SweepTest, ReproducibleAndRecordsAreIndependentOfCount) {
  SweepConfig a;
  a.instance_count = 200;
  a.seed = 11;
  a.keep_records = true;
  SweepConfig b = a;
  b.instance_count = 50;
  const auto ra = sweep_implication(a);
  const auto rb = sweep_implication(b);
  for (std::size_t k = 0; k < 50; ++k) {
    EXPECT_EQ(ra.records[k].weights, rb.records[k].weights);
    EXPECT_EQ(ra.records[k].delta, rb.records[k].delta);
  }
  EXPECT_EQ(sweep_implication(a).worst_margin, ra.worst_margin);
}

TEST(SweepTest, ConfigValidation) {
  SweepConfig cfg;
  cfg.n_min = 5;
  cfg.n_max = 2;
  EXPECT_THROW(sweep_implication(cfg), InputError);
  cfg = {};
  cfg.delta_min = 0.0;
  EXPECT_THROW(sweep_implication(cfg), InputError);
  cfg = {};
  cfg.samplers.clear();
  EXPECT_THROW(sweep_implication(cfg), InputError);
}

TEST(GridSweepTest, DefaultGridPasses) {
  const auto r = sweep_lemmas();
  for (const auto& c : r.checks) {
    EXPECT_TRUE(c.passed) << c.name << " worst " << c.value;
    EXPECT_GT(c.points, 0u) << c.name;
  }
  EXPECT_TRUE(r.passed());
  ASSERT_NE(r.find("deriv-eta"), nullptr);
  EXPECT_GE(r.find("deriv-eta")->points, 1000u);
  EXPECT_GE(r.find("deriv-g-prime")->points, 1000u);
  EXPECT_GE(r.find("deriv-partial2-phi")->points, 1000u);
  EXPECT_EQ(r.find("no-such-check"), nullptr);
}

TEST(GridSweepTest, ImpossibleToleranceFails) {
  LemmaGrid g;
  g.concavity_tolerance = -1e6;
  const auto r = sweep_lemmas(g);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.find("lemma4-second-difference")->passed);
}

TEST(TwoPointTest, TransformRoundTrip) {
  const TwoPointTransform t(3, 40.0);
  const TwoPointParams p{{0.25, 0.5, 0.9}, {1.5, 20.0, 39.0}};
  const auto q = t.decode(t.encode(p));
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_NEAR(q.low[k], p.low[k], 1e-12);
    EXPECT_NEAR(q.high[k], p.high[k], 1e-10);
  }
  const auto far = t.decode({1e9, -1e9, 0.0, 1e9, -1e9, 0.0});
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_GT(far.low[k], 0.0);
    EXPECT_LT(far.low[k], 1.0);
    EXPECT_GT(far.high[k], 1.0);
    EXPECT_LT(far.high[k], 40.0);
  }
}

TEST(TwoPointTest, InstancesHaveUnitMean) {
  const auto w = make_weight_vector<double>({0.5, 0.3, 0.2});
  const auto inst = two_point_instance(w, {{0.2, 1.0, 0.0}, {3.0, 2.0, 5.0}});
  EXPECT_TRUE(validate_instance(inst).empty());
  EXPECT_EQ(inst.vars()[1].size(), 1u);
  const auto ext = two_point_instance(w, extremal_params(w, 0.1, 2));
  EXPECT_NEAR(exact_prob_below(ext, make_delta(0.1)).prob_below, samuels_term(w, make_delta(0.1), 2), 1e-15);
}

TEST(SearchTest, FindsNothingBelowSamuels) {
  const auto w = make_weight_vector<double>({0.5, 0.3, 0.2});
  const auto d = make_delta(0.2);
  SearchConfig cfg;
  cfg.restarts = 12;
  cfg.seed = 3;
  const auto r = search_counterexample(w, d, cfg);
  EXPECT_EQ(r.restarts.size(), 12u);
  EXPECT_EQ(r.restarts[0].kind, "warm");
  EXPECT_EQ(r.restarts[5].kind, "random");
  EXPECT_GE(r.best_prob, r.samuels - 1e-9);
  EXPECT_LT(r.gap_vs_samuels, 1e-6);
  ASSERT_TRUE(r.best_instance.has_value());
  EXPECT_NEAR(exact_prob_below(*r.best_instance, d).prob_below, r.best_prob, 1e-15);
  // Same seed, same trajectory.
  EXPECT_EQ(search_counterexample(w, d, cfg).best_prob, r.best_prob);
}

TEST(SearchTest, RejectsBadCoefficients) {
  SearchConfig cfg;
  cfg.coefficients.contraction = 1.5;
  EXPECT_THROW(search_counterexample(make_weight_vector<double>({1.0}), make_delta(0.1), cfg), InputError);
}

}  // namespace
}  // namespace smalldev
