#include <smalldev/bounds.hpp>
#include <smalldev/exact_prob.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace smalldev {
namespace {

using R = Rational;

Instance<R> feige_half_half() {
  const auto w = make_weight_vector<R>({R(1, 2), R(1, 2)});
  return make_instance(w, {make_discrete_var<R>({{R(0), R(1, 6)}, {R(6, 5), R(5, 6)}}), DiscreteVar<R>::constant_one()});
}

Instance<R> iid_two() {
  const auto w = make_weight_vector<R>({R(1, 2), R(1, 2)});
  const auto x = make_discrete_var<R>({{R(0), R(6, 11)}, {R(11, 5), R(5, 11)}});
  return make_instance(w, {x, x});
}

TEST(SupportSizeTest, Examples) {
  EXPECT_EQ(support_size(iid_two()), 4u);
  const auto w = make_weight_vector<double>({0.5, 0.5});
  EXPECT_EQ(support_size(Instance<double>::unchecked(w, {DiscreteVar<double>::constant_one(), DiscreteVar<double>::constant_one()})), 1u);
  const auto x = DiscreteVar<double>::unchecked({{0.0, 0.5}, {2.0, 0.5}});
  const auto w20 = make_weight_vector(std::vector<double>(20, 1.0), true);
  EXPECT_EQ(support_size(Instance<double>::unchecked(w20, std::vector<DiscreteVar<double>>(20, x))), 1048576u);
  const auto w70 = make_weight_vector(std::vector<double>(70, 1.0), true);
  EXPECT_EQ(support_size(Instance<double>::unchecked(w70, std::vector<DiscreteVar<double>>(70, x))), kSupportSaturated);
}

TEST(ExactProbTest, ConstantsAreBelowThreshold) {
  const auto w = make_weight_vector<R>({R(1, 3), R(2, 3)});
  const auto inst = make_instance(w, {DiscreteVar<R>::constant_one(), DiscreteVar<R>::constant_one()});
  const auto r = exact_prob_below(inst, make_delta(R(1, 100)));
  EXPECT_EQ(r.prob_below, R(1));
  EXPECT_EQ(r.atoms_at_threshold, R(0));
  EXPECT_EQ(r.enumerated_count, 1u);
}

TEST(ExactProbTest, FeigeExtremalIsExact) {
  const auto r = exact_prob_below(feige_half_half(), make_delta(R(1, 10)));
  EXPECT_EQ(r.prob_below, R(1, 6));
  EXPECT_EQ(r.atoms_at_threshold, R(5, 6));
  // Float mode snaps the atom at T into the threshold band.
  const auto f = exact_prob_below(convert_instance<double>(feige_half_half()), make_delta(0.1));
  EXPECT_NEAR(f.prob_below, 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(f.atoms_at_threshold, 5.0 / 6.0, 1e-15);
}

TEST(ExactProbTest, IidExtremalIsExact) {
  const auto r = exact_prob_below(iid_two(), make_delta(R(1, 10)));
  EXPECT_EQ(r.prob_below, R(36, 121));
  EXPECT_EQ(r.prob_below + r.atoms_at_threshold, R(36, 121) + R(60, 121));
  EXPECT_LE(r.prob_below + r.atoms_at_threshold, R(1));
}

TEST(ExactProbTest, BudgetAndShapeErrors) {
  EXPECT_THROW(exact_prob_below(iid_two(), make_delta(R(1, 10)), {3, true}), BudgetExceeded);
  const auto w = make_weight_vector<R>({R(1, 2), R(1, 2)});
  EXPECT_THROW(exact_prob_below(Instance<R>::unchecked(w, {DiscreteVar<R>::constant_one()}), make_delta(R(1))), InputError);
}

TEST(ExactProbTest, PruningCountsAndSoundness) {
  Engine eng = make_engine(21);
  for (int rep = 0; rep < 150; ++rep) {
    const auto inst = testing::random_rational_instance(eng, 7, 4);
    ASSERT_LE(support_size(inst), 4096u);
    const auto d = make_delta(R(static_cast<long long>(uniform_int(eng, 1, 40)), 40));
    const auto pruned = exact_prob_below(inst, d, {kDefaultLeafBudget, true});
    const auto full = exact_prob_below(inst, d, {kDefaultLeafBudget, false});
    EXPECT_EQ(pruned.prob_below, full.prob_below);
    EXPECT_EQ(pruned.atoms_at_threshold, full.atoms_at_threshold);
    EXPECT_EQ(full.enumerated_count, support_size(inst));
    EXPECT_EQ(full.pruned_count, 0u);
    EXPECT_LE(pruned.enumerated_count, full.enumerated_count);
    EXPECT_EQ(pruned.prob_below, testing::brute_force_below(inst, d.threshold()));

    const auto as_float = convert_instance<double>(inst);
    const auto fd = make_delta(to_double(d.delta()));
    EXPECT_EQ(exact_prob_below(as_float, fd, {kDefaultLeafBudget, true}).prob_below,
              exact_prob_below(as_float, fd, {kDefaultLeafBudget, false}).prob_below);
  }
}

TEST(ExactProbTest, RationalAndFloatModesAgreeAwayFromThreshold) {
  Engine eng = make_engine(22);
  int compared = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const auto inst = testing::random_rational_instance(eng, 6, 3);
    const auto d = make_delta(R(static_cast<long long>(uniform_int(eng, 1, 97)), 97));
    if (testing::min_distance_to_threshold(inst, d.threshold()) <= 1e-9) continue;
    ++compared;
    const double exact = to_double(exact_prob_below(inst, d).prob_below);
    const double flt = exact_prob_below(convert_instance<double>(inst), make_delta(to_double(d.delta()))).prob_below;
    EXPECT_NEAR(exact, flt, 1e-9);
  }
  EXPECT_GT(compared, 100);
}

TEST(ExactProbTest, ConjecturesHoldOnRandomInstances) {
  Engine eng = make_engine(23);
  for (int rep = 0; rep < 300; ++rep) {
    const auto inst = testing::random_float_instance(eng, 6, 3);
    const auto d = make_delta(std::exp(uniform(eng, std::log(1e-3), std::log(3.0))));
    const double p = exact_prob_below(inst, d).prob_below;
    EXPECT_GE(p, samuels_bound(inst.weights(), d).value - 1e-12);
    EXPECT_GE(p, feige_bound(inst.weights(), d) - 1e-12);
  }
}

TEST(MonteCarloTest, ConstantsGiveOneWithWilsonWidth) {
  const auto w = make_weight_vector<double>({0.5, 0.5});
  const auto inst = make_instance(w, {DiscreteVar<double>::constant_one(), DiscreteVar<double>::constant_one()});
  const auto r = monte_carlo_below(inst, make_delta(0.1), 1000, 5);
  EXPECT_EQ(r.estimate, 1.0);
  EXPECT_NEAR(r.half_width_95, 1.96 * 1.96 / (1000 + 1.96 * 1.96), 1e-15);
  EXPECT_GT(r.half_width_95, 0.0);
}

TEST(MonteCarloTest, IidExtremalEstimate) {
  const auto r = monte_carlo_below(iid_two(), make_delta(R(1, 10)), 1000000, 42);
  EXPECT_NEAR(r.estimate, 36.0 / 121.0, 0.0015);
  EXPECT_NEAR(r.half_width_95, 1.96 * std::sqrt(r.estimate * (1 - r.estimate) / 1e6), 1e-15);
  EXPECT_EQ(r.seed, 42u);
  EXPECT_EQ(r.samples, 1000000u);
}

TEST(MonteCarloTest, DeterministicAcrossRunsAndThreadCounts) {
  const auto inst = convert_instance<double>(iid_two());
  const auto d = make_delta(0.1);
  const auto a = monte_carlo_below(inst, d, 300000, 9, 1);
  const auto b = monte_carlo_below(inst, d, 300000, 9, 1);
  const auto c = monte_carlo_below(inst, d, 300000, 9, 4);
  EXPECT_EQ(a.below, b.below);
  EXPECT_EQ(a.below, c.below);
  EXPECT_NE(a.below, monte_carlo_below(inst, d, 300000, 10, 1).below);
  EXPECT_THROW(monte_carlo_below(inst, d, 50, 1), InputError);
}

}  // namespace
}  // namespace smalldev
