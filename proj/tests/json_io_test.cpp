#include <smalldev/json_io.hpp>

#include <gtest/gtest.h>

namespace smalldev {
namespace {

// Random valid instance: each variable has 1-3 atoms rescaled to mean one.
template <Scalar Num>
Instance<Num> random_instance(Engine& eng) {
  const std::size_t n = 1 + uniform_int(eng, 0, 5);
  std::vector<Num> raw;
  for (std::size_t k = 0; k < n; ++k) {
    if constexpr (is_exact<Num>()) {
      raw.push_back(Rational(static_cast<long long>(uniform_int(eng, 1, 30))));
    } else {
      raw.push_back(uniform(eng, 0.01, 3.0));
    }
  }
  auto w = make_weight_vector(raw, true);
  std::vector<DiscreteVar<Num>> vars;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t atoms = 1 + uniform_int(eng, 0, 2);
    if (atoms == 1) {
      vars.push_back(DiscreteVar<Num>::constant_one());
      continue;
    }
    std::vector<Num> values, probs;
    Num mass(0), mean(0);
    for (std::size_t a = 0; a < atoms; ++a) {
      const long long v = static_cast<long long>(a * 7 + uniform_int(eng, 0, 6));
      const long long p = static_cast<long long>(uniform_int(eng, 1, 9));
      values.push_back(Num(v) + Num(1));
      probs.push_back(Num(p));
      mass += Num(p);
    }
    for (std::size_t a = 0; a < atoms; ++a) {
      probs[a] /= mass;
      mean += values[a] * probs[a];
    }
    std::vector<Atom<Num>> list;
    for (std::size_t a = 0; a < atoms; ++a) list.push_back({values[a] / mean, probs[a]});
    vars.push_back(DiscreteVar<Num>::unchecked(std::move(list)));
  }
  return make_instance(std::move(w), std::move(vars));
}

TEST(JsonIoTest, RationalRoundTripIsIdentical) {
  Engine eng = make_engine(11);
  for (int rep = 0; rep < 50; ++rep) {
    const auto inst = random_instance<Rational>(eng);
    const json j = json::parse(to_json(inst).dump());
    EXPECT_EQ(j["mode"], "rational");
    EXPECT_TRUE(j["weights"][0].is_string());
    const auto back = instance_from_json<Rational>(j);
    EXPECT_EQ(back, inst);
    EXPECT_TRUE(validate_instance(back).empty());
  }
}

TEST(JsonIoTest, FloatRoundTripWithinTolerance) {
  Engine eng = make_engine(12);
  for (int rep = 0; rep < 50; ++rep) {
    const auto inst = random_instance<double>(eng);
    const auto any = any_instance_from_json(json::parse(to_json(inst).dump()));
    ASSERT_TRUE(std::holds_alternative<Instance<double>>(any));
    const auto& back = std::get<Instance<double>>(any);
    ASSERT_EQ(back.size(), inst.size());
    for (std::size_t k = 0; k < inst.size(); ++k) {
      EXPECT_NEAR(back.weights()[k], inst.weights()[k], 1e-15);
      ASSERT_EQ(back.vars()[k].size(), inst.vars()[k].size());
      for (std::size_t a = 0; a < inst.vars()[k].size(); ++a) {
        EXPECT_NEAR(back.vars()[k].atoms()[a].value, inst.vars()[k].atoms()[a].value, 1e-15);
        EXPECT_NEAR(back.vars()[k].atoms()[a].prob, inst.vars()[k].atoms()[a].prob, 1e-15);
      }
    }
  }
}

TEST(JsonIoTest, RationalModeAcceptsDecimalNumbers) {
  const json j = json::parse(R"({"mode":"rational","weights":[0.6,0.4],"vars":[[{"value":1,"prob":1}],[{"value":"1","prob":"1/1"}]]})");
  const auto inst = instance_from_json<Rational>(j);
  EXPECT_EQ(inst.weights()[0], Rational(3, 5));
  EXPECT_TRUE(validate_instance(inst).empty());
}

TEST(JsonIoTest, RejectsMalformedSchema) {
  EXPECT_THROW(instance_from_json<double>(json::parse(R"({"weights":[1]})")), InputError);
  EXPECT_THROW(instance_from_json<double>(json::parse(R"({"weights":[1],"vars":[[{"value":1}]]})")), InputError);
  EXPECT_THROW(any_instance_from_json(json::parse(R"({"mode":"decimal","weights":[1],"vars":[]})")), InputError);
}

TEST(JsonIoTest, WeightsDigestIsStable) {
  EXPECT_EQ(weights_digest({0.5, 0.5}), weights_digest({0.5, 0.5}));
  EXPECT_NE(weights_digest({0.5, 0.5}), weights_digest({0.6, 0.4}));
  EXPECT_EQ(weights_digest({}).size(), 16u);
}

}  // namespace
}  // namespace smalldev
