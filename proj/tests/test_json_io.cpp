#include <doctest.h>

#include "lasgap/json_io.hpp"
#include "lasgap/sampling.hpp"
#include "lasgap/verify.hpp"

using namespace lasgap;
using nlohmann::json;

TEST_CASE("pseudo-distribution wire format") {
  PseudoDistribution p(4);
  p.set_weight(Subset::of({0, 2}), Rational(1, 3));
  p.set_weight(Subset(), Rational(-2, 3));
  const json j = to_json(p);
  CHECK(j["n"] == 4);
  REQUIRE(j["weights"].size() == 2);
  CHECK(j["weights"][0]["set"] == json::array());
  CHECK(j["weights"][0]["value"] == "-2/3");
  CHECK(j["weights"][1]["set"] == json::array({1, 3}));

  const auto back = distribution_from_json(j);
  CHECK(back.weights() == p.weights());
  CHECK_THROWS_AS(
      distribution_from_json(json::parse(R"({"n":2,"weights":[{"set":[5],"value":"1"}]})")),
      std::invalid_argument);
}

TEST_CASE("constraint wire format round trip") {
  LinearConstraint c;
  c.coefficients[0] = Rational(2);
  c.coefficients[3] = Rational(-1, 2);
  c.rhs = Rational(7, 3);
  const json j = to_json(c);
  CHECK(j["rhs"] == "7/3");
  const auto back = constraint_from_json(j);
  CHECK(back.coefficients == c.coefficients);
  CHECK(back.rhs == c.rhs);
}

TEST_CASE("instance wire format carries only the generators") {
  const GapInstance instance(3, Integer(10));
  const json j = to_json(instance);
  CHECK(j.size() == 2);
  CHECK(j["m"] == 3);
  CHECK(j["P"] == 10);
  const auto back = instance_from_json(j);
  CHECK(back.block_count() == 3);
  CHECK(back.base() == 10);
  CHECK(back.deadline(2) == instance.deadline(2));
  // String bases are accepted for big values.
  const auto big = instance_from_json(json::parse(R"({"m":2,"P":"1000000000000"})"));
  CHECK(big.base() == Integer("1000000000000"));
}

TEST_CASE("rational literals parse both spellings") {
  CHECK(parse_rational("1/137") == Rational(1, 137));
  CHECK(parse_rational("-5") == -5);
  CHECK(parse_rational("+3/9") == Rational(1, 3));
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("7/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("verification report schema") {
  LinearConstraint cover;
  cover.rhs = Rational(1);
  cover.coefficients[0] = Rational(1);
  const auto p = PseudoDistribution::point_mass(2, Subset::of({1}));  // violates the cover
  const auto report = verify_conditions(p, {cover}, 0, {});
  const json j = to_json(report);
  CHECK(j["condition1"]["pass"] == true);
  CHECK(j["condition1"]["residual"] == "0");
  CHECK(j["condition2"]["status"] == "PSD");
  REQUIRE(j["condition3"].size() == 1);
  CHECK(j["condition3"][0]["constraint"] == 0);
  CHECK(j["condition3"][0]["status"] == "NOT_PSD");
  CHECK(j["condition3"][0].contains("fast_path"));
  CHECK(j["condition3"][0].contains("witness"));
  CHECK(j["overall"] == "INFEASIBLE");

  // Serialization is deterministic for identical inputs.
  CHECK(to_json(report).dump(2) == j.dump(2));
}
