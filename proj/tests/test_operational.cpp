#include <contextlab/operational.hpp>

#include <doctest.h>

using namespace contextlab;

namespace {

OperationalTable sample() {
  OperationalTable t({"P1", "P2", "P3"}, {{"M", {"0", "1"}}, {"N", {"0", "1"}}});
  const Rational h(1, 2);
  t.set("P1", "M", {h, h});
  t.set("P1", "N", {Rational(1), Rational(0)});
  t.set("P2", "M", {h, h});
  t.set("P2", "N", {Rational(1), Rational(0)});
  t.set("P3", "M", {Rational(1), Rational(0)});
  t.set("P3", "N", {Rational(1), Rational(0)});
  return t;
}

}  // namespace

TEST_CASE("preparation equivalence") {
  auto t = sample();
  CHECK(preparations_equivalent(t, "P1", "P2"));
  CHECK(preparations_equivalent(t, "P1", "P1"));
  CHECK_FALSE(preparations_equivalent(t, "P1", "P3"));
  CHECK(t.probability("1", "M", "P3") == 0);
}

TEST_CASE("measurement event equivalence") {
  auto t = sample();
  // N=0 is certain under every preparation; M=0 is not.
  CHECK(measurement_events_equivalent(t, {"0", "N"}, {"0", "N"}));
  CHECK_FALSE(measurement_events_equivalent(t, {"0", "M"}, {"0", "N"}));
  CHECK_FALSE(measurement_events_equivalent(t, {"0", "M"}, {"1", "M"}));

  OperationalTable u({"P"}, {{"M", {"a", "b"}}, {"N", {"x", "y"}}});
  u.set("P", "M", {Rational(1, 3), Rational(2, 3)});
  u.set("P", "N", {Rational(2, 3), Rational(1, 3)});
  CHECK(measurement_events_equivalent(u, {"a", "M"}, {"y", "N"}));
}

TEST_CASE("invalid rows are rejected") {
  OperationalTable t({"P"}, {{"M", {"0", "1"}}});
  CHECK_THROWS_AS(t.set("P", "M", {Rational(1, 2), Rational(1, 4)}), Error);
  CHECK_THROWS_AS(t.set("P", "M", {Rational(1)}), Error);
  CHECK_THROWS_AS(t.set("Q", "M", {Rational(1), Rational(0)}), Error);
  CHECK_THROWS_AS(t.set("P", "X", {Rational(1), Rational(0)}), Error);
  CHECK_THROWS_AS(t.probability("0", "M", "P"), Error);
  CHECK_THROWS_AS(t.set("P", "M", {Rational(3, 2), Rational(-1, 2)}), Error);
}
