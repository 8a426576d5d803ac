#include <random>
#include <stdexcept>

#include <doctest.h>

#include "schottky/rational.hpp"
#include "support/random.hpp"

using schottky::Rational;

TEST_SUITE("rational") {

TEST_CASE("canonical form after construction and arithmetic") {
  const Rational r(6, -4);
  CHECK(r.numerator() == "-3");
  CHECK(r.denominator() == "2");
  CHECK((Rational(1, 3) + Rational(1, 6)).to_string() == "1/2");
  CHECK((Rational(2, 3) * Rational(3, 2)).to_string() == "1");
  CHECK(Rational(0, 5).to_string() == "0");
}

TEST_CASE("parse accepts p and p/q and rejects junk") {
  CHECK(Rational::parse("24") == Rational(24));
  CHECK(Rational::parse("-57/20") == Rational(-57, 20));
  CHECK(Rational::parse(" 6/4 ").to_string() == "3/2");
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
}

TEST_CASE("exact ordering distinguishes values floats cannot") {
  const Rational big = Rational::parse("100000000000000000001/100000000000000000000");
  CHECK(big > Rational(1));
  CHECK(big.to_double() == 1.0);
  CHECK(Rational(-1, 3) < Rational(-1, 4));
}

TEST_CASE("division by zero and reciprocal of zero throw") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("pow") {
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(pow(Rational(5), 0) == Rational(1));
}

TEST_CASE("property: serialization round-trips and field identities hold") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Rational a = testing_support::random_rational(rng, 1000, 1000);
    const Rational b = testing_support::random_rational(rng, 1000, 1000);
    CHECK(Rational::parse(a.to_string()) == a);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(((a <=> b) == 0) == (a == b));
  }
}

}  // TEST_SUITE
