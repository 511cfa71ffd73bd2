#include <doctest.h>

#include <random>

#include "fano64/errors.hpp"
#include "fano64/rational.hpp"

using fano64::Integer;
using fano64::Rational;

TEST_CASE("lowest terms with positive denominator") {
  Rational r(Integer(6), Integer(-8));
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(r.str() == "-3/4");
  CHECK(Rational(Integer(10), Integer(5)).str() == "2");
  CHECK(Rational(Integer(0), Integer(-7)).den() == 1);
}

TEST_CASE("zero denominator and division by zero") {
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), fano64::UsageError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), fano64::DomainError);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(2)).to_integer(), fano64::DomainError);
}

TEST_CASE("arithmetic") {
  const Rational a(Integer(1), Integer(2));
  const Rational b(Integer(1), Integer(3));
  CHECK(a + b == Rational(Integer(5), Integer(6)));
  CHECK(a - b == Rational(Integer(1), Integer(6)));
  CHECK(a * b == Rational(Integer(1), Integer(6)));
  CHECK(a / b == Rational(Integer(3), Integer(2)));
  CHECK(-a < b);
  CHECK(a > b);
  CHECK((Rational(Integer(-5), Integer(4)) + Rational(Integer(5), Integer(4))).is_zero());
}

TEST_CASE("floor and ceil") {
  CHECK(fano64::floor(Rational(Integer(-5), Integer(4))) == -2);
  CHECK(fano64::ceil(Rational(Integer(-5), Integer(4))) == -1);
  CHECK(fano64::floor(Rational(Integer(7), Integer(2))) == 3);
  CHECK(fano64::ceil(Rational(3)) == 3);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("-9/4") == Rational(Integer(-9), Integer(4)));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("4/-8") == Rational(Integer(-1), Integer(2)));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("1.5"));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("x/2"));
  CHECK(fano64::parse_integer("-17") == -17);
  CHECK_THROWS_AS(fano64::parse_integer("17a"), fano64::UsageError);
}

TEST_CASE("str/parse round trip over random rationals") {
  std::mt19937_64 rng(20261017);
  std::uniform_int_distribution<long long> num(-1'000'000'000'000LL, 1'000'000'000'000LL);
  std::uniform_int_distribution<long long> den(1, 1'000'000'000LL);
  for (int i = 0; i < 2000; ++i) {
    const Rational r(Integer(num(rng)), Integer(den(rng)) * (i % 2 ? 1 : -1));
    CHECK(Rational::parse(r.str()) == r);
    CHECK(fano64::gcd(r.num(), r.den()) == 1);
    CHECK(r.den() > 0);
  }
}

TEST_CASE("big integers stay exact") {
  Integer big = 1;
  for (int i = 0; i < 40; ++i) big *= 1'000'003;
  const Rational r(big + 1, big);
  CHECK(r - 1 == Rational(Integer(1), big));
  CHECK(Rational::parse(r.str()) == r);
}
