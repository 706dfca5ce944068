#include <random>

#include "doctest.h"
#include "lexraf/rational.hpp"

using lexraf::BigInt;
using lexraf::Error;
using lexraf::ErrorKind;
using lexraf::Rational;

TEST_SUITE_BEGIN("rational");

TEST_CASE("parse fractions and decimals exactly") {
  CHECK(Rational::parse("4/5") == Rational(4, 5));
  CHECK(Rational::parse("8/10") == Rational(4, 5));
  CHECK(Rational::parse("0.8") == Rational(4, 5));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("1") == Rational(1));
  CHECK(Rational::parse("-1.25") == Rational(-5, 4));
  CHECK(Rational::parse("0/7") == Rational(0));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
}

TEST_CASE("parse rejects inexact or malformed literals") {
  for (const char* bad : {"", "-", "1e3", "1.5e-2", " 1", "1 ", "1/0", "1/", "/2", "1.", ".",
                          "a/b", "1/-2", "0x10", "1/2/3", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), Error);
  }
  try {
    Rational::parse("1e3");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
}

TEST_CASE("lowest terms and sign normalization") {
  Rational r(BigInt(6), BigInt(-8));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 4);
  CHECK(Rational(BigInt(0), BigInt(-5)).denominator() == 1);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);
}

TEST_CASE("arithmetic and ordering") {
  CHECK(Rational(40) * Rational(1, 5) == Rational(8));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(3, 4) == Rational(-1, 4));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 5) > Rational(1, 10));
  CHECK(Rational(4, 5) < Rational(9, 10));
  CHECK((Rational(2, 4) <=> Rational(1, 2)) == std::strong_ordering::equal);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("to_string") {
  CHECK(Rational(4, 5).to_string() == "4/5");
  CHECK(Rational(8).to_string() == "8");
  CHECK(Rational(-1, 3).to_string() == "-1/3");
}

TEST_CASE("property: print then parse is the identity") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-1000000, 1000000);
  std::uniform_int_distribution<long long> den(1, 1000000);
  for (int i = 0; i < 2000; ++i) {
    Rational r(BigInt(num(rng)), BigInt(den(rng)));
    Rational back = Rational::parse(r.to_string());
    REQUIRE(back == r);
    REQUIRE(back.to_string() == r.to_string());
  }
}

TEST_CASE("property: ordering agrees with cross-multiplication") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> num(-50, 50);
  std::uniform_int_distribution<long long> den(1, 50);
  for (int i = 0; i < 2000; ++i) {
    long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Rational x{BigInt(a), BigInt(b)}, y{BigInt(c), BigInt(d)};
    REQUIRE((x < y) == (a * d < c * b));
    REQUIRE((x == y) == (a * d == c * b));
  }
}

TEST_SUITE_END();

TEST_CASE("leading zeros are decimal, not octal") {
  CHECK(Rational::parse("08/10") == Rational(4, 5));
  CHECK(Rational::parse("0.08") == Rational(2, 25));
  CHECK(Rational::parse("009") == Rational(9));
  CHECK(Rational::parse("0/07").is_zero());
}
