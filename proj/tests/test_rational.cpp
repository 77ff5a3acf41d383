#include "doctest.h"

#include <random>
#include <sstream>

#include "spectre/errors.hpp"
#include "spectre/rational.hpp"

using spectre::BigInt;
using spectre::ErrorKind;
using spectre::Rat;

TEST_CASE("rationals normalise to lowest terms") {
  const Rat r(BigInt(6), BigInt(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rat(4).to_string() == "4");
  CHECK(Rat(BigInt(10), BigInt(5)).is_integer());
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(Rat(BigInt(1), BigInt(0)), spectre::Error);
  CHECK_THROWS_AS(Rat(1) / Rat(0), spectre::Error);
}

TEST_CASE("parse round-trips to_string") {
  for (const char* text : {"0", "7", "-7", "5/6", "-13/12", "100000000000000000000/3"})
    CHECK(Rat::parse(text).to_string() == text);
  CHECK(Rat::parse("4/6") == Rat(BigInt(2), BigInt(3)));
  CHECK_THROWS(Rat::parse("1/0"));
  CHECK_THROWS(Rat::parse("abc"));
  CHECK_THROWS(Rat::parse(""));
}

TEST_CASE("floor, ceil and fractional part") {
  const Rat a(BigInt(-7), BigInt(3));
  CHECK(a.floor() == -3);
  CHECK(a.ceil() == -2);
  CHECK(a.frac() == Rat(BigInt(2), BigInt(3)));
  CHECK(Rat(5).frac() == Rat(0));
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  for (int i = 0; i < 500; ++i) {
    const Rat a(BigInt(num(rng)), BigInt(den(rng)));
    const Rat b(BigInt(num(rng)), BigInt(den(rng)));
    const Rat c(BigInt(num(rng)), BigInt(den(rng)));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rat(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(((a < b) != (b <= a)));
  }
}

TEST_CASE("integer helpers") {
  CHECK(spectre::gcd(BigInt(12), BigInt(18)) == 6);
  CHECK(spectre::lcm(BigInt(4), BigInt(6)) == 12);
  CHECK(spectre::isqrt(BigInt(0)) == 0);
  CHECK(spectre::isqrt(BigInt(99)) == 9);
  CHECK(spectre::isqrt(BigInt(100)) == 10);
  try {
    spectre::isqrt(BigInt(-1));
    FAIL("expected DomainError");
  } catch (const spectre::Error& e) {
    CHECK(e.kind() == ErrorKind::DomainError);
  }
}

TEST_CASE("stream output") {
  std::ostringstream os;
  os << Rat(BigInt(7), BigInt(12));
  CHECK(os.str() == "7/12");
}
