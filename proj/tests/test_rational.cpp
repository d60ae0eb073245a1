#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "sumprodlab/rational.hpp"
#include "sumprodlab/rng.hpp"

using sumprodlab::BigInt;
using sumprodlab::ExactScalar;

TEST_CASE("canonical form") {
  CHECK(ExactScalar::parse("2/4").str() == "1/2");
  CHECK(ExactScalar::parse("-3/-6").str() == "1/2");
  CHECK(ExactScalar::parse("3/-6").str() == "-1/2");
  CHECK(ExactScalar::parse("0/5").str() == "0");
  CHECK(ExactScalar::parse("-0").str() == "0");
  CHECK(ExactScalar::parse("7").str() == "7");
  CHECK(ExactScalar::parse("+7/2").str() == "7/2");
  CHECK(ExactScalar::parse("2/4") == ExactScalar::parse("1/2"));
}

TEST_CASE("malformed literals rejected") {
  CHECK_THROWS_AS(ExactScalar::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(ExactScalar::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(ExactScalar::parse("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(ExactScalar::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(ExactScalar::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(ExactScalar::parse("/2"), std::invalid_argument);
  CHECK_THROWS_AS(ExactScalar(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("ordering is the rational order") {
  CHECK(ExactScalar::parse("1/3") < ExactScalar::parse("1/2"));
  CHECK(ExactScalar::parse("-1/2") < ExactScalar::parse("-1/3"));
  CHECK(ExactScalar(-2) < ExactScalar(1));
  CHECK(ExactScalar::parse("7/3") > ExactScalar(2));
}

TEST_CASE("arithmetic") {
  const ExactScalar half = ExactScalar::parse("1/2");
  const ExactScalar third = ExactScalar::parse("1/3");
  CHECK((half + third).str() == "5/6");
  CHECK((half - third).str() == "1/6");
  CHECK((half * third).str() == "1/6");
  CHECK((half / third).str() == "3/2");
  CHECK((-half).str() == "-1/2");
  CHECK(half.reciprocal().str() == "2");
  CHECK_THROWS_AS(half / ExactScalar(0), std::domain_error);
  CHECK_THROWS_AS(ExactScalar(0).reciprocal(), std::domain_error);
}

TEST_CASE("int64 view") {
  CHECK(ExactScalar(42).as_int64() == 42);
  CHECK(ExactScalar(-7).as_int64() == -7);
  CHECK(!ExactScalar::parse("1/2").as_int64().has_value());
  // 2^70 is integral but does not fit.
  BigInt big(1);
  mpz_mul_2exp(big.get_mpz_t(), big.get_mpz_t(), 70);
  CHECK(!ExactScalar(big).as_int64().has_value());
}

TEST_CASE("ceiling") {
  CHECK(sumprodlab::ceil_of(ExactScalar::parse("7/2")) == 4);
  CHECK(sumprodlab::ceil_of(ExactScalar::parse("-7/2")) == -3);
  CHECK(sumprodlab::ceil_of(ExactScalar(3)) == 3);
  CHECK(sumprodlab::ceil_of(ExactScalar::parse("16/81")) == 1);
}

TEST_CASE("parse/format round trip on random rationals") {
  sumprodlab::Xoshiro256StarStar rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const long num = static_cast<long>(rng.uniform_below(2000001)) - 1000000;
    const long den = static_cast<long>(rng.uniform_below(999)) + 1;
    const ExactScalar x(BigInt(num), BigInt(den));
    CHECK(ExactScalar::parse(x.str()) == x);
  }
}
