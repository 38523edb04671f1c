#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jordan/bound_value.hpp"
#include "jordan/error.hpp"

using namespace jordan;

TEST_CASE("normal form") {
  CHECK(BoundValue().str() == "1");
  CHECK(BoundValue(1).is_one());
  CHECK(BoundValue::power(7, 0).is_one());
  CHECK(BoundValue::power(0, 0).is_one());
  CHECK(BoundValue::power(1, 99).is_one());
  CHECK((BoundValue(14) * BoundValue::power(27, 324)).str() == "14 * 27^324");
  CHECK((BoundValue::power(3, 2) * BoundValue::power(3, 5)).str() == "3^7");
  CHECK(BoundValue::infinity().str() == "inf");
  CHECK_THROWS_AS(BoundValue(0), InvalidArgument);
  CHECK_THROWS_AS(BoundValue::power(0, 3), InvalidArgument);
  CHECK_THROWS_AS(BoundValue::power(2, -1), InvalidArgument);
}

TEST_CASE("exact equality across bases") {
  CHECK(BoundValue::power(4, 24) == BoundValue::power(2, 48));
  CHECK(BoundValue::power(16, 12) == BoundValue::power(4, 24));
  CHECK(BoundValue(72) == BoundValue::power(2, 3) * BoundValue::power(3, 2));
  CHECK(BoundValue::power(6, 10) == BoundValue::power(2, 10) * BoundValue::power(3, 10));
  CHECK(BoundValue::power(12, 5) * BoundValue(18) == BoundValue::power(2, 11) * BoundValue::power(3, 7));
  CHECK_FALSE(BoundValue::power(2, 10) == BoundValue::power(3, 6));
  CHECK_FALSE(BoundValue::power(6, 10) == BoundValue::power(2, 11) * BoundValue::power(3, 9));
  CHECK(BoundValue::power(256, 2816) == BoundValue::power(4, 11264));
}

TEST_CASE("ordering") {
  CHECK(BoundValue::power(2, 100) < BoundValue::power(3, 64));
  CHECK(BoundValue::power(3, 63) < BoundValue::power(2, 100));
  CHECK(BoundValue::infinity() > BoundValue::power(10, BigInt("1000000000000")));
  CHECK(BoundValue::infinity() == BoundValue::infinity());
  // Needs well over 64 bits to separate.
  BigInt big = jordan::pow(BigInt(10), 60);
  CHECK(BoundValue(big) < BoundValue(BigInt(big + 1)));
  CHECK(BoundValue::power(big, 1000) < BoundValue::power(BigInt(big + 1), 1000));
  CHECK(min(BoundValue(5), BoundValue(3)) == BoundValue(3));
}

TEST_CASE("ordering agrees with exact integers") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> base(1, 40), exp(0, 30), count(0, 3);
  auto random_value = [&] {
    BoundValue v;
    BigInt x = 1;
    for (int k = count(rng); k > 0; --k) {
      int b = base(rng), e = exp(rng);
      v = v * BoundValue::power(b, e);
      x *= jordan::pow(BigInt(b), static_cast<unsigned long>(e));
    }
    return std::pair(v, x);
  };
  for (int i = 0; i < 2000; ++i) {
    auto [a, x] = random_value();
    auto [b, y] = random_value();
    CHECK((a == b) == (x == y));
    CHECK((a < b) == (x < y));
    CHECK(a.expand() == x);
    CHECK((a * b).expand() == BigInt(x * y));
  }
}

TEST_CASE("log10 enclosures") {
  auto v = BoundValue::power(10, 5);
  auto iv = v.log10();
  CHECK(std::stod(iv.lo) <= 5.0);
  CHECK(std::stod(iv.hi) >= 5.0);
  auto w = BoundValue::power(2, BigInt("1000000000000000000000"));
  auto jw = w.log10(256);
  CHECK(jw.lo.substr(0, 10) == "3010299956");
  CHECK(std::stod(jw.lo) <= std::stod(jw.hi));
  CHECK(BoundValue::power(10, 99).min_digits() == 100);
  CHECK(BoundValue(9).min_digits() == 1);
}

TEST_CASE("expansion respects the digit cap") {
  Caps caps;
  caps.digit_cap = 50;
  CHECK(BoundValue::power(10, 49).expand(caps).has_value());
  CHECK_FALSE(BoundValue::power(10, 50).expand(caps).has_value());
  CHECK_FALSE(BoundValue::power(2, BigInt("100000000000000000000")).expand().has_value());
  CHECK_FALSE(BoundValue::infinity().expand().has_value());
}

TEST_CASE("conversions") {
  CHECK(BoundValue::from(ExtNat(12)) == BoundValue(12));
  CHECK(BoundValue::from(ExtNat::infinity()).is_infinite());
  CHECK((BoundValue::infinity() * BoundValue(3)).is_infinite());
  CHECK(BoundValue::power(6, 2).pow(3) == BoundValue::power(6, 6));
}
