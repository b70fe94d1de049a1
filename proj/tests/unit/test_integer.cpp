#include <vector>

#include "doctest.h"
#include "k3corr/integer.hpp"
#include "test_support.hpp"

using k3corr::Int;
using k3corr::errc;
using k3corr::testing::thrown_code;

TEST_CASE("mod_floor lands in [0, m)") {
  CHECK(k3corr::mod_floor(7, 5) == 2);
  CHECK(k3corr::mod_floor(-7, 5) == 3);
  CHECK(k3corr::mod_floor(0, 5) == 0);
  CHECK(k3corr::mod_floor(-10, 5) == 0);
}

TEST_CASE("gcd3 is nonnegative and associative with zeros") {
  CHECK(k3corr::gcd3(12, 18, 30) == 6);
  CHECK(k3corr::gcd3(0, 0, 7) == 7);
  CHECK(k3corr::gcd3(-4, 6, 0) == 2);
}

TEST_CASE("invmod inverts units and rejects non-units") {
  CHECK(k3corr::invmod(3, 10) == 7);
  CHECK(k3corr::invmod(1, 8) == 1);
  CHECK(k3corr::invmod(5, 24) == 5);
  CHECK(k3corr::invmod(42, 1) == 0);
  CHECK(thrown_code([] { k3corr::invmod(2, 4); }) == errc::internal_error);
}

TEST_CASE("square roots") {
  CHECK(k3corr::isqrt(16) == 4);
  CHECK(k3corr::isqrt(17) == 4);
  CHECK(k3corr::isqrt(0) == 0);
  CHECK(k3corr::is_perfect_square(49));
  CHECK(k3corr::is_perfect_square(0));
  CHECK(k3corr::is_perfect_square(1));
  CHECK(!k3corr::is_perfect_square(48));
  CHECK(!k3corr::is_perfect_square(-4));
  CHECK(k3corr::sqrt_exact(144) == Int(12));
  CHECK(!k3corr::sqrt_exact(2).has_value());
  CHECK(!k3corr::sqrt_exact(-9).has_value());
}

TEST_CASE("divide_exact enforces exactness with the caller's code") {
  CHECK(k3corr::divide_exact(12, 4) == 3);
  CHECK(k3corr::divide_exact(-12, 4) == -3);
  CHECK(thrown_code([] { k3corr::divide_exact(13, 4, errc::invalid_vector); }) ==
        errc::invalid_vector);
  CHECK(thrown_code([] { k3corr::divide_exact(1, 0, errc::invalid_vector); }) ==
        errc::invalid_vector);
}

TEST_CASE("factorization helpers") {
  const auto f = k3corr::factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0].p == 2);
  CHECK(f[0].e == 3);
  CHECK(f[1].p == 3);
  CHECK(f[1].e == 2);
  CHECK(f[2].p == 5);
  CHECK(f[2].e == 1);
  CHECK(k3corr::factorize(1).empty());

  CHECK(k3corr::prime_divisors(360) == std::vector<Int>{2, 3, 5});
  CHECK(k3corr::square_prime_divisors(360) == std::vector<Int>{2, 3});
  CHECK(k3corr::square_prime_divisors(12) == std::vector<Int>{2});
  CHECK(k3corr::square_prime_divisors(30).empty());
  CHECK(k3corr::divisors(12) == std::vector<Int>{1, 2, 3, 4, 6, 12});
  CHECK(k3corr::divisors(1) == std::vector<Int>{1});
}

TEST_CASE("crt handles coprime and shared moduli") {
  auto r = k3corr::crt(2, 3, 3, 5);
  REQUIRE(r.has_value());
  CHECK(*r == 8);

  r = k3corr::crt(1, 4, 3, 6);
  REQUIRE(r.has_value());
  CHECK(*r == 9);

  CHECK(!k3corr::crt(1, 4, 2, 6).has_value());
}

TEST_CASE("decimal rendering") {
  CHECK(k3corr::to_decimal(Int(-42)) == "-42");
  CHECK(k3corr::to_decimal(Int(0)) == "0");
}
