#include "doctest.h"
#include "k3corr/lattice.hpp"
#include "test_support.hpp"

using k3corr::Int;
using k3corr::LatticeVector;
using k3corr::errc;
using k3corr::testing::thrown_code;

TEST_CASE("mukai_split factors out the gcd") {
  const auto sh = k3corr::mukai_split(6, 10);
  CHECK(sh.c == 2);
  CHECK(sh.a == 3);
  CHECK(sh.b == 5);
  const auto sw = k3corr::swap_series(sh);
  CHECK(sw.a == 5);
  CHECK(sw.b == 3);
  CHECK(sw.c == 2);
  CHECK(sw.r == 10);
  CHECK(sw.s == 6);
}

TEST_CASE("mukai_m solves the paired congruences") {
  CHECK(k3corr::mukai_m(1, 1) == 1);
  CHECK(k3corr::mukai_m(2, 3) == 7);
  CHECK(k3corr::mukai_m(3, 2) == 5);
  CHECK(k3corr::mukai_m(1, 7) == 1);
  CHECK(k3corr::mukai_m(7, 1) == 13);
  for (long a = 1; a <= 8; ++a)
    for (long b = 1; b <= 8; ++b) {
      if (k3corr::gcd3(a, b, 0) != 1) continue;
      const Int m = k3corr::mukai_m(a, b);
      CHECK(k3corr::mod_floor(m + 1, 2 * a) == 0);
      CHECK(k3corr::mod_floor(m - 1, 2 * b) == 0);
      CHECK(m >= 0);
      CHECK(m < 2 * a * b);
    }
}

TEST_CASE("canonical_orbit_rep fixes the leading sign") {
  CHECK(k3corr::canonical_orbit_rep({-3, 1}) == LatticeVector{3, -1});
  CHECK(k3corr::canonical_orbit_rep({3, -1}) == LatticeVector{3, -1});
  CHECK(k3corr::canonical_orbit_rep({0, -2}) == LatticeVector{0, 2});
  CHECK(k3corr::canonical_orbit_rep({0, 0}) == LatticeVector{0, 0});
}

TEST_CASE("make_x_lattice validates in declared order") {
  const auto L = k3corr::make_x_lattice(2, 2, 17, 1);
  CHECK(L.two_rs == 8);
  CHECK(L.mu == 1);
  CHECK(L.mu_bar() == std::pair<Int, Int>{1, 7});
  CHECK(L.shape.c == 2);

  CHECK(thrown_code([] { k3corr::make_x_lattice(0, 2, 17, 1); }) == errc::invalid_input);
  CHECK(thrown_code([] { k3corr::make_x_lattice(2, 2, 17, 2); }) == errc::invalid_mu);
  CHECK(thrown_code([] { k3corr::make_x_lattice(2, 2, 16, 1); }) == errc::invalid_d);
  CHECK(thrown_code([] { k3corr::make_x_lattice(2, 2, -7, 1); }) == errc::invalid_d);
  CHECK(thrown_code([] { k3corr::make_x_lattice(2, 2, 5, 1); }) ==
        errc::incompatible_invariants);
}

TEST_CASE("membership and products on the degree-8 lattice") {
  const auto L = k3corr::make_x_lattice(2, 2, 17, 1);
  CHECK(k3corr::is_member(L, {21, 5}));
  CHECK(k3corr::is_member(L, {8, 0}));
  CHECK(!k3corr::is_member(L, {21, -5}));
  CHECK(!k3corr::is_member(L, {1, 0}));

  CHECK(k3corr::vector_square(L, {8, 0}) == 8);
  CHECK(k3corr::vector_square(L, {21, 5}) == 2);
  CHECK(k3corr::inner_product(L, {8, 0}, {21, 5}) == 21);
  CHECK(thrown_code([&] { k3corr::vector_square(L, {1, 0}); }) == errc::invalid_vector);
}

TEST_CASE("inner product is bilinear and symmetric") {
  const auto L = k3corr::make_x_lattice(2, 3, 25, 1);
  const LatticeVector u{12, 0};
  const LatticeVector v{1, 1};
  const LatticeVector w{26, 2};
  const LatticeVector uv{u.x + v.x, u.y + v.y};
  CHECK(k3corr::inner_product(L, u, v) == k3corr::inner_product(L, v, u));
  CHECK(k3corr::inner_product(L, uv, w) ==
        k3corr::inner_product(L, u, w) + k3corr::inner_product(L, v, w));
}

TEST_CASE("Gram matrix of the standard basis has determinant -d") {
  for (long d : {17, 33, 49, 65}) {
    const auto L = k3corr::make_x_lattice(2, 2, d, 1);
    const LatticeVector h{L.two_rs, 0};
    const LatticeVector g{L.mu, 1};
    const Int det = k3corr::vector_square(L, h) * k3corr::vector_square(L, g) -
                    k3corr::inner_product(L, h, g) * k3corr::inner_product(L, h, g);
    CHECK(det == -Int(d));
  }
}

TEST_CASE("negating mu reflects the y coordinate") {
  const auto L = k3corr::make_x_lattice(2, 3, 25, 7);
  const auto Lneg = k3corr::make_x_lattice(2, 3, 25, L.two_rs - 7);
  for (long y = -4; y <= 4; ++y)
    for (long x = -30; x <= 30; ++x) {
      const bool in = k3corr::is_member(L, {x, y});
      CHECK(in == k3corr::is_member(Lneg, {x, -y}));
      if (in) CHECK(k3corr::vector_square(L, {x, y}) == k3corr::vector_square(Lneg, {x, -y}));
    }
}

TEST_CASE("gamma invariant and primitivity") {
  const auto L = k3corr::make_x_lattice(2, 2, 17, 1);
  CHECK(k3corr::gamma_invariant(L, {8, 0}) == 1);
  CHECK(k3corr::gamma_invariant(L, {21, 5}) == 1);

  auto rep = k3corr::mu_primitivity(L, {21, 5});
  CHECK(rep.primitive);
  CHECK(rep.residual_gcd == 1);
  CHECK(rep.divisor_primes.empty());

  rep = k3corr::mu_primitivity(L, {42, 10});
  CHECK(!rep.primitive);
  CHECK(rep.residual_gcd == 2);
  REQUIRE(rep.divisor_primes.size() == 1);
  CHECK(rep.divisor_primes[0] == 2);

  CHECK(thrown_code([&] { k3corr::mu_primitivity(L, {1, 0}); }) == errc::invalid_vector);
  CHECK(thrown_code([&] { k3corr::mu_primitivity(L, {0, 0}); }) == errc::invalid_vector);
}
