#include "doctest.h"
#include "k3corr/criteria_x.hpp"
#include "test_support.hpp"

using k3corr::Int;
using k3corr::LatticeVector;
using k3corr::Series;
using k3corr::errc;
using k3corr::testing::thrown_code;
namespace cx = k3corr::criteria_x;

TEST_CASE("lift_mu finds the unique square-compatible lift") {
  CHECK(cx::lift_mu(k3corr::make_x_lattice(6, 2, 97, 1), 3) == 49);
  CHECK(cx::lift_mu(k3corr::make_x_lattice(4, 1, 17, 1), 4) == 9);
  CHECK(cx::lift_mu(k3corr::make_x_lattice(2, 2, 17, 1), 1) == 1);
}

TEST_CASE("check_conditions on a passing candidate") {
  const auto L = k3corr::make_x_lattice(2, 2, 17, 1);
  const auto rep = cx::check_conditions(L, {21, 5});
  CHECK(rep.cond_i);
  CHECK(rep.cond_ii_plus);
  CHECK(!rep.cond_ii_minus);
  CHECK(rep.cond_iii_a);
  CHECK(rep.cond_iii_b);
  CHECK(rep.cond_iv);
  CHECK(rep.residual_gcd == 1);
  CHECK(rep.passes(Series::A));
  CHECK(rep.passes(Series::B));
}

TEST_CASE("check_conditions separates the failure modes") {
  const auto L = k3corr::make_x_lattice(2, 2, 17, 1);

  // Right norm, not a member: everything downstream of (i) is vacuous.
  auto rep = cx::check_conditions(L, {4, 0});
  CHECK(!rep.cond_i);
  CHECK(rep.cond_iv);
  CHECK(rep.residual_gcd == 0);
  CHECK(!rep.any_series());

  // Imprimitive member: (iv) fails, (i)-(iii) hold.
  const auto L2 = k3corr::make_x_lattice(4, 1, 17, 1);
  rep = cx::check_conditions(L2, {42, 10});
  CHECK(rep.cond_i);
  CHECK(rep.cond_ii_plus);
  CHECK(!rep.cond_iii_a);
  CHECK(!rep.cond_iii_b);
  CHECK(!rep.cond_iv);
  CHECK(rep.residual_gcd == 2);
  CHECK(!rep.any_series());

  CHECK(thrown_code([&] { cx::check_conditions(L, {21, 4}); }) == errc::invalid_vector);
}

TEST_CASE("condition (iii) can hold for one series only") {
  const auto L = k3corr::make_x_lattice(1, 2, 17, 1);
  const auto rep = cx::check_conditions(L, {21, 5});
  CHECK(rep.cond_i);
  CHECK(rep.cond_ii());
  CHECK(!rep.cond_iii_a);
  CHECK(rep.cond_iii_b);
  CHECK(rep.lifted_mu_b == 1);
  CHECK(rep.cond_iv);
  CHECK(!rep.passes(Series::A));
  CHECK(rep.passes(Series::B));
}

TEST_CASE("associate maps witnesses to candidates") {
  const auto L = k3corr::make_x_lattice(2, 2, 17, 1);
  CHECK(cx::associate(L, Series::A, 1, 5, 1) == LatticeVector{21, 5});
  CHECK(cx::associate(L, Series::A, -1, -3, 1) == LatticeVector{13, -3});
  CHECK(thrown_code([&] { cx::associate(L, Series::A, 1, 5, 2); }) == errc::invalid_witness);
  CHECK(thrown_code([&] { cx::associate(L, Series::A, 2, 5, 1); }) == errc::invalid_input);
}

TEST_CASE("solve_series enumerates canonical witnesses in order") {
  const auto L = k3corr::make_x_lattice(2, 2, 17, 1);

  auto ws = cx::solve_series(L, Series::A, 1, 1);
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].p == 5);
  CHECK(ws[0].q == 1);
  CHECK(ws[0].associated == LatticeVector{21, 5});
  CHECK(ws[0].cond_ii_sign == 1);

  ws = cx::solve_series(L, Series::A, -1, 8);
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].p == -3);
  CHECK(ws[0].q == 1);
  CHECK(ws[0].associated == LatticeVector{13, -3});
  CHECK(ws[0].cond_ii_sign == -1);

  ws = cx::solve_series(L, Series::A, -1, 9);
  REQUIRE(ws.size() == 2);
  CHECK(ws[1].p == 37);
  CHECK(ws[1].q == 9);
  CHECK(ws[1].associated == LatticeVector{1373, 333});
}

TEST_CASE("solve_series applies the series' own defect and exclusions") {
  // Degree 4, split (1, 2): the b-series sees modulus 4, the a-series excludes 2.
  const auto L = k3corr::make_x_lattice(1, 2, 17, 1);

  auto ws = cx::solve_series(L, Series::B, 1, 1);
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].p == 5);
  CHECK(ws[0].q == 1);
  CHECK(ws[0].associated == LatticeVector{21, 5});

  ws = cx::solve_series(L, Series::A, 1, 0);
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].p == 2);
  CHECK(ws[0].q == 0);
  CHECK(ws[0].associated == LatticeVector{4, 0});
}

TEST_CASE("decide_iso_general_x aggregates the four searches") {
  auto verdict = cx::decide_iso_general_x(k3corr::make_x_lattice(2, 2, 17, 1), 10);
  CHECK(verdict.yes);
  REQUIRE(!verdict.witnesses.empty());
  CHECK(verdict.witnesses[0].series == Series::A);
  CHECK(verdict.witnesses[0].alpha == 1);
  CHECK(verdict.witnesses[0].p == 5);

  verdict = cx::decide_iso_general_x(k3corr::make_x_lattice(2, 2, 49, 1), 200);
  CHECK(!verdict.yes);
  CHECK(verdict.witnesses.empty());
  CHECK(verdict.q_bound == 200);
}

TEST_CASE("h1 vectors verify and reconstruct their candidate") {
  const auto L = k3corr::make_x_lattice(1, 4, 17, 1);
  const auto ws = cx::solve_series(L, Series::A, -1, 2);
  REQUIRE(ws.size() == 2);
  CHECK(ws[0].p == -8);
  const auto& w = ws[1];
  CHECK(w.p == 8);
  CHECK(w.q == 2);

  const auto h1 = cx::h1_from_witness(L, w);
  CHECK(h1 == LatticeVector{32, 8});
  CHECK(k3corr::vector_square(L, h1) == -8);

  const auto rep = cx::h1_check(L, h1, Series::A);
  CHECK(rep.ok);
  CHECK(rep.square_sign == -1);
  CHECK(rep.square_ok);
  CHECK(rep.pairing_divisible);
  CHECK(rep.l1_ok);
  CHECK(rep.l2_ok);

  const auto htilde = cx::htilde_from_h1(L, h1, Series::A, -1);
  CHECK(k3corr::canonical_orbit_rep(htilde) == w.associated);
  CHECK(k3corr::canonical_orbit_rep(htilde) == LatticeVector{264, 64});

  // Negating h1 reconstructs the same orbit.
  const auto htilde2 = cx::htilde_from_h1(L, {-h1.x, -h1.y}, Series::A, -1);
  CHECK(k3corr::canonical_orbit_rep(htilde2) == w.associated);
}

TEST_CASE("h1_check requires membership") {
  const auto L = k3corr::make_x_lattice(1, 4, 17, 1);
  CHECK(thrown_code([&] { cx::h1_check(L, {31, 8}, Series::A); }) == errc::invalid_vector);
}
