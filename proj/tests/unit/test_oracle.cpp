#include "doctest.h"
#include "k3corr/criteria_x.hpp"
#include "k3corr/oracle.hpp"
#include "k3corr/y_side.hpp"
#include "test_support.hpp"

using k3corr::Int;
using k3corr::LatticeVector;
using k3corr::Series;

TEST_CASE("brute surface scan lists every conditioned solution") {
  const auto L = k3corr::make_x_lattice(2, 2, 17, 1);
  const auto sols = k3corr::oracle::brute_solutions_x(L, 6);
  REQUIRE(sols.size() == 4);
  CHECK(sols[0] == LatticeVector{-21, -5});
  CHECK(sols[1] == LatticeVector{13, -3});
  CHECK(sols[2] == LatticeVector{-13, 3});
  CHECK(sols[3] == LatticeVector{21, 5});

  for (const auto& v : sols) CHECK(k3corr::criteria_x::check_conditions(L, v).any_series());
}

TEST_CASE("brute moduli scan admits both coset signs") {
  const auto M = k3corr::y_side::make_y_lattice(1, 1, 2, 17, 1);
  const auto sols = k3corr::oracle::brute_solutions_y(M, 6);
  REQUIRE(sols.size() == 8);
  CHECK(sols[0] == LatticeVector{-21, -5});
  CHECK(sols[1] == LatticeVector{21, -5});
  CHECK(sols[2] == LatticeVector{-13, -3});
  CHECK(sols[3] == LatticeVector{13, -3});
  CHECK(sols[4] == LatticeVector{-13, 3});
  CHECK(sols[5] == LatticeVector{13, 3});
  CHECK(sols[6] == LatticeVector{-21, 5});
  CHECK(sols[7] == LatticeVector{21, 5});
}

TEST_CASE("brute divisor table keeps one entry per represented d") {
  const auto table =
      k3corr::oracle::brute_dset(k3corr::mukai_split(2, 2), Series::A, 1, 1, 200, 1);
  REQUIRE(table.size() == 4);
  CHECK(table[0].d == 1);
  REQUIRE(table[0].witnesses.size() == 1);
  CHECK(table[0].witnesses[0] == std::pair<Int, Int>{-3, 1});
  CHECK(table[1].d == 17);
  CHECK(table[1].witnesses[0] == std::pair<Int, Int>{5, 1});
  CHECK(table[2].d == 113);
  CHECK(table[2].witnesses[0] == std::pair<Int, Int>{-11, 1});
  CHECK(table[3].d == 161);
  CHECK(table[3].witnesses[0] == std::pair<Int, Int>{13, 1});
}
