#include "doctest.h"
#include "k3corr/charmap.hpp"
#include "test_support.hpp"

using k3corr::Int;
using k3corr::Series;
using k3corr::errc;
using k3corr::testing::thrown_code;

TEST_CASE("u_star is the inverse residue of mu") {
  CHECK(k3corr::charmap::u_star(k3corr::make_x_lattice(2, 2, 17, 1)) == 1);
  CHECK(k3corr::charmap::u_star(k3corr::make_x_lattice(6, 2, 73, 5)) == 5);
}

TEST_CASE("nu_of_series twists mu by the series sign") {
  const auto L = k3corr::make_x_lattice(2, 3, 25, 1);
  CHECK(k3corr::charmap::nu_of_series(L, Series::A) == 7);
  CHECK(k3corr::charmap::nu_of_series(L, Series::B) == 5);
}

TEST_CASE("kappa_h_class is onto Z/d with kernel d") {
  const auto L = k3corr::make_x_lattice(2, 2, 17, 1);
  for (long k = 0; k < 34; ++k) {
    const auto cls = k3corr::charmap::kappa_h_class(L, k);
    CHECK(cls.modulus == 17);
    CHECK(cls.residue == k3corr::mod_floor(k, 17));
  }
}

TEST_CASE("discriminant_class requires a dual member") {
  const auto L = k3corr::make_x_lattice(2, 2, 17, 1);
  const auto cls = k3corr::charmap::discriminant_class(L, 8, 8);
  CHECK(cls.residue == 8);
  CHECK(thrown_code([&] { k3corr::charmap::discriminant_class(L, 1, 2); }) ==
        errc::invalid_vector);
}

TEST_CASE("kappa_image recognizes the +-c classes") {
  const auto L = k3corr::make_x_lattice(2, 2, 17, 1);
  const k3corr::LatticeVector v{21, 5};

  auto res = k3corr::charmap::kappa_image(L, v, 1);
  CHECK(res.element.residue == 2);
  CHECK(res.matches_plus_c);
  CHECK(res.matches());

  res = k3corr::charmap::kappa_image(L, v, -1);
  CHECK(res.element.residue == 2);
  CHECK(res.matches_plus_c);
}

TEST_CASE("kappa_image flags non-candidates") {
  const auto L = k3corr::make_x_lattice(1, 2, 17, 1);
  const k3corr::LatticeVector v{21, 5};

  CHECK(thrown_code([&] { k3corr::charmap::kappa_image(L, v, 1); }) ==
        errc::inconsistent_candidate);

  const auto res = k3corr::charmap::kappa_image(L, v, -1);
  CHECK(res.element.residue == 1);
  CHECK(res.matches_plus_c);
}

TEST_CASE("kappa_image validates its inputs") {
  const auto L = k3corr::make_x_lattice(2, 2, 17, 1);
  CHECK(thrown_code([&] { k3corr::charmap::kappa_image(L, {21, 5}, 2); }) ==
        errc::invalid_input);
  CHECK(thrown_code([&] { k3corr::charmap::kappa_image(L, {21, -5}, 1); }) ==
        errc::invalid_vector);
  CHECK(thrown_code([&] { k3corr::charmap::kappa_image(L, {8, 0}, 1); }) ==
        errc::invalid_vector);
}
