#include <cstdlib>

#include "doctest.h"
#include "k3corr/divisorial.hpp"
#include "test_support.hpp"

using k3corr::Int;
using k3corr::Series;
using k3corr::errc;
using k3corr::testing::thrown_code;
namespace dv = k3corr::divisorial;

namespace {
const k3corr::MukaiShape sh22 = k3corr::mukai_split(2, 2);
const k3corr::MukaiShape sh12 = k3corr::mukai_split(1, 2);
const k3corr::MukaiShape sh13 = k3corr::mukai_split(1, 3);
}  // namespace

TEST_CASE("congruence_solutions enumerates residues t") {
  CHECK(dv::congruence_solutions(sh22, Series::A, 1, 1, 1) == std::vector<Int>{1});
  CHECK(dv::congruence_solutions(sh12, Series::A, 1, 1, 1).empty());
  CHECK(dv::congruence_solutions(sh12, Series::A, 1, -1, 1).empty());
  CHECK(dv::congruence_solutions(sh12, Series::B, 1, 1, 1) == std::vector<Int>{0});

  // gcd(e1, q) > 1 empties the set outright.
  const auto sh24 = k3corr::mukai_split(2, 4);
  CHECK(dv::congruence_solutions(sh24, Series::B, 1, 1, 2).empty());
}

TEST_CASE("dset_generate walks the arithmetic progression of generators") {
  const auto window = dv::dset_generate(sh22, Series::A, 1, 1, 1, 1, -2, 2);
  REQUIRE(window.size() == 5);
  CHECK(window[0].d == 1);
  CHECK(window[0].p == -3);
  CHECK(window[0].m == -1);
  CHECK(window[1].d == 17);
  CHECK(window[1].p == 5);
  CHECK(window[1].m == 0);
  CHECK(window[2].d == 113);
  CHECK(window[3].d == 161);
  CHECK(window[4].d == 433);

  for (const auto& el : window) {
    const Int norm = el.p * el.p - el.d;  // q = 1 witness identity
    CHECK(norm == 8);
    CHECK(k3corr::mod_floor(el.d - 1, 16) == 0);  // d = mu^2 mod 4abc^2
  }

  CHECK(thrown_code([] { dv::dset_generate(sh22, Series::A, 1, 1, 1, 0, 0, 0); }) ==
        errc::invalid_t);
}

TEST_CASE("dset_generate_first is the ascending prefix") {
  const auto first = dv::dset_generate_first(sh22, Series::A, 1, 1, 1, 1, 4);
  REQUIRE(first.size() == 4);
  CHECK(first[0].d == 1);
  CHECK(first[1].d == 17);
  CHECK(first[2].d == 113);
  CHECK(first[3].d == 161);
}

TEST_CASE("dset_generate_up_to clips at d_max") {
  const auto upto = dv::dset_generate_up_to(sh22, Series::A, 1, 1, 1, 1, 200);
  REQUIRE(upto.size() == 4);
  CHECK(upto[3].d == 161);

  const auto tight = dv::dset_generate_up_to(sh22, Series::A, 1, 1, 1, 1, 16);
  REQUIRE(tight.size() == 1);
  CHECK(tight[0].d == 1);

  CHECK(thrown_code([] { dv::dset_generate_up_to(sh22, Series::A, 1, 1, 1, 1, 0); }) ==
        errc::invalid_input);
}

TEST_CASE("dset_membership searches witnesses behind the congruence gate") {
  auto v = dv::dset_membership(sh22, Series::A, 1, 1, 17, 5);
  CHECK(v.member);
  CHECK(v.congruence_ok);
  CHECK(v.wit_p == 5);
  CHECK(v.wit_q == 1);

  v = dv::dset_membership(sh22, Series::A, 1, 1, 33, 5);
  CHECK(!v.member);
  CHECK(v.congruence_ok);

  v = dv::dset_membership(sh22, Series::A, 1, -1, 33, 5);
  CHECK(v.member);
  CHECK(v.wit_p == 5);

  v = dv::dset_membership(sh22, Series::A, 1, 1, 2, 5);
  CHECK(!v.member);
  CHECK(!v.congruence_ok);

  // d = 97 sits in the set, but its least witness needs q = 7.
  CHECK(!dv::dset_membership(sh22, Series::A, 1, 1, 97, 6).member);
  v = dv::dset_membership(sh22, Series::A, 1, 1, 97, 7);
  CHECK(v.member);
  CHECK(v.wit_q == 7);
}

TEST_CASE("q1_reduction_solve matches q = 1 solvability") {
  CHECK(dv::q1_reduction_solve(sh22, Series::A, 1, 1).has_value());
  CHECK(!dv::q1_reduction_solve(sh13, Series::A, 1, 1).has_value());
  const auto k = dv::q1_reduction_solve(sh13, Series::A, 1, -1);
  REQUIRE(k.has_value());
  CHECK(*k == 2);

  CHECK(dv::congruence_solutions(sh13, Series::A, 1, 1, 1).empty());
  CHECK(!dv::congruence_solutions(sh13, Series::A, 1, -1, 1).empty());
}

TEST_CASE("even_ac_witness glues residues into a unit") {
  const auto w = dv::even_ac_witness(sh22, 1);
  REQUIRE(w.has_value());
  CHECK(w->alpha == 1);
  CHECK(w->theta == 1);
  CHECK(w->mu == 1);
  CHECK(!dv::congruence_solutions(sh22, Series::A, w->mu, w->alpha, 1).empty());

  CHECK(thrown_code([] { dv::even_ac_witness(sh13, 1); }) == errc::theorem_inapplicable);
}

TEST_CASE("odd_abc_witness picks its sign from the residue of ac") {
  const auto w = dv::odd_abc_witness(sh13);
  REQUIRE(w.has_value());
  CHECK(w->alpha == -1);
  CHECK(!dv::congruence_solutions(sh13, Series::A, w->mu, w->alpha, 1).empty());

  CHECK(thrown_code([] { dv::odd_abc_witness(sh22); }) == errc::theorem_inapplicable);
}

TEST_CASE("div_catalogue rows at small bounds") {
  const auto cat = dv::div_catalogue(sh22, {1, 50});
  CHECK(cat.certificate.route == "ac-even");
  CHECK(cat.certificate.alpha == 1);
  CHECK(cat.certificate.mu == 1);
  CHECK(cat.certificate.t == 1);
  CHECK(cat.certificate.d_example == 1);
  CHECK(cat.certificate.wit_p == -3);
  CHECK(cat.certificate.wit_q == 1);

  REQUIRE(cat.rows.size() == 12);
  CHECK(cat.rows[0].d == 1);
  CHECK(cat.rows[0].mu_bar == std::pair<Int, Int>{1, 7});
  CHECK(cat.rows[0].series == Series::A);
  CHECK(cat.rows[0].alpha == 1);
  CHECK(cat.rows[0].wit_p == -3);
  CHECK(cat.rows[1].series == Series::B);
  CHECK(cat.rows[2].d == 9);
  CHECK(cat.rows[2].mu_bar == std::pair<Int, Int>{3, 5});
  CHECK(cat.rows[2].alpha == -1);
  CHECK(cat.rows[4].d == 17);
  CHECK(cat.rows[4].alpha == 1);
  CHECK(cat.rows[5].d == 17);
  CHECK(cat.rows[5].alpha == -1);
  CHECK(cat.rows[8].d == 33);
  CHECK(cat.rows[10].d == 41);
  CHECK(cat.rows[11].d == 41);

  for (const auto& row : cat.rows) {
    const Int norm = row.wit_p * row.wit_p - row.d * row.wit_q * row.wit_q;
    CHECK(norm == 8 * row.alpha);
    CHECK(row.q == 1);
  }
}

TEST_CASE("div_catalogue routes by parity") {
  CHECK(dv::div_catalogue(sh12, {1, 50}).certificate.route == "bc-even");
  const auto cat = dv::div_catalogue(sh13, {1, 100});
  CHECK(cat.certificate.route == "abc-odd");
  CHECK(cat.certificate.alpha == -1);
}

TEST_CASE("div_catalogue is deterministic across thread counts") {
  setenv("K3CORR_THREADS", "1", 1);
  const auto solo = dv::div_catalogue(k3corr::mukai_split(5, 5), {1, 300});
  setenv("K3CORR_THREADS", "4", 1);
  const auto quad = dv::div_catalogue(k3corr::mukai_split(5, 5), {1, 300});
  unsetenv("K3CORR_THREADS");

  REQUIRE(solo.rows.size() == quad.rows.size());
  for (std::size_t i = 0; i < solo.rows.size(); ++i) {
    CHECK(solo.rows[i].d == quad.rows[i].d);
    CHECK(solo.rows[i].mu_bar == quad.rows[i].mu_bar);
    CHECK(solo.rows[i].series == quad.rows[i].series);
    CHECK(solo.rows[i].alpha == quad.rows[i].alpha);
    CHECK(solo.rows[i].t == quad.rows[i].t);
    CHECK(solo.rows[i].wit_p == quad.rows[i].wit_p);
  }
  CHECK(!solo.rows.empty());
}
