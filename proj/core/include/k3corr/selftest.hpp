#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "k3corr/integer.hpp"

namespace k3corr::selftest {

struct PropertyResult {
  std::string name;
  bool pass;
  std::string detail;  // counters and, on failure, the first offending instance
  double seconds;
};

// Each property has a small preset (quick smoke) and a full preset (the
// advertised tolerances). The factories keep both sets of numbers in one place.

struct SpecialShapeParams {
  int cases;
  unsigned seed;
  long side_max;  // shapes (n, 1) and (1, n), n <= side_max
  long k_max;     // d = mu^2 mod 4rs + 4rs*k, k <= k_max
  Int q_bound;
  static SpecialShapeParams small();
  static SpecialShapeParams full();
};

// Seeded shapes with c = 1 and one side 1 always decide YES, and one witness
// recovers H itself (associated = (2abc, 0)).
PropertyResult special_shape_identity(const SpecialShapeParams& params);

struct SweepXParams {
  long rs_max;
  Int d_max;
  Int y_bound;
  Int q_bound;
  static SweepXParams small();
  static SweepXParams full();
};

// The four series searches, mapped through associate(), reproduce exactly the
// literal condition scan within the common |y| window; witnesses re-pass
// check_conditions; distinct witnesses of one (series, alpha) land in distinct
// +-orbits whenever d > 1.
PropertyResult oracle_equivalence_x(const SweepXParams& params);

// Every scanned solution that survives a series' divisibility conditions
// decomposes only for alpha = +-1 among square-free alpha | 2*e1*c.
PropertyResult alpha_rigidity(const SweepXParams& params);

struct DsetParams {
  long rs_max;
  Int d_max;
  Int q_max;
  static DsetParams small();
  static DsetParams full();
};

// Per-q divisor sets: the congruence-plus-generator route equals the literal
// witness scan for every q in [1, q_max].
PropertyResult dset_agreement(const DsetParams& params);

struct DsetGrowthParams {
  long rs_max;
  Int q_max;
  std::size_t count;
  static DsetGrowthParams small();
  static DsetGrowthParams full();
};

// dset_generate_first yields strictly increasing d, all rechecked by
// dset_membership at the generating q.
PropertyResult dset_growth(const DsetGrowthParams& params);

struct CatalogueParams {
  long rs_max;
  Int q_max;
  Int d_max;
  static CatalogueParams small();
  static CatalogueParams full();
};

// div_catalogue routes its nonemptiness certificate by parity (even a*c, even
// b*c, odd a*b*c), the certificate's example survives dset_membership, and
// catalogue rows re-verify.
PropertyResult catalogue_routing(const CatalogueParams& params);

struct SweepYParams {
  long ab_max;
  long c_max;
  Int d_max;
  Int y_bound;
  Int q_bound;
  static SweepYParams small();
  static SweepYParams full();
};

// Moduli-side series searches equal the literal scan, the gcd(c, d) gate
// short-circuits, and the sweep exhibits at least one raw pair accepted by
// exactly one of the two sides' line filters.
PropertyResult oracle_equivalence_y(const SweepYParams& params);

struct RoundTripParams {
  SweepXParams x;
  SweepYParams y;
  static RoundTripParams small();
  static RoundTripParams full();
};

// Witness -> h1 -> reconstructed candidate is the identity on canonical orbit
// representatives, on both sides, for every witness in the sweeps.
PropertyResult h1_round_trip(const RoundTripParams& params);

struct PellParams {
  Int d_max;
  Int scan_cap;     // exhaustive minimality scan only when v fits under this
  int orbit_steps;
  unsigned bits;    // magnitude of the synthetic orbit start
  unsigned seed;
  static PellParams small();
  static PellParams full();
};

// Fundamental units verify, are minimal (exhaustive scan under scan_cap, exact
// p-th power descent above it), and orbits at `bits` magnitude hold their rhs
// and invert cleanly.
PropertyResult pell_soundness(const PellParams& params);

// All nine properties in order, at the small or full presets.
std::vector<PropertyResult> run_all(bool full_scale);

}  // namespace k3corr::selftest
