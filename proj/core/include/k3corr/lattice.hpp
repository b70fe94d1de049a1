#pragma once

#include <utility>
#include <vector>

#include "k3corr/integer.hpp"

namespace k3corr {

// The two witness families. Series A pairs with the sign alpha = +1 slot in the
// character map, series B with alpha = -1; each has its own exclusion moduli.
enum class Series { A, B };

const char* series_name(Series s);       // "a" / "b"
int series_sign(Series s);               // A -> +1, B -> -1

// r = c*a, s = c*b with c = gcd(r, s); gcd(a, b) = 1 by construction.
struct MukaiShape {
  Int r, s, c, a, b;
};

MukaiShape mukai_split(const Int& r, const Int& s);

// The shape of (s, r): a and b trade places, c is unchanged.
MukaiShape swap_series(const MukaiShape& shape);

// Unique residue m in [0, 2ab) with m = -1 mod 2a and m = 1 mod 2b.
// The two congruences overlap at the prime 2, where -1 and 1 agree.
Int mukai_m(const Int& a, const Int& b);

// Member (x*H + y*delta) / 2rs of a degree-2rs lattice; the denominator is
// implicit, so coordinates stay integral.
struct LatticeVector {
  Int x, y;
  bool operator==(const LatticeVector&) const = default;
};

// The representative of {v, -v} whose first nonzero coordinate is positive.
LatticeVector canonical_orbit_rep(const LatticeVector& v);

// Rank-2 lattice spanned by H and (mu*H + delta)/2rs, with H^2 = 2rs and
// delta^2 = -2rs*d. Membership of (x, y): x = mu*y mod 2rs. Determinant -d.
struct XLattice {
  MukaiShape shape;
  Int d;
  Int mu;       // normalized to [0, 2rs)
  Int two_rs;   // 2rs = 2*a*b*c^2
  std::pair<Int, Int> mu_bar() const;  // {mu, 2rs - mu} sorted ascending
};

// Validates r, s >= 1 (invalid_input), gcd(mu, 2rs) = 1 (invalid_mu),
// gcd(d, 2rs) = 1 with d >= 1 (invalid_d), mu^2 = d mod 4rs (incompatible_invariants).
XLattice make_x_lattice(const Int& r, const Int& s, const Int& d, const Int& mu);

bool is_member(const XLattice& L, const LatticeVector& v);

// (x1*x2 - d*y1*y2) / 2rs; exact for members, throws invalid_vector otherwise.
Int inner_product(const XLattice& L, const LatticeVector& v, const LatticeVector& w);
Int vector_square(const XLattice& L, const LatticeVector& v);

// gcd of the pairings of v against the generators H, delta and (mu*H + delta)/2rs.
// Always 1 for H itself.
Int gamma_invariant(const XLattice& L, const LatticeVector& v);

struct PrimitivityReport {
  bool primitive;
  // Primes l with l | gcd(x, y) and x = mu*y mod 2rs*l; nonempty iff not primitive.
  std::vector<Int> divisor_primes;
  // gcd(x, y, (x - mu*y)/2rs); primitive iff this is 1.
  Int residual_gcd;
};

// Requires membership (invalid_vector otherwise) and v != 0.
PrimitivityReport mu_primitivity(const XLattice& L, const LatticeVector& v);

}  // namespace k3corr
