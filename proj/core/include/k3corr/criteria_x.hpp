#pragma once

#include <vector>

#include "k3corr/lattice.hpp"

namespace k3corr::criteria_x {

// Unique lift of mu mod 2rs*e with lift^2 = d mod 4rs*e. Requires e >= 1, e | ab.
Int lift_mu(const XLattice& L, const Int& e);

struct ConditionReport {
  bool cond_i = false;        // x = mu*y mod 2rs
  bool cond_ii_plus = false;  // x = +2abc mod d
  bool cond_ii_minus = false; // x = -2abc mod d
  bool cond_iii_a = false;    // b | (x, y) and x = lift_mu(a)*y mod 2rs*a
  bool cond_iii_b = false;    // a | (x, y) and x = lift_mu(b)*y mod 2rs*b
  bool cond_iv = false;       // gcd(x, y, (x - mu*y)/2rs) = 1 (vacuous when (i) fails)
  Int lifted_mu_a;
  Int lifted_mu_b;
  Int residual_gcd;           // the (iv) gcd when (i) holds, else 0

  bool cond_ii() const { return cond_ii_plus || cond_ii_minus; }
  bool passes(Series s) const {
    return cond_i && cond_ii() && (s == Series::A ? cond_iii_a : cond_iii_b) && cond_iv;
  }
  bool any_series() const { return passes(Series::A) || passes(Series::B); }
};

// Conditions (i)-(iv) for a candidate of square 2ab, i.e. x^2 - d*y^2 = 4a^2b^2c^2
// (invalid_vector otherwise). Each condition is evaluated independently.
ConditionReport check_conditions(const XLattice& L, const LatticeVector& v);

struct SeriesWitness {
  Series series;
  int alpha;                 // +-1, the sign of the norm 4ac/alpha resp. 4bc/alpha
  Int p, q;                  // canonical: q >= 0, and p > 0 when q = 0
  LatticeVector associated;  // canonical orbit representative of the produced candidate
  int cond_ii_sign;          // sign matched by associated.x mod d; +1 when d = 1
};

// Canonical orbit representative of +-(2abc + alpha*e2*d*q^2, alpha*e2*p*q),
// with e2 = b for the a-series and e2 = a for the b-series.
LatticeVector associate(const XLattice& L, Series s, int alpha, const Int& p, const Int& q);

// Witnesses of the series system with |q| <= q_bound:
//   p^2 - d*q^2 = 4*e1*c*alpha, p = mu*q mod 2*e1*c, gcd(e1, p, q) = 1,
//   p != mu*q mod 2*e1*c*l for every prime l | e2,
// with (e1, e2) = (a, b) for the a-series and (b, a) for the b-series.
// Canonicalized to q >= 0 (p > 0 when q = 0), ordered by (q, p).
std::vector<SeriesWitness> solve_series(const XLattice& L, Series s, int alpha,
                                        const Int& q_bound);

struct IsoVerdict {
  bool yes;
  std::vector<SeriesWitness> witnesses;  // ordered (series, alpha descending, q, p)
  Int q_bound;                           // a negative verdict is only "no within this bound"
};

// Searches all four (series, alpha) systems up to q_bound.
IsoVerdict decide_iso_general_x(const XLattice& L, const Int& q_bound);

struct H1Report {
  bool ok;
  int square_sign;         // h1^2 = square_sign * 2*e2*c; 0 when neither sign fits
  bool square_ok;
  bool pairing_divisible;  // H.h1 = 0 mod e2*c
  bool l1_ok;              // H.h1 != 0 mod e2*c*l for primes l with l^2 | e1
  bool l2_ok;              // h1/l not a member for primes l with l^2 | e2
};

// Requires h1 a member (invalid_vector).
H1Report h1_check(const XLattice& L, const LatticeVector& h1, Series s);

// h1 = e2*c * (p, q) for the witness' series.
LatticeVector h1_from_witness(const XLattice& L, const SeriesWitness& w);

// -H/c + alpha * (H.h1) * h1 / (e2*c^2), with exact divisions enforced
// (inconsistent_h1). The result has square 2ab; that is rechecked.
LatticeVector htilde_from_h1(const XLattice& L, const LatticeVector& h1, Series s, int alpha);

}  // namespace k3corr::criteria_x
