#pragma once

#include <utility>
#include <vector>

#include "k3corr/lattice.hpp"

namespace k3corr::y_side {

// Rank-2 lattice spanned by h and (nu*h + delta1)/2ab, with h^2 = 2ab and
// delta1^2 = -2ab*d. The shape records r = c*a, s = c*b; the lattice itself
// only sees a, b through the degree 2ab, but c steers the series filters.
struct YLattice {
  MukaiShape shape;
  Int d;
  Int nu;      // normalized to [0, 2ab)
  Int two_ab;
  // gcd(c, d) = 1; when false the decision is an unconditional no and the
  // series machinery is skipped.
  bool theorems_applicable;
  std::pair<Int, Int> nu_bar() const;
};

// Validates a, b, c >= 1 and gcd(a, b) = 1 (invalid_input), gcd(nu, 2ab) = 1
// (invalid_mu), d >= 1 coprime to 2ab (invalid_d), nu^2 = d mod 4ab
// (incompatible_invariants).
YLattice make_y_lattice(const Int& a, const Int& b, const Int& c, const Int& d, const Int& nu);

bool is_member_y(const YLattice& M, const LatticeVector& v);
Int inner_product_y(const YLattice& M, const LatticeVector& v, const LatticeVector& w);
Int vector_square_y(const YLattice& M, const LatticeVector& v);

// Unique lift of nu mod 2ab*e with lift^2 = d mod 4ab*e. Requires e | ab.
Int lift_nu(const YLattice& M, const Int& e);

struct YConditionReport {
  bool cond_i = false;        // x = nu*y mod 2ab
  bool cond_ii_plus = false;  // x = +2abc mod d
  bool cond_ii_minus = false;
  bool cond_iii_a = false;    // b | (x, y) and x = lift_nu(a)*y mod 2ab*a
  bool cond_iii_b = false;    // a | (x, y) and x = lift_nu(b)*y mod 2ab*b
  bool cond_iv = false;       // gcd(x, y, (x - nu*y)/2ab) = 1 (vacuous when (i) fails)
  Int lifted_nu_a;
  Int lifted_nu_b;
  Int residual_gcd;

  bool cond_ii() const { return cond_ii_plus || cond_ii_minus; }
  bool passes(Series s) const {
    return cond_i && cond_ii() && (s == Series::A ? cond_iii_a : cond_iii_b) && cond_iv;
  }
  bool any_series() const { return passes(Series::A) || passes(Series::B); }
};

// Conditions for a candidate with x^2 - d*y^2 = 4a^2b^2c^2 (invalid_vector otherwise).
YConditionReport check_conditions_y(const YLattice& M, const LatticeVector& v);

struct YSeriesWitness {
  Series series;
  int alpha;
  Int p, q;
  LatticeVector associated;
  int cond_ii_sign;
};

// Same associated formula as the surface side: canonical orbit representative
// of +-(2abc + alpha*e2*d*q^2, alpha*e2*p*q).
LatticeVector associate_y(const YLattice& M, Series s, int alpha, const Int& p, const Int& q);

// Witnesses of the moduli-side series system with |q| <= q_bound:
//   p^2 - d*q^2 = 4*e1*c*alpha, p = nu*q mod 2*e1, gcd(l1, p, q) = 1 for every
//   prime l1 | e1*c with l1 not dividing e2, p != nu*q mod 2*e1*l2 for every
//   prime l2 | e2. Canonical q >= 0, ordered by (q, p).
std::vector<YSeriesWitness> solve_series_y(const YLattice& M, Series s, int alpha,
                                           const Int& q_bound);

struct ModuliVerdict {
  bool yes;
  bool gcd_gate_failed;  // gcd(c, d) > 1: unconditional no, nothing searched
  std::vector<YSeriesWitness> witnesses;
  Int q_bound;
};

ModuliVerdict decide_moduli_self(const YLattice& M, const Int& q_bound);

struct YH1Report {
  bool ok;
  int square_sign;         // h1^2 = square_sign * 2*e2*c; 0 when neither fits
  bool square_ok;
  bool pairing_divisible;  // h.h1 = 0 mod e2
  bool l1_ok;              // h.h1 != 0 mod e2*l1, primes l1 | e1*c, l1 not dividing e2
  bool l2_ok;              // h1/l2 not a member, primes l2 | e2
};

YH1Report h1_check_y(const YLattice& M, const LatticeVector& h1, Series s);

// h1 = e2 * (p, q) for the witness' series.
LatticeVector h1_from_witness_y(const YLattice& M, const YSeriesWitness& w);

// -c*h + alpha * (h.h1) * h1 / e2, exact divisions enforced (inconsistent_h1).
// The result has square 2abc^2; that is rechecked.
LatticeVector wH_from_h1(const YLattice& M, const LatticeVector& h1, Series s, int alpha);

}  // namespace k3corr::y_side
