#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3corr/lattice.hpp"

namespace k3corr::divisorial {

// Solutions t in [0, e2*c*q^2) of mu*q*t + e1*c*t^2 = alpha mod e2*c*q^2, with
// (e1, e2) = (a, b) for the a-series and (b, a) for the b-series. Requires
// q >= 1 and mu a unit mod 2abc^2. Empty when gcd(e1, q) > 1; solutions force
// gcd(t, e2) = 1.
std::vector<Int> congruence_solutions(const MukaiShape& shape, Series s, const Int& mu,
                                      int alpha, const Int& q);

struct DsetElement {
  Int d;
  Int p;  // the generator value mu*q + 2*e1*c*(t + e2*c*q^2*m); (p, q) is a witness
  Int m;
};

// d-values (P(m)^2 - 4*alpha*e1*c) / q^2 with P(m) = mu*q + 2*e1*c*(t + e2*c*q^2*m),
// for m in [m_lo, m_hi], keeping d > 0, ascending by d, one witness per d.
// t must solve the congruence (invalid_t otherwise). Every emitted d satisfies
// d = mu^2 mod 4abc^2 by construction.
std::vector<DsetElement> dset_generate(const MukaiShape& shape, Series s, const Int& mu,
                                       int alpha, const Int& q, const Int& t,
                                       const Int& m_lo, const Int& m_hi);

// First n elements by ascending d (window grown symmetrically around m = 0).
std::vector<DsetElement> dset_generate_first(const MukaiShape& shape, Series s, const Int& mu,
                                             int alpha, const Int& q, const Int& t,
                                             std::size_t n);

// All elements with 0 < d <= d_max.
std::vector<DsetElement> dset_generate_up_to(const MukaiShape& shape, Series s, const Int& mu,
                                             int alpha, const Int& q, const Int& t,
                                             const Int& d_max);

struct DsetVerdict {
  bool member;
  bool congruence_ok;  // d = mu^2 mod 4abc^2; membership requires it
  Int wit_p, wit_q;    // a witness pair when member (q >= 0 representative)
  Int q_bound;
};

// Membership of d in the series' divisor set, by bounded search over witnesses
//   p^2 - d*q^2 = 4*e1*c*alpha, p = mu*q mod 2*e1*c, gcd(e1, p, q) = 1,
//   p != mu*q mod 2*e1*c*l for every prime l with l^2 | e2.
// Requires d >= 1.
DsetVerdict dset_membership(const MukaiShape& shape, Series s, const Int& mu, int alpha,
                            const Int& d, const Int& q_bound);

// Smallest k in [0, e2) with e1*c^2*k^2 + (mu + 2*alpha*e1*c*u)*k + e1*u^2 = 0 mod e2,
// where u = mu^{-1} mod 2abc^2; decides solvability of the q = 1 congruence.
std::optional<Int> q1_reduction_solve(const MukaiShape& shape, Series s, const Int& mu,
                                      int alpha);

struct ParityWitness {
  Int theta;  // unit mod 2abc^2 built prime-by-prime
  Int mu;     // theta^{-1}*e1*c - theta*alpha mod 2abc^2
  int alpha;
};

// Constructive nonemptiness for the a-series when a*c is even: per-prime
// residues over 2b, glued by CRT across 2abc^2. nullopt when some prime of 2b
// admits no usable residue for this alpha (at most one alpha can fail).
// Requires a*c even (theorem_inapplicable otherwise). Apply to
// swap_series(shape) for the b-series mirror.
std::optional<ParityWitness> even_ac_witness(const MukaiShape& shape, int alpha);

// Constructive nonemptiness for the a-series when a*b*c is odd: residues over b
// glued across abc^2, then lifted to the odd class mod 2abc^2; alpha is chosen
// from a*c mod 3 when 3 | b. Requires a*b*c odd (theorem_inapplicable otherwise).
std::optional<ParityWitness> odd_abc_witness(const MukaiShape& shape);

struct DivLabel {
  Int d;
  std::pair<Int, Int> mu_bar;
  Series series;
  int alpha;
  Int q, t;
  Int wit_p, wit_q;
};

struct NonemptinessCertificate {
  std::string route;  // "ac-even", "bc-even" or "abc-odd"
  Series series;
  int alpha;
  Int theta, mu, t;
  Int d_example;      // smallest d produced from the certificate at q = 1
  Int wit_p, wit_q;
};

struct CatalogueLimits {
  Int q_max, d_max;
};

struct Catalogue {
  MukaiShape shape;
  CatalogueLimits limits;
  // Sorted by (d, mu_bar, series, alpha, q, t), exact duplicates collapsed.
  std::vector<DivLabel> rows;
  NonemptinessCertificate certificate;
};

// Enumerates divisorial labels over canonical unit classes mu_bar, series,
// signs, q in [1, q_max] and congruence solutions t, with d <= d_max; attaches
// a parity-routed nonemptiness certificate.
Catalogue div_catalogue(const MukaiShape& shape, const CatalogueLimits& limits);

}  // namespace k3corr::divisorial
