#include "k3corr/lattice.hpp"

namespace k3corr {

const char* series_name(Series s) { return s == Series::A ? "a" : "b"; }

int series_sign(Series s) { return s == Series::A ? 1 : -1; }

MukaiShape mukai_split(const Int& r, const Int& s) {
  if (r < 1 || s < 1) fail(errc::invalid_input, "mukai_split: r and s must be >= 1");
  MukaiShape sh;
  sh.r = r;
  sh.s = s;
  sh.c = gcd(r, s);
  sh.a = r / sh.c;
  sh.b = s / sh.c;
  if (gcd(sh.a, sh.b) != 1) fail(errc::internal_error, "mukai_split: gcd(a, b) != 1");
  return sh;
}

MukaiShape swap_series(const MukaiShape& shape) {
  MukaiShape out;
  out.r = shape.s;
  out.s = shape.r;
  out.c = shape.c;
  out.a = shape.b;
  out.b = shape.a;
  return out;
}

Int mukai_m(const Int& a, const Int& b) {
  if (a < 1 || b < 1) fail(errc::invalid_input, "mukai_m: a and b must be >= 1");
  if (gcd(a, b) != 1) fail(errc::invalid_input, "mukai_m: a and b must be coprime");
  // m = -1 + 2*a*k with a*k = 1 mod b makes m = 1 mod 2b; both branches mod 2 agree.
  const Int k = b == 1 ? Int(0) : invmod(a, b);
  return mod_floor(Int(-1) + 2 * a * k, 2 * a * b);
}

LatticeVector canonical_orbit_rep(const LatticeVector& v) {
  if (v.x > 0) return v;
  if (v.x < 0) return {-v.x, -v.y};
  if (v.y < 0) return {v.x, -v.y};
  return v;
}

std::pair<Int, Int> XLattice::mu_bar() const {
  const Int other = mod_floor(-mu, two_rs);
  return mu <= other ? std::make_pair(mu, other) : std::make_pair(other, mu);
}

XLattice make_x_lattice(const Int& r, const Int& s, const Int& d, const Int& mu) {
  XLattice L;
  L.shape = mukai_split(r, s);
  L.two_rs = 2 * r * s;
  L.mu = mod_floor(mu, L.two_rs);
  L.d = d;
  if (gcd(L.mu, L.two_rs) != 1)
    fail(errc::invalid_mu, "mu = " + to_decimal(mu) + " is not a unit mod " + to_decimal(L.two_rs));
  if (d < 1 || gcd(d, L.two_rs) != 1)
    fail(errc::invalid_d, "d = " + to_decimal(d) + " must be positive and coprime to 2rs");
  if (mod_floor(L.mu * L.mu - d, 2 * L.two_rs) != 0)
    fail(errc::incompatible_invariants,
         "mu^2 != d mod 4rs for mu = " + to_decimal(L.mu) + ", d = " + to_decimal(d));
  return L;
}

bool is_member(const XLattice& L, const LatticeVector& v) {
  return mod_floor(v.x - L.mu * v.y, L.two_rs) == 0;
}

Int inner_product(const XLattice& L, const LatticeVector& v, const LatticeVector& w) {
  if (!is_member(L, v) || !is_member(L, w))
    fail(errc::invalid_vector, "inner_product: arguments must be lattice members");
  return divide_exact(v.x * w.x - L.d * v.y * w.y, L.two_rs);
}

Int vector_square(const XLattice& L, const LatticeVector& v) { return inner_product(L, v, v); }

Int gamma_invariant(const XLattice& L, const LatticeVector& v) {
  if (!is_member(L, v)) fail(errc::invalid_vector, "gamma_invariant: not a member");
  // Pairings against H, delta and the fractional generator (mu*H + delta)/2rs.
  const Int with_h = v.x;
  const Int with_delta = L.d * v.y;
  const Int with_frac = divide_exact(v.x * L.mu - L.d * v.y, L.two_rs);
  return gcd3(with_h, with_delta, with_frac);
}

PrimitivityReport mu_primitivity(const XLattice& L, const LatticeVector& v) {
  if (!is_member(L, v)) fail(errc::invalid_vector, "mu_primitivity: not a member");
  if (v.x == 0 && v.y == 0) fail(errc::invalid_vector, "mu_primitivity: zero vector");
  PrimitivityReport rep;
  rep.residual_gcd = gcd3(v.x, v.y, divide_exact(v.x - L.mu * v.y, L.two_rs));
  rep.primitive = rep.residual_gcd == 1;
  const Int g = gcd(v.x, v.y);
  for (const Int& l : prime_divisors(g))
    if (mod_floor(v.x - L.mu * v.y, L.two_rs * l) == 0) rep.divisor_primes.push_back(l);
  if (rep.primitive != rep.divisor_primes.empty())
    fail(errc::internal_error, "mu_primitivity: gcd form and prime scan disagree");
  return rep;
}

}  // namespace k3corr
