#include "k3corr/y_side.hpp"

#include <algorithm>

#include "k3corr/pell.hpp"

namespace k3corr::y_side {

namespace {

std::pair<Int, Int> series_factors(const MukaiShape& shape, Series s) {
  return s == Series::A ? std::make_pair(shape.a, shape.b)
                        : std::make_pair(shape.b, shape.a);
}

void require_norm(const YLattice& M, const LatticeVector& v) {
  const Int abc = M.shape.a * M.shape.b * M.shape.c;
  if (v.x * v.x - M.d * v.y * v.y != 4 * abc * abc)
    fail(errc::invalid_vector, "candidate must satisfy x^2 - d*y^2 = 4(abc)^2");
}

void require_alpha(int alpha) {
  if (alpha != 1 && alpha != -1) fail(errc::invalid_input, "alpha must be +-1");
}

}  // namespace

std::pair<Int, Int> YLattice::nu_bar() const {
  const Int other = mod_floor(-nu, two_ab);
  return nu <= other ? std::make_pair(nu, other) : std::make_pair(other, nu);
}

YLattice make_y_lattice(const Int& a, const Int& b, const Int& c, const Int& d, const Int& nu) {
  if (a < 1 || b < 1 || c < 1) fail(errc::invalid_input, "a, b, c must be >= 1");
  if (gcd(a, b) != 1) fail(errc::invalid_input, "a and b must be coprime");
  YLattice M;
  M.shape = mukai_split(c * a, c * b);
  M.two_ab = 2 * a * b;
  M.nu = mod_floor(nu, M.two_ab);
  M.d = d;
  if (gcd(M.nu, M.two_ab) != 1)
    fail(errc::invalid_mu, "nu = " + to_decimal(nu) + " is not a unit mod " + to_decimal(M.two_ab));
  if (d < 1 || gcd(d, M.two_ab) != 1)
    fail(errc::invalid_d, "d = " + to_decimal(d) + " must be positive and coprime to 2ab");
  if (mod_floor(M.nu * M.nu - d, 2 * M.two_ab) != 0)
    fail(errc::incompatible_invariants,
         "nu^2 != d mod 4ab for nu = " + to_decimal(M.nu) + ", d = " + to_decimal(d));
  M.theorems_applicable = gcd(c, d) == 1;
  return M;
}

bool is_member_y(const YLattice& M, const LatticeVector& v) {
  return mod_floor(v.x - M.nu * v.y, M.two_ab) == 0;
}

Int inner_product_y(const YLattice& M, const LatticeVector& v, const LatticeVector& w) {
  if (!is_member_y(M, v) || !is_member_y(M, w))
    fail(errc::invalid_vector, "inner_product_y: arguments must be lattice members");
  return divide_exact(v.x * w.x - M.d * v.y * w.y, M.two_ab);
}

Int vector_square_y(const YLattice& M, const LatticeVector& v) {
  return inner_product_y(M, v, v);
}

Int lift_nu(const YLattice& M, const Int& e) {
  if (e < 1 || mod_floor(M.shape.a * M.shape.b, e) != 0)
    fail(errc::invalid_input, "lift_nu: e must divide ab");
  const Int four_ab_e = 2 * M.two_ab * e;
  Int found = -1;
  for (Int k = 0; k < e; ++k) {
    const Int cand = M.nu + M.two_ab * k;
    if (mod_floor(cand * cand - M.d, four_ab_e) == 0) {
      if (found >= 0) fail(errc::internal_error, "lift_nu: lift not unique");
      found = cand;
    }
  }
  if (found < 0) fail(errc::internal_error, "lift_nu: no lift exists");
  return found;
}

YConditionReport check_conditions_y(const YLattice& M, const LatticeVector& v) {
  require_norm(M, v);
  const MukaiShape& sh = M.shape;
  const Int two_abc = 2 * sh.a * sh.b * sh.c;
  YConditionReport rep;
  rep.cond_i = is_member_y(M, v);
  rep.cond_ii_plus = mod_floor(v.x - two_abc, M.d) == 0;
  rep.cond_ii_minus = mod_floor(v.x + two_abc, M.d) == 0;
  rep.lifted_nu_a = lift_nu(M, sh.a);
  rep.lifted_nu_b = lift_nu(M, sh.b);
  rep.cond_iii_a = mod_floor(v.x, sh.b) == 0 && mod_floor(v.y, sh.b) == 0 &&
                   mod_floor(v.x - rep.lifted_nu_a * v.y, M.two_ab * sh.a) == 0;
  rep.cond_iii_b = mod_floor(v.x, sh.a) == 0 && mod_floor(v.y, sh.a) == 0 &&
                   mod_floor(v.x - rep.lifted_nu_b * v.y, M.two_ab * sh.b) == 0;
  if (rep.cond_i) {
    rep.residual_gcd = gcd3(v.x, v.y, divide_exact(v.x - M.nu * v.y, M.two_ab));
    rep.cond_iv = rep.residual_gcd == 1;
  } else {
    rep.residual_gcd = 0;
    rep.cond_iv = true;
  }
  return rep;
}

LatticeVector associate_y(const YLattice& M, Series s, int alpha, const Int& p, const Int& q) {
  require_alpha(alpha);
  const auto [e1, e2] = series_factors(M.shape, s);
  if (p * p - M.d * q * q != 4 * e1 * M.shape.c * alpha)
    fail(errc::invalid_witness, "associate_y: (p, q) does not solve the series equation");
  const Int two_abc = 2 * M.shape.a * M.shape.b * M.shape.c;
  return canonical_orbit_rep({two_abc + alpha * e2 * M.d * q * q, alpha * e2 * p * q});
}

std::vector<YSeriesWitness> solve_series_y(const YLattice& M, Series s, int alpha,
                                           const Int& q_bound) {
  require_alpha(alpha);
  if (q_bound < 0) fail(errc::invalid_input, "solve_series_y: q_bound must be >= 0");
  const auto [e1, e2] = series_factors(M.shape, s);
  const Int two_e1 = 2 * e1;
  const Int rhs = 4 * e1 * M.shape.c * alpha;
  // Primes of e1*c away from e2 feed the gcd line; primes of e2 feed the
  // exclusion line. The extra factor c is what separates this side from the
  // surface side.
  std::vector<Int> gcd_primes;
  for (const Int& l : prime_divisors(e1 * M.shape.c))
    if (mod_floor(e2, l) != 0) gcd_primes.push_back(l);
  const std::vector<Int> excl = prime_divisors(e2);
  std::vector<YSeriesWitness> out;
  for (const auto& sol : pell::solve_bounded(M.d, rhs, q_bound)) {
    if (sol.q < 0) continue;
    if (sol.q == 0 && sol.p <= 0) continue;
    const Int defect = sol.p - M.nu * sol.q;
    if (mod_floor(defect, two_e1) != 0) continue;
    bool ok = true;
    for (const Int& l : gcd_primes)
      if (gcd3(l, sol.p, sol.q) != 1) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (const Int& l : excl)
      if (mod_floor(defect, two_e1 * l) == 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    YSeriesWitness w;
    w.series = s;
    w.alpha = alpha;
    w.p = sol.p;
    w.q = sol.q;
    w.associated = associate_y(M, s, alpha, sol.p, sol.q);
    const Int two_abc = 2 * M.shape.a * M.shape.b * M.shape.c;
    if (mod_floor(w.associated.x - two_abc, M.d) == 0)
      w.cond_ii_sign = 1;
    else if (mod_floor(w.associated.x + two_abc, M.d) == 0)
      w.cond_ii_sign = -1;
    else
      fail(errc::invariant_violation, "solve_series_y: witness misses both signs mod d");
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), [](const YSeriesWitness& l, const YSeriesWitness& r) {
    if (l.q != r.q) return l.q < r.q;
    return l.p < r.p;
  });
  return out;
}

ModuliVerdict decide_moduli_self(const YLattice& M, const Int& q_bound) {
  ModuliVerdict verdict;
  verdict.q_bound = q_bound;
  verdict.gcd_gate_failed = !M.theorems_applicable;
  if (verdict.gcd_gate_failed) {
    verdict.yes = false;
    return verdict;
  }
  for (Series s : {Series::A, Series::B})
    for (int alpha : {1, -1}) {
      auto ws = solve_series_y(M, s, alpha, q_bound);
      verdict.witnesses.insert(verdict.witnesses.end(), ws.begin(), ws.end());
    }
  verdict.yes = !verdict.witnesses.empty();
  return verdict;
}

YH1Report h1_check_y(const YLattice& M, const LatticeVector& h1, Series s) {
  if (!is_member_y(M, h1)) fail(errc::invalid_vector, "h1_check_y: not a member");
  const auto [e1, e2] = series_factors(M.shape, s);
  YH1Report rep;
  const Int sq = vector_square_y(M, h1);
  const Int target = 2 * e2 * M.shape.c;
  if (sq == target)
    rep.square_sign = 1;
  else if (sq == -target)
    rep.square_sign = -1;
  else
    rep.square_sign = 0;
  rep.square_ok = rep.square_sign != 0;
  const Int pairing = h1.x;  // h.h1
  rep.pairing_divisible = mod_floor(pairing, e2) == 0;
  rep.l1_ok = true;
  for (const Int& l : prime_divisors(e1 * M.shape.c))
    if (mod_floor(e2, l) != 0 && mod_floor(pairing, e2 * l) == 0) rep.l1_ok = false;
  rep.l2_ok = true;
  for (const Int& l : prime_divisors(e2)) {
    if (mod_floor(h1.x, l) != 0 || mod_floor(h1.y, l) != 0) continue;
    if (is_member_y(M, {h1.x / l, h1.y / l})) rep.l2_ok = false;
  }
  rep.ok = rep.square_ok && rep.pairing_divisible && rep.l1_ok && rep.l2_ok;
  return rep;
}

LatticeVector h1_from_witness_y(const YLattice& M, const YSeriesWitness& w) {
  const auto [e1, e2] = series_factors(M.shape, w.series);
  return {e2 * w.p, e2 * w.q};
}

LatticeVector wH_from_h1(const YLattice& M, const LatticeVector& h1, Series s, int alpha) {
  require_alpha(alpha);
  if (!is_member_y(M, h1)) fail(errc::invalid_vector, "wH_from_h1: not a member");
  const auto [e1, e2] = series_factors(M.shape, s);
  const Int pairing = h1.x;  // h.h1
  const Int two_abc = 2 * M.shape.a * M.shape.b * M.shape.c;
  LatticeVector out;
  out.x = -two_abc + alpha * divide_exact(pairing * h1.x, e2, errc::inconsistent_h1);
  out.y = divide_exact(alpha * pairing * h1.y, e2, errc::inconsistent_h1);
  const Int abc = M.shape.a * M.shape.b * M.shape.c;
  if (out.x * out.x - M.d * out.y * out.y != 4 * abc * abc)
    fail(errc::inconsistent_h1, "wH_from_h1: result misses the square-2abc^2 norm");
  return out;
}

}  // namespace k3corr::y_side
