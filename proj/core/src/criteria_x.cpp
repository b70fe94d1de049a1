#include "k3corr/criteria_x.hpp"

#include <algorithm>

#include "k3corr/pell.hpp"

namespace k3corr::criteria_x {

namespace {

// (e1, e2): the series' own factor and the companion factor.
std::pair<Int, Int> series_factors(const MukaiShape& shape, Series s) {
  return s == Series::A ? std::make_pair(shape.a, shape.b)
                        : std::make_pair(shape.b, shape.a);
}

void require_norm(const XLattice& L, const LatticeVector& v) {
  const Int abc = L.shape.a * L.shape.b * L.shape.c;
  if (v.x * v.x - L.d * v.y * v.y != 4 * abc * abc)
    fail(errc::invalid_vector, "candidate must satisfy x^2 - d*y^2 = 4(abc)^2");
}

void require_alpha(int alpha) {
  if (alpha != 1 && alpha != -1) fail(errc::invalid_input, "alpha must be +-1");
}

}  // namespace

Int lift_mu(const XLattice& L, const Int& e) {
  if (e < 1 || mod_floor(L.shape.a * L.shape.b, e) != 0)
    fail(errc::invalid_input, "lift_mu: e must divide ab");
  // Candidates mu + 2rs*k; the constraint reduces to a linear congruence mod e,
  // so exactly one k in [0, e) works.
  const Int four_rs_e = 2 * L.two_rs * e;
  Int found = -1;
  for (Int k = 0; k < e; ++k) {
    const Int cand = L.mu + L.two_rs * k;
    if (mod_floor(cand * cand - L.d, four_rs_e) == 0) {
      if (found >= 0) fail(errc::internal_error, "lift_mu: lift not unique");
      found = cand;
    }
  }
  if (found < 0) fail(errc::internal_error, "lift_mu: no lift exists");
  return found;
}

ConditionReport check_conditions(const XLattice& L, const LatticeVector& v) {
  require_norm(L, v);
  const MukaiShape& sh = L.shape;
  const Int two_abc = 2 * sh.a * sh.b * sh.c;
  ConditionReport rep;
  rep.cond_i = is_member(L, v);
  rep.cond_ii_plus = mod_floor(v.x - two_abc, L.d) == 0;
  rep.cond_ii_minus = mod_floor(v.x + two_abc, L.d) == 0;
  rep.lifted_mu_a = lift_mu(L, sh.a);
  rep.lifted_mu_b = lift_mu(L, sh.b);
  rep.cond_iii_a = mod_floor(v.x, sh.b) == 0 && mod_floor(v.y, sh.b) == 0 &&
                   mod_floor(v.x - rep.lifted_mu_a * v.y, L.two_rs * sh.a) == 0;
  rep.cond_iii_b = mod_floor(v.x, sh.a) == 0 && mod_floor(v.y, sh.a) == 0 &&
                   mod_floor(v.x - rep.lifted_mu_b * v.y, L.two_rs * sh.b) == 0;
  if (rep.cond_i) {
    rep.residual_gcd = gcd3(v.x, v.y, divide_exact(v.x - L.mu * v.y, L.two_rs));
    rep.cond_iv = rep.residual_gcd == 1;
  } else {
    // No prime can divide deeper than the failing membership congruence.
    rep.residual_gcd = 0;
    rep.cond_iv = true;
  }
  return rep;
}

LatticeVector associate(const XLattice& L, Series s, int alpha, const Int& p, const Int& q) {
  require_alpha(alpha);
  const auto [e1, e2] = series_factors(L.shape, s);
  if (p * p - L.d * q * q != 4 * e1 * L.shape.c * alpha)
    fail(errc::invalid_witness, "associate: (p, q) does not solve the series equation");
  const Int two_abc = 2 * L.shape.a * L.shape.b * L.shape.c;
  return canonical_orbit_rep({two_abc + alpha * e2 * L.d * q * q, alpha * e2 * p * q});
}

std::vector<SeriesWitness> solve_series(const XLattice& L, Series s, int alpha,
                                        const Int& q_bound) {
  require_alpha(alpha);
  if (q_bound < 0) fail(errc::invalid_input, "solve_series: q_bound must be >= 0");
  const auto [e1, e2] = series_factors(L.shape, s);
  const Int two_e1c = 2 * e1 * L.shape.c;
  const Int rhs = 2 * two_e1c * alpha;
  const std::vector<Int> excl = prime_divisors(e2);
  std::vector<SeriesWitness> out;
  for (const auto& sol : pell::solve_bounded(L.d, rhs, q_bound)) {
    if (sol.q < 0) continue;
    if (sol.q == 0 && sol.p <= 0) continue;
    const Int defect = sol.p - L.mu * sol.q;
    if (mod_floor(defect, two_e1c) != 0) continue;
    if (gcd3(e1, sol.p, sol.q) != 1) continue;
    bool excluded = false;
    for (const Int& l : excl)
      if (mod_floor(defect, two_e1c * l) == 0) {
        excluded = true;
        break;
      }
    if (excluded) continue;
    SeriesWitness w;
    w.series = s;
    w.alpha = alpha;
    w.p = sol.p;
    w.q = sol.q;
    w.associated = associate(L, s, alpha, sol.p, sol.q);
    const Int two_abc = 2 * L.shape.a * L.shape.b * L.shape.c;
    if (mod_floor(w.associated.x - two_abc, L.d) == 0)
      w.cond_ii_sign = 1;
    else if (mod_floor(w.associated.x + two_abc, L.d) == 0)
      w.cond_ii_sign = -1;
    else
      fail(errc::invariant_violation, "solve_series: witness misses both signs mod d");
    out.push_back(std::move(w));
  }
  // solve_bounded orders by (|q|, |p|, p, q); restated here as (q, p) over q >= 0.
  std::sort(out.begin(), out.end(), [](const SeriesWitness& l, const SeriesWitness& r) {
    if (l.q != r.q) return l.q < r.q;
    return l.p < r.p;
  });
  return out;
}

IsoVerdict decide_iso_general_x(const XLattice& L, const Int& q_bound) {
  IsoVerdict verdict;
  verdict.q_bound = q_bound;
  for (Series s : {Series::A, Series::B})
    for (int alpha : {1, -1}) {
      auto ws = solve_series(L, s, alpha, q_bound);
      verdict.witnesses.insert(verdict.witnesses.end(), ws.begin(), ws.end());
    }
  verdict.yes = !verdict.witnesses.empty();
  return verdict;
}

H1Report h1_check(const XLattice& L, const LatticeVector& h1, Series s) {
  if (!is_member(L, h1)) fail(errc::invalid_vector, "h1_check: not a member");
  const auto [e1, e2] = series_factors(L.shape, s);
  const Int e2c = e2 * L.shape.c;
  H1Report rep;
  const Int sq = vector_square(L, h1);
  if (sq == 2 * e2c)
    rep.square_sign = 1;
  else if (sq == -2 * e2c)
    rep.square_sign = -1;
  else
    rep.square_sign = 0;
  rep.square_ok = rep.square_sign != 0;
  const Int pairing = h1.x;  // H.h1
  rep.pairing_divisible = mod_floor(pairing, e2c) == 0;
  rep.l1_ok = true;
  for (const Int& l : square_prime_divisors(e1))
    if (mod_floor(pairing, e2c * l) == 0) rep.l1_ok = false;
  rep.l2_ok = true;
  for (const Int& l : square_prime_divisors(e2)) {
    if (mod_floor(h1.x, l) != 0 || mod_floor(h1.y, l) != 0) continue;
    if (is_member(L, {h1.x / l, h1.y / l})) rep.l2_ok = false;
  }
  rep.ok = rep.square_ok && rep.pairing_divisible && rep.l1_ok && rep.l2_ok;
  return rep;
}

LatticeVector h1_from_witness(const XLattice& L, const SeriesWitness& w) {
  const auto [e1, e2] = series_factors(L.shape, w.series);
  const Int t = e2 * L.shape.c;
  return {t * w.p, t * w.q};
}

LatticeVector htilde_from_h1(const XLattice& L, const LatticeVector& h1, Series s, int alpha) {
  require_alpha(alpha);
  if (!is_member(L, h1)) fail(errc::invalid_vector, "htilde_from_h1: not a member");
  const auto [e1, e2] = series_factors(L.shape, s);
  const Int div = e2 * L.shape.c * L.shape.c;
  const Int pairing = h1.x;  // H.h1
  const Int two_abc = 2 * L.shape.a * L.shape.b * L.shape.c;
  LatticeVector out;
  out.x = -two_abc + alpha * divide_exact(pairing * h1.x, div, errc::inconsistent_h1);
  out.y = divide_exact(alpha * pairing * h1.y, div, errc::inconsistent_h1);
  const Int abc = L.shape.a * L.shape.b * L.shape.c;
  if (out.x * out.x - L.d * out.y * out.y != 4 * abc * abc)
    fail(errc::inconsistent_h1, "htilde_from_h1: result misses the square-2ab norm");
  return out;
}

}  // namespace k3corr::criteria_x
