#include "k3corr/pell.hpp"

#include <algorithm>
#include <mutex>

#include "k3corr/parallel.hpp"

namespace k3corr::pell {

FundamentalUnit fundamental_unit(const Int& d) {
  if (d < 2) fail(errc::invalid_input, "fundamental_unit: d must be >= 2");
  if (is_perfect_square(d))
    fail(errc::square_discriminant, "fundamental_unit: d = " + to_decimal(d) + " is a square");
  // Continued fraction of sqrt(d): a0 = floor(sqrt(d)), then
  // m_{k+1} = den_k*a_k - m_k, den_{k+1} = (d - m^2)/den, a = floor((a0+m)/den).
  const Int a0 = isqrt(d);
  Int m = 0, den = 1, a = a0;
  Int p_prev = 1, p = a0;   // convergent numerators
  Int q_prev = 0, q = 1;    // convergent denominators
  while (p * p - d * q * q != 1) {
    m = den * a - m;
    den = divide_exact(d - m * m, den);
    a = (a0 + m) / den;
    const Int p_next = a * p + p_prev;
    const Int q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  return {p, q};
}

namespace {

// Pushes the sign combinations of (p, q) with p, q >= 0, skipping zero duplicates.
void push_signed(std::vector<PellSolution>& out, const Int& p, const Int& q, const Int& rhs) {
  out.push_back({p, q, rhs});
  if (p != 0) out.push_back({-p, q, rhs});
  if (q != 0) out.push_back({p, -q, rhs});
  if (p != 0 && q != 0) out.push_back({-p, -q, rhs});
}

std::vector<PellSolution> solve_square(const Int& e, const Int& N, const Int& q_bound) {
  // d = e^2: (p - e*q)(p + e*q) = N. Enumerate ordered factor pairs u*v = N.
  std::vector<PellSolution> out;
  const Int absN = abs(N);
  for (const Int& f : divisors(absN)) {
    for (int sign = 0; sign < 2; ++sign) {
      const Int u = sign == 0 ? f : Int(-f);
      const Int v = divide_exact(N, u);
      if (mod_floor(u + v, Int(2)) != 0) continue;
      const Int p = (u + v) / 2;
      const Int num = v - u;
      if (mod_floor(num, 2 * e) != 0) continue;
      const Int q = divide_exact(num, 2 * e);
      if (abs(q) > q_bound) continue;
      out.push_back({p, q, N});
    }
  }
  std::sort(out.begin(), out.end(), [](const PellSolution& l, const PellSolution& r) {
    if (l.p != r.p) return l.p < r.p;
    return l.q < r.q;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<PellSolution> solve_bounded(const Int& d, const Int& N, const Int& q_bound) {
  if (d < 1) fail(errc::invalid_input, "solve_bounded: d must be >= 1");
  if (N == 0) fail(errc::invalid_input, "solve_bounded: N must be nonzero");
  if (q_bound < 0) fail(errc::invalid_input, "solve_bounded: q_bound must be >= 0");

  std::vector<PellSolution> out;
  if (const auto e = sqrt_exact(d)) {
    out = solve_square(*e, N, q_bound);
  } else if (q_bound.fits_slong_p()) {
    const long hi = q_bound.get_si() + 1;
    std::mutex join;
    parallel_chunks(0, hi, 4096, [&](long lo_q, long hi_q) {
      std::vector<PellSolution> local;
      Int q(lo_q);
      for (long i = lo_q; i < hi_q; ++i, ++q) {
        const Int pp = N + d * q * q;
        if (pp >= 0) {
          if (const auto p = sqrt_exact(pp)) push_signed(local, *p, q, N);
        }
      }
      const std::lock_guard<std::mutex> hold(join);
      out.insert(out.end(), local.begin(), local.end());
    });
  } else {
    fail(errc::invalid_input, "solve_bounded: q_bound too large to scan");
  }
  std::sort(out.begin(), out.end(), [](const PellSolution& l, const PellSolution& r) {
    const Int laq = abs(l.q), raq = abs(r.q);
    if (laq != raq) return laq < raq;
    const Int lap = abs(l.p), rap = abs(r.p);
    if (lap != rap) return lap < rap;
    if (l.p != r.p) return l.p < r.p;
    return l.q < r.q;
  });
  return out;
}

PellSolution apply_unit(const Int& d, const PellSolution& sol, const Int& u, const Int& v) {
  if (sol.p * sol.p - d * sol.q * sol.q != sol.rhs)
    fail(errc::invalid_witness, "apply_unit: solution does not match its rhs");
  if (u * u - d * v * v != 1)
    fail(errc::invalid_pairing, "apply_unit: (u, v) is not a norm-one unit for d");
  return {u * sol.p + d * v * sol.q, v * sol.p + u * sol.q, sol.rhs};
}

std::vector<PellSolution> orbit(const Int& d, const PellSolution& sol,
                                const FundamentalUnit& unit, int count) {
  if (count < 0) fail(errc::invalid_input, "orbit: count must be >= 0");
  std::vector<PellSolution> out{sol};
  if (sol.p * sol.p - d * sol.q * sol.q != sol.rhs)
    fail(errc::invalid_witness, "orbit: start does not match its rhs");
  for (int i = 0; i < count; ++i) {
    out.push_back(apply_unit(d, out.back(), unit.u, unit.v));
    if (out.back().p * out.back().p - d * out.back().q * out.back().q != sol.rhs)
      fail(errc::invariant_violation, "orbit: rhs drifted");
  }
  return out;
}

}  // namespace k3corr::pell
