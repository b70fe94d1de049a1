#include "k3corr/oracle.hpp"

#include <algorithm>

namespace k3corr::oracle {

namespace {

// Scans j in [0, e) for a residue M = base + step*j with M^2 = d mod 2*step*e.
// Returns -1 when none exists. The engine computes this lift by a congruence;
// the oracle only ever scans.
Int scan_lift(const Int& base, const Int& step, const Int& e, const Int& d) {
  const Int modulus = 2 * step * e;
  for (Int j = 0; j < e; ++j) {
    const Int M = base + step * j;
    if (mod_floor(M * M - d, modulus) == 0) return M;
  }
  return -1;
}

// The literal statement of condition (iv): no prime divides x, y and the
// membership defect at the deeper level.
bool primitive_by_primes(const Int& x, const Int& y, const Int& mu, const Int& deg) {
  for (const Int& l : prime_divisors(gcd(x, y)))
    if (mod_floor(x - mu * y, deg * l) == 0) return false;
  return true;
}

}  // namespace

std::vector<LatticeVector> brute_solutions_x(const XLattice& L, const Int& y_bound) {
  if (y_bound < 0) fail(errc::invalid_input, "brute_solutions_x: y_bound must be >= 0");
  const Int a = L.shape.a, b = L.shape.b, c = L.shape.c;
  const Int two_rs = 2 * a * b * c * c;
  const Int two_abc = 2 * a * b * c;
  const Int target = two_abc * two_abc;
  const Int lift_a = scan_lift(L.mu, two_rs, a, L.d);
  const Int lift_b = scan_lift(L.mu, two_rs, b, L.d);
  std::vector<LatticeVector> out;
  for (Int y = -y_bound; y <= y_bound; ++y) {
    const auto x0 = sqrt_exact(target + L.d * y * y);
    if (!x0) continue;
    std::vector<Int> xs{*x0};
    if (*x0 != 0) xs.push_back(-*x0);
    for (const Int& x : xs) {
      if (mod_floor(x - L.mu * y, two_rs) != 0) continue;
      if (mod_floor(x - two_abc, L.d) != 0 && mod_floor(x + two_abc, L.d) != 0) continue;
      const bool in_a = lift_a >= 0 && mod_floor(x, b) == 0 && mod_floor(y, b) == 0 &&
                        mod_floor(x - lift_a * y, two_rs * a) == 0;
      const bool in_b = lift_b >= 0 && mod_floor(x, a) == 0 && mod_floor(y, a) == 0 &&
                        mod_floor(x - lift_b * y, two_rs * b) == 0;
      if (!in_a && !in_b) continue;
      if (!primitive_by_primes(x, y, L.mu, two_rs)) continue;
      out.push_back({x, y});
    }
  }
  std::sort(out.begin(), out.end(), [](const LatticeVector& l, const LatticeVector& r) {
    if (l.y != r.y) return l.y < r.y;
    return l.x < r.x;
  });
  return out;
}

std::vector<LatticeVector> brute_solutions_y(const y_side::YLattice& M, const Int& y_bound) {
  if (y_bound < 0) fail(errc::invalid_input, "brute_solutions_y: y_bound must be >= 0");
  const Int a = M.shape.a, b = M.shape.b, c = M.shape.c;
  const Int two_ab = 2 * a * b;
  const Int two_abc = 2 * a * b * c;
  const Int target = two_abc * two_abc;
  const Int lift_a = scan_lift(M.nu, two_ab, a, M.d);
  const Int lift_b = scan_lift(M.nu, two_ab, b, M.d);
  std::vector<LatticeVector> out;
  for (Int y = -y_bound; y <= y_bound; ++y) {
    const auto x0 = sqrt_exact(target + M.d * y * y);
    if (!x0) continue;
    std::vector<Int> xs{*x0};
    if (*x0 != 0) xs.push_back(-*x0);
    for (const Int& x : xs) {
      if (mod_floor(x - M.nu * y, two_ab) != 0) continue;
      if (mod_floor(x - two_abc, M.d) != 0 && mod_floor(x + two_abc, M.d) != 0) continue;
      const bool in_a = lift_a >= 0 && mod_floor(x, b) == 0 && mod_floor(y, b) == 0 &&
                        mod_floor(x - lift_a * y, two_ab * a) == 0;
      const bool in_b = lift_b >= 0 && mod_floor(x, a) == 0 && mod_floor(y, a) == 0 &&
                        mod_floor(x - lift_b * y, two_ab * b) == 0;
      if (!in_a && !in_b) continue;
      if (!primitive_by_primes(x, y, M.nu, two_ab)) continue;
      out.push_back({x, y});
    }
  }
  std::sort(out.begin(), out.end(), [](const LatticeVector& l, const LatticeVector& r) {
    if (l.y != r.y) return l.y < r.y;
    return l.x < r.x;
  });
  return out;
}

std::vector<BruteDsetEntry> brute_dset(const MukaiShape& shape, Series s, const Int& mu,
                                       int alpha, const Int& d_max, const Int& q_bound) {
  if (alpha != 1 && alpha != -1) fail(errc::invalid_input, "brute_dset: alpha must be +-1");
  if (d_max < 1 || q_bound < 0) fail(errc::invalid_input, "brute_dset: bad bounds");
  const Int e1 = s == Series::A ? shape.a : shape.b;
  const Int e2 = s == Series::A ? shape.b : shape.a;
  const Int c = shape.c;
  const Int four_rs = 4 * shape.a * shape.b * c * c;
  const Int two_e1c = 2 * e1 * c;
  std::vector<Int> excl;
  for (const Int& l : prime_divisors(e2))
    if (mod_floor(e2, l * l) == 0) excl.push_back(l);
  std::vector<BruteDsetEntry> out;
  for (Int d = mod_floor(mu * mu, four_rs); d <= d_max; d += four_rs) {
    BruteDsetEntry entry;
    entry.d = d;
    for (Int q = 0; q <= q_bound; ++q) {
      const Int pp = 4 * alpha * e1 * c + d * q * q;
      if (pp < 0) continue;
      const auto p0 = sqrt_exact(pp);
      if (!p0) continue;
      std::vector<Int> ps{*p0};
      if (*p0 != 0 && q != 0) ps.push_back(-*p0);
      for (const Int& p : ps) {
        if (p == 0 && q == 0) continue;
        if (mod_floor(p - mu * q, two_e1c) != 0) continue;
        if (gcd3(e1, p, q) != 1) continue;
        bool bad = false;
        for (const Int& l : excl)
          if (mod_floor(p - mu * q, two_e1c * l) == 0) {
            bad = true;
            break;
          }
        if (bad) continue;
        entry.witnesses.emplace_back(p, q);
      }
    }
    if (!entry.witnesses.empty()) out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace k3corr::oracle
