#include "k3corr/divisorial.hpp"

#include <algorithm>
#include <iterator>

#include "k3corr/parallel.hpp"
#include "k3corr/pell.hpp"

namespace k3corr::divisorial {

namespace {

std::pair<Int, Int> series_factors(const MukaiShape& shape, Series s) {
  return s == Series::A ? std::make_pair(shape.a, shape.b)
                        : std::make_pair(shape.b, shape.a);
}

Int two_rs_of(const MukaiShape& shape) { return 2 * shape.a * shape.b * shape.c * shape.c; }

void require_alpha(int alpha) {
  if (alpha != 1 && alpha != -1) fail(errc::invalid_input, "alpha must be +-1");
}

void require_unit_mu(const MukaiShape& shape, const Int& mu) {
  if (gcd(mu, two_rs_of(shape)) != 1)
    fail(errc::invalid_mu, "mu = " + to_decimal(mu) + " is not a unit mod 2rs");
}

// d produced by the generator at position m; also yields the witness value P.
struct GeneratorPoint {
  Int P, d;
};

GeneratorPoint generator_point(const Int& A, const Int& S, const Int& four_ae1c,
                               const Int& q2, const Int& m) {
  GeneratorPoint g;
  g.P = A + S * m;
  g.d = divide_exact(g.P * g.P - four_ae1c, q2);
  return g;
}

}  // namespace

std::vector<Int> congruence_solutions(const MukaiShape& shape, Series s, const Int& mu,
                                      int alpha, const Int& q) {
  require_alpha(alpha);
  require_unit_mu(shape, mu);
  if (q < 1) fail(errc::invalid_input, "congruence_solutions: q must be >= 1");
  const auto [e1, e2] = series_factors(shape, s);
  if (gcd(e1, q) != 1) return {};
  const Int modulus = e2 * shape.c * q * q;
  std::vector<Int> out;
  for (Int t = 0; t < modulus; ++t)
    if (mod_floor(mu * q * t + e1 * shape.c * t * t - alpha, modulus) == 0) out.push_back(t);
  return out;
}

std::vector<DsetElement> dset_generate(const MukaiShape& shape, Series s, const Int& mu,
                                       int alpha, const Int& q, const Int& t,
                                       const Int& m_lo, const Int& m_hi) {
  require_alpha(alpha);
  require_unit_mu(shape, mu);
  if (q < 1) fail(errc::invalid_input, "dset_generate: q must be >= 1");
  const auto [e1, e2] = series_factors(shape, s);
  const Int modulus = e2 * shape.c * q * q;
  if (gcd(e1, q) != 1 ||
      mod_floor(mu * q * t + e1 * shape.c * t * t - alpha, modulus) != 0)
    fail(errc::invalid_t, "dset_generate: t does not solve the congruence");
  const Int A = mu * q + 2 * e1 * shape.c * t;
  const Int S = 2 * e1 * e2 * shape.c * shape.c * q * q;
  const Int four_ae1c = 4 * alpha * e1 * shape.c;
  const Int q2 = q * q;
  std::vector<DsetElement> out;
  for (Int m = m_lo; m <= m_hi; ++m) {
    const GeneratorPoint g = generator_point(A, S, four_ae1c, q2, m);
    if (g.d > 0) out.push_back({g.d, g.P, m});
  }
  std::sort(out.begin(), out.end(), [](const DsetElement& l, const DsetElement& r) {
    if (l.d != r.d) return l.d < r.d;
    return l.p < r.p;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const DsetElement& l, const DsetElement& r) { return l.d == r.d; }),
            out.end());
  return out;
}

std::vector<DsetElement> dset_generate_first(const MukaiShape& shape, Series s, const Int& mu,
                                             int alpha, const Int& q, const Int& t,
                                             std::size_t n) {
  if (n == 0) return {};
  const auto [e1, e2] = series_factors(shape, s);
  const Int A = mu * q + 2 * e1 * shape.c * t;
  const Int S = 2 * e1 * e2 * shape.c * shape.c * q * q;
  const Int four_ae1c = 4 * alpha * e1 * shape.c;
  const Int q2 = q * q;
  Int center;
  mpz_fdiv_q(center.get_mpz_t(), Int(-A).get_mpz_t(), S.get_mpz_t());
  Int radius = Int(static_cast<long>(n)) + 4;
  for (;;) {
    auto els = dset_generate(shape, s, mu, alpha, q, t, center - radius, center + radius);
    if (els.size() >= n) {
      // The window is complete once both edge values already exceed the n-th d:
      // |P| grows monotonically away from the center in both directions.
      const Int edge_lo = generator_point(A, S, four_ae1c, q2, center - radius).d;
      const Int edge_hi = generator_point(A, S, four_ae1c, q2, center + radius).d;
      const Int& dn = els[n - 1].d;
      if (edge_lo > dn && edge_hi > dn) {
        els.resize(n);
        return els;
      }
    }
    radius *= 2;
  }
}

std::vector<DsetElement> dset_generate_up_to(const MukaiShape& shape, Series s, const Int& mu,
                                             int alpha, const Int& q, const Int& t,
                                             const Int& d_max) {
  if (d_max < 1) fail(errc::invalid_input, "dset_generate_up_to: d_max must be >= 1");
  const auto [e1, e2] = series_factors(shape, s);
  const Int A = mu * q + 2 * e1 * shape.c * t;
  const Int S = 2 * e1 * e2 * shape.c * shape.c * q * q;
  const Int bound2 = d_max * q * q + 4 * alpha * e1 * shape.c;
  if (bound2 < 0) {
    // Even the smallest norms overshoot d_max; validate t anyway.
    dset_generate(shape, s, mu, alpha, q, t, 0, 0);
    return {};
  }
  const Int B = isqrt(bound2);
  Int m_lo, m_hi;
  mpz_cdiv_q(m_lo.get_mpz_t(), Int(-B - A).get_mpz_t(), S.get_mpz_t());
  mpz_fdiv_q(m_hi.get_mpz_t(), Int(B - A).get_mpz_t(), S.get_mpz_t());
  auto els = dset_generate(shape, s, mu, alpha, q, t, m_lo, m_hi);
  std::vector<DsetElement> out;
  for (auto& el : els)
    if (el.d <= d_max) out.push_back(std::move(el));
  return out;
}

DsetVerdict dset_membership(const MukaiShape& shape, Series s, const Int& mu, int alpha,
                            const Int& d, const Int& q_bound) {
  require_alpha(alpha);
  require_unit_mu(shape, mu);
  if (d < 1) fail(errc::invalid_input, "dset_membership: d must be >= 1");
  DsetVerdict verdict;
  verdict.member = false;
  verdict.wit_p = 0;
  verdict.wit_q = 0;
  verdict.q_bound = q_bound;
  verdict.congruence_ok = mod_floor(d - mu * mu, 2 * two_rs_of(shape)) == 0;
  if (!verdict.congruence_ok) return verdict;
  const auto [e1, e2] = series_factors(shape, s);
  const Int two_e1c = 2 * e1 * shape.c;
  const std::vector<Int> excl = square_prime_divisors(e2);
  for (const auto& sol : pell::solve_bounded(d, 2 * two_e1c * alpha, q_bound)) {
    const Int defect = sol.p - mu * sol.q;
    if (mod_floor(defect, two_e1c) != 0) continue;
    if (gcd3(e1, sol.p, sol.q) != 1) continue;
    bool excluded = false;
    for (const Int& l : excl)
      if (mod_floor(defect, two_e1c * l) == 0) {
        excluded = true;
        break;
      }
    if (excluded) continue;
    verdict.member = true;
    verdict.wit_p = sol.q < 0 ? Int(-sol.p) : sol.p;
    verdict.wit_q = abs(sol.q);
    break;
  }
  return verdict;
}

std::optional<Int> q1_reduction_solve(const MukaiShape& shape, Series s, const Int& mu,
                                      int alpha) {
  require_alpha(alpha);
  require_unit_mu(shape, mu);
  const auto [e1, e2] = series_factors(shape, s);
  const Int u = invmod(mu, two_rs_of(shape));
  const Int c = shape.c;
  for (Int k = 0; k < e2; ++k) {
    const Int val = e1 * c * c * k * k + (mu + 2 * alpha * e1 * c * u) * k + e1 * u * u;
    if (mod_floor(val, e2) == 0) return k;
  }
  return std::nullopt;
}

namespace {

// theta from per-prime residues: x_l at primes of `marked`, 1 at the rest of
// the prime powers of `modulus`.
Int glue_residues(const Int& modulus, const Int& marked,
                  const std::vector<std::pair<Int, Int>>& chosen) {
  Int res = 0, mod = 1;
  for (const auto& pp : factorize(modulus)) {
    Int pe = 1;
    for (unsigned e = 0; e < pp.e; ++e) pe *= pp.p;
    Int r = 1;
    if (mod_floor(marked, pp.p) == 0) {
      for (const auto& [l, x] : chosen)
        if (l == pp.p) r = x;
    }
    const auto merged = crt(res, mod, r, pe);
    if (!merged) fail(errc::internal_error, "glue_residues: prime powers must be compatible");
    res = *merged;
    mod *= pe;
  }
  return res;
}

}  // namespace

std::optional<ParityWitness> even_ac_witness(const MukaiShape& shape, int alpha) {
  require_alpha(alpha);
  if (mod_floor(shape.a * shape.c, Int(2)) != 0)
    fail(errc::theorem_inapplicable, "even_ac_witness: a*c must be even");
  const Int ac = shape.a * shape.c;
  const Int two_b = 2 * shape.b;
  std::vector<std::pair<Int, Int>> chosen;
  for (const Int& l : prime_divisors(two_b)) {
    bool found = false;
    for (Int x = 1; x < l; ++x)
      if (mod_floor(ac - alpha * x * x, l) != 0) {
        chosen.emplace_back(l, x);
        found = true;
        break;
      }
    if (l == 2) {
      // x = 1 always works here: ac even makes ac - alpha odd.
      if (!found) fail(errc::invariant_violation, "even_ac_witness: prime 2 must admit x = 1");
    } else if (!found) {
      return std::nullopt;
    }
  }
  const Int modulus = two_rs_of(shape);
  ParityWitness w;
  w.alpha = alpha;
  w.theta = glue_residues(modulus, two_b, chosen);
  w.mu = mod_floor(invmod(w.theta, modulus) * ac - w.theta * alpha, modulus);
  if (gcd(w.mu, modulus) != 1)
    fail(errc::invariant_violation, "even_ac_witness: constructed mu is not a unit");
  if (!q1_reduction_solve(shape, Series::A, w.mu, alpha))
    fail(errc::invariant_violation, "even_ac_witness: q = 1 congruence did not open up");
  return w;
}

std::optional<ParityWitness> odd_abc_witness(const MukaiShape& shape) {
  const Int abc = shape.a * shape.b * shape.c;
  if (mod_floor(abc, Int(2)) == 0)
    fail(errc::theorem_inapplicable, "odd_abc_witness: a*b*c must be odd");
  const Int ac = shape.a * shape.c;
  int alpha = 1;
  if (mod_floor(shape.b, Int(3)) == 0) {
    const Int acm = mod_floor(ac, Int(3));
    if (acm == 1) alpha = -1;
    else if (acm == 2) alpha = 1;
  }
  std::vector<std::pair<Int, Int>> chosen;
  for (const Int& l : prime_divisors(shape.b)) {
    bool found = false;
    for (Int x = 1; x < l && !found; ++x)
      if (mod_floor(ac - alpha * x * x, l) != 0) {
        chosen.emplace_back(l, x);
        found = true;
      }
    if (!found)
      fail(errc::invariant_violation, "odd_abc_witness: no residue at prime " + to_decimal(l));
  }
  const Int half_modulus = abc * shape.c;  // abc^2, odd
  const Int theta = glue_residues(half_modulus, shape.b, chosen);
  Int mu = mod_floor(invmod(theta, half_modulus) * ac - theta * alpha, half_modulus);
  if (mod_floor(mu, Int(2)) == 0) mu += half_modulus;  // odd lift mod 2abc^2
  ParityWitness w;
  w.alpha = alpha;
  w.theta = theta;
  w.mu = mu;
  const Int modulus = two_rs_of(shape);
  if (gcd(w.mu, modulus) != 1)
    fail(errc::invariant_violation, "odd_abc_witness: constructed mu is not a unit");
  if (!q1_reduction_solve(shape, Series::A, w.mu, alpha))
    fail(errc::invariant_violation, "odd_abc_witness: q = 1 congruence did not open up");
  return w;
}

namespace {

NonemptinessCertificate build_certificate(const MukaiShape& shape) {
  NonemptinessCertificate cert;
  std::optional<ParityWitness> w;
  if (mod_floor(shape.a * shape.c, Int(2)) == 0) {
    cert.route = "ac-even";
    cert.series = Series::A;
    w = even_ac_witness(shape, 1);
    if (!w) w = even_ac_witness(shape, -1);
  } else if (mod_floor(shape.b * shape.c, Int(2)) == 0) {
    cert.route = "bc-even";
    cert.series = Series::B;
    const MukaiShape mirrored = swap_series(shape);
    w = even_ac_witness(mirrored, 1);
    if (!w) w = even_ac_witness(mirrored, -1);
  } else {
    cert.route = "abc-odd";
    cert.series = Series::A;
    w = odd_abc_witness(shape);
  }
  if (!w) fail(errc::invariant_violation, "certificate: parity route yielded no witness");
  cert.alpha = w->alpha;
  cert.theta = w->theta;
  cert.mu = w->mu;
  const auto ts = congruence_solutions(shape, cert.series, cert.mu, cert.alpha, 1);
  if (ts.empty())
    fail(errc::invariant_violation, "certificate: q = 1 congruence has no solution");
  cert.t = ts.front();
  const auto els = dset_generate_first(shape, cert.series, cert.mu, cert.alpha, 1, cert.t, 1);
  if (els.empty()) fail(errc::invariant_violation, "certificate: generator produced nothing");
  cert.d_example = els.front().d;
  cert.wit_p = els.front().p;
  cert.wit_q = 1;
  const auto verdict = dset_membership(shape, cert.series, cert.mu, cert.alpha, cert.d_example, 2);
  if (!verdict.member || !verdict.congruence_ok)
    fail(errc::invariant_violation, "certificate: example failed the membership recheck");
  return cert;
}

}  // namespace

Catalogue div_catalogue(const MukaiShape& shape, const CatalogueLimits& limits) {
  if (limits.q_max < 1 || limits.d_max < 1)
    fail(errc::invalid_input, "div_catalogue: limits must be >= 1");
  Catalogue cat;
  cat.shape = shape;
  cat.limits = limits;
  const Int modulus = two_rs_of(shape);
  const Int half = modulus / 2;  // rs = abc^2
  std::vector<Int> mus;
  for (Int mu = 1; mu <= half; ++mu)
    if (gcd(mu, modulus) == 1) mus.push_back(mu);
  std::vector<std::vector<DivLabel>> by_mu(mus.size());
  parallel_chunks(0, static_cast<long>(mus.size()), 2, [&](long lo, long hi) {
    for (long i = lo; i < hi; ++i) {
      const Int& mu = mus[static_cast<std::size_t>(i)];
      const std::pair<Int, Int> bar{mu, modulus - mu};
      for (Series s : {Series::A, Series::B})
        for (int alpha : {1, -1})
          for (Int q = 1; q <= limits.q_max; ++q)
            for (const Int& t : congruence_solutions(shape, s, mu, alpha, q))
              for (const auto& el :
                   dset_generate_up_to(shape, s, mu, alpha, q, t, limits.d_max)) {
                DivLabel row;
                row.d = el.d;
                row.mu_bar = bar;
                row.series = s;
                row.alpha = alpha;
                row.q = q;
                row.t = t;
                row.wit_p = el.p;
                row.wit_q = q;
                by_mu[static_cast<std::size_t>(i)].push_back(std::move(row));
              }
    }
  });
  for (auto& part : by_mu)
    cat.rows.insert(cat.rows.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
  auto key_less = [](const DivLabel& l, const DivLabel& r) {
    if (l.d != r.d) return l.d < r.d;
    if (l.mu_bar.first != r.mu_bar.first) return l.mu_bar.first < r.mu_bar.first;
    if (l.series != r.series) return l.series < r.series;
    if (l.alpha != r.alpha) return l.alpha > r.alpha;
    if (l.q != r.q) return l.q < r.q;
    if (l.t != r.t) return l.t < r.t;
    return l.wit_p < r.wit_p;
  };
  std::sort(cat.rows.begin(), cat.rows.end(), key_less);
  cat.rows.erase(std::unique(cat.rows.begin(), cat.rows.end(),
                             [](const DivLabel& l, const DivLabel& r) {
                               return l.d == r.d && l.mu_bar == r.mu_bar &&
                                      l.series == r.series && l.alpha == r.alpha &&
                                      l.q == r.q && l.t == r.t;
                             }),
                 cat.rows.end());
  cat.certificate = build_certificate(shape);
  return cat;
}

}  // namespace k3corr::divisorial
