#include "k3corr/integer.hpp"

#include <algorithm>

namespace k3corr {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_input: return "invalid-input";
    case errc::incompatible_invariants: return "incompatible-invariants";
    case errc::invalid_mu: return "invalid-mu";
    case errc::invalid_d: return "invalid-d";
    case errc::invalid_vector: return "invalid-vector";
    case errc::invalid_witness: return "invalid-witness";
    case errc::invalid_t: return "invalid-t";
    case errc::inconsistent_candidate: return "inconsistent-candidate";
    case errc::inconsistent_h1: return "inconsistent-h1";
    case errc::square_discriminant: return "square-discriminant";
    case errc::invalid_pairing: return "invalid-pairing";
    case errc::theorem_inapplicable: return "theorem-inapplicable";
    case errc::invariant_violation: return "invariant-violation";
    case errc::internal_error: return "internal-error";
  }
  return "unknown-error";
}

Int mod_floor(const Int& a, const Int& m) {
  if (m <= 0) fail(errc::internal_error, "mod_floor: modulus must be positive");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int gcd3(const Int& a, const Int& b, const Int& c) {
  Int g = gcd(a, b);
  return gcd(g, c);
}

Int invmod(const Int& a, const Int& m) {
  if (m < 1) fail(errc::internal_error, "invmod: modulus must be >= 1");
  if (m == 1) return 0;
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(errc::internal_error, "invmod: " + to_decimal(a) + " is not a unit mod " + to_decimal(m));
  return r;
}

Int isqrt(const Int& n) {
  if (n < 0) fail(errc::internal_error, "isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Int> sqrt_exact(const Int& n) {
  if (!is_perfect_square(n)) return std::nullopt;
  return isqrt(n);
}

Int divide_exact(const Int& a, const Int& b, errc code) {
  if (b == 0) fail(code, "exact division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0)
    fail(code, "exact division: " + to_decimal(b) + " does not divide " + to_decimal(a));
  return q;
}

std::vector<PrimePower> factorize(const Int& n) {
  if (n < 1) fail(errc::internal_error, "factorize: argument must be >= 1");
  std::vector<PrimePower> out;
  Int m = n;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  for (Int p = 3; p * p <= m; p += 2) strip(p);
  if (m > 1) out.push_back({m, 1});
  return out;
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.p);
  return out;
}

std::vector<Int> square_prime_divisors(const Int& n) {
  std::vector<Int> out;
  for (const auto& pp : factorize(n))
    if (pp.e >= 2) out.push_back(pp.p);
  return out;
}

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> out{1};
  for (const auto& pp : factorize(n)) {
    const std::size_t base = out.size();
    Int pe = 1;
    for (unsigned e = 1; e <= pp.e; ++e) {
      pe *= pp.p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Int> crt(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
  if (m1 < 1 || m2 < 1) fail(errc::internal_error, "crt: moduli must be >= 1");
  const Int g = gcd(m1, m2);
  if (mod_floor(r1 - r2, g) != 0) return std::nullopt;
  // r1 + m1 * k = r2 mod m2  =>  k = (r2 - r1)/g * inv(m1/g) mod m2/g
  const Int m2g = m2 / g;
  const Int k = mod_floor((r2 - r1) / g * invmod(m1 / g, m2g), m2g);
  const Int l = m1 / g * m2;  // lcm
  return mod_floor(r1 + m1 * k, l);
}

std::string to_decimal(const Int& n) { return n.get_str(10); }

}  // namespace k3corr
