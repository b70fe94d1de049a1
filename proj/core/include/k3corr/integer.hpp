#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "k3corr/error.hpp"

namespace k3corr {

// Arbitrary-precision integer. Everything downstream assumes exact arithmetic.
using Int = mpz_class;

// Residue of a modulo m in [0, m). Requires m > 0.
Int mod_floor(const Int& a, const Int& m);

// gcd(a, b, c), always >= 0.
Int gcd3(const Int& a, const Int& b, const Int& c);

// Inverse of a modulo m, m >= 1. Throws errc::internal_error when gcd(a, m) != 1;
// callers validate unit-ness at their own boundary first.
Int invmod(const Int& a, const Int& m);

// Floor square root. Requires n >= 0.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

// Square root when n is a perfect square, nullopt otherwise.
std::optional<Int> sqrt_exact(const Int& n);

// Exact quotient a / b. Throws `code` when b == 0 or b does not divide a.
Int divide_exact(const Int& a, const Int& b, errc code = errc::internal_error);

struct PrimePower {
  Int p;
  unsigned e;
};

// Trial-division factorization of n >= 1, primes ascending. Intended for the
// desk-scale moduli that appear here (products of small a, b, c, q).
std::vector<PrimePower> factorize(const Int& n);

// Distinct prime divisors of n >= 1, ascending.
std::vector<Int> prime_divisors(const Int& n);

// Distinct primes l with l^2 | n, ascending.
std::vector<Int> square_prime_divisors(const Int& n);

// All positive divisors of n >= 1, ascending.
std::vector<Int> divisors(const Int& n);

// x = r1 mod m1 and x = r2 mod m2 for possibly non-coprime moduli.
// Returns the residue modulo lcm(m1, m2), or nullopt when incompatible.
std::optional<Int> crt(const Int& r1, const Int& m1, const Int& r2, const Int& m2);

// Decimal rendering; the JSON layer keeps integers as strings.
std::string to_decimal(const Int& n);

}  // namespace k3corr
