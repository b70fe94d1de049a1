#pragma once

#include <vector>

#include "k3corr/integer.hpp"

namespace k3corr::pell {

struct PellSolution {
  Int p, q, rhs;  // p^2 - d*q^2 = rhs
  bool operator==(const PellSolution&) const = default;
};

struct FundamentalUnit {
  Int u, v;  // u^2 - d*v^2 = 1, v >= 1, minimal
};

// Least unit u + v*sqrt(d) > 1 of norm +1, from the continued fraction of sqrt(d).
// Requires d >= 2 and d not a perfect square (square_discriminant otherwise).
FundamentalUnit fundamental_unit(const Int& d);

// Every (p, q) with p^2 - d*q^2 = N and |q| <= q_bound, all four sign
// combinations, sorted by (|q|, |p|, p, q). Requires d >= 1, N != 0, q_bound >= 0.
// Square d is solved exactly through divisor pairs of N and then clipped.
std::vector<PellSolution> solve_bounded(const Int& d, const Int& N, const Int& q_bound);

// One multiplication by u + v*sqrt(d): (p, q) -> (u*p + d*v*q, v*p + u*q).
// Validates sol against d (invalid_witness) and u^2 - d*v^2 = 1 (invalid_pairing).
PellSolution apply_unit(const Int& d, const PellSolution& sol, const Int& u, const Int& v);

// Trajectory [sol, step(sol), ..., step^count(sol)]; the rhs invariant is
// rechecked after every step. count = 0 gives just [sol].
std::vector<PellSolution> orbit(const Int& d, const PellSolution& sol,
                                const FundamentalUnit& unit, int count);

}  // namespace k3corr::pell
