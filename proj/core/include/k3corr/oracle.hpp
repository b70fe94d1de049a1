#pragma once

#include <utility>
#include <vector>

#include "k3corr/lattice.hpp"
#include "k3corr/y_side.hpp"

namespace k3corr::oracle {

// Literal double-scan solver for the surface side: every (x, y) with
// |y| <= y_bound and x^2 - d*y^2 = 4(abc)^2 that passes conditions (i)-(iv),
// read directly off their statements (its own lift scan, its own prime-by-prime
// primitivity). Shares no logic with criteria_x; used to cross-check it.
std::vector<LatticeVector> brute_solutions_x(const XLattice& L, const Int& y_bound);

// Same scan against the moduli-side conditions.
std::vector<LatticeVector> brute_solutions_y(const y_side::YLattice& M, const Int& y_bound);

struct BruteDsetEntry {
  Int d;
  std::vector<std::pair<Int, Int>> witnesses;  // (p, q), 0 <= q <= q_bound, p of both signs
};

// Literal membership table of the series' divisor set for d <= d_max
// (d = mu^2 mod 4abc^2 stepped directly), witnesses scanned per q.
std::vector<BruteDsetEntry> brute_dset(const MukaiShape& shape, Series s, const Int& mu,
                                       int alpha, const Int& d_max, const Int& q_bound);

}  // namespace k3corr::oracle
