#pragma once

#include "k3corr/lattice.hpp"

namespace k3corr::charmap {

// mu^{-1} mod 2rs: the delta*-coefficient of the dual image of H.
Int u_star(const XLattice& L);

// nu = alpha * m(a, b) * mu mod 2ab, alpha = series_sign(s). The degree-2ab
// lattice on the moduli side carries this residue.
Int nu_of_series(const XLattice& L, Series s);

// A class in the discriminant group, identified with Z/d.
struct DiscriminantElement {
  Int residue;  // in [0, d)
  Int modulus;  // d
  bool operator==(const DiscriminantElement&) const = default;
};

// Class of the dual element with coordinates (X/2rs)*H + (Y/(2rs*d))*delta.
// Requires Y = mu*X mod 2rs (invalid_vector otherwise); the class is Y mod d.
DiscriminantElement discriminant_class(const XLattice& L, const Int& X, const Int& Y);

// Class of the image of k*delta* under the character of H. Onto Z/d, kernel d*Z.
DiscriminantElement kappa_h_class(const XLattice& L, const Int& k);

struct KappaResult {
  DiscriminantElement element;
  bool matches_plus_c;
  bool matches_minus_c;
  bool matches() const { return matches_plus_c || matches_minus_c; }
};

// Image class of the candidate's character on the companion generator:
// ((alpha*m*mu^{-1}*d*y + x) / 2ab) mod d, with the paired coordinate
// (alpha*m*mu^{-1}*x + y) / 2ab. Requires v member with v^2 = 2ab
// (invalid_vector); non-exact division or a dual element outside the group
// signals inconsistent_candidate. Passes iff the class is +-c mod d.
KappaResult kappa_image(const XLattice& L, const LatticeVector& v, int alpha);

}  // namespace k3corr::charmap
