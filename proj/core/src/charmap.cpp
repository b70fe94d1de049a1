#include "k3corr/charmap.hpp"

namespace k3corr::charmap {

Int u_star(const XLattice& L) { return invmod(L.mu, L.two_rs); }

Int nu_of_series(const XLattice& L, Series s) {
  const Int two_ab = 2 * L.shape.a * L.shape.b;
  const Int m = mukai_m(L.shape.a, L.shape.b);
  return mod_floor(series_sign(s) * m * L.mu, two_ab);
}

DiscriminantElement discriminant_class(const XLattice& L, const Int& X, const Int& Y) {
  if (mod_floor(Y - L.mu * X, L.two_rs) != 0)
    fail(errc::invalid_vector, "discriminant_class: (X, Y) is not a dual element");
  return {mod_floor(Y, L.d), L.d};
}

DiscriminantElement kappa_h_class(const XLattice& L, const Int& k) {
  return discriminant_class(L, k * u_star(L), k);
}

KappaResult kappa_image(const XLattice& L, const LatticeVector& v, int alpha) {
  if (alpha != 1 && alpha != -1) fail(errc::invalid_input, "kappa_image: alpha must be +-1");
  if (!is_member(L, v)) fail(errc::invalid_vector, "kappa_image: not a member");
  const Int two_ab = 2 * L.shape.a * L.shape.b;
  if (v.x * v.x - L.d * v.y * v.y != L.two_rs * two_ab)
    fail(errc::invalid_vector, "kappa_image: candidate must have square 2ab");
  const Int coeff = alpha * mukai_m(L.shape.a, L.shape.b) * u_star(L);
  const Int num_x = coeff * v.x + v.y;
  const Int num_y = coeff * L.d * v.y + v.x;
  if (mod_floor(num_x, two_ab) != 0 || mod_floor(num_y, two_ab) != 0)
    fail(errc::inconsistent_candidate,
         "kappa_image: dual coordinates not divisible by 2ab; candidate rejects this series");
  const Int X = num_x / two_ab;
  const Int Y = num_y / two_ab;
  if (mod_floor(Y - L.mu * X, L.two_rs) != 0)
    fail(errc::inconsistent_candidate,
         "kappa_image: image falls outside the dual lattice; candidate rejects this series");
  KappaResult res;
  res.element = discriminant_class(L, X, Y);
  const Int cls = res.element.residue;
  const Int c = L.shape.c;
  res.matches_plus_c = cls == mod_floor(c, L.d);
  res.matches_minus_c = cls == mod_floor(-c, L.d);
  return res;
}

}  // namespace k3corr::charmap
