#pragma once

#include <string>

#include "toricmld/hyperplane_search.hpp"

namespace fixtures {

using namespace toricmld;

inline IntVector unit(std::size_t n, std::size_t i) {
  IntVector v(n, Integer(0));
  v[i] = 1;
  return v;
}

inline RatVector origin(std::size_t n) { return RatVector(n, Rational(0)); }

inline GPair trivial_pair(std::size_t n) {
  GPair p;
  p.bdiv_a = SupportSet({origin(n)});
  return p;
}

/// Identity germ of affine d-space.
inline ToricContraction affine_space(std::size_t d) {
  std::vector<IntVector> rays;
  std::vector<std::size_t> cone;
  for (std::size_t i = 0; i < d; ++i) {
    rays.push_back(unit(d, i));
    cone.push_back(i);
  }
  std::vector<IntVector> rows = rays;
  return ToricContraction(Fan(d, rays, {cone}), LatticeHom(IntMatrix::from_rows(d, rows)));
}

/// The affine line with boundary (1-a) at the origin.
inline GPair line_pair(const Rational& a) {
  GPair p = trivial_pair(1);
  p.b_inv[0] = 1 - a;
  return p;
}

/// Fan of the half-plane x+y >= 0 over the affine line.
inline ToricContraction halfplane() {
  Fan fan(2, {int_vector({1, -1}), int_vector({0, 1}), int_vector({-1, 1})}, {{0, 1}, {1, 2}});
  return ToricContraction(fan, LatticeHom(IntMatrix::from_rows(2, {int_vector({1, 1})})));
}

/// z4^2 = z1 z2 z3 in the lattice basis (1/2,0,1/2), (0,1/2,1/2), (0,0,1).
inline ToricContraction cax4() {
  Fan fan(3, {int_vector({2, 0, -1}), int_vector({0, 2, -1}), int_vector({0, 0, 1})}, {{0, 1, 2}});
  return ToricContraction(fan, LatticeHom(IntMatrix::identity(3)));
}

inline std::string corpus_dir() { return TORICMLD_CORPUS_DIR; }

}  // namespace fixtures
