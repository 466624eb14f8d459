#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "toricmld/lattice.hpp"
#include "toricmld/numeric.hpp"
#include "toricmld/polyhedral.hpp"

namespace toricmld {

/// A fan in N = Z^rank given by primitive rays and maximal cones (ray indices).
class Fan {
 public:
  Fan() = default;
  Fan(std::size_t rank, std::vector<IntVector> rays, std::vector<std::vector<std::size_t>> max_cones);

  std::size_t rank() const { return rank_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<std::vector<std::size_t>>& max_cones() const { return max_cones_; }
  std::vector<IntVector> cone_rays(std::size_t cone) const;
  const Polyhedron& cone(std::size_t i) const { return cones_[i]; }
  /// cone(all rays); equals the support once validate() passed.
  const Polyhedron& support() const { return support_; }

  /// Index of a maximal cone containing e, if any.
  std::optional<std::size_t> cone_containing(const RatVector& e) const;
  std::optional<std::size_t> cone_containing(const IntVector& e) const {
    return cone_containing(to_rational(e));
  }

  /// Throws kInvalidFan naming the first violated condition: primitive rays,
  /// pointed full-dimensional maximal cones, face-to-face intersections and a
  /// convex support.
  void validate() const;

 private:
  std::size_t rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<std::vector<std::size_t>> max_cones_;
  std::vector<Polyhedron> cones_;
  Polyhedron support_;
};

/// Germ of a toric contraction X -> Y over the invariant point of Y.
class ToricContraction {
 public:
  ToricContraction() = default;
  /// sigma_bar defaults to the cone over the images of the rays.
  ToricContraction(Fan fan, LatticeHom pi, std::optional<std::vector<IntVector>> sigma_bar = std::nullopt);

  const Fan& fan() const { return fan_; }
  const LatticeHom& pi() const { return pi_; }
  const Polyhedron& sigma_bar() const { return sigma_bar_; }
  std::size_t rank() const { return fan_.rank(); }
  std::size_t base_rank() const { return pi_.target_rank(); }

  /// Throws kInvalidFan / kInvalidContraction on the first violated condition.
  void validate() const;

 private:
  Fan fan_;
  LatticeHom pi_;
  Polyhedron sigma_bar_;
};

struct GeneralBoundary {
  Rational b;
  SupportSet a;  ///< integer points inducing the linear system
};

/// Invariant boundary on the rays, b-divisor induced by a finite set, and
/// general members of invariant linear systems.
struct GPair {
  std::map<std::size_t, Rational> b_inv;  ///< ray index -> coefficient; absent = 0
  SupportSet bdiv_a;
  std::vector<GeneralBoundary> general;

  Rational coefficient(std::size_t ray) const;
};

/// Throws kInvalidPair when coefficients leave [0,1] or dimensions disagree.
void validate_pair(const Fan& fan, const GPair& pair);

struct FixMov {
  std::vector<Rational> fix;  ///< coefficient per ray
  SupportSet mov;
};

/// Fixed and mobile part of the linear system induced by a and the invariant
/// divisor with coefficients l.
FixMov fix_mov(const Fan& fan, const SupportSet& a, const std::vector<Rational>& l);

/// Equivalent pair with no general boundaries.
GPair fold_general(const Fan& fan, const GPair& pair);

struct CartierData {
  std::vector<RatVector> psi;  ///< per maximal cone
};

/// Throws kNotCartier with the offending cone index.
CartierData cartier_psi(const ToricContraction& tc, const GPair& pair);

/// Relative nefness of -(K+B+D_X) over the base.
bool is_f_nef(const ToricContraction& tc, const GPair& pair, const CartierData& psi);

struct BoxData {
  Polyhedron box;     ///< in M_Q
  bool glc = false;   ///< 0 in box
  Polyhedron u;       ///< polar of box; empty unless glc
  Polyhedron sigma0;  ///< recession cone of u
  std::size_t l = 0;  ///< rank N - dim sigma0
};

/// Folds general boundaries first. Throws kNotNef when -(K+B+D_X) is not
/// relatively nef.
BoxData box_square(const ToricContraction& tc, const GPair& pair);

/// -h_box(e). Throws kInvalidGeometry when e lies outside the support.
Rational log_discrepancy(const ToricContraction& tc, const BoxData& bd, const IntVector& e);
/// <psi_sigma, e> - h_A(e) for a maximal cone sigma containing e.
Rational log_discrepancy_by_cone(const ToricContraction& tc, const GPair& folded,
                                 const CartierData& psi, const IntVector& e);

bool is_glc(const BoxData& bd);

/// Projection to N / sat(span sigma0) together with the compact image of u.
struct ReducedBox {
  QuotientPresentation quotient;
  Polyhedron u;  ///< p(u), compact and full-dimensional
};
ReducedBox reduce_box(const BoxData& bd);

struct MldResult {
  bool positive = false;
  Rational value;      ///< meaningful when positive
  IntVector witness;   ///< attaining point of the quotient lattice
};

/// Minimal log discrepancy over the fibre of the invariant point.
MldResult mld_over_fiber(const ToricContraction& tc, const BoxData& bd);

/// sup{g : -g pi^*(phibar) in box}.
Rational lct_pullback(const ToricContraction& tc, const BoxData& bd, const IntVector& phibar);

}  // namespace toricmld
