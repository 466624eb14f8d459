#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricmld/lattice.hpp"
#include "toricmld/numeric.hpp"
#include "toricmld/polyhedral.hpp"
#include "toricmld/toric_pairs.hpp"

namespace toricmld {

/// gamma(1,a) = a, gamma(d,a) = gamma(d-1, a^2/d^2).
Rational gamma(std::size_t d, const Rational& a);
/// a^(2^(d-1)) / prod_{i<=d} i^(2^(i-1)).
Rational gamma_closed_form(std::size_t d, const Rational& a);

/// Recession cone of the polar body: the cone of lc places.
Polyhedron lc_places_cone(const BoxData& bd);

struct WidthResult {
  IntVector phi;  ///< primitive functional on the ambient lattice of the body
  Rational lo, hi;
  Rational w;        ///< hi - lo
  Rational w_minus;  ///< -lo
  Rational w_plus;   ///< hi
  bool zero_on_boundary = false;  ///< then lo == 0
};

/// Functional of smallest sup-norm whose width on body is at most l^2/t.
/// Boundary cases (image [0,w]) additionally need w <= boundary_cap when one
/// is given. Within a norm shell, boundary cases win; remaining ties go to the
/// smaller L1 norm, then to the lexicographically larger vector.
/// Throws kWidthBound when no functional exists below the a priori norm cap.
WidthResult width_functional(const Polyhedron& body, const Rational& t, std::size_t l,
                             const std::optional<Rational>& boundary_cap = std::nullopt);

struct SubdivisionRay {
  IntVector ray;
  std::size_t e1, e2;  ///< indices into the old rays; phi(e1) < 0 < phi(e2)
  Integer q;           ///< q * ray == phi(e2) e1 - phi(e1) e2
};

struct Subdivision {
  Fan fan;
  std::vector<SubdivisionRay> new_rays;
  /// New rays obtained from the cone pieces agree with the pairwise formula.
  bool pairwise_formula_agrees = false;
};

/// Cones sigma cap {phi >= 0}, sigma cap {phi <= 0} for sigma in the fan.
Subdivision subdivide_fan(const Fan& fan, const IntVector& phi);

struct SliceData {
  ToricContraction contraction;  ///< over the kernel lattice N0, in kernel coordinates
  GPair pair;
  BoxData box;
  Rational lambda;
  IntMatrix kernel_basis;  ///< rows: HNF basis of N0 = ker phi
  IntMatrix image_basis;   ///< rows: HNF basis of pi(N0) inside the base lattice
  Polyhedron u_check;      ///< lambda^-1 (U cap phi^perp) in kernel coordinates
  Rational slice_mld;
  // Validations, in order.
  bool coefficients_in_range = false;
  bool nef = false;
  bool u_identity = false;
  bool invariant_point = false;
  bool mld_bound = false;
};

/// Slice of the pair along ker phi with boundary rescaled by lambda. Throws
/// kLemmaViolation naming the first failed validation.
SliceData slice(const ToricContraction& tc, const GPair& pair, const BoxData& bd,
                const WidthResult& width, const Rational& lambda, const Rational& t);

struct ExtensionTrace {
  IntVector phi1;
  IntVector phi2;
  IntVector phi_prime;
  Integer q;
  Rational c;
  std::size_t generator = 0;
  bool minus_branch = true;  ///< w_minus <= w_plus
  Rational w_minus, w_plus, l0;
};

/// Extension of a non-negative functional phi0 on ker phi (given on the HNF
/// basis of the kernel) to a non-negative functional on the whole lattice.
ExtensionTrace extend_functional(const std::vector<IntVector>& generators, const Polyhedron& c,
                                 const IntVector& phi, const IntVector& phi0, const Rational& l0);

struct LevelRecord {
  std::size_t level = 0;
  std::size_t rank = 0;
  std::size_t l = 0;
  std::string kind;  ///< "l=1", "case 1" or "case 2"
  Rational t;
  IntVector phi;       ///< functional on this level's lattice
  Rational w, w_minus, w_plus, lambda;
  Rational gamma;
  IntVector phi_bar;   ///< hyperplane produced at this level
  // Case 2 only.
  Rational max_subdivision_discrepancy;
  std::size_t new_rays = 0;
  bool lemma_w_gt_1 = false;
  bool lemma_discrepancy_le_w = false;
  bool lemma_new_rays = false;
  bool slice_coefficients = false;
  bool slice_nef = false;
  bool slice_u_identity = false;
  bool slice_invariant_point = false;
  bool slice_mld_bound = false;
  Rational slice_mld;
  Integer q;
  Rational c;
  bool minus_branch = true;
  Integer primitive_divisor = 1;
  bool pullback_compatible = false;  ///< q * phibar0 == u^*(phibar)
  // Level input, for independent re-checks.
  ToricContraction contraction;
  GPair pair;
};

struct HyperplaneCertificate {
  IntVector phi_bar;
  Rational gamma;
  Rational mld;
  std::size_t d = 0;
  std::size_t l = 0;
  std::vector<LevelRecord> transcript;
};

/// Descent of a functional on N to the base: phi = pi^*(phibar).
IntVector descend_functional(const LatticeHom& pi, const IntVector& phi);

/// Lifts a slice certificate (phibar0 on the slice base, gamma1) to the
/// level of tc. Returns (phibar, gamma) and fills the record.
std::pair<IntVector, Rational> lift_hyperplane(const ToricContraction& tc, const BoxData& bd,
                                               const SliceData& slice_data, const IntVector& phibar0,
                                               const Rational& gamma1, const WidthResult& width,
                                               LevelRecord& record);

HyperplaneCertificate find_hyperplane(const ToricContraction& tc, const GPair& pair);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> reasons;
};

/// Checks the certificate against the instance only; the transcript is ignored.
VerifyResult verify_certificate(const ToricContraction& tc, const GPair& pair,
                                const HyperplaneCertificate& cert);

}  // namespace toricmld
