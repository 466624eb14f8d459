#include "toricmld/toric_pairs.hpp"

#include <string>

namespace toricmld {

Rational GPair::coefficient(std::size_t ray) const {
  const auto it = b_inv.find(ray);
  return it == b_inv.end() ? Rational(0) : it->second;
}

namespace {

[[noreturn]] void pair_error(const std::string& what) { throw Error(ErrorCode::kInvalidPair, what); }

bool integral_point(const RatVector& v) { return to_integral(v).has_value(); }

// Coefficients of -(K+B+D_X) on the rays, for a folded pair.
std::vector<Rational> anticanonical_coefficients(const Fan& fan, const GPair& folded) {
  std::vector<Rational> d;
  for (std::size_t i = 0; i < fan.rays().size(); ++i) {
    d.push_back(1 - folded.coefficient(i) + support_value(folded.bdiv_a, fan.rays()[i]));
  }
  return d;
}

}  // namespace

void validate_pair(const Fan& fan, const GPair& pair) {
  for (const auto& [idx, b] : pair.b_inv) {
    if (idx >= fan.rays().size()) pair_error("boundary refers to missing ray " + std::to_string(idx));
    if (b < 0 || b > 1) {
      pair_error("coefficient " + to_string(b) + " of ray " + std::to_string(idx) + " is outside [0,1]");
    }
  }
  if (pair.bdiv_a.points().empty()) pair_error("b-divisor set is empty");
  if (pair.bdiv_a.dim() != fan.rank()) pair_error("b-divisor points have wrong length");
  for (std::size_t j = 0; j < pair.general.size(); ++j) {
    const auto& g = pair.general[j];
    const std::string name = "general boundary " + std::to_string(j);
    if (g.b < 0) pair_error(name + " has negative coefficient");
    if (g.a.points().empty() || g.a.dim() != fan.rank()) pair_error(name + " has points of wrong length");
    for (const auto& p : g.a.points()) {
      if (!integral_point(p)) pair_error(name + " has a non-integral point");
    }
  }
}

FixMov fix_mov(const Fan& fan, const SupportSet& a, const std::vector<Rational>& l) {
  require_same_size(l.size(), fan.rays().size(), "fix_mov");
  FixMov out{{}, a};
  for (std::size_t i = 0; i < fan.rays().size(); ++i) {
    out.fix.push_back(support_value(a, fan.rays()[i]) + l[i]);
  }
  return out;
}

GPair fold_general(const Fan& fan, const GPair& pair) {
  validate_pair(fan, pair);
  GPair out;
  out.b_inv = pair.b_inv;
  SupportSet a = pair.bdiv_a;
  const std::vector<Rational> zero(fan.rays().size(), Rational(0));
  for (const auto& g : pair.general) {
    const FixMov fm = fix_mov(fan, g.a, zero);
    for (std::size_t i = 0; i < fm.fix.size(); ++i) {
      if (fm.fix[i] != 0) out.b_inv[i] = out.coefficient(i) + g.b * fm.fix[i];
    }
    a = a + fm.mov.scaled(g.b);
  }
  out.bdiv_a = std::move(a);
  for (auto it = out.b_inv.begin(); it != out.b_inv.end();) {
    if (it->second < 0 || it->second > 1) {
      pair_error("folded coefficient of ray " + std::to_string(it->first) + " is outside [0,1]");
    }
    it = it->second == 0 ? out.b_inv.erase(it) : std::next(it);
  }
  return out;
}

CartierData cartier_psi(const ToricContraction& tc, const GPair& pair) {
  const Fan& fan = tc.fan();
  const GPair folded = pair.general.empty() ? pair : fold_general(fan, pair);
  const auto d = anticanonical_coefficients(fan, folded);
  CartierData out;
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    RatMatrix rows;
    RatVector rhs;
    for (std::size_t idx : fan.max_cones()[c]) {
      rows.push_back(to_rational(fan.rays()[idx]));
      rhs.push_back(d[idx]);
    }
    const auto psi = solve_linear(rows, rhs, fan.rank());
    if (!psi) throw Error(ErrorCode::kNotCartier, "not R-Cartier on max cone " + std::to_string(c));
    out.psi.push_back(*psi);
  }
  return out;
}

bool is_f_nef(const ToricContraction& tc, const GPair& pair, const CartierData& psi) {
  const Fan& fan = tc.fan();
  const GPair folded = pair.general.empty() ? pair : fold_general(fan, pair);
  const auto d = anticanonical_coefficients(fan, folded);
  for (const auto& p : psi.psi) {
    for (std::size_t i = 0; i < fan.rays().size(); ++i) {
      if (dot(p, fan.rays()[i]) > d[i]) return false;
    }
  }
  return true;
}

BoxData box_square(const ToricContraction& tc, const GPair& pair) {
  const Fan& fan = tc.fan();
  const GPair folded = fold_general(fan, pair);
  const CartierData psi = cartier_psi(tc, folded);
  if (!is_f_nef(tc, folded, psi)) {
    throw Error(ErrorCode::kNotNef, "not f-nef: -(K+B+D) is not nef over the base");
  }
  const auto d = anticanonical_coefficients(fan, folded);
  std::vector<Inequality> ineqs;
  for (std::size_t i = 0; i < fan.rays().size(); ++i) ineqs.push_back({fan.rays()[i], Rational(-d[i])});
  const Polyhedron divisor_box = Polyhedron::from_inequalities(fan.rank(), ineqs);

  BoxData bd;
  bd.box = folded.bdiv_a.hull().minkowski_sum(divisor_box);
  bd.glc = bd.box.contains_origin();
  if (bd.glc) {
    bd.u = bd.box.polar_dual();
    bd.sigma0 = bd.u.recession_cone();
    bd.l = fan.rank() - static_cast<std::size_t>(bd.sigma0.dimension());
  } else {
    bd.u = Polyhedron::empty(fan.rank());
    bd.sigma0 = Polyhedron::empty(fan.rank());
  }
  return bd;
}

Rational log_discrepancy(const ToricContraction& tc, const BoxData& bd, const IntVector& e) {
  if (!tc.fan().support().contains(e)) {
    throw Error(ErrorCode::kInvalidGeometry, "point " + to_string(e) + " lies outside the support");
  }
  const auto h = bd.box.min_value(e);
  if (!h) throw Error(ErrorCode::kUnbounded, "support function unbounded at " + to_string(e));
  return -*h;
}

Rational log_discrepancy_by_cone(const ToricContraction& tc, const GPair& folded,
                                 const CartierData& psi, const IntVector& e) {
  const auto c = tc.fan().cone_containing(e);
  if (!c) throw Error(ErrorCode::kInvalidGeometry, "point " + to_string(e) + " lies outside the support");
  return dot(psi.psi[*c], e) - support_value(folded.bdiv_a, e);
}

bool is_glc(const BoxData& bd) { return bd.glc; }

ReducedBox reduce_box(const BoxData& bd) {
  if (!bd.glc) throw Error(ErrorCode::kNotLogCanonical, "not g-lc: 0 is not in the box");
  const std::size_t n = bd.u.ambient_dim();
  std::vector<IntVector> gens = bd.sigma0.rays();
  gens.insert(gens.end(), bd.sigma0.lines().begin(), bd.sigma0.lines().end());
  const Sublattice span = Sublattice::span(n, gens).saturation();
  ReducedBox out{quotient_by_span(n, span), Polyhedron()};
  out.u = bd.u.image(out.quotient.projection.matrix());
  if (!out.u.is_bounded() || !out.u.is_full_dimensional()) {
    throw Error(ErrorCode::kInvalidGeometry, "reduced polar body is not a full-dimensional polytope");
  }
  return out;
}

MldResult mld_over_fiber(const ToricContraction& tc, const BoxData& bd) {
  if (tc.base_rank() == 0) {
    throw Error(ErrorCode::kGlobalMld, "use global mld variant: the base is a point");
  }
  if (!bd.glc) throw Error(ErrorCode::kNotLogCanonical, "not g-lc: 0 is not in the box");
  MldResult out;
  if (bd.l == 0) return out;
  const ReducedBox red = reduce_box(bd);
  const std::size_t k = red.u.ambient_dim();
  if (red.u.strict_interior_contains(RatVector(k, Rational(0)))) return out;

  IntVector interior(tc.rank(), Integer(0));
  for (const auto& r : tc.fan().cone_rays(0)) interior = add(interior, r);
  const IntVector target = red.quotient.projection.apply(interior);
  const auto bound = gauge(red.u, target);
  if (!bound || *bound == 0) return out;

  std::optional<Rational> best;
  for (const auto& x : lattice_points(red.u.scaled(*bound))) {
    bool inside = !is_zero(x);
    for (const auto& h : red.u.inequalities())
      if (h.offset == 0 && dot(h.normal, x) <= 0) inside = false;
    if (!inside) continue;
    const auto g = gauge(red.u, x);
    if (g && (!best || *g < *best)) {
      best = *g;
      out.witness = x;
    }
  }
  if (!best) throw Error(ErrorCode::kInvalidGeometry, "no lattice point below the witness gauge");
  out.positive = true;
  out.value = *best;
  return out;
}

Rational lct_pullback(const ToricContraction& tc, const BoxData& bd, const IntVector& phibar) {
  if (is_zero(phibar)) throw Error(ErrorCode::kZeroVector, "lct of the zero functional");
  if (!bd.glc) throw Error(ErrorCode::kNotLogCanonical, "not g-lc: 0 is not in the box");
  const IntVector phi = tc.pi().pullback(phibar);
  for (const auto& h : bd.box.equations())
    if (dot(h.normal, phi) != 0) return 0;
  std::optional<Rational> best;
  for (const auto& h : bd.box.inequalities()) {
    const Integer v = dot(h.normal, phi);
    if (v <= 0) continue;
    const Rational bound = -h.offset / Rational(v);
    if (!best || bound < *best) best = bound;
  }
  if (!best) throw Error(ErrorCode::kUnbounded, "unbounded threshold: functional is not positive on the support");
  return *best;
}

}  // namespace toricmld
