#include "toricmld/hyperplane_search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace toricmld {

namespace {

[[noreturn]] void violation(const std::string& what) {
  throw Error(ErrorCode::kLemmaViolation, "lemma violation: " + what);
}

Integer l1_norm(const IntVector& v) {
  Integer s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

// Odometer over the sup-norm shell of radius r.
std::vector<IntVector> shell(std::size_t dim, long r) {
  std::vector<IntVector> out;
  IntVector x(dim, Integer(-r));
  while (true) {
    bool on_shell = false;
    for (const auto& c : x)
      if (abs(c) == r) on_shell = true;
    if (on_shell) out.push_back(x);
    std::size_t i = dim;
    while (i > 0) {
      --i;
      if (x[i] < r) {
        ++x[i];
        break;
      }
      x[i] = -r;
      if (i == 0) return out;
    }
    if (dim == 0) return out;
  }
}

long norm_cap(const Polyhedron& body, const Rational& bound) {
  const auto& v = body.vertices();
  const std::size_t m = body.ambient_dim();
  RatMatrix diffs;
  for (std::size_t i = 1; i < v.size() && diffs.size() < m; ++i) {
    RatMatrix trial = diffs;
    trial.push_back(subtract(v[i], v[0]));
    if (rank_of(trial, m) == trial.size()) diffs = std::move(trial);
  }
  if (diffs.size() != m) throw Error(ErrorCode::kNotFullDimensional, "width body is not full-dimensional");
  const RatMatrix inv = inverse(diffs);
  Rational cap = 0;
  for (const auto& row : inv) {
    Rational s = 0;
    for (const auto& x : row) s += abs_of(x);
    cap = std::max(cap, Rational(s * bound));
  }
  const Integer c = floor_of(cap);
  return std::max(1L, c.get_si());
}

bool first_nonzero_positive(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return x > 0;
  return false;
}

// tau spans a 2-face of the pointed cone sigma.
bool spans_two_face(const Polyhedron& sigma, const IntVector& a, const IntVector& b) {
  std::vector<Inequality> tight;
  for (const auto& h : sigma.inequalities())
    if (dot(h.normal, a) == 0 && dot(h.normal, b) == 0) tight.push_back(h);
  const Polyhedron face = Polyhedron::from_inequalities(sigma.ambient_dim(), sigma.inequalities(), tight);
  return face.dimension() == 2;
}

}  // namespace

Rational gamma(std::size_t d, const Rational& a) {
  if (d == 0) throw Error(ErrorCode::kHypothesis, "gamma needs d >= 1");
  if (a <= 0) throw Error(ErrorCode::kHypothesis, "gamma needs a > 0");
  Rational x = a;
  for (std::size_t k = d; k > 1; --k) {
    x = x * x / Rational(static_cast<long>(k * k));
    x.canonicalize();
  }
  return x;
}

Rational gamma_closed_form(std::size_t d, const Rational& a) {
  if (d == 0) throw Error(ErrorCode::kHypothesis, "gamma needs d >= 1");
  if (a <= 0) throw Error(ErrorCode::kHypothesis, "gamma needs a > 0");
  Rational num = a;
  for (std::size_t i = 1; i < d; ++i) num *= num;
  Integer den = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    Integer p;
    Integer base = static_cast<unsigned long>(i);
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), 1UL << (i - 1));
    den *= p;
  }
  Rational out = num / Rational(den);
  out.canonicalize();
  return out;
}

Polyhedron lc_places_cone(const BoxData& bd) {
  if (!bd.glc) throw Error(ErrorCode::kNotLogCanonical, "not g-lc: 0 is not in the box");
  return bd.sigma0;
}

WidthResult width_functional(const Polyhedron& body, const Rational& t, std::size_t l,
                             const std::optional<Rational>& boundary_cap) {
  if (t <= 0) throw Error(ErrorCode::kHypothesis, "width threshold needs t > 0");
  if (body.is_empty() || !body.is_bounded()) throw Error(ErrorCode::kUnbounded, "width body must be compact");
  const std::size_t m = body.ambient_dim();
  const Rational bound = Rational(static_cast<long>(l * l)) / t;
  const long cap = norm_cap(body, bound);

  for (long r = 1; r <= cap; ++r) {
    std::optional<WidthResult> best;
    for (const auto& phi : shell(m, r)) {
      if (!is_primitive(phi)) continue;
      const Rational lo = *body.min_value(phi);
      const Rational hi = *body.max_value(phi);
      if (hi - lo > bound) continue;
      WidthResult cand{phi, lo, hi, hi - lo, -lo, hi, lo == 0};
      if (hi == 0) continue;
      if (cand.zero_on_boundary && boundary_cap && cand.w > *boundary_cap) continue;
      if (!cand.zero_on_boundary && !first_nonzero_positive(phi)) continue;
      bool better = !best;
      if (best) {
        if (cand.zero_on_boundary != best->zero_on_boundary) {
          better = cand.zero_on_boundary;
        } else if (l1_norm(phi) != l1_norm(best->phi)) {
          better = l1_norm(phi) < l1_norm(best->phi);
        } else {
          better = lex_less(best->phi, phi);
        }
      }
      if (better) best = cand;
    }
    if (best) return *best;
  }
  throw Error(ErrorCode::kWidthBound,
              "width bound violated: no functional of sup-norm <= " + std::to_string(cap) +
                  " has width <= " + to_string(bound));
}

Subdivision subdivide_fan(const Fan& fan, const IntVector& phi) {
  if (is_zero(phi)) throw Error(ErrorCode::kZeroVector, "subdivision along the zero functional");
  require_same_size(phi.size(), fan.rank(), "subdivide_fan");
  const std::size_t n = fan.rank();
  std::vector<IntVector> rays = fan.rays();
  std::map<IntVector, std::size_t> index;
  for (std::size_t i = 0; i < rays.size(); ++i) index.emplace(rays[i], i);

  std::vector<std::vector<IntVector>> pieces;
  std::set<IntVector> fresh;
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    const Polyhedron& sigma = fan.cone(c);
    for (const long sign : {1L, -1L}) {
      std::vector<Inequality> ineqs = sigma.inequalities();
      ineqs.push_back({scaled(phi, Integer(sign)), Rational(0)});
      const Polyhedron piece = Polyhedron::from_inequalities(n, ineqs, sigma.equations());
      if (piece.dimension() != static_cast<int>(n)) continue;
      pieces.push_back(piece.rays());
      for (const auto& r : piece.rays())
        if (!index.count(r)) fresh.insert(r);
    }
  }
  for (const auto& r : fresh) {
    index.emplace(r, rays.size());
    rays.push_back(r);
  }
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& p : pieces) {
    std::vector<std::size_t> idx;
    for (const auto& r : p) idx.push_back(index.at(r));
    std::sort(idx.begin(), idx.end());
    if (std::find(cones.begin(), cones.end(), idx) == cones.end()) cones.push_back(idx);
  }

  Subdivision out{Fan(n, rays, cones), {}, false};
  std::set<IntVector> by_formula;
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    const auto& ids = fan.max_cones()[c];
    for (std::size_t i : ids) {
      for (std::size_t j : ids) {
        const IntVector& e1 = fan.rays()[i];
        const IntVector& e2 = fan.rays()[j];
        const Integer v1 = dot(phi, e1);
        const Integer v2 = dot(phi, e2);
        if (!(v1 < 0 && v2 > 0) || !spans_two_face(fan.cone(c), e1, e2)) continue;
        const IntVector raw = subtract(scaled(e1, v2), scaled(e2, v1));
        const IntVector ray = primitive(raw);
        if (by_formula.insert(ray).second) out.new_rays.push_back({ray, i, j, gcd_of(raw)});
      }
    }
  }
  out.pairwise_formula_agrees = by_formula == fresh;
  return out;
}

SliceData slice(const ToricContraction& tc, const GPair& pair, const BoxData& bd, const WidthResult& width,
                const Rational& lambda, const Rational& t) {
  const std::size_t n = tc.rank();
  const IntVector& phi = width.phi;
  require_same_size(phi.size(), n, "slice");
  if (!(width.lo < 0 && width.hi > 0)) throw Error(ErrorCode::kHypothesis, "slice needs 0 interior to phi(U)");
  if (lambda <= 0 || lambda * width.w > 1) throw Error(ErrorCode::kHypothesis, "slice needs 0 < lambda <= 1/w");

  SliceData sd;
  sd.lambda = lambda;
  const Sublattice kernel = kernel_sublattice(phi);
  sd.kernel_basis = kernel.basis();
  const std::size_t n0 = kernel.rank();
  const IntMatrix kt = sd.kernel_basis.transposed();
  const Fan& fan = tc.fan();

  // Slice fan in kernel coordinates.
  std::vector<IntVector> rays_n, rays0;
  std::map<IntVector, std::size_t> index;
  std::vector<std::vector<std::size_t>> cones0;
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    const Polyhedron tau =
        Polyhedron::from_inequalities(n, fan.cone(c).inequalities(), {{phi, Rational(0)}});
    if (tau.dimension() != static_cast<int>(n0)) continue;
    std::vector<std::size_t> idx;
    for (const auto& r : tau.rays()) {
      auto it = index.find(r);
      if (it == index.end()) {
        it = index.emplace(r, rays_n.size()).first;
        rays_n.push_back(r);
        rays0.push_back(*kernel.coordinates(r));
      }
      idx.push_back(it->second);
    }
    std::sort(idx.begin(), idx.end());
    if (std::find(cones0.begin(), cones0.end(), idx) == cones0.end()) cones0.push_back(idx);
  }

  // Base: basis of pi(N0) and the preimage of sigma_bar.
  const IntMatrix pi0 = tc.pi().matrix() * kt;
  std::vector<IntVector> images;
  for (std::size_t j = 0; j < n0; ++j) images.push_back(pi0.column(j));
  const Sublattice image = Sublattice::span(tc.base_rank(), images);
  sd.image_basis = image.basis();
  const std::size_t k0 = image.rank();
  IntMatrix pi0_coords(k0, n0);
  for (std::size_t j = 0; j < n0; ++j) {
    const IntVector c = *image.coordinates(images[j]);
    for (std::size_t i = 0; i < k0; ++i) pi0_coords(i, j) = c[i];
  }
  const Polyhedron base_cone = tc.sigma_bar().preimage(sd.image_basis.transposed());
  std::vector<IntVector> base_gens = base_cone.rays();
  for (const auto& line : base_cone.lines()) {
    base_gens.push_back(line);
    base_gens.push_back(negated(line));
  }
  sd.contraction = ToricContraction(Fan(n0, rays0, cones0), LatticeHom(pi0_coords), base_gens);

  // Boundary: 1 - lambda a_e on the rays, b-divisor lambda K A.
  sd.coefficients_in_range = true;
  for (std::size_t i = 0; i < rays_n.size(); ++i) {
    const Rational b = 1 - lambda * log_discrepancy(tc, bd, rays_n[i]);
    if (b < 0 || b > 1) sd.coefficients_in_range = false;
    if (b != 0) sd.pair.b_inv[i] = b;
  }
  const GPair folded = fold_general(fan, pair);
  std::vector<RatVector> a0;
  for (const auto& a : folded.bdiv_a.points()) a0.push_back(scaled(sd.kernel_basis * a, lambda));
  sd.pair.bdiv_a = SupportSet(a0);

  sd.u_check = bd.u.preimage(kt).scaled(1 / lambda);
  try {
    sd.contraction.validate();
    sd.invariant_point = k0 > 0;
  } catch (const Error&) {
    sd.invariant_point = false;
  }
  if (sd.coefficients_in_range) {
    try {
      sd.box = box_square(sd.contraction, sd.pair);
      sd.nef = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotNef && e.code() != ErrorCode::kNotCartier) throw;
    }
  }
  if (sd.nef && sd.box.glc) sd.u_identity = sd.box.u.same_set(sd.u_check);
  if (sd.nef && sd.invariant_point && sd.box.glc) {
    const MldResult m = mld_over_fiber(sd.contraction, sd.box);
    if (m.positive) {
      sd.slice_mld = m.value;
      sd.mld_bound = m.value >= lambda * t;
    }
  }

  if (!sd.coefficients_in_range) violation("slice boundary coefficient outside [0,1] (discrepancy bound)");
  if (!sd.nef) violation("slice pair is not relatively nef");
  if (!sd.u_identity) violation("slice polar body differs from lambda^-1 (U cap phi^perp)");
  if (!sd.invariant_point) violation("slice base has no invariant point");
  if (!sd.mld_bound) violation("slice mld below lambda t");
  return sd;
}

namespace {

struct Solved {
  IntVector phibar;
  Rational gamma;
};

Solved solve(const ToricContraction& tc, const GPair& pair, const BoxData& bd, const Rational& t,
             std::size_t level, std::vector<LevelRecord>& transcript) {
  LevelRecord rec;
  rec.level = level;
  rec.rank = tc.rank();
  rec.l = bd.l;
  rec.t = t;
  rec.contraction = tc;
  rec.pair = pair;
  if (bd.l == 0) throw Error(ErrorCode::kNotPositive, "not positive: no lc place is avoided at level " + std::to_string(level));
  const ReducedBox red = reduce_box(bd);
  const IntMatrix& p = red.quotient.projection.matrix();
  Solved out;

  if (bd.l == 1) {
    const IntVector unit = int_vector({1});
    const Rational lo = *red.u.min_value(unit);
    const Rational hi = *red.u.max_value(unit);
    Rational beta;
    if (lo == 0) {
      rec.phi = p.row(0);
      beta = hi;
    } else if (hi == 0) {
      rec.phi = negated(p.row(0));
      beta = -lo;
    } else {
      throw Error(ErrorCode::kHypothesis, "neither orientation of the rank-one functional is non-negative");
    }
    if (t * beta > 1) violation("rank-one body exceeds 1/t");
    rec.kind = "l=1";
    rec.w = beta;
    out.gamma = 1 / beta;
    out.phibar = descend_functional(tc.pi(), rec.phi);
  } else {
    // A boundary functional must reach gamma(l,t) on its own.
    const WidthResult reduced = width_functional(red.u, t, bd.l, 1 / gamma(bd.l, t));
    WidthResult wr = reduced;
    wr.phi = red.quotient.projection.pullback(reduced.phi);
    rec.phi = wr.phi;
    rec.w = wr.w;
    rec.w_minus = wr.w_minus;
    rec.w_plus = wr.w_plus;
    if (wr.zero_on_boundary) {
      rec.kind = "case 1";
      out.gamma = 1 / wr.w;
      out.phibar = descend_functional(tc.pi(), wr.phi);
    } else {
      rec.kind = "case 2";
      rec.lambda = 1 / wr.w;
      rec.lemma_w_gt_1 = wr.w > 1 && std::max(wr.w_minus, wr.w_plus) >= 1;
      const Subdivision sub = subdivide_fan(tc.fan(), wr.phi);
      rec.new_rays = sub.new_rays.size();
      rec.max_subdivision_discrepancy = 0;
      for (const auto& r : sub.fan.rays())
        rec.max_subdivision_discrepancy = std::max(rec.max_subdivision_discrepancy, log_discrepancy(tc, bd, r));
      rec.lemma_discrepancy_le_w = rec.max_subdivision_discrepancy <= wr.w;
      rec.lemma_new_rays = sub.pairwise_formula_agrees;
      if (!rec.lemma_w_gt_1) violation("width of a centred functional is not > 1 at level " + std::to_string(level));
      if (!rec.lemma_discrepancy_le_w) violation("subdivision ray discrepancy exceeds w at level " + std::to_string(level));
      if (!rec.lemma_new_rays) violation("subdivision rays differ from the pairwise formula at level " + std::to_string(level));

      const SliceData sd = slice(tc, pair, bd, wr, rec.lambda, t);
      rec.slice_coefficients = sd.coefficients_in_range;
      rec.slice_nef = sd.nef;
      rec.slice_u_identity = sd.u_identity;
      rec.slice_invariant_point = sd.invariant_point;
      rec.slice_mld_bound = sd.mld_bound;
      rec.slice_mld = sd.slice_mld;
      const Solved below = solve(sd.contraction, sd.pair, sd.box, t / wr.w, level + 1, transcript);
      const auto lifted = lift_hyperplane(tc, bd, sd, below.phibar, below.gamma, wr, rec);
      out.phibar = lifted.first;
      out.gamma = lifted.second;
    }
  }
  rec.gamma = out.gamma;
  rec.phi_bar = out.phibar;
  transcript.push_back(std::move(rec));
  return out;
}

}  // namespace

HyperplaneCertificate find_hyperplane(const ToricContraction& tc, const GPair& pair) {
  tc.validate();
  validate_pair(tc.fan(), pair);
  const BoxData bd = box_square(tc, pair);
  if (!bd.glc) throw Error(ErrorCode::kNotLogCanonical, "not g-lc: 0 is not in the box");
  const MldResult m = mld_over_fiber(tc, bd);
  if (!m.positive) throw Error(ErrorCode::kNotPositive, "not positive: mld over the fibre is not positive");

  HyperplaneCertificate cert;
  cert.mld = m.value;
  cert.d = tc.rank();
  cert.l = bd.l;
  const Solved s = solve(tc, pair, bd, m.value, 0, cert.transcript);
  std::sort(cert.transcript.begin(), cert.transcript.end(),
            [](const LevelRecord& a, const LevelRecord& b) { return a.level < b.level; });
  cert.phi_bar = s.phibar;
  cert.gamma = s.gamma;
  return cert;
}

VerifyResult verify_certificate(const ToricContraction& tc, const GPair& pair, const HyperplaneCertificate& cert) {
  VerifyResult out;
  auto fail = [&](const std::string& why) {
    out.ok = false;
    out.reasons.push_back(why);
  };
  try {
    tc.validate();
    validate_pair(tc.fan(), pair);
    if (cert.phi_bar.size() != tc.base_rank()) {
      fail("hyperplane functional has wrong length");
      return out;
    }
    if (is_zero(cert.phi_bar)) {
      fail("hyperplane functional is zero");
      return out;
    }
    if (!is_primitive(cert.phi_bar)) fail("hyperplane functional is not primitive");
    for (const auto& r : tc.sigma_bar().rays())
      if (dot(cert.phi_bar, r) < 0) fail("hyperplane functional is negative on the base cone");
    if (cert.gamma <= 0) fail("gamma is not positive");
    if (cert.d != tc.rank()) fail("certificate dimension differs from the lattice rank");
    const BoxData bd = box_square(tc, pair);
    if (!bd.glc) {
      fail("pair is not g-lc");
      return out;
    }
    const RatVector point = scaled(to_rational(tc.pi().pullback(cert.phi_bar)), Rational(-cert.gamma));
    if (!bd.box.contains(point)) fail("-gamma pi^*(phibar) is not in the box");
    const MldResult m = mld_over_fiber(tc, bd);
    if (!m.positive) {
      fail("mld over the fibre is not positive");
    } else if (cert.gamma > 0 && cert.gamma < gamma(tc.rank(), m.value)) {
      fail("gamma " + to_string(cert.gamma) + " is below gamma(d, mld) = " + to_string(gamma(tc.rank(), m.value)));
    }
  } catch (const Error& e) {
    fail(e.what());
  }
  return out;
}

}  // namespace toricmld
