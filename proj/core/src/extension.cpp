#include "toricmld/hyperplane_search.hpp"

namespace toricmld {

namespace {

[[noreturn]] void hypothesis(const std::string& what) {
  throw Error(ErrorCode::kHypothesis, "hypothesis violated: " + what);
}

[[noreturn]] void violation(const std::string& what) {
  throw Error(ErrorCode::kLemmaViolation, "lemma violation: " + what);
}

}  // namespace

ExtensionTrace extend_functional(const std::vector<IntVector>& generators, const Polyhedron& c,
                                 const IntVector& phi, const IntVector& phi0, const Rational& l0) {
  const std::size_t n = phi.size();
  require_same_size(c.ambient_dim(), n, "extend_functional");
  const Sublattice kernel = kernel_sublattice(phi);
  require_same_size(phi0.size(), kernel.rank(), "extend_functional kernel functional");
  if (!c.contains_origin()) hypothesis("C does not contain the origin");
  for (const auto& g : generators) {
    require_same_size(g.size(), n, "extend_functional generator");
    if (!c.contains(g)) hypothesis("generator " + to_string(g) + " is not in C");
  }
  if (!Polyhedron::cone(n, generators).includes(c)) hypothesis("C is not inside the cone of the generators");
  const auto lo = c.min_value(phi);
  const auto hi = c.max_value(phi);
  if (!lo || !hi || *lo >= 0 || *hi <= 0) hypothesis("0 is not interior to phi(C)");
  if (l0 <= 0) hypothesis("l0 must be positive");
  const Polyhedron c0 = c.preimage(kernel.basis().transposed());
  const auto lo0 = c0.min_value(phi0);
  const auto hi0 = c0.max_value(phi0);
  if (!lo0 || !hi0 || *lo0 < 0 || *hi0 > l0) hypothesis("phi0(C0) is not inside [0, l0]");

  ExtensionTrace tr;
  tr.phi1 = phi;
  tr.phi2 = extend_hom(kernel, phi0);
  tr.w_minus = -*lo;
  tr.w_plus = *hi;
  tr.l0 = l0;
  tr.minus_branch = tr.w_minus <= tr.w_plus;

  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Integer v1 = dot(phi, generators[i]);
    const Integer v2 = dot(tr.phi2, generators[i]);
    if (tr.minus_branch && v1 < 0) {
      const Rational ratio(v2, -v1);
      if (!best || ratio < tr.c) {
        best = i;
        tr.c = ratio;
      }
    } else if (!tr.minus_branch && v1 > 0) {
      const Rational ratio(-v2, v1);
      if (!best || ratio > tr.c) {
        best = i;
        tr.c = ratio;
      }
    }
  }
  if (!best) hypothesis("no generator on the required side of phi");
  tr.c.canonicalize();
  tr.generator = *best;
  const IntVector& e = generators[*best];
  const Integer v1 = dot(phi, e);
  const Integer v2 = dot(tr.phi2, e);
  if (tr.minus_branch) {
    tr.q = -v1;
    tr.phi_prime = add(scaled(phi, v2), scaled(tr.phi2, tr.q));
  } else {
    tr.q = v1;
    tr.phi_prime = subtract(scaled(tr.phi2, tr.q), scaled(phi, v2));
  }

  const Rational w = tr.w_minus + tr.w_plus;
  if (tr.q < 1 || Rational(tr.q) >= w) violation("q = " + to_string(tr.q) + " outside [1, w)");
  if (kernel.basis() * tr.phi_prime != scaled(phi0, tr.q)) {
    violation("extension does not restrict to q * phi0 on the kernel");
  }
  const auto mn = c.min_value(tr.phi_prime);
  const auto mx = c.max_value(tr.phi_prime);
  if (!mn || !mx || *mn < 0 || *mx > w * l0) violation("phi'(C) is not inside [0, w l0]");
  return tr;
}

IntVector descend_functional(const LatticeHom& pi, const IntVector& phi) {
  const IntMatrix s = pi.section();
  IntVector phibar(pi.target_rank(), Integer(0));
  for (std::size_t j = 0; j < pi.target_rank(); ++j)
    for (std::size_t i = 0; i < pi.source_rank(); ++i) phibar[j] += s(i, j) * phi[i];
  if (pi.pullback(phibar) != phi) {
    throw Error(ErrorCode::kDescentFailed,
                "descent failed: " + to_string(phi) + " is not pulled back from the base");
  }
  return phibar;
}

std::pair<IntVector, Rational> lift_hyperplane(const ToricContraction& tc, const BoxData& bd,
                                               const SliceData& sd, const IntVector& phibar0,
                                               const Rational& gamma1, const WidthResult& width,
                                               LevelRecord& record) {
  const IntVector phi0 = sd.contraction.pi().pullback(phibar0);
  const Polyhedron u0 = bd.u.preimage(sd.kernel_basis.transposed());
  const auto l0 = u0.max_value(phi0);
  if (!l0 || *l0 <= 0) violation("slice hyperplane is not positive on the slice body");
  if (*l0 * gamma1 > sd.lambda) violation("slice certificate exceeds its threshold");

  const ExtensionTrace tr = extend_functional(tc.fan().rays(), bd.u, width.phi, phi0, *l0);
  IntVector phibar = descend_functional(tc.pi(), tr.phi_prime);
  Rational g = gamma1 / (sd.lambda * width.w);

  // u^* is restriction to the image lattice basis.
  record.pullback_compatible = sd.image_basis * phibar == scaled(phibar0, tr.q);
  if (!record.pullback_compatible) violation("q * phibar0 differs from u^*(phibar)");

  const Integer k = gcd_of(phibar);
  record.primitive_divisor = k;
  if (k > 1) {
    phibar = primitive(phibar);
    g *= k;
  }
  const IntVector phi = tc.pi().pullback(phibar);
  if (!bd.box.contains(scaled(to_rational(phi), Rational(-g)))) {
    violation("lifted hyperplane fails the threshold membership test");
  }
  record.q = tr.q;
  record.c = tr.c;
  record.minus_branch = tr.minus_branch;
  return {phibar, g};
}

}  // namespace toricmld
