#include "oracle.hpp"

namespace toricmld::harness {

OracleResult oracle_mld(const ToricContraction& tc, const GPair& pair, long radius) {
  if (radius < 1) throw Error(ErrorCode::kHypothesis, "box radius must be positive");
  const std::size_t n = tc.rank();
  const GPair folded = fold_general(tc.fan(), pair);
  const CartierData psi = cartier_psi(tc, folded);
  const auto& base = tc.sigma_bar().inequalities();

  OracleResult out;
  IntVector x(n, Integer(-radius));
  while (true) {
    if (is_primitive(x)) {
      const IntVector y = tc.pi().apply(x);
      bool interior = true;
      for (const auto& h : base)
        if (dot(h.normal, y) <= 0) interior = false;
      if (interior && tc.fan().cone_containing(x)) {
        ++out.candidates;
        const Rational a = log_discrepancy_by_cone(tc, folded, psi, x);
        if (!out.found || a < out.value) {
          out.found = true;
          out.value = a;
          out.point = x;
        }
      }
    }
    std::size_t i = n;
    while (i > 0 && x[i - 1] == radius) x[--i] = -radius;
    if (i == 0) break;
    ++x[i - 1];
  }
  return out;
}

}  // namespace toricmld::harness
