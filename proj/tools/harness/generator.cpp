#include "generator.hpp"

#include <algorithm>
#include <random>

namespace toricmld::harness {

namespace {

// Portable draws: plain modulo on the engine output.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  long range(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool chance(long num, long den) { return range(1, den) <= num; }
  template <typename T>
  const T& pick(const std::vector<T>& xs) { return xs[static_cast<std::size_t>(range(0, static_cast<long>(xs.size()) - 1))]; }

 private:
  std::mt19937_64 engine_;
};

Integer cross(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

// Counter-clockwise order for vectors in a closed half-plane.
void sort_by_angle(std::vector<IntVector>& v) {
  std::sort(v.begin(), v.end(), [](const IntVector& a, const IntVector& b) { return cross(a, b) > 0; });
}

IntVector random_primitive(Draw& d, std::size_t n, long lo, long hi) {
  while (true) {
    IntVector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Integer(d.range(lo, hi)));
    if (!is_zero(v)) return primitive(v);
  }
}

// Rays of a pointed planar cone subdivided by up to two interior rays, in order.
std::vector<IntVector> planar_cone(Draw& d) {
  IntVector r1, r2;
  do {
    r1 = random_primitive(d, 2, -2, 3);
    r2 = random_primitive(d, 2, -2, 3);
  } while (cross(r1, r2) <= 0);
  std::vector<IntVector> rays = {r1, r2};
  const long extra = d.range(0, 2);
  for (long i = 0; i < extra; ++i) {
    const IntVector r = primitive(add(scaled(r1, Integer(d.range(1, 3))), scaled(r2, Integer(d.range(1, 3)))));
    if (std::find(rays.begin(), rays.end(), r) == rays.end()) rays.push_back(r);
  }
  sort_by_angle(rays);
  return rays;
}

IntMatrix random_unimodular(Draw& d, std::size_t n) {
  IntMatrix g = IntMatrix::identity(n);
  if (n < 2) return g;
  for (int step = 0; step < 3; ++step) {
    const auto i = static_cast<std::size_t>(d.range(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(d.range(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    const Integer c = d.range(-1, 1);
    for (std::size_t col = 0; col < n; ++col) g(i, col) += c * g(j, col);
  }
  return g;
}

struct Shape {
  std::size_t n = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> cones;
  std::vector<IntVector> pi;
};

Shape make_shape(Draw& d) {
  Shape s;
  switch (d.range(0, 5)) {
    case 0: {
      s.n = 1;
      s.rays = {int_vector({1})};
      s.cones = {{0}};
      s.pi = {int_vector({1})};
      break;
    }
    case 1: {
      s.n = 2;
      s.rays = planar_cone(d);
      for (std::size_t i = 0; i + 1 < s.rays.size(); ++i) s.cones.push_back({i, i + 1});
      s.pi = {int_vector({1, 0}), int_vector({0, 1})};
      break;
    }
    case 2: {
      s.n = 2;
      s.rays = {int_vector({0, -1}), int_vector({0, 1})};
      const long extra = d.range(1, 3);
      for (long i = 0; i < extra; ++i) {
        const IntVector r = primitive(int_vector({d.range(1, 2), d.range(-2, 2)}));
        if (std::find(s.rays.begin(), s.rays.end(), r) == s.rays.end()) s.rays.push_back(r);
      }
      sort_by_angle(s.rays);
      for (std::size_t i = 0; i + 1 < s.rays.size(); ++i) s.cones.push_back({i, i + 1});
      s.pi = {int_vector({1, 0})};
      break;
    }
    case 3: {
      s.n = 3;
      IntMatrix m;
      do {
        m = IntMatrix::from_rows(3, {random_primitive(d, 3, -1, 2), random_primitive(d, 3, -1, 2),
                                     random_primitive(d, 3, -1, 2)});
      } while (determinant(m) <= 0);
      s.rays = m.row_list();
      if (d.chance(1, 2)) {
        s.rays.push_back(primitive(add(add(s.rays[0], s.rays[1]), scaled(s.rays[2], Integer(d.range(1, 2))))));
        s.cones = {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}};
      } else {
        s.cones = {{0, 1, 2}};
      }
      s.pi = IntMatrix::identity(3).row_list();
      break;
    }
    case 4: {
      s.n = 3;
      const std::vector<IntVector> base = planar_cone(d);
      s.rays = {int_vector({0, 0, 1}), int_vector({0, 0, -1})};
      for (const auto& b : base) s.rays.push_back({b[0], b[1], Integer(d.range(-1, 1))});
      for (std::size_t i = 2; i + 1 < s.rays.size(); ++i) {
        s.cones.push_back({0, i, i + 1});
        s.cones.push_back({1, i, i + 1});
      }
      s.pi = {int_vector({1, 0, 0}), int_vector({0, 1, 0})};
      break;
    }
    default: {
      s.n = 3;
      s.rays = {int_vector({0, 1, 0}), int_vector({0, -1, 0}), int_vector({0, 0, 1}), int_vector({0, 0, -1}),
                int_vector({1, d.range(-1, 1), d.range(-1, 1)})};
      s.cones = {{0, 2, 4}, {0, 3, 4}, {1, 2, 4}, {1, 3, 4}};
      s.pi = {int_vector({1, 0, 0})};
      break;
    }
  }
  // Change of basis of N: rays -> g r, pi -> pi g^-1.
  const IntMatrix g = random_unimodular(d, s.n);
  const IntMatrix g_inv = unimodular_inverse(g);
  for (auto& r : s.rays) r = g * r;
  s.pi = (IntMatrix::from_rows(s.n, s.pi) * g_inv).row_list();
  return s;
}

bool acceptable(const Instance& inst) {
  try {
    const ToricContraction tc = inst.contraction();
    tc.validate();
    const GPair pair = inst.pair();
    validate_pair(tc.fan(), pair);
    const BoxData bd = box_square(tc, pair);
    if (!bd.glc || tc.base_rank() == 0) return false;
    return mld_over_fiber(tc, bd).positive;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Instance generate_instance(std::uint64_t seed) {
  Draw d(seed);
  const std::vector<Rational> coefficients = {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                              Rational(3, 4), Rational(1)};
  const std::vector<Rational> offsets = {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)};
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const Shape s = make_shape(d);
    Instance inst;
    inst.comment = "generated, seed " + std::to_string(seed) + ", attempt " + std::to_string(attempt);
    inst.rank_n = s.n;
    inst.rays = s.rays;
    inst.max_cones = s.cones;
    inst.pi = s.pi;
    for (std::size_t i = 0; i < s.rays.size(); ++i)
      if (d.chance(1, 2)) inst.b[i] = d.pick(coefficients);
    inst.bdiv_a = {RatVector(s.n, Rational(0))};
    if (d.chance(1, 3)) {
      RatVector p;
      for (std::size_t i = 0; i < s.n; ++i) p.push_back(d.pick(offsets));
      inst.bdiv_a.push_back(p);
    }
    if (d.chance(1, 5)) {
      GeneralEntry g{d.pick(coefficients) / 2, {}};
      for (int k = 0; k < 2; ++k) g.a.push_back(random_primitive(d, s.n, 0, 2));
      inst.general.push_back(g);
    }
    if (acceptable(inst)) return inst;
  }
  throw Error(ErrorCode::kHypothesis, "no valid instance generated for seed " + std::to_string(seed));
}

}  // namespace toricmld::harness
