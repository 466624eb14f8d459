#include "toricmld/polyhedral.hpp"

#include "double_description.hpp"

namespace toricmld {

namespace {

struct VRep {
  std::vector<RatVector> vertices;
  std::vector<IntVector> rays;
  std::vector<IntVector> lines;
};

struct HRep {
  std::vector<Inequality> inequalities;
  std::vector<Inequality> equations;
};

bool inequality_less(const Inequality& a, const Inequality& b) {
  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
  return a.offset < b.offset;
}

IntVector homogenized_row(const IntVector& normal, const Rational& offset) {
  // normal.x >= offset  <=>  den*normal.x - num*s >= 0
  const Integer den = offset.get_den();
  IntVector row = scaled(normal, den);
  row.push_back(-offset.get_num());
  return row;
}

std::optional<VRep> h_to_v(std::size_t dim, const std::vector<Inequality>& inequalities,
                           const std::vector<Inequality>& equations) {
  std::vector<IntVector> rows, eq_rows;
  for (const auto& h : inequalities) {
    require_same_size(h.normal.size(), dim, "inequality");
    rows.push_back(homogenized_row(h.normal, h.offset));
  }
  for (const auto& h : equations) {
    require_same_size(h.normal.size(), dim, "equation");
    eq_rows.push_back(homogenized_row(h.normal, h.offset));
  }
  IntVector s(dim + 1, Integer(0));
  s[dim] = 1;
  rows.push_back(s);
  const auto gens = detail::cone_generators(dim + 1, rows, eq_rows);

  VRep v;
  for (const auto& r : gens.rays) {
    IntVector x(r.begin(), r.end() - 1);
    if (r[dim] > 0) {
      RatVector p(dim);
      for (std::size_t i = 0; i < dim; ++i) p[i] = Rational(x[i], r[dim]);
      for (auto& c : p) c.canonicalize();
      v.vertices.push_back(std::move(p));
    } else {
      v.rays.push_back(primitive(x));
    }
  }
  if (v.vertices.empty()) return std::nullopt;
  for (const auto& l : gens.lines) v.lines.emplace_back(l.begin(), l.end() - 1);
  return v;
}

HRep v_to_h(std::size_t dim, const VRep& v) {
  std::vector<IntVector> rows, eq_rows;
  for (const auto& p : v.vertices) {
    require_same_size(p.size(), dim, "vertex");
    auto [w, den] = clear_denominators(p);
    w.push_back(den);
    rows.push_back(std::move(w));
  }
  for (const auto& r : v.rays) {
    require_same_size(r.size(), dim, "ray");
    IntVector row = r;
    row.push_back(0);
    rows.push_back(std::move(row));
  }
  for (const auto& l : v.lines) {
    require_same_size(l.size(), dim, "line");
    IntVector row = l;
    row.push_back(0);
    eq_rows.push_back(std::move(row));
  }
  const auto gens = detail::cone_generators(dim + 1, rows, eq_rows);

  auto to_constraint = [dim](const IntVector& r) -> std::optional<Inequality> {
    IntVector a(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(dim));
    const Integer g = gcd_of(a);
    if (g == 0) return std::nullopt;
    Inequality h;
    h.normal.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) h.normal[i] = a[i] / g;
    h.offset = Rational(-r[dim], g);
    h.offset.canonicalize();
    return h;
  };

  HRep h;
  for (const auto& r : gens.rays) {
    if (auto c = to_constraint(r)) h.inequalities.push_back(std::move(*c));
  }
  for (const auto& l : gens.lines) {
    auto c = to_constraint(l);
    if (!c) continue;
    const auto first = std::find_if(c->normal.begin(), c->normal.end(),
                                    [](const Integer& x) { return x != 0; });
    if (*first < 0) {
      c->normal = negated(c->normal);
      c->offset = -c->offset;
    }
    h.equations.push_back(std::move(*c));
  }
  return h;
}

}  // namespace

Polyhedron Polyhedron::empty(std::size_t dim) {
  Polyhedron p;
  p.dim_ = dim;
  p.empty_ = true;
  p.inequalities_.push_back({IntVector(dim, Integer(0)), Rational(1)});
  return p;
}

Polyhedron Polyhedron::from_inequalities(std::size_t dim, const std::vector<Inequality>& inequalities,
                                         const std::vector<Inequality>& equations) {
  const auto v = h_to_v(dim, inequalities, equations);
  if (!v) return empty(dim);
  HRep h = v_to_h(dim, *v);
  Polyhedron p;
  p.dim_ = dim;
  p.empty_ = false;
  p.vertices_ = v->vertices;
  p.rays_ = v->rays;
  p.lines_ = v->lines;
  p.inequalities_ = std::move(h.inequalities);
  p.equations_ = std::move(h.equations);
  std::sort(p.vertices_.begin(), p.vertices_.end(), lex_less<RatVector>);
  std::sort(p.rays_.begin(), p.rays_.end(), lex_less<IntVector>);
  std::sort(p.inequalities_.begin(), p.inequalities_.end(), inequality_less);
  std::sort(p.equations_.begin(), p.equations_.end(), inequality_less);
  return p;
}

Polyhedron Polyhedron::from_generators(std::size_t dim, const std::vector<RatVector>& points,
                                       const std::vector<IntVector>& rays,
                                       const std::vector<IntVector>& lines) {
  if (points.empty()) return empty(dim);
  VRep v;
  v.vertices = points;
  for (const auto& r : rays)
    if (!is_zero(r)) v.rays.push_back(primitive(r));
  for (const auto& l : lines)
    if (!is_zero(l)) v.lines.push_back(primitive(l));
  const HRep h = v_to_h(dim, v);
  return from_inequalities(dim, h.inequalities, h.equations);
}

Polyhedron Polyhedron::cone(std::size_t dim, const std::vector<IntVector>& rays,
                            const std::vector<IntVector>& lines) {
  return from_generators(dim, {RatVector(dim, Rational(0))}, rays, lines);
}

int Polyhedron::dimension() const {
  if (empty_) return -1;
  return static_cast<int>(dim_) - static_cast<int>(equations_.size());
}

bool Polyhedron::is_cone() const {
  if (empty_) return false;
  for (const auto& h : inequalities_)
    if (h.offset != 0) return false;
  for (const auto& h : equations_)
    if (h.offset != 0) return false;
  return true;
}

bool Polyhedron::contains(const RatVector& x) const {
  require_same_size(x.size(), dim_, "Polyhedron::contains");
  if (empty_) return false;
  for (const auto& h : equations_)
    if (dot(h.normal, x) != h.offset) return false;
  for (const auto& h : inequalities_)
    if (dot(h.normal, x) < h.offset) return false;
  return true;
}

bool Polyhedron::strict_interior_contains(const RatVector& x) const {
  if (!is_full_dimensional()) {
    throw Error(ErrorCode::kNotFullDimensional, "strict interior of a lower-dimensional polyhedron");
  }
  require_same_size(x.size(), dim_, "Polyhedron::strict_interior_contains");
  for (const auto& h : inequalities_)
    if (dot(h.normal, x) <= h.offset) return false;
  return true;
}

bool Polyhedron::relative_interior_contains(const RatVector& x) const {
  require_same_size(x.size(), dim_, "Polyhedron::relative_interior_contains");
  if (empty_) return false;
  for (const auto& h : equations_)
    if (dot(h.normal, x) != h.offset) return false;
  for (const auto& h : inequalities_)
    if (dot(h.normal, x) <= h.offset) return false;
  return true;
}

bool Polyhedron::includes(const Polyhedron& other) const {
  require_same_size(other.dim_, dim_, "Polyhedron::includes");
  if (other.empty_) return true;
  if (empty_) return false;
  for (const auto& v : other.vertices_)
    if (!contains(v)) return false;
  for (const auto& r : other.rays_) {
    for (const auto& h : equations_)
      if (dot(h.normal, r) != 0) return false;
    for (const auto& h : inequalities_)
      if (dot(h.normal, r) < 0) return false;
  }
  for (const auto& l : other.lines_) {
    for (const auto& h : equations_)
      if (dot(h.normal, l) != 0) return false;
    for (const auto& h : inequalities_)
      if (dot(h.normal, l) != 0) return false;
  }
  return true;
}

Polyhedron Polyhedron::recession_cone() const {
  if (empty_) return empty(dim_);
  return cone(dim_, rays_, lines_);
}

Polyhedron Polyhedron::lineality_space() const {
  if (empty_) return empty(dim_);
  return cone(dim_, {}, lines_);
}

Polyhedron Polyhedron::scaled(const Rational& t) const {
  if (t < 0) throw Error(ErrorCode::kInvalidGeometry, "negative scaling factor");
  if (empty_) return *this;
  if (t == 0) return point(RatVector(dim_, Rational(0)));
  Polyhedron p = *this;
  for (auto& v : p.vertices_) v = toricmld::scaled(v, t);
  for (auto& h : p.inequalities_) h.offset *= t;
  for (auto& h : p.equations_) h.offset *= t;
  return p;
}

Polyhedron Polyhedron::translated(const RatVector& v) const {
  require_same_size(v.size(), dim_, "Polyhedron::translated");
  if (empty_) return *this;
  Polyhedron p = *this;
  for (auto& x : p.vertices_) x = add(x, v);
  for (auto& h : p.inequalities_) h.offset += dot(h.normal, v);
  for (auto& h : p.equations_) h.offset += dot(h.normal, v);
  return p;
}

Polyhedron Polyhedron::image(const IntMatrix& m) const {
  require_same_size(m.cols(), dim_, "Polyhedron::image");
  if (empty_) return empty(m.rows());
  std::vector<RatVector> points;
  std::vector<IntVector> rays, lines;
  for (const auto& v : vertices_) points.push_back(m * v);
  for (const auto& r : rays_) rays.push_back(m * r);
  for (const auto& l : lines_) lines.push_back(m * l);
  return from_generators(m.rows(), points, rays, lines);
}

Polyhedron Polyhedron::preimage(const IntMatrix& m) const {
  require_same_size(m.rows(), dim_, "Polyhedron::preimage");
  if (empty_) return empty(m.cols());
  const IntMatrix mt = m.transposed();
  std::vector<Inequality> ineqs, eqs;
  for (const auto& h : inequalities_) ineqs.push_back({mt * h.normal, h.offset});
  for (const auto& h : equations_) eqs.push_back({mt * h.normal, h.offset});
  return from_inequalities(m.cols(), ineqs, eqs);
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
  require_same_size(other.dim_, dim_, "Polyhedron::intersect");
  if (empty_ || other.empty_) return empty(dim_);
  std::vector<Inequality> ineqs = inequalities_;
  ineqs.insert(ineqs.end(), other.inequalities_.begin(), other.inequalities_.end());
  std::vector<Inequality> eqs = equations_;
  eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
  return from_inequalities(dim_, ineqs, eqs);
}

Polyhedron Polyhedron::minkowski_sum(const Polyhedron& other) const {
  require_same_size(other.dim_, dim_, "Polyhedron::minkowski_sum");
  if (empty_ || other.empty_) return empty(dim_);
  std::vector<RatVector> points;
  for (const auto& a : vertices_)
    for (const auto& b : other.vertices_) points.push_back(add(a, b));
  std::vector<IntVector> rays = rays_;
  rays.insert(rays.end(), other.rays_.begin(), other.rays_.end());
  std::vector<IntVector> lines = lines_;
  lines.insert(lines.end(), other.lines_.begin(), other.lines_.end());
  return from_generators(dim_, points, rays, lines);
}

Polyhedron Polyhedron::polar_dual() const {
  if (!contains_origin()) {
    throw Error(ErrorCode::kOriginNotContained, "polar dual of a polyhedron not containing 0");
  }
  std::vector<Inequality> ineqs, eqs;
  for (const auto& v : vertices_) {
    if (is_zero(v)) continue;
    auto [w, den] = clear_denominators(v);
    ineqs.push_back({std::move(w), Rational(-den)});
  }
  for (const auto& r : rays_) ineqs.push_back({r, Rational(0)});
  for (const auto& l : lines_) eqs.push_back({l, Rational(0)});
  return from_inequalities(dim_, ineqs, eqs);
}

Polyhedron Polyhedron::dual_cone() const {
  if (!is_cone()) throw Error(ErrorCode::kInvalidGeometry, "dual_cone of a non-cone");
  std::vector<Inequality> ineqs, eqs;
  for (const auto& r : rays_) ineqs.push_back({r, Rational(0)});
  for (const auto& l : lines_) eqs.push_back({l, Rational(0)});
  return from_inequalities(dim_, ineqs, eqs);
}

std::optional<Rational> Polyhedron::min_value(const RatVector& f) const {
  require_same_size(f.size(), dim_, "Polyhedron::min_value");
  if (empty_) throw Error(ErrorCode::kEmpty, "optimization over the empty set");
  for (const auto& l : lines_)
    if (dot(f, l) != 0) return std::nullopt;
  for (const auto& r : rays_)
    if (dot(f, r) < 0) return std::nullopt;
  Rational best = dot(f, vertices_.front());
  for (const auto& v : vertices_) best = std::min(best, dot(f, v));
  return best;
}

std::optional<Rational> Polyhedron::max_value(const RatVector& f) const {
  RatVector neg(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) neg[i] = -f[i];
  const auto m = min_value(neg);
  if (!m) return std::nullopt;
  return Rational(-*m);
}

std::string to_string(const Polyhedron& p) {
  if (p.is_empty()) return "{}";
  std::string s = "conv{";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) s += ",";
    s += to_string(p.vertices()[i]);
  }
  s += "}";
  if (!p.rays().empty()) {
    s += "+cone{";
    for (std::size_t i = 0; i < p.rays().size(); ++i) {
      if (i) s += ",";
      s += to_string(p.rays()[i]);
    }
    s += "}";
  }
  if (!p.lines().empty()) {
    s += "+span{";
    for (std::size_t i = 0; i < p.lines().size(); ++i) {
      if (i) s += ",";
      s += to_string(p.lines()[i]);
    }
    s += "}";
  }
  return s;
}

SupportSet::SupportSet(std::vector<RatVector> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::kEmpty, "support set must be nonempty");
  for (auto& p : points_) {
    require_same_size(p.size(), points_.front().size(), "SupportSet");
    for (auto& x : p) x.canonicalize();
  }
  std::sort(points_.begin(), points_.end(), lex_less<RatVector>);
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

SupportSet SupportSet::scaled(const Rational& t) const {
  std::vector<RatVector> out;
  for (const auto& p : points_) out.push_back(toricmld::scaled(p, t));
  return SupportSet(std::move(out));
}

SupportSet SupportSet::translated(const RatVector& m) const {
  std::vector<RatVector> out;
  for (const auto& p : points_) out.push_back(add(p, m));
  return SupportSet(std::move(out));
}

SupportSet SupportSet::operator+(const SupportSet& other) const {
  std::vector<RatVector> out;
  for (const auto& a : points_)
    for (const auto& b : other.points_) out.push_back(add(a, b));
  return SupportSet(std::move(out));
}

Polyhedron SupportSet::hull() const { return Polyhedron::from_generators(dim(), points_); }

Rational support_value(const SupportSet& a, const RatVector& e) {
  require_same_size(a.dim(), e.size(), "support_value");
  Rational best = dot(a.points().front(), e);
  for (const auto& p : a.points()) best = std::min(best, dot(p, e));
  return best;
}

Rational support_value(const SupportSet& a, const IntVector& e) {
  return support_value(a, to_rational(e));
}

std::optional<Rational> gauge(const Polyhedron& p, const RatVector& x) {
  if (!p.is_bounded()) throw Error(ErrorCode::kUnbounded, "gauge of an unbounded polyhedron");
  if (!p.contains_origin()) {
    throw Error(ErrorCode::kOriginNotContained, "gauge of a polyhedron not containing 0");
  }
  require_same_size(x.size(), p.ambient_dim(), "gauge");
  for (const auto& h : p.equations())
    if (dot(h.normal, x) != 0) return std::nullopt;
  Rational t = 0;
  for (const auto& h : p.inequalities()) {
    const Rational v = dot(h.normal, x);
    if (h.offset == 0) {
      if (v < 0) return std::nullopt;
    } else {
      t = std::max(t, Rational(v / h.offset));
    }
  }
  return t;
}

std::optional<Rational> gauge(const Polyhedron& p, const IntVector& x) {
  return gauge(p, to_rational(x));
}

Interval interval_image(const IntVector& phi, const Polyhedron& p) {
  Interval out;
  out.lo = p.min_value(phi);
  out.hi = p.max_value(phi);
  const bool below = !out.lo || *out.lo < 0;
  const bool above = !out.hi || *out.hi > 0;
  if (below && above) {
    out.zero = ZeroPosition::kInterior;
  } else if ((out.lo && *out.lo == 0) || (out.hi && *out.hi == 0)) {
    out.zero = ZeroPosition::kBoundary;
  } else {
    out.zero = ZeroPosition::kOutside;
  }
  return out;
}

std::vector<IntVector> lattice_points(const Polyhedron& p) {
  if (p.is_empty()) return {};
  if (!p.is_bounded()) throw Error(ErrorCode::kUnbounded, "lattice points of an unbounded polyhedron");
  const std::size_t n = p.ambient_dim();
  IntVector lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = p.vertices().front()[i], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil_of(mn);
    hi[i] = floor_of(mx);
    if (lo[i] > hi[i]) return {};
  }
  std::vector<IntVector> out;
  IntVector x = lo;
  while (true) {
    if (p.contains(x)) out.push_back(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        for (std::size_t j = i + 1; j < n; ++j) x[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace toricmld
