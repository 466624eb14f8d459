#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricmld/lattice.hpp"
#include "toricmld/numeric.hpp"

namespace toricmld {

/// <normal, x> >= offset (or == offset when used as an equation).
struct Inequality {
  IntVector normal;
  Rational offset;

  bool operator==(const Inequality&) const = default;
};

/// Exact rational polyhedron conv(vertices) + cone(rays) + span(lines),
/// kept simultaneously in minimal V- and H-representation.
class Polyhedron {
 public:
  Polyhedron() = default;

  static Polyhedron from_generators(std::size_t dim, const std::vector<RatVector>& points,
                                    const std::vector<IntVector>& rays = {},
                                    const std::vector<IntVector>& lines = {});
  static Polyhedron from_inequalities(std::size_t dim, const std::vector<Inequality>& inequalities,
                                      const std::vector<Inequality>& equations = {});
  /// cone(rays) + span(lines) with apex at the origin.
  static Polyhedron cone(std::size_t dim, const std::vector<IntVector>& rays,
                         const std::vector<IntVector>& lines = {});
  static Polyhedron empty(std::size_t dim);
  static Polyhedron point(const RatVector& p) { return from_generators(p.size(), {p}); }

  std::size_t ambient_dim() const { return dim_; }
  bool is_empty() const { return empty_; }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lines() const { return lines_; }
  const std::vector<Inequality>& inequalities() const { return inequalities_; }
  const std::vector<Inequality>& equations() const { return equations_; }

  /// Affine dimension; -1 for the empty set.
  int dimension() const;
  bool is_full_dimensional() const { return !empty_ && equations_.empty(); }
  bool is_bounded() const { return rays_.empty() && lines_.empty(); }
  bool is_cone() const;

  bool contains(const RatVector& x) const;
  bool contains(const IntVector& x) const { return contains(to_rational(x)); }
  bool contains_origin() const { return contains(RatVector(dim_, Rational(0))); }
  /// Every inequality strict at x. Requires a full-dimensional polyhedron.
  bool strict_interior_contains(const RatVector& x) const;
  bool strict_interior_contains(const IntVector& x) const {
    return strict_interior_contains(to_rational(x));
  }
  /// Relative interior membership (strict on inequalities, equations hold).
  bool relative_interior_contains(const RatVector& x) const;

  /// other is a subset of *this.
  bool includes(const Polyhedron& other) const;
  bool same_set(const Polyhedron& other) const { return includes(other) && other.includes(*this); }

  Polyhedron recession_cone() const;
  Polyhedron lineality_space() const;
  Polyhedron scaled(const Rational& t) const;
  Polyhedron translated(const RatVector& v) const;
  /// Image under the linear map x -> m x.
  Polyhedron image(const IntMatrix& m) const;
  /// Preimage {x : m x in P} for m : Q^k -> Q^dim.
  Polyhedron preimage(const IntMatrix& m) const;
  Polyhedron intersect(const Polyhedron& other) const;
  Polyhedron minkowski_sum(const Polyhedron& other) const;
  /// {y : <x, y> >= -1 for all x in P}. Requires 0 in P.
  Polyhedron polar_dual() const;
  /// {y : <x, y> >= 0 for all x in P}. Requires a cone.
  Polyhedron dual_cone() const;

  /// Minimum of <f, .> over P; nullopt when unbounded below. Throws kEmpty.
  std::optional<Rational> min_value(const RatVector& f) const;
  std::optional<Rational> max_value(const RatVector& f) const;
  std::optional<Rational> min_value(const IntVector& f) const { return min_value(to_rational(f)); }
  std::optional<Rational> max_value(const IntVector& f) const { return max_value(to_rational(f)); }

 private:
  std::size_t dim_ = 0;
  bool empty_ = true;
  std::vector<RatVector> vertices_;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lines_;
  std::vector<Inequality> inequalities_;
  std::vector<Inequality> equations_;
};

std::string to_string(const Polyhedron& p);

/// Finite nonempty point set A in M_Q with duplicates removed and sorted.
class SupportSet {
 public:
  SupportSet() = default;
  explicit SupportSet(std::vector<RatVector> points);

  std::size_t dim() const { return points_.front().size(); }
  const std::vector<RatVector>& points() const { return points_; }

  SupportSet scaled(const Rational& t) const;
  SupportSet translated(const RatVector& m) const;
  /// Minkowski sum.
  SupportSet operator+(const SupportSet& other) const;
  Polyhedron hull() const;

  bool operator==(const SupportSet&) const = default;

 private:
  std::vector<RatVector> points_;
};

/// min over a in A of <a, e>.
Rational support_value(const SupportSet& a, const RatVector& e);
Rational support_value(const SupportSet& a, const IntVector& e);

/// inf{t > 0 : x in tP}; nullopt for +infinity. P compact with 0 in P.
std::optional<Rational> gauge(const Polyhedron& p, const RatVector& x);
std::optional<Rational> gauge(const Polyhedron& p, const IntVector& x);

enum class ZeroPosition { kInterior, kBoundary, kOutside };

struct Interval {
  std::optional<Rational> lo;  ///< nullopt = -infinity
  std::optional<Rational> hi;  ///< nullopt = +infinity
  ZeroPosition zero = ZeroPosition::kOutside;
};

/// Image of P under the functional phi.
Interval interval_image(const IntVector& phi, const Polyhedron& p);

/// Integer points of a compact polyhedron in lexicographic order.
std::vector<IntVector> lattice_points(const Polyhedron& p);

}  // namespace toricmld
