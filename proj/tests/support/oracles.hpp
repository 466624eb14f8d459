#pragma once

// Test-side oracles. They share only the scalar types with the library and
// recompute everything by brute force.

#include <optional>
#include <utility>
#include <vector>

#include "toricmld/numeric.hpp"

namespace oracle {

using toricmld::Integer;
using toricmld::IntVector;
using toricmld::RatVector;
using toricmld::Rational;
using Matrix = std::vector<RatVector>;

/// Unique solution of the square system m x = b, if any.
std::optional<RatVector> solve_square(Matrix m, RatVector b);

/// Rank by plain Gaussian elimination.
std::size_t rank(Matrix m);

/// Determinant by Gaussian elimination over Q.
Rational det(Matrix m);

struct Halfspace {
  RatVector normal;  ///< <normal, x> >= offset
  Rational offset;
};

/// Vertices of the bounded polyhedron {x : <n_i, x> >= c_i}, by trying every
/// square subsystem. Sorted, deduplicated.
std::vector<RatVector> vertices(std::size_t dim, const std::vector<Halfspace>& hs);

/// Facets of conv(points), full-dimensional, by trying every hyperplane
/// through dim affinely independent points. Normals scaled to primitive integers.
std::vector<Halfspace> facets(std::size_t dim, const std::vector<RatVector>& points);

bool in_hull(std::size_t dim, const std::vector<RatVector>& points, const RatVector& x);

/// Integer points of conv(points) by box scan and facet membership.
std::vector<IntVector> lattice_points(std::size_t dim, const std::vector<RatVector>& points);

Rational min_dot(const std::vector<RatVector>& points, const RatVector& e);
Rational max_dot(const std::vector<RatVector>& points, const RatVector& e);

/// Coefficients of e in the basis given by the n rays, or nullopt when the
/// rays are dependent.
std::optional<RatVector> cone_coordinates(const std::vector<IntVector>& rays, const IntVector& e);

/// Log discrepancy on a simplicial fan: <psi_sigma, e> - min_A <a, e>, where
/// <psi_sigma, e_i> = 1 - b_i + min_A <a, e_i> on the rays of sigma.
std::optional<Rational> simplicial_log_discrepancy(const std::vector<IntVector>& rays,
                                                   const std::vector<std::vector<std::size_t>>& cones,
                                                   const std::vector<Rational>& b,
                                                   const std::vector<RatVector>& a, const IntVector& e);

/// u and v are parallel (rank <= 1).
bool parallel(const IntVector& u, const IntVector& v);

/// Vertices of conv(points) cut by {phi = 0}: points on the hyperplane and
/// crossings of segments.
std::vector<RatVector> hyperplane_section(const std::vector<RatVector>& points, const IntVector& phi);

/// All integer vectors with sup-norm at most r, in lexicographic order.
std::vector<IntVector> box(std::size_t dim, long r);

}  // namespace oracle
