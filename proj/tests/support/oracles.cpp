#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace oracle {

namespace {

Rational dotq(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector toq(const IntVector& v) {
  RatVector out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> eliminate(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[row][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  combinations(n, k, 0, cur, out);
  return out;
}

}  // namespace

std::optional<RatVector> solve_square(Matrix m, RatVector b) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
  const auto piv = eliminate(m, n + 1);
  if (piv.size() != n || piv.back() >= n) return std::nullopt;
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  return eliminate(m, m[0].size()).size();
}

Rational det(Matrix m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

std::vector<RatVector> vertices(std::size_t dim, const std::vector<Halfspace>& hs) {
  std::set<RatVector> out;
  for (const auto& idx : subsets(hs.size(), dim)) {
    Matrix m;
    RatVector b;
    for (std::size_t i : idx) {
      m.push_back(hs[i].normal);
      b.push_back(hs[i].offset);
    }
    const auto x = solve_square(m, b);
    if (!x) continue;
    bool feasible = true;
    for (const auto& h : hs)
      if (dotq(h.normal, *x) < h.offset) feasible = false;
    if (feasible) out.insert(*x);
  }
  return {out.begin(), out.end()};
}

std::vector<Halfspace> facets(std::size_t dim, const std::vector<RatVector>& points) {
  std::vector<Halfspace> out;
  std::set<std::pair<RatVector, Rational>> seen;
  for (const auto& idx : subsets(points.size(), dim)) {
    // Normal n with <n, p_i - p_0> = 0: kernel of the difference matrix.
    Matrix diffs;
    for (std::size_t k = 1; k < idx.size(); ++k) {
      RatVector d;
      for (std::size_t j = 0; j < dim; ++j) d.push_back(points[idx[k]][j] - points[idx[0]][j]);
      diffs.push_back(d);
    }
    if (rank(diffs) != dim - 1) continue;
    Matrix red = diffs;
    const auto piv = eliminate(red, dim);
    std::size_t free_col = 0;
    while (std::find(piv.begin(), piv.end(), free_col) != piv.end()) ++free_col;
    RatVector n(dim, Rational(0));
    n[free_col] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) n[piv[r]] = -red[r][free_col] / red[r][piv[r]];
    // Scale to a primitive integer vector.
    Integer l = 1;
    for (const auto& x : n) l = lcm(l, Integer(x.get_den()));
    Integer g = 0;
    for (auto& x : n) {
      x *= l;
      g = gcd(g, Integer(x.get_num()));
    }
    for (auto& x : n) x /= g;
    const Rational c = dotq(n, points[idx[0]]);
    bool above = true, below = true;
    for (const auto& p : points) {
      const Rational v = dotq(n, p);
      if (v < c) above = false;
      if (v > c) below = false;
    }
    if (!above && !below) continue;
    if (!above) {
      for (auto& x : n) x = -x;
    }
    const Rational off = above ? c : -c;
    if (seen.insert({n, off}).second) out.push_back({n, off});
  }
  return out;
}

bool in_hull(std::size_t dim, const std::vector<RatVector>& points, const RatVector& x) {
  for (const auto& h : facets(dim, points))
    if (dotq(h.normal, x) < h.offset) return false;
  return true;
}

std::vector<IntVector> lattice_points(std::size_t dim, const std::vector<RatVector>& points) {
  std::vector<Integer> lo(dim), hi(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Rational mn = points[0][j], mx = points[0][j];
    for (const auto& p : points) {
      mn = std::min(mn, p[j]);
      mx = std::max(mx, p[j]);
    }
    mpz_fdiv_q(hi[j].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    mpz_cdiv_q(lo[j].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
  }
  const auto fs = facets(dim, points);
  std::vector<IntVector> out;
  IntVector x = lo;
  if (dim == 0) return out;
  while (true) {
    bool inside = true;
    for (const auto& h : fs)
      if (dotq(h.normal, toq(x)) < h.offset) inside = false;
    if (inside) out.push_back(x);
    std::size_t i = dim;
    while (i > 0 && x[i - 1] >= hi[i - 1]) {
      x[i - 1] = lo[i - 1];
      --i;
    }
    if (i == 0) break;
    ++x[i - 1];
  }
  return out;
}

Rational min_dot(const std::vector<RatVector>& points, const RatVector& e) {
  Rational best = dotq(points[0], e);
  for (const auto& p : points) best = std::min(best, dotq(p, e));
  return best;
}

Rational max_dot(const std::vector<RatVector>& points, const RatVector& e) {
  Rational best = dotq(points[0], e);
  for (const auto& p : points) best = std::max(best, dotq(p, e));
  return best;
}

std::optional<RatVector> cone_coordinates(const std::vector<IntVector>& rays, const IntVector& e) {
  const std::size_t n = e.size();
  Matrix m(n, RatVector(rays.size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rays.size(); ++j) m[i][j] = rays[j][i];
  return solve_square(m, toq(e));
}

std::optional<Rational> simplicial_log_discrepancy(const std::vector<IntVector>& rays,
                                                   const std::vector<std::vector<std::size_t>>& cones,
                                                   const std::vector<Rational>& b,
                                                   const std::vector<RatVector>& a, const IntVector& e) {
  for (const auto& cone : cones) {
    std::vector<IntVector> rs;
    for (std::size_t i : cone) rs.push_back(rays[i]);
    const auto coef = cone_coordinates(rs, e);
    if (!coef) continue;
    bool inside = true;
    for (const auto& c : *coef)
      if (c < 0) inside = false;
    if (!inside) continue;
    // <psi, e> = sum_i coef_i <psi, e_i>.
    Rational psi_e = 0;
    for (std::size_t k = 0; k < cone.size(); ++k) {
      const std::size_t i = cone[k];
      psi_e += (*coef)[k] * (1 - b[i] + min_dot(a, toq(rays[i])));
    }
    return psi_e - min_dot(a, toq(e));
  }
  return std::nullopt;
}

bool parallel(const IntVector& u, const IntVector& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

std::vector<RatVector> hyperplane_section(const std::vector<RatVector>& points, const IntVector& phi) {
  const RatVector f = toq(phi);
  std::set<RatVector> out;
  for (const auto& p : points)
    if (dotq(f, p) == 0) out.insert(p);
  for (const auto& p : points) {
    for (const auto& q : points) {
      const Rational fp = dotq(f, p), fq = dotq(f, q);
      if (!(fp < 0 && fq > 0)) continue;
      const Rational s = fp / (fp - fq);
      RatVector x;
      for (std::size_t j = 0; j < p.size(); ++j) x.push_back(p[j] + s * (q[j] - p[j]));
      out.insert(x);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<IntVector> box(std::size_t dim, long r) {
  std::vector<IntVector> out;
  IntVector x(dim, Integer(-r));
  while (true) {
    out.push_back(x);
    std::size_t i = dim;
    while (i > 0 && x[i - 1] == r) x[--i] = -r;
    if (i == 0) break;
    ++x[i - 1];
  }
  return out;
}

}  // namespace oracle
