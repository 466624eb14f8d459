#include "toricmld/lattice.hpp"

#include <sstream>

namespace toricmld {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, IntVector(cols, Integer(0))) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, std::vector<IntVector> rows) {
  for (const auto& r : rows) require_same_size(r.size(), cols, "IntMatrix row");
  IntMatrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) out[r] = rows_[r][c];
  return out;
}

void IntMatrix::append_row(IntVector r) {
  require_same_size(r.size(), cols_, "IntMatrix::append_row");
  rows_.push_back(std::move(r));
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = rows_[r][c];
  return t;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t last) const {
  IntMatrix m;
  m.cols_ = cols_;
  m.rows_.assign(rows_.begin() + static_cast<std::ptrdiff_t>(first),
                 rows_.begin() + static_cast<std::ptrdiff_t>(last));
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  require_same_size(cols_, rhs.rows(), "IntMatrix product");
  IntMatrix out(rows_.size(), rhs.cols());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (rows_[i][k] == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += rows_[i][k] * rhs(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  require_same_size(cols_, v.size(), "IntMatrix * vector");
  IntVector out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = dot(rows_[i], v);
  return out;
}

RatVector IntMatrix::operator*(const RatVector& v) const {
  require_same_size(cols_, v.size(), "IntMatrix * vector");
  RatVector out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = dot(rows_[i], v);
  return out;
}

bool IntMatrix::is_zero() const {
  for (const auto& r : rows_)
    if (!toricmld::is_zero(r)) return false;
  return true;
}

RatMatrix IntMatrix::to_rational() const {
  RatMatrix out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(toricmld::to_rational(r));
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ",";
    s += to_string(m.row(i));
  }
  return s + "]";
}

Integer determinant(const IntMatrix& m) {
  require_same_size(m.rows(), m.cols(), "determinant");
  RatMatrix a = m.to_rational();
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det.get_num();
}

namespace {

void axpy_row(IntVector& target, const IntVector& source, const Integer& factor) {
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= factor * source[j];
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < h.cols() && pivot_row < h.rows(); ++c) {
    // Euclid on column c among rows >= pivot_row.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t r = pivot_row; r < h.rows(); ++r) {
        if (h(r, c) == 0) continue;
        if (best == h.rows() || abs(h(r, c)) < abs(h(best, c))) best = r;
      }
      if (best == h.rows()) break;
      std::swap(h.row(best), h.row(pivot_row));
      std::swap(u.row(best), u.row(pivot_row));
      bool reduced_all = true;
      for (std::size_t r = pivot_row + 1; r < h.rows(); ++r) {
        if (h(r, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(r, c).get_mpz_t(), h(pivot_row, c).get_mpz_t());
        axpy_row(h.row(r), h.row(pivot_row), q);
        axpy_row(u.row(r), u.row(pivot_row), q);
        if (h(r, c) != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (h(pivot_row, c) == 0) continue;
    if (h(pivot_row, c) < 0) {
      h.row(pivot_row) = negated(h.row(pivot_row));
      u.row(pivot_row) = negated(u.row(pivot_row));
    }
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, c).get_mpz_t(), h(pivot_row, c).get_mpz_t());
      if (q == 0) continue;
      axpy_row(h.row(r), h.row(pivot_row), q);
      axpy_row(u.row(r), u.row(pivot_row), q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

std::size_t hnf_rank(const IntMatrix& h) {
  std::size_t r = 0;
  while (r < h.rows() && !is_zero(h.row(r))) ++r;
  return r;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  const RatMatrix inv = inverse(u.to_rational());
  IntMatrix out(u.rows(), u.cols());
  for (std::size_t i = 0; i < u.rows(); ++i) {
    const auto row = to_integral(inv[i]);
    if (!row) throw Error(ErrorCode::kNotSurjective, "matrix is not unimodular");
    out.row(i) = *row;
  }
  return out;
}

IntVector LatticeHom::pullback(const IntVector& functional) const {
  require_same_size(functional.size(), target_rank(), "LatticeHom::pullback");
  IntVector out(source_rank(), Integer(0));
  for (std::size_t r = 0; r < target_rank(); ++r)
    for (std::size_t c = 0; c < source_rank(); ++c) out[c] += functional[r] * matrix_(r, c);
  return out;
}

RatVector LatticeHom::pullback(const RatVector& functional) const {
  require_same_size(functional.size(), target_rank(), "LatticeHom::pullback");
  RatVector out(source_rank(), Rational(0));
  for (std::size_t r = 0; r < target_rank(); ++r)
    for (std::size_t c = 0; c < source_rank(); ++c) out[c] += functional[r] * matrix_(r, c);
  return out;
}

namespace {

// Top k x k block of the HNF of m^T, plus the transform.
struct ColumnHermite {
  HermiteForm form;
  IntMatrix top;
  std::size_t rank;
};

ColumnHermite column_hermite(const IntMatrix& m) {
  ColumnHermite out{hnf(m.transposed()), IntMatrix(), 0};
  out.rank = hnf_rank(out.form.h);
  out.top = out.form.h.row_block(0, std::min(out.form.h.rows(), m.rows()));
  return out;
}

}  // namespace

bool LatticeHom::is_surjective() const {
  const std::size_t k = target_rank();
  if (k == 0) return true;
  if (source_rank() < k) return false;
  const auto ch = column_hermite(matrix_);
  if (ch.rank != k) return false;
  return abs(determinant(ch.top)) == 1;
}

IntMatrix LatticeHom::section() const {
  const std::size_t k = target_rank();
  const std::size_t n = source_rank();
  if (!is_surjective()) {
    throw Error(ErrorCode::kNotSurjective, "lattice map " + to_string(matrix_) + " is not surjective");
  }
  if (k == 0) return IntMatrix(n, 0);
  const auto ch = column_hermite(matrix_);
  const IntMatrix t_inv_t = unimodular_inverse(ch.top.transposed());
  // S = U^T[:, :k] * (T^T)^{-1}
  IntMatrix lead(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) lead(i, j) = ch.form.u(j, i);
  return lead * t_inv_t;
}

Sublattice Sublattice::span(std::size_t ambient, const std::vector<IntVector>& generators) {
  Sublattice s;
  s.ambient_ = ambient;
  const IntMatrix m = IntMatrix::from_rows(ambient, generators);
  const HermiteForm f = hnf(m);
  s.basis_ = f.h.row_block(0, hnf_rank(f.h));
  return s;
}

Sublattice Sublattice::whole(std::size_t ambient) {
  Sublattice s;
  s.ambient_ = ambient;
  s.basis_ = IntMatrix::identity(ambient);
  return s;
}

std::optional<IntVector> Sublattice::coordinates(const IntVector& v) const {
  require_same_size(v.size(), ambient_, "Sublattice::coordinates");
  const RatMatrix bt = basis_.transposed().to_rational();
  const auto c = solve_linear(bt, to_rational(v), rank());
  if (!c) return std::nullopt;
  auto integral = to_integral(*c);
  if (!integral) return std::nullopt;
  if (embed(*integral) != v) return std::nullopt;
  return integral;
}

bool Sublattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

IntVector Sublattice::embed(const IntVector& coords) const {
  require_same_size(coords.size(), rank(), "Sublattice::embed");
  IntVector v(ambient_, Integer(0));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) v[j] += coords[i] * basis_(i, j);
  return v;
}

Sublattice integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  const HermiteForm f = hnf(m.transposed());
  const std::size_t r = hnf_rank(f.h);
  std::vector<IntVector> gens;
  for (std::size_t i = r; i < n; ++i) gens.push_back(f.u.row(i));
  return Sublattice::span(n, gens);
}

Sublattice Sublattice::saturation() const {
  const Sublattice orth = integer_kernel(basis_);
  return integer_kernel(orth.basis());
}

bool Sublattice::is_saturated() const { return saturation() == *this; }

Sublattice kernel_sublattice(const IntVector& phi) {
  if (gcd_of(phi) != 1) {
    throw Error(ErrorCode::kNotPrimitive,
                "not primitive: functional " + to_string(phi) + " is not surjective onto Z");
  }
  return integer_kernel(IntMatrix::from_rows(phi.size(), {phi}));
}

Sublattice kernel_sublattice(const LatticeHom& phi) {
  if (phi.target_rank() != 1) {
    throw Error(ErrorCode::kDimensionMismatch, "kernel_sublattice expects a map to Z");
  }
  return kernel_sublattice(phi.matrix().row(0));
}

namespace {

// Unimodular completion data: hnf(B^T) with U * B^T = H.
HermiteForm completion(const Sublattice& s) {
  const HermiteForm f = hnf(s.basis().transposed());
  const std::size_t k = s.rank();
  const IntMatrix top = f.h.row_block(0, k);
  if (k > 0 && abs(determinant(top)) != 1) {
    throw Error(ErrorCode::kNotSaturated,
                "sublattice " + to_string(s.basis()) + " is not saturated");
  }
  return f;
}

}  // namespace

QuotientPresentation quotient_by_span(std::size_t ambient, const Sublattice& s) {
  require_same_size(ambient, s.ambient_rank(), "quotient_by_span");
  const HermiteForm f = completion(s);
  const std::size_t k = s.rank();
  const IntMatrix u_inv = unimodular_inverse(f.u);
  QuotientPresentation q;
  q.projection = LatticeHom(f.u.row_block(k, ambient));
  IntMatrix section(ambient, ambient - k);
  for (std::size_t i = 0; i < ambient; ++i)
    for (std::size_t j = k; j < ambient; ++j) section(i, j - k) = u_inv(i, j);
  q.section = std::move(section);
  return q;
}

IntVector extend_hom(const Sublattice& domain, const IntVector& values) {
  require_same_size(values.size(), domain.rank(), "extend_hom");
  const std::size_t n = domain.ambient_rank();
  const std::size_t k = domain.rank();
  const HermiteForm f = completion(domain);
  const IntMatrix u_inv = unimodular_inverse(f.u);
  // Basis W: sublattice basis rows, then complement columns of U^{-1}.
  RatMatrix w;
  for (std::size_t i = 0; i < k; ++i) w.push_back(to_rational(domain.basis().row(i)));
  for (std::size_t j = k; j < n; ++j) w.push_back(to_rational(u_inv.column(j)));
  RatVector rhs(n, Rational(0));
  for (std::size_t i = 0; i < k; ++i) rhs[i] = values[i];
  const auto sol = solve_linear(w, rhs, n);
  auto integral = sol ? to_integral(*sol) : std::nullopt;
  if (!integral) throw Error(ErrorCode::kNotSaturated, "basis completion is not unimodular");
  return *integral;
}

IntVector restrict_functional(const Sublattice& s, const IntVector& functional) {
  return s.basis() * functional;
}

RatVector restrict_functional(const Sublattice& s, const RatVector& functional) {
  return s.basis() * functional;
}

}  // namespace toricmld
