#pragma once

#include <cstddef>
#include <vector>

#include "toricmld/numeric.hpp"

namespace toricmld {

/// Dense integer matrix stored as a list of rows.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::size_t cols, std::vector<IntVector> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }

  const IntVector& row(std::size_t r) const { return rows_[r]; }
  IntVector& row(std::size_t r) { return rows_[r]; }
  const std::vector<IntVector>& row_list() const { return rows_; }
  IntVector column(std::size_t c) const;

  void append_row(IntVector r);
  IntMatrix transposed() const;
  /// Rows [first, last).
  IntMatrix row_block(std::size_t first, std::size_t last) const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  /// Matrix times column vector.
  IntVector operator*(const IntVector& v) const;
  RatVector operator*(const RatVector& v) const;

  bool operator==(const IntMatrix& other) const = default;

  bool is_zero() const;
  RatMatrix to_rational() const;

 private:
  std::size_t cols_ = 0;
  std::vector<IntVector> rows_;
};

std::string to_string(const IntMatrix& m);

Integer determinant(const IntMatrix& m);

struct HermiteForm {
  IntMatrix h;  ///< row Hermite normal form
  IntMatrix u;  ///< unimodular, u * input == h
};

/// Row Hermite normal form: pivots positive, entries above a pivot reduced
/// into [0, pivot), zero rows last.
HermiteForm hnf(const IntMatrix& m);

/// Number of nonzero rows of an HNF.
std::size_t hnf_rank(const IntMatrix& h);

/// Integer inverse of a unimodular matrix; throws kNotSurjective otherwise.
IntMatrix unimodular_inverse(const IntMatrix& u);

/// A lattice homomorphism Z^cols -> Z^rows.
class LatticeHom {
 public:
  LatticeHom() = default;
  explicit LatticeHom(IntMatrix matrix) : matrix_(std::move(matrix)) {}

  const IntMatrix& matrix() const { return matrix_; }
  std::size_t source_rank() const { return matrix_.cols(); }
  std::size_t target_rank() const { return matrix_.rows(); }

  IntVector apply(const IntVector& v) const { return matrix_ * v; }
  RatVector apply(const RatVector& v) const { return matrix_ * v; }

  /// Dual map: a functional on the target, pulled back to the source.
  IntVector pullback(const IntVector& functional) const;
  RatVector pullback(const RatVector& functional) const;

  bool is_surjective() const;
  /// Integer right inverse S with matrix * S = identity; throws kNotSurjective.
  IntMatrix section() const;

  bool operator==(const LatticeHom&) const = default;

 private:
  IntMatrix matrix_;
};

/// Sublattice of Z^ambient with its basis kept in row Hermite normal form, so
/// equal sublattices compare equal structurally.
class Sublattice {
 public:
  Sublattice() = default;
  /// Lattice spanned by the given rows (need not be independent).
  static Sublattice span(std::size_t ambient, const std::vector<IntVector>& generators);
  static Sublattice zero(std::size_t ambient) { return span(ambient, {}); }
  static Sublattice whole(std::size_t ambient);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(const IntVector& v) const;
  /// Coordinates of v in the HNF basis; nullopt when v is not in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  IntVector embed(const IntVector& coords) const;

  /// Lattice (span_R ∩ Z^n).
  Sublattice saturation() const;
  bool is_saturated() const;

  bool operator==(const Sublattice&) const = default;

 private:
  std::size_t ambient_ = 0;
  IntMatrix basis_;
};

struct QuotientPresentation {
  LatticeHom projection;  ///< Z^n -> Z^(n-k), kernel exactly the sublattice
  IntMatrix section;      ///< n x (n-k), projection * section == identity
};

/// {v : m v = 0} as a saturated sublattice.
Sublattice integer_kernel(const IntMatrix& m);

/// Kernel of a surjective functional phi: Z^n -> Z; throws kNotPrimitive when
/// phi is not surjective.
Sublattice kernel_sublattice(const LatticeHom& phi);
Sublattice kernel_sublattice(const IntVector& phi);

QuotientPresentation quotient_by_span(std::size_t ambient, const Sublattice& s);

/// Extension to Z^ambient of a homomorphism given by its values on the HNF
/// basis of a saturated sublattice. The complement generators obtained from
/// the HNF completion are sent to zero.
IntVector extend_hom(const Sublattice& domain, const IntVector& values);

/// Values of a functional on Z^n at the basis vectors of a sublattice.
IntVector restrict_functional(const Sublattice& s, const IntVector& functional);
RatVector restrict_functional(const Sublattice& s, const RatVector& functional);

}  // namespace toricmld
