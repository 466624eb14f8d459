#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace toricmld {

using Integer = mpz_class;
using Rational = mpq_class;

/// Point of a lattice, coordinates in the standard basis.
using IntVector = std::vector<Integer>;
/// Point of the rational vector space, coordinates normalized p/q.
using RatVector = std::vector<Rational>;

enum class ErrorCode {
  kDimensionMismatch,
  kZeroVector,
  kNotPrimitive,
  kNotSaturated,
  kNotSurjective,
  kInvalidGeometry,
  kUnbounded,
  kEmpty,
  kNotFullDimensional,
  kOriginNotContained,
  kInvalidFan,
  kInvalidContraction,
  kInvalidPair,
  kNotCartier,
  kNotNef,
  kNotLogCanonical,
  kGlobalMld,
  kNotPositive,
  kWidthBound,
  kLemmaViolation,
  kDescentFailed,
  kHypothesis,
  kParse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Scalars.

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
Rational abs_of(const Rational& q);
/// Parses "p", "-p" or "p/q" with q > 0; throws kParse otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Vectors.

RatVector to_rational(const IntVector& v);
bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);
Integer gcd_of(const IntVector& v);

/// v / gcd(v); throws kZeroVector on the zero vector.
IntVector primitive(const IntVector& v);
bool is_primitive(const IntVector& v);

/// Smallest positive integer multiple of v that is integral, made primitive
/// (direction of a rational ray).
IntVector primitive_direction(const RatVector& v);

/// Returns (w, den) with den > 0 minimal and v = w / den.
std::pair<IntVector, Integer> clear_denominators(const RatVector& v);

/// Exact integral conversion; nullopt when some coordinate is fractional.
std::optional<IntVector> to_integral(const RatVector& v);

Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const IntVector& a, const RatVector& b);
Rational dot(const RatVector& a, const IntVector& b);
Integer dot(const IntVector& a, const IntVector& b);

RatVector scaled(const RatVector& v, const Rational& t);
IntVector scaled(const IntVector& v, const Integer& t);
RatVector add(const RatVector& a, const RatVector& b);
IntVector add(const IntVector& a, const IntVector& b);
RatVector subtract(const RatVector& a, const RatVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
IntVector negated(const IntVector& v);

IntVector int_vector(std::initializer_list<long> values);
RatVector rat_vector(std::initializer_list<Rational> values);

std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

void require_same_size(std::size_t a, std::size_t b, const char* what);

/// Lexicographic comparison used for every deterministic tie-break.
template <typename Vec>
bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Dense rational linear algebra (row-major, small sizes).

using RatMatrix = std::vector<RatVector>;

/// Solves rows * x = rhs. Returns a particular solution (free variables set to
/// zero) or nullopt when the system is inconsistent.
std::optional<RatVector> solve_linear(const RatMatrix& rows, const RatVector& rhs,
                                      std::size_t unknowns);
std::size_t rank_of(const RatMatrix& rows, std::size_t cols);
/// Inverse of a square nonsingular matrix; throws kInvalidGeometry if singular.
RatMatrix inverse(const RatMatrix& m);

}  // namespace toricmld
