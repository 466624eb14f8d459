#include "toricmld/numeric.hpp"

#include <cctype>
#include <sstream>

namespace toricmld {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "dimension mismatch";
    case ErrorCode::kZeroVector: return "zero vector";
    case ErrorCode::kNotPrimitive: return "not primitive";
    case ErrorCode::kNotSaturated: return "not saturated";
    case ErrorCode::kNotSurjective: return "not surjective";
    case ErrorCode::kInvalidGeometry: return "invalid geometry";
    case ErrorCode::kUnbounded: return "unbounded";
    case ErrorCode::kEmpty: return "empty";
    case ErrorCode::kNotFullDimensional: return "not full-dimensional";
    case ErrorCode::kOriginNotContained: return "origin not contained";
    case ErrorCode::kInvalidFan: return "invalid fan";
    case ErrorCode::kInvalidContraction: return "invalid contraction";
    case ErrorCode::kInvalidPair: return "invalid pair";
    case ErrorCode::kNotCartier: return "not R-Cartier";
    case ErrorCode::kNotNef: return "not f-nef";
    case ErrorCode::kNotLogCanonical: return "not g-lc";
    case ErrorCode::kGlobalMld: return "use global mld variant";
    case ErrorCode::kNotPositive: return "not positive";
    case ErrorCode::kWidthBound: return "width bound violated";
    case ErrorCode::kLemmaViolation: return "lemma violation";
    case ErrorCode::kDescentFailed: return "descent failed";
    case ErrorCode::kHypothesis: return "hypothesis violated";
    case ErrorCode::kParse: return "parse error";
  }
  return "unknown";
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  }
  Rational q(negative ? Integer(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

IntVector primitive(const IntVector& v) {
  const Integer g = gcd_of(v);
  if (g == 0) throw Error(ErrorCode::kZeroVector, "primitive() of the zero vector");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

bool is_primitive(const IntVector& v) { return gcd_of(v) == 1; }

std::pair<IntVector, Integer> clear_denominators(const RatVector& v) {
  Integer den = 1;
  for (const auto& x : v) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  IntVector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = v[i].get_num() * (den / v[i].get_den());
  }
  return {std::move(w), den};
}

IntVector primitive_direction(const RatVector& v) {
  return primitive(clear_denominators(v).first);
}

std::optional<IntVector> to_integral(const RatVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) return std::nullopt;
    out[i] = v[i].get_num();
  }
  return out;
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": sizes " << a << " and " << b << " differ";
    throw Error(ErrorCode::kDimensionMismatch, os.str());
  }
}

Rational dot(const RatVector& a, const RatVector& b) {
  require_same_size(a.size(), b.size(), "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  require_same_size(a.size(), b.size(), "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Rational dot(const RatVector& a, const IntVector& b) { return dot(b, a); }

Integer dot(const IntVector& a, const IntVector& b) {
  require_same_size(a.size(), b.size(), "dot");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector scaled(const RatVector& v, const Rational& t) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * t;
  return out;
}

IntVector scaled(const IntVector& v, const Integer& t) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * t;
  return out;
}

RatVector add(const RatVector& a, const RatVector& b) {
  require_same_size(a.size(), b.size(), "add");
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector add(const IntVector& a, const IntVector& b) {
  require_same_size(a.size(), b.size(), "add");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVector subtract(const RatVector& a, const RatVector& b) {
  require_same_size(a.size(), b.size(), "subtract");
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  require_same_size(a.size(), b.size(), "subtract");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector negated(const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

IntVector int_vector(std::initializer_list<long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long x : values) out.emplace_back(x);
  return out;
}

RatVector rat_vector(std::initializer_list<Rational> values) { return RatVector(values); }

namespace {

template <typename Vec>
std::string vector_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace

std::string to_string(const IntVector& v) { return vector_string(v); }
std::string to_string(const RatVector& v) { return vector_string(v); }

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RatVector> solve_linear(const RatMatrix& rows, const RatVector& rhs,
                                      std::size_t unknowns) {
  require_same_size(rows.size(), rhs.size(), "solve_linear");
  RatMatrix aug;
  aug.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_size(rows[i].size(), unknowns, "solve_linear row");
    RatVector r = rows[i];
    r.push_back(rhs[i]);
    aug.push_back(std::move(r));
  }
  const auto pivots = row_reduce(aug, unknowns);
  for (std::size_t i = pivots.size(); i < aug.size(); ++i) {
    if (aug[i][unknowns] != 0) return std::nullopt;
  }
  RatVector x(unknowns, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][unknowns];
  return x;
}

std::size_t rank_of(const RatMatrix& rows, std::size_t cols) {
  RatMatrix m = rows;
  return row_reduce(m, cols).size();
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    require_same_size(m[i].size(), n, "inverse");
    aug[i] = m[i];
    aug[i].resize(2 * n, Rational(0));
    aug[i][n + i] = 1;
  }
  const auto pivots = row_reduce(aug, n);
  if (pivots.size() != n) throw Error(ErrorCode::kInvalidGeometry, "singular matrix");
  RatMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(aug[i].begin() + n, aug[i].end());
  return out;
}

}  // namespace toricmld
