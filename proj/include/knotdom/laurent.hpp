#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knotdom {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a polynomial string does not follow the textual grammar.
class PolyParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Integer Laurent polynomial in one variable t, i.e. an element of Z[t, 1/t].
 *
 * Stored sparsely as exponent -> coefficient. A stored coefficient is never
 * zero, so the zero polynomial is the empty map and the degree bounds are
 * always read off the map ends.
 *
 * Text form lists terms by ascending exponent: `1 - 3t + t^2`,
 * `-t^-4 + t^-3 + t^-1`. A unit coefficient is omitted; other coefficients
 * are written directly in front of `t`.
 */
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Integer& constant);

  /// c * t^e.
  static LaurentPoly monomial(const Integer& c, int e);
  /// Dense coefficients, `coeffs[i]` multiplying t^(i + low).
  static LaurentPoly dense(std::initializer_list<long> coeffs, int low = 0);
  /// Zero coefficients in `terms` are dropped.
  static LaurentPoly from_terms(Terms terms);
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_unit() const;  // +-t^k

  /// Both throw std::domain_error on the zero polynomial.
  int min_degree() const;
  int max_degree() const;
  /// max_degree - min_degree; 0 for the zero polynomial.
  int span() const noexcept;

  Integer coefficient(int e) const;
  /// Coefficient of the highest / lowest power. Zero for the zero polynomial.
  Integer leading_coefficient() const;
  Integer trailing_coefficient() const;
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Multiplication by t^k.
  LaurentPoly shifted(int k) const;
  /// p(t^w). For w == 0 this collapses to the constant p(1).
  LaurentPoly substitute_power(int w) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(int e, const Integer& c);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient q with a == b * q exactly in Z[t, 1/t], or nullopt when b does
/// not divide a. No unit normalization is applied: the quotient carries the
/// exact shift and sign. Throws std::domain_error when b is zero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Divisibility up to units: both operands are normalized first, and the
/// normalized quotient is returned. Throws std::domain_error when b is zero.
std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Multiply by the unit +-t^k that makes the lowest exponent 0 and the
/// constant coefficient positive. Idempotent; fixes zero.
LaurentPoly normalize(const LaurentPoly& a);

/// Exact value at t = x. Throws std::domain_error for x == 0.
Rational eval_int(const LaurentPoly& a, const Integer& x);

/// True iff n = p^e with p prime and e >= 1. Throws std::domain_error for n <= 0.
bool is_prime_power(const Integer& n);

}  // namespace knotdom
