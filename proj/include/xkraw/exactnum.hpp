#pragma once

// Exact scalar arithmetic: GMP-backed rationals, truncated Laurent series in a
// formal infinitesimal eps, and rational gcd.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xkraw {

class Rational {
 public:
  Rational() = default;
  template <std::signed_integral T>
  Rational(T n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class v);

  // Accepts "a", "-a", "a/b" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }
  // "a/b", or "a" when the denominator is 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, int exponent);
Rational binomial(long n, long k);
Rational factorial(long n);

// Truncated Laurent series sum_k c_k eps^k with k restricted to [kMinExponent, kMaxExponent].
//
// Each series also carries a precision bound: coefficients with exponent below
// precision() are exact, everything from precision() upward is unknown and kept
// at zero. Arithmetic propagates the bound, so a result whose eps^0 term is not
// exactly determined is detected instead of silently returned.
class LaurentSeries {
 public:
  static constexpr int kMinExponent = -2;
  static constexpr int kMaxExponent = 2;
  static constexpr int kFullPrecision = kMaxExponent + 1;

  LaurentSeries() = default;
  LaurentSeries(const Rational& constant);  // NOLINT(google-explicit-constructor)
  template <std::signed_integral T>
  LaurentSeries(T constant) : LaurentSeries(Rational(constant)) {}  // NOLINT

  // Exponent/coefficient pairs; exponents must lie inside the window.
  static LaurentSeries from_terms(std::initializer_list<std::pair<int, Rational>> terms);
  static LaurentSeries epsilon();

  const Rational& coefficient(int exponent) const;
  int precision() const { return precision_; }
  // Lowest exponent with a nonzero exact coefficient, or precision() if none.
  int valuation() const;
  // True when every exactly-known coefficient is zero.
  bool is_exact_zero() const { return valuation() >= precision_; }

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  LaurentSeries& operator*=(const LaurentSeries& o);
  // The divisor's valuation must be >= -1 and its leading coefficient exact.
  LaurentSeries& operator/=(const LaurentSeries& o);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(LaurentSeries a, const LaurentSeries& b) { return a *= b; }
  friend LaurentSeries operator/(LaurentSeries a, const LaurentSeries& b) { return a /= b; }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const LaurentSeries& s);

 private:
  static constexpr std::size_t kWidth = kMaxExponent - kMinExponent + 1;
  static std::size_t slot(int exponent) { return static_cast<std::size_t>(exponent - kMinExponent); }
  void truncate();

  std::array<Rational, kWidth> coeffs_{};
  int precision_ = kFullPrecision;
};

// eps^0 coefficient; throws NonvanishingPole if a negative power survives and
// LaurentWindowOverflow if the constant term is not exactly known.
Rational laurent_constant_term(const LaurentSeries& s);

struct RationalSet {
  std::vector<Rational> values;
};

// Largest positive g such that every value is an integer multiple of g.
Rational rational_gcd(const RationalSet& set);

bool is_integer_multiple(const Rational& value, const Rational& unit);

}  // namespace xkraw
