#include "xkraw/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

#include "xkraw/errors.hpp"

namespace xkraw {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  const std::string_view num = trim(t.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? "1" : trim(t.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r, mpz_class(1));
}

Rational factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r, mpz_class(1));
}

// ---------------------------------------------------------------------------
// LaurentSeries

LaurentSeries::LaurentSeries(const Rational& constant) { coeffs_[slot(0)] = constant; }

LaurentSeries LaurentSeries::from_terms(std::initializer_list<std::pair<int, Rational>> terms) {
  LaurentSeries s;
  for (const auto& [exponent, c] : terms) {
    if (exponent < kMinExponent || exponent > kMaxExponent) {
      throw LaurentWindowOverflow("exponent " + std::to_string(exponent) + " outside the Laurent window");
    }
    s.coeffs_[slot(exponent)] += c;
  }
  return s;
}

LaurentSeries LaurentSeries::epsilon() { return from_terms({{1, Rational(1)}}); }

const Rational& LaurentSeries::coefficient(int exponent) const {
  static const Rational kZero;
  if (exponent < kMinExponent || exponent > kMaxExponent) return kZero;
  return coeffs_[slot(exponent)];
}

int LaurentSeries::valuation() const {
  const int top = std::min(precision_, kFullPrecision);
  for (int k = kMinExponent; k < top; ++k) {
    if (!coeffs_[slot(k)].is_zero()) return k;
  }
  return precision_;
}

void LaurentSeries::truncate() {
  for (int k = std::max(precision_, kMinExponent); k <= kMaxExponent; ++k) coeffs_[slot(k)] = Rational(0);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  for (std::size_t i = 0; i < kWidth; ++i) coeffs_[i] += o.coeffs_[i];
  precision_ = std::min(precision_, o.precision_);
  truncate();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& o) {
  const int vu = valuation();
  const int vo = o.valuation();
  const int precision = std::min({precision_ + vo, o.precision_ + vu, kFullPrecision});
  std::array<Rational, kWidth> out{};
  for (int i = kMinExponent; i < std::min(precision_, kFullPrecision); ++i) {
    const Rational& a = coeffs_[slot(i)];
    if (a.is_zero()) continue;
    for (int j = kMinExponent; j < std::min(o.precision_, kFullPrecision); ++j) {
      const Rational& b = o.coeffs_[slot(j)];
      if (b.is_zero()) continue;
      const int e = i + j;
      if (e >= precision) continue;
      if (e < kMinExponent) throw LaurentWindowOverflow("product has a pole of order > 2");
      out[slot(e)] += a * b;
    }
  }
  coeffs_ = std::move(out);
  precision_ = precision;
  truncate();
  return *this;
}

LaurentSeries& LaurentSeries::operator/=(const LaurentSeries& o) {
  if (o.is_exact_zero()) throw std::domain_error("division by a zero Laurent series");
  const int vd = o.valuation();
  if (vd < -1) throw LaurentWindowOverflow("divisor has a pole of order > 1");
  // o = eps^vd * (a0 + a1 eps + ...), known to relative order rel.
  const int rel = std::min(o.precision_, kFullPrecision) - vd;
  std::vector<Rational> unit(static_cast<std::size_t>(rel));
  for (int k = 0; k < rel; ++k) unit[static_cast<std::size_t>(k)] = o.coefficient(vd + k);
  std::vector<Rational> inv(static_cast<std::size_t>(rel));
  inv[0] = Rational(1) / unit[0];
  for (int k = 1; k < rel; ++k) {
    Rational acc;
    for (int j = 1; j <= k; ++j) acc += unit[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
    inv[static_cast<std::size_t>(k)] = -acc * inv[0];
  }
  LaurentSeries reciprocal;
  reciprocal.precision_ = std::min(o.precision_ - 2 * vd, kFullPrecision);
  for (int k = 0; k < rel; ++k) {
    const int e = k - vd;
    if (e >= reciprocal.precision_ || e > kMaxExponent) break;
    reciprocal.coeffs_[slot(e)] = inv[static_cast<std::size_t>(k)];
  }
  return *this *= reciprocal;
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s) {
  bool first = true;
  for (int k = LaurentSeries::kMinExponent; k <= LaurentSeries::kMaxExponent; ++k) {
    const Rational& c = s.coefficient(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (k != 0) os << " eps^" << k;
  }
  if (first) os << "0";
  return os << " + O(eps^" << s.precision() << ")";
}

Rational laurent_constant_term(const LaurentSeries& s) {
  for (int k = LaurentSeries::kMinExponent; k < std::min(0, s.precision()); ++k) {
    if (!s.coefficient(k).is_zero()) {
      throw NonvanishingPole("eps^" + std::to_string(k) + " coefficient is " + s.coefficient(k).str());
    }
  }
  if (s.precision() <= 0) throw LaurentWindowOverflow("constant term is not exactly determined");
  return s.coefficient(0);
}

// ---------------------------------------------------------------------------
// gcd

Rational rational_gcd(const RationalSet& set) {
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const Rational& v : set.values) {
    if (v.is_zero()) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.denominator().get_mpz_t());
  }
  if (num_gcd == 0) throw AllZero("rational_gcd of an all-zero set");
  return Rational(num_gcd, den_lcm);
}

bool is_integer_multiple(const Rational& value, const Rational& unit) {
  if (unit.is_zero()) return value.is_zero();
  return (value / unit).is_integer();
}

}  // namespace xkraw
