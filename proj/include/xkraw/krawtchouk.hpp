#pragma once

// Ordinary and exceptional (X_ell) Krawtchouk polynomials in exact arithmetic.

#include <string>
#include <vector>

#include "xkraw/errors.hpp"
#include "xkraw/exactnum.hpp"
#include "xkraw/model_config.hpp"

namespace xkraw {

namespace detail {

inline bool exact_zero(const Rational& r) { return r.is_zero(); }
inline bool exact_zero(const LaurentSeries& s) { return s.is_exact_zero(); }

}  // namespace detail

// Rising factorial (a)_k = a (a+1) ... (a+k-1).
template <class Scalar>
Scalar pochhammer(const Scalar& a, int k) {
  Scalar out(1);
  for (int j = 0; j < k; ++j) out *= a + Scalar(j);
  return out;
}

// K_n^{big_n}(x; p) = sum_{k=0}^{n} (-n)_k (-x)_k / ((-big_n)_k k!) p^{-k}.
//
// big_n may be any rational (negative values are used for f and the
// eigenvalues). The sum stops at the first exactly-zero term. A vanishing
// denominator factor in front of a nonzero term raises DivisionByZeroPochhammer;
// pass LaurentSeries arguments (big_n = N + eps) to take the limit instead.
template <class Scalar>
Scalar krawtchouk_eval(int n, const Scalar& big_n, const Scalar& x, const Rational& p) {
  if (n < 0) throw IndexOutOfRange("negative Krawtchouk degree");
  const Scalar inv_p(Rational(1) / p);
  Scalar term(1);
  Scalar sum(1);
  for (int k = 1; k <= n; ++k) {
    const Scalar numer = Scalar(k - 1 - n) * (Scalar(k - 1) - x);
    term *= numer;
    if (detail::exact_zero(term)) break;
    const Scalar denom = Scalar(k - 1) - big_n;
    if (detail::exact_zero(denom)) {
      throw DivisionByZeroPochhammer("(-N)_k vanishes at k = " + std::to_string(k) + " for degree " +
                                     std::to_string(n));
    }
    term /= denom;
    term *= inv_p / Scalar(k);
    sum += term;
  }
  return sum;
}

inline Rational krawtchouk_eval(int n, int big_n, const Rational& x, const Rational& p) {
  return krawtchouk_eval<Rational>(n, Rational(big_n), x, p);
}

// f_ell^p(x) = K_ell^{-N-2}(x - N - 1; p).
Rational f_factor(const ModelConfig& cfg, const Rational& x);

// hat K_n^{(ell)}(x; p) for n in Lambda_ell and x in X_N. The top index
// n = N+ell+1 is the eps -> 0 limit of the Darboux transform with M = N + eps.
Rational xl_eval(const ModelConfig& cfg, int n, int x);

// Darboux transform of K_n^N at an arbitrary rational point; n <= N only
// (the top-index limit exists on X_N alone).
Rational xl_eval_polynomial(const ModelConfig& cfg, int n, const Rational& x);

// Closed-form norm hat h_n; the top index is evaluated as a Laurent limit.
Rational norm_closed_form(const ModelConfig& cfg, int n);

// Exact table of hat K on Lambda_ell x X_N together with weights and norms.
class XPolynomialTable {
 public:
  explicit XPolynomialTable(const ModelConfig& cfg);

  const ModelConfig& config() const { return cfg_; }
  // By label n and grid point x.
  const Rational& value(int n, int x) const;
  const Rational& weight(int x) const;
  const Rational& norm(int n) const;
  // By dense index (label index, grid index).
  const Rational& value_at(std::size_t n_index, std::size_t x_index) const {
    return values_[n_index * cfg_.size() + x_index];
  }
  const Rational& weight_at(std::size_t x_index) const { return weights_[x_index]; }
  const Rational& norm_at(std::size_t n_index) const { return norms_[n_index]; }

 private:
  ModelConfig cfg_;
  std::vector<Rational> values_;
  std::vector<Rational> weights_;
  std::vector<Rational> norms_;
};

// Requires even ell. h_n for n <= N from the closed form; the top norm by
// exact quadrature sum_x w_x hat K^2.
XPolynomialTable build_table(const ModelConfig& cfg);

// Weight hat w_x.
Rational x_weight(const ModelConfig& cfg, int x);

struct RecurrenceCoeffs {
  Rational alpha, beta, gamma, delta, epsilon, zeta;

  Rational total() const { return alpha + beta + gamma + delta + epsilon + zeta; }
  // Coefficient of hat K_{n+shift}, shift in {+3,+2,+1,-1,-2,-3}.
  const Rational& by_shift(int shift) const;
};

// Seven-term recurrence coefficients for ell = 2. Coefficients that would
// reach outside Lambda_2 vanish through their own factors.
RecurrenceCoeffs recurrence_coeffs(const ModelConfig& cfg, int n);

// lambda_x = -(K_3^{-N-1}(x-N) - K_3^{-N-1}(-1-N)).
Rational eigenvalue_classical(const ModelConfig& cfg, int x);
// bar lambda_x = -K_3^{-N-1}(x-N).
Rational eigenvalue_quantum(const ModelConfig& cfg, int x);

struct SturmLiouvilleReport {
  struct Entry {
    int n = 0;
    Rational eigenvalue;    // N + ell + 1 - n
    bool grid_ok = false;   // identity on every x in X_N
    bool polynomial_ok = false;  // identity at off-grid points (n <= N only)
    int points_used = 0;
  };
  std::vector<Entry> entries;
  bool holds = false;
};

// Checks F_N o B_N [hat K_n] = (N+ell+1-n) hat K_n. Requires even ell.
SturmLiouvilleReport verify_sturm_liouville(const ModelConfig& cfg);

}  // namespace xkraw
