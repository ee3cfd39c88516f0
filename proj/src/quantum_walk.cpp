#include "xkraw/quantum_walk.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "xkraw/errors.hpp"
#include "xkraw/krawtchouk.hpp"

namespace xkraw {

namespace {

// r mod 2 in [0, 2).
Rational mod_two(const Rational& r) {
  const Rational half = r / Rational(2);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), half.numerator().get_mpz_t(), half.denominator().get_mpz_t());
  return r - Rational(2) * Rational(fl, mpz_class(1));
}

double signed_sqrt(const Rational& radicand, int sign) {
  const double root = std::sqrt(radicand.to_double());
  return sign < 0 ? -root : root;
}

}  // namespace

double WalkTime::value() const {
  return multiplier_ ? multiplier_->to_double() * std::numbers::pi : real_;
}

std::complex<double> WalkTime::phase(const Rational& lambda) const {
  if (multiplier_) {
    const double angle = std::numbers::pi * mod_two(lambda * *multiplier_).to_double();
    return {std::cos(angle), -std::sin(angle)};
  }
  const double angle = lambda.to_double() * real_;
  return {std::cos(angle), -std::sin(angle)};
}

std::string WalkTime::str() const {
  if (multiplier_) return multiplier_->is_zero() ? "0" : multiplier_->str() + "pi";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", real_);
  return buf;
}

std::string to_string(Parity parity) {
  switch (parity) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Mixed: return "mixed";
  }
  return "mixed";
}

Hamiltonian hamiltonian(const ModelConfig& cfg) {
  cfg.require_walk();
  const std::size_t size = cfg.size();
  const Rational shift = eigenvalue_quantum(cfg, -1);  // bar S_n = S_n - bar lambda_{-1}
  std::vector<RecurrenceCoeffs> coeffs;
  for (const int n : cfg.labels()) coeffs.push_back(recurrence_coeffs(cfg, n));

  Hamiltonian h{Dense<double>(size, size), std::vector<Rational>(size), Dense<Rational>(size, size)};
  for (std::size_t i = 0; i < size; ++i) {
    const int n = cfg.label(i);
    h.diagonal[i] = shift - coeffs[i].total();
    h.entries(i, i) = h.diagonal[i].to_double();
    for (const int k : {1, 2, 3}) {
      if (!cfg.is_label(n + k)) continue;
      const std::size_t j = cfg.index_of_label(n + k);
      const Rational square = coeffs[i].by_shift(k) * coeffs[j].by_shift(-k);
      if (square.sign() < 0) {
        throw NegativeUnderRoot("coupling " + std::to_string(n) + " <-> " + std::to_string(n + k) +
                                " has negative square " + square.str());
      }
      h.squares(i, j) = square;
      h.squares(j, i) = square;
      const double value = std::sqrt(square.to_double());
      h.entries(i, j) = value;
      h.entries(j, i) = value;
    }
  }
  return h;
}

SpectralTable spectral_table(const ModelConfig& cfg) {
  cfg.require_walk();
  const XPolynomialTable table(cfg);
  const std::size_t size = cfg.size();
  SpectralTable out{{}, Dense<double>(size, size)};
  for (const int x : cfg.grid()) out.eigenvalues.push_back(eigenvalue_quantum(cfg, x));
  for (std::size_t n = 0; n < size; ++n) {
    for (std::size_t x = 0; x < size; ++x) {
      const Rational& k = table.value_at(n, x);
      out.vectors(n, x) = signed_sqrt(table.weight_at(x) * k * k / table.norm_at(n), k.sign());
    }
  }
  return out;
}

QuantumWalk::QuantumWalk(const ModelConfig& cfg)
    : cfg_(cfg), hamiltonian_(hamiltonian(cfg)), spectrum_(spectral_table(cfg)) {}

AmplitudeMatrix QuantumWalk::amplitudes(const WalkTime& t) const {
  const std::size_t size = cfg_.size();
  std::vector<std::complex<double>> phases(size);
  for (std::size_t x = 0; x < size; ++x) phases[x] = t.phase(spectrum_.eigenvalues[x]);
  AmplitudeMatrix out{Dense<std::complex<double>>(size, size), t.value()};
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i; j < size; ++j) {
      std::complex<double> acc;
      for (std::size_t x = 0; x < size; ++x) acc += spectrum_.vectors(i, x) * spectrum_.vectors(j, x) * phases[x];
      out.entries(i, j) = acc;
      out.entries(j, i) = acc;
    }
  }
  return out;
}

std::vector<std::complex<double>> QuantumWalk::row(int site, const WalkTime& t) const {
  const std::size_t size = cfg_.size();
  if (site < 0 || static_cast<std::size_t>(site) >= size) {
    throw IndexOutOfRange("site " + std::to_string(site) + " outside 0.." + std::to_string(size - 1));
  }
  const auto i = static_cast<std::size_t>(site);
  std::vector<std::complex<double>> out(size);
  for (std::size_t x = 0; x < size; ++x) {
    const std::complex<double> ph = t.phase(spectrum_.eigenvalues[x]) * spectrum_.vectors(i, x);
    for (std::size_t j = 0; j < size; ++j) out[j] += spectrum_.vectors(j, x) * ph;
  }
  return out;
}

AmplitudeMatrix amplitude_matrix(const ModelConfig& cfg, const WalkTime& t) { return QuantumWalk(cfg).amplitudes(t); }

Rational perfect_return_time(const ModelConfig& cfg) {
  const Rational base = eigenvalue_quantum(cfg, -1);
  RationalSet gaps;
  for (const int x : cfg.grid()) gaps.values.push_back(eigenvalue_quantum(cfg, x) - base);
  try {
    return Rational(2) / rational_gcd(gaps);
  } catch (const AllZero&) {
    throw DegenerateSpectrum("all eigenvalues coincide");
  }
}

Rational mu_gap(int N, int x) {
  if (x < -1 || x > N - 1) throw IndexOutOfRange("mu_x needs -1 <= x <= N-1");
  const long n = N;
  const long y = x;
  return -Rational(n * n - 4 * n * y + 4 * y * y - 3 * n + 8 * y + 6) / binomial(n + 3, 3);
}

Rational n0_value(int N) {
  const Rational b = binomial(N + 3, 3);
  switch (N % 8) {
    case 0: case 3: case 4: case 7: return b / Rational(2);
    case 1: case 2: case 6: return b / Rational(4);
    default: return b / Rational(8);  // N = 5 mod 8
  }
}

Parity support_parity(const std::vector<std::complex<double>>& row) {
  bool even = false;
  bool odd = false;
  for (std::size_t j = 0; j < row.size(); ++j) {
    const double m = std::abs(row[j]);
    if (m < kZeroThreshold) continue;
    if (m < kSupportThreshold) return Parity::Mixed;
    (j % 2 == 0 ? even : odd) = true;
  }
  if (even == odd) return Parity::Mixed;
  return even ? Parity::Even : Parity::Odd;
}

Parity theorem_parity(int N, int start) {
  // N = 6 mod 8: zero for i+j odd. Otherwise zero for i+j+N even.
  const int j_parity = N % 8 == 6 ? start % 2 : (start + N + 1) % 2;
  return j_parity == 0 ? Parity::Even : Parity::Odd;
}

RevivalReport revival_report(const ModelConfig& cfg, int start) {
  const QuantumWalk walk(cfg);
  RevivalReport report;
  report.start = start;
  report.t0 = perfect_return_time(cfg);
  report.return_fidelity = std::abs(walk.row(start, WalkTime::pi_multiple(report.t0))[static_cast<std::size_t>(start)]);
  report.half_time_support = support_parity(walk.row(start, WalkTime::pi_multiple(report.t0 / Rational(2))));
  if (cfg.p() == Rational(1, 2)) {
    const Rational n0 = n0_value(cfg.N());
    report.theorem_prediction = theorem_parity(cfg.N(), start);
    report.theorem_t0 = Rational(2) * n0;
    report.theorem_half_time_support = support_parity(walk.row(start, WalkTime::pi_multiple(n0)));
    report.agreement = *report.theorem_prediction == *report.theorem_half_time_support;
  }
  return report;
}

PstScanReport pst_scan(const ModelConfig& cfg, const std::vector<WalkTime>& times, double tolerance) {
  const QuantumWalk walk(cfg);
  PstScanReport report;
  for (const WalkTime& t : times) {
    const AmplitudeMatrix c = walk.amplitudes(t);
    PstScanEntry entry;
    entry.time = t.str();
    for (std::size_t i = 0; i < cfg.size(); ++i) {
      for (std::size_t j = 0; j < cfg.size(); ++j) {
        if (i == j) continue;
        const double m = std::abs(c.entries(i, j));
        if (m > entry.max_offdiagonal) {
          entry.max_offdiagonal = m;
          entry.from = static_cast<int>(i);
          entry.to = static_cast<int>(j);
        }
      }
    }
    entry.pst = entry.max_offdiagonal > 1.0 - tolerance;
    report.any_pst = report.any_pst || entry.pst;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace xkraw
