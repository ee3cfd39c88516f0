#pragma once

// Continuous-time quantum walk generated by the symmetric seven-diagonal
// Hamiltonian built from the orthonormal X_2-Krawtchouk recurrence.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "xkraw/dense.hpp"
#include "xkraw/exactnum.hpp"
#include "xkraw/model_config.hpp"

namespace xkraw {

// A time that is either an exact rational multiple of pi or a plain real.
class WalkTime {
 public:
  static WalkTime pi_multiple(Rational multiplier) { return WalkTime(std::move(multiplier)); }
  static WalkTime real(double t) { return WalkTime(t); }

  bool is_pi_multiple() const { return multiplier_.has_value(); }
  const Rational& multiplier() const { return *multiplier_; }
  double value() const;
  // exp(-i lambda t), with the phase reduced exactly mod 2 pi for pi multiples.
  std::complex<double> phase(const Rational& lambda) const;
  // "7/2pi", "0", or a %.15g real.
  std::string str() const;

 private:
  explicit WalkTime(Rational m) : multiplier_(std::move(m)) {}
  explicit WalkTime(double t) : real_(t) {}

  std::optional<Rational> multiplier_;
  double real_ = 0.0;
};

// Sites are 0..N+1; site N+1 carries the label N+3.
struct Hamiltonian {
  Dense<double> entries;
  std::vector<Rational> diagonal;  // -bar S_n, exact
  Dense<Rational> squares;         // exact squares of the off-diagonal entries
};

struct SpectralTable {
  std::vector<Rational> eigenvalues;  // bar lambda_x, x = -1..N
  Dense<double> vectors;              // column x+1 is v_x = (T_1(x), ..., T_{N+2}(x))
};

struct AmplitudeMatrix {
  Dense<std::complex<double>> entries;  // entries(i, j) = c_ij(t)
  double time = 0.0;
};

enum class Parity { Even, Odd, Mixed };
std::string to_string(Parity parity);

struct RevivalReport {
  int start = 0;
  Rational t0;                 // perfect-return time / pi
  double return_fidelity = 0;  // |c_{start,start}(t0)|
  Parity half_time_support = Parity::Mixed;
  // Only at p = 1/2: the parity class predicted by the revival theorem, its
  // time 2 n0 pi, and the support observed at n0 pi.
  std::optional<Parity> theorem_prediction;
  std::optional<Rational> theorem_t0;
  std::optional<Parity> theorem_half_time_support;
  bool agreement = false;
};

struct PstScanEntry {
  std::string time;
  double max_offdiagonal = 0.0;
  int from = 0;
  int to = 0;
  bool pst = false;
};

struct PstScanReport {
  std::vector<PstScanEntry> entries;
  bool any_pst = false;
};

// Requires ell = 2 and 0 < p <= 1/2.
Hamiltonian hamiltonian(const ModelConfig& cfg);
SpectralTable spectral_table(const ModelConfig& cfg);

// Everything needed to evaluate amplitudes repeatedly for one configuration.
class QuantumWalk {
 public:
  explicit QuantumWalk(const ModelConfig& cfg);

  const ModelConfig& config() const { return cfg_; }
  const SpectralTable& spectrum() const { return spectrum_; }
  const Hamiltonian& matrix() const { return hamiltonian_; }

  AmplitudeMatrix amplitudes(const WalkTime& t) const;
  // Row `site` only: c_{site, j}(t) for all j.
  std::vector<std::complex<double>> row(int site, const WalkTime& t) const;

 private:
  ModelConfig cfg_;
  Hamiltonian hamiltonian_;
  SpectralTable spectrum_;
};

AmplitudeMatrix amplitude_matrix(const ModelConfig& cfg, const WalkTime& t);

// t0 / pi = 2 / gcd{bar lambda_x - bar lambda_{-1}}.
Rational perfect_return_time(const ModelConfig& cfg);

// Consecutive-eigenvalue gap at p = 1/2, x in -1..N-1.
Rational mu_gap(int N, int x);
Rational n0_value(int N);

// Support parity of a row of amplitudes: entries below kZeroThreshold count as
// zero, entries between kZeroThreshold and kSupportThreshold make the result Mixed.
inline constexpr double kZeroThreshold = 1e-9;
inline constexpr double kSupportThreshold = 1e-6;
Parity support_parity(const std::vector<std::complex<double>>& row);

// Parity class of the sites where c_{start, j}(t0/2) may be nonzero at p = 1/2.
Parity theorem_parity(int N, int start);

RevivalReport revival_report(const ModelConfig& cfg, int start);

PstScanReport pst_scan(const ModelConfig& cfg, const std::vector<WalkTime>& times, double tolerance = 1e-6);

}  // namespace xkraw
