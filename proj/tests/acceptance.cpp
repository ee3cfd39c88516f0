// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "reference_matrices.hpp"
#include "xkraw/classical_walk.hpp"
#include "xkraw/krawtchouk.hpp"
#include "xkraw/quantum_walk.hpp"

using namespace xkraw;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0 means no runtime bound
  std::function<Outcome()> check;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::vector<Rational> spectrum(int big_n, const Rational& p) {
  const ModelConfig cfg(big_n, p);
  std::vector<Rational> out;
  for (const int x : cfg.grid()) out.push_back(eigenvalue_quantum(cfg, x));
  return out;
}

double identity_distance(const AmplitudeMatrix& c) {
  double m = 0.0;
  for (std::size_t i = 0; i < c.entries.rows(); ++i) {
    for (std::size_t j = 0; j < c.entries.cols(); ++j) {
      m = std::max(m, std::abs(std::abs(c.entries(i, j)) - (i == j ? 1.0 : 0.0)));
    }
  }
  return m;
}

Outcome orthogonality() {
  long pairs = 0;
  for (int big_n = 3; big_n <= 12; ++big_n) {
    for (const Rational& p : {Rational(1, 4), Rational(1, 3), Rational(1, 2)}) {
      const ModelConfig cfg(big_n, p);
      const XPolynomialTable t(cfg);
      for (std::size_t m = 0; m < cfg.size(); ++m) {
        for (std::size_t n = 0; n < cfg.size(); ++n) {
          Rational s;
          for (std::size_t x = 0; x < cfg.size(); ++x) s += t.weight_at(x) * t.value_at(m, x) * t.value_at(n, x);
          if (s != (m == n ? t.norm_at(n) : Rational(0))) {
            return {false, "N=" + std::to_string(big_n) + " p=" + p.str() + " pair (" + std::to_string(cfg.label(m)) +
                               "," + std::to_string(cfg.label(n)) + ")"};
          }
          ++pairs;
        }
      }
    }
  }
  return {true, std::to_string(pairs) + " pairs exact"};
}

Outcome seven_term() {
  long checks = 0;
  for (int big_n = 3; big_n <= 12; ++big_n) {
    for (const Rational& p : {Rational(1, 4), Rational(1, 3), Rational(1, 2)}) {
      const ModelConfig cfg(big_n, p);
      const XPolynomialTable t(cfg);
      for (const int n : cfg.labels()) {
        const RecurrenceCoeffs c = recurrence_coeffs(cfg, n);
        for (const int x : cfg.grid()) {
          Rational rhs = -c.total() * t.value(n, x);
          for (const int k : {3, 2, 1, -1, -2, -3}) {
            if (!c.by_shift(k).is_zero()) rhs += c.by_shift(k) * t.value(n + k, x);
          }
          if (eigenvalue_classical(cfg, x) * t.value(n, x) != rhs) {
            return {false, "N=" + std::to_string(big_n) + " n=" + std::to_string(n) + " x=" + std::to_string(x)};
          }
          ++checks;
        }
      }
    }
  }
  return {true, std::to_string(checks) + " (n, x) points exact"};
}

Outcome eigenvalue_lists() {
  const std::vector<Rational> quarter{Rational(27), Rational(103, 7), Rational(7), Rational(19, 7),
                                      Rational(5, 7), Rational(-1, 7), Rational(-1)};
  const std::vector<Rational> half{Rational(1),     Rational(3, 7),  Rational(1, 7), Rational(0),
                                   Rational(-1, 7), Rational(-3, 7), Rational(-1)};
  const bool a = spectrum(5, Rational(1, 4)) == quarter;
  const bool b = spectrum(5, Rational(1, 2)) == half;
  return {a && b, std::string("p=1/4 ") + (a ? "exact" : "differs") + ", p=1/2 " + (b ? "exact" : "differs")};
}

Outcome displayed_hamiltonians() {
  std::ostringstream detail;
  bool pass = true;
  for (const auto& [p, display] : {std::pair{Rational(1, 4), &reference::quarter()},
                                   std::pair{Rational(1, 2), &reference::half()}}) {
    const ModelConfig cfg(5, p);
    const QuantumWalk walk(cfg);
    const Hamiltonian& h = walk.matrix();
    int matches = 0;
    std::vector<std::string> bad;
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        if (std::abs(h.entries(i, j) - (*display)[i][j].value()) <= 1e-12) {
          ++matches;
        } else {
          bad.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ") shown " + (*display)[i][j].str() +
                        " computed^2 " + h.squares(i, j).str());
        }
      }
    }
    double residual = 0.0;
    const auto& v = walk.spectrum().vectors;
    for (std::size_t x = 0; x < 7; ++x) {
      const double lambda = walk.spectrum().eigenvalues[x].to_double();
      for (std::size_t i = 0; i < 7; ++i) {
        double mv = 0.0;
        for (std::size_t k = 0; k < 7; ++k) mv += h.entries(i, k) * v(k, x);
        residual = std::max(residual, std::abs(mv - lambda * v(i, x)));
      }
    }
    pass = pass && matches * 10 >= 49 * 9 && residual < 1e-10;
    detail << "p=" << p.str() << ": " << matches << "/49 match, residual " << fmt(residual);
    for (const auto& b : bad) detail << "; mismatch " << b;
    detail << ". ";
  }
  return {pass, detail.str()};
}

Outcome perfect_return() {
  const ModelConfig quarter(5, Rational(1, 4));
  const ModelConfig half(5, Rational(1, 2));
  const Rational tq = perfect_return_time(quarter);
  const Rational th = perfect_return_time(half);
  const double dq = identity_distance(amplitude_matrix(quarter, WalkTime::pi_multiple(tq)));
  const double dh = identity_distance(amplitude_matrix(half, WalkTime::pi_multiple(th)));
  const double early = identity_distance(amplitude_matrix(quarter, WalkTime::pi_multiple(tq / Rational(2))));
  const bool pass = tq == Rational(7) && th == Rational(14) && dq < 1e-9 && dh < 1e-9 && early > 1e-9;
  return {pass, "t0 = " + tq.str() + " pi and " + th.str() + " pi, deviation " + fmt(dq) + " / " + fmt(dh) +
                    ", at t0/2 " + fmt(early)};
}

Outcome fractional_revival() {
  const QuantumWalk five(ModelConfig(5, Rational(1, 2)));
  const auto row = five.row(1, WalkTime::pi_multiple(Rational(7)));
  double even_max = 0.0;
  double odd_mass = 0.0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j % 2 == 0) even_max = std::max(even_max, std::abs(row[j]));
    else odd_mass += std::norm(row[j]);
  }
  bool pass = even_max < 1e-9 && std::abs(odd_mass - 1.0) < 1e-8;
  std::string detail = "N=5: even max " + fmt(even_max) + ", odd mass " + fmt(odd_mass) + "; N=6 at 21 pi:";

  const QuantumWalk six(ModelConfig(6, Rational(1, 2)));
  for (int start = 0; start < 8; ++start) {
    const auto r = six.row(start, WalkTime::pi_multiple(Rational(21)));
    double off_max = 0.0;
    double on_mass = 0.0;
    const Parity parity = support_parity(r);
    const std::size_t keep = parity == Parity::Odd ? 1 : 0;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j % 2 == keep) on_mass += std::norm(r[j]);
      else off_max = std::max(off_max, std::abs(r[j]));
    }
    pass = pass && parity != Parity::Mixed && off_max < 1e-9 && std::abs(on_mass - 1.0) < 1e-8;
    detail += " " + std::to_string(start) + "->" + to_string(parity);
  }
  return {pass, detail};
}

Outcome lemma() {
  bool formula = true;
  std::vector<std::string> not_odd;
  bool integers = true;
  for (int big_n = 1; big_n <= 16; ++big_n) {
    const ModelConfig cfg(big_n, Rational(1, 2));
    const Rational n0 = n0_value(big_n);
    const int r = big_n % 8;
    std::string first_even;
    for (int x = -1; x <= big_n - 1; ++x) {
      const Rational mu = mu_gap(big_n, x);
      formula = formula && mu == eigenvalue_quantum(cfg, x + 1) - eigenvalue_quantum(cfg, x);
      const Rational s = n0 * mu;
      integers = integers && s.is_integer();
      if (first_even.empty() && s.is_integer() && s.numerator() % 2 == 0) {
        first_even = "x=" + std::to_string(x) + " gives " + s.str();
      }
    }
    if (r != 1 && r != 6 && !first_even.empty()) not_odd.push_back("N=" + std::to_string(big_n) + " (" + first_even + ")");
  }
  std::string detail = std::string("gap formula ") + (formula ? "exact" : "wrong") + ", integrality " +
                       (integers ? "holds" : "fails");
  if (!not_odd.empty()) {
    detail += "; claimed odd but has even values:";
    for (const auto& s : not_odd) detail += " " + s;
  }
  return {formula && integers && not_odd.empty(), detail};
}

Outcome classical_vs_matexp() {
  double worst = 0.0;
  for (const int big_n : {4, 6, 8}) {
    for (const Rational& p : {Rational(1, 4), Rational(1, 2)}) {
      const ClassicalWalk walk(ModelConfig(big_n, p));
      for (const double t : {0.1, 1.0, 10.0}) {
        const auto a = walk.transition(t).entries;
        const auto b = matexp_oracle(walk.rates(), t).entries;
        for (std::size_t i = 0; i < a.rows(); ++i) {
          for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
      }
    }
  }
  return {worst < 1e-10, "max |closed form - expm| = " + fmt(worst)};
}

Outcome stationary_distribution() {
  const ModelConfig cfg(5, Rational(1, 4));
  const std::vector<Rational> r = stationary(cfg);
  const RateMatrix a = rate_matrix(cfg);
  Rational total;
  for (const auto& v : r) total += v;
  bool balanced = true;
  for (std::size_t j = 0; j < cfg.size(); ++j) {
    Rational s;
    for (std::size_t i = 0; i < cfg.size(); ++i) s += r[i] * a.at(i, j);
    balanced = balanced && s.is_zero();
  }
  const auto p = transition_matrix(cfg, 200.0).entries;
  double worst = 0.0;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    for (std::size_t j = 0; j < cfg.size(); ++j) worst = std::max(worst, std::abs(p(i, j) - r[j].to_double()));
  }
  const bool pass = total == Rational(1) && balanced && worst < 1e-8;
  return {pass, "sum " + total.str() + ", rA " + (balanced ? "= 0" : "!= 0") + ", |P(200) - r| " + fmt(worst)};
}

Outcome gillespie() {
  const ModelConfig cfg(5, Rational(1, 4));
  const EmpiricalDistribution e = gillespie_sample(cfg, 1, 1.0, 100000, 20240501);
  const auto p = transition_matrix(cfg, 1.0).entries;
  std::vector<double> row(cfg.size());
  for (std::size_t j = 0; j < cfg.size(); ++j) row[j] = p(1, j);
  const double tv = total_variation(e.frequencies(), row);
  return {tv < 0.02, "TV = " + fmt(tv) + " with 1e5 trajectories"};
}

Outcome no_state_transfer() {
  std::string detail;
  bool pass = true;
  for (const Rational& p : {Rational(1, 4), Rational(1, 2)}) {
    const ModelConfig cfg(5, p);
    const Rational t0 = perfect_return_time(cfg);
    std::vector<WalkTime> times;
    for (int k = 1; k <= 2000; ++k) times.push_back(WalkTime::pi_multiple(t0 * Rational(k, 2000)));
    const PstScanReport report = pst_scan(cfg, times, 1e-4);
    double worst = 0.0;
    std::string where;
    for (const auto& entry : report.entries) {
      if (entry.max_offdiagonal > worst) {
        worst = entry.max_offdiagonal;
        where = entry.time;
      }
    }
    pass = pass && !report.any_pst;
    detail += "p=" + p.str() + ": max off-diagonal " + fmt(worst) + " at t=" + where + ". ";
  }
  return {pass, detail};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact orthogonality", 10.0, orthogonality},
      {2, "seven-term recurrence", 0.0, seven_term},
      {3, "eigenvalue lists", 0.0, eigenvalue_lists},
      {4, "displayed Hamiltonians", 0.0, displayed_hamiltonians},
      {5, "perfect return", 0.0, perfect_return},
      {6, "fractional revival", 0.0, fractional_revival},
      {7, "consecutive gaps and n0 parity", 0.0, lemma},
      {8, "classical closed form vs matrix exponential", 30.0, classical_vs_matexp},
      {9, "stationary distribution", 0.0, stationary_distribution},
      {10, "Gillespie oracle", 60.0, gillespie},
      {11, "no perfect state transfer", 0.0, no_state_transfer},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      o.pass = false;
      o.detail += " (over the " + fmt(c.budget_seconds) + " s budget)";
    }
    std::printf("%s %2d %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), seconds);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
