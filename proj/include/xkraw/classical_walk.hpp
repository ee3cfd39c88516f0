#pragma once

// Generalized birth-and-death process on Lambda_2 = {0..N, N+3}: generator,
// closed-form transition probabilities, stationary law and two oracles
// (matrix exponential, Gillespie sampling).

#include <cstdint>
#include <utility>
#include <vector>

#include "xkraw/dense.hpp"
#include "xkraw/exactnum.hpp"
#include "xkraw/krawtchouk.hpp"
#include "xkraw/model_config.hpp"

namespace xkraw {

// Generator A. Row = current state, column = next state, dense index per
// ModelConfig (index N+1 is the state N+3).
class RateMatrix {
 public:
  RateMatrix(ModelConfig cfg, Dense<Rational> entries) : cfg_(std::move(cfg)), entries_(std::move(entries)) {}

  const ModelConfig& config() const { return cfg_; }
  std::size_t size() const { return entries_.rows(); }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_(i, j); }
  // By state labels.
  const Rational& rate(int from, int to) const {
    return entries_(cfg_.index_of_label(from), cfg_.index_of_label(to));
  }
  const Dense<Rational>& entries() const { return entries_; }
  Dense<double> to_double() const;

 private:
  ModelConfig cfg_;
  Dense<Rational> entries_;
};

struct TransitionMatrix {
  Dense<double> entries;
  double time = 0.0;
};

struct EmpiricalDistribution {
  std::vector<std::uint64_t> counts;  // per dense state index
  std::uint64_t trajectories = 0;
  double horizon = 0.0;
  std::uint64_t seed = 0;

  std::vector<double> frequencies() const;
};

// Requires ell = 2. Throws NegativeRate if an off-diagonal rate is negative
// (which happens exactly when p > 1/2).
RateMatrix rate_matrix(const ModelConfig& cfg);

// Spectral data of the closed-form solution, computed once per configuration.
// P_ij(t) = sum_x coeff(i,j,x) exp(lambda_x t) with exact coefficients
// w_x hat K_i(x) hat K_j(x) / h_j converted to double at the end.
class ClassicalWalk {
 public:
  explicit ClassicalWalk(const ModelConfig& cfg);

  const ModelConfig& config() const { return cfg_; }
  const XPolynomialTable& table() const { return table_; }
  const RateMatrix& rates() const { return rates_; }
  const std::vector<Rational>& eigenvalues() const { return lambda_; }

  TransitionMatrix transition(double t) const;

 private:
  ModelConfig cfg_;
  XPolynomialTable table_;
  RateMatrix rates_;
  std::vector<Rational> lambda_;
  std::vector<double> lambda_d_;
  std::vector<double> coeff_;  // [(i * size + j) * size + x]
};

TransitionMatrix transition_matrix(const ModelConfig& cfg, double t);

// Exact stationary law r_j over Lambda_2 (dense index order).
std::vector<Rational> stationary(const ModelConfig& cfg);

// exp(tA) by scaling and squaring: scale until ||tA||_inf / 2^s <= 1/2, then a
// 20-term Taylor series, then s squarings.
TransitionMatrix matexp_oracle(const RateMatrix& rates, double t);
Dense<double> matexp(const Dense<double>& a, double t);

// Continuous-time Markov chain simulation from state label `start`.
// Trajectory k draws from its own counter-based stream keyed by (seed, k), so
// the counts do not depend on `threads` (0 = XKRAW_THREADS or hardware).
EmpiricalDistribution gillespie_sample(const ModelConfig& cfg, int start, double horizon,
                                       std::uint64_t trajectories, std::uint64_t seed, unsigned threads = 0);

// Total-variation distance 1/2 sum |a - b|.
double total_variation(const std::vector<double>& a, const std::vector<double>& b);

// Number of worker threads: XKRAW_THREADS if set and positive, else hardware.
unsigned default_thread_count();

}  // namespace xkraw
