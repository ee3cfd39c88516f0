#include "xkraw/classical_walk.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "xkraw/counter_rng.hpp"
#include "xkraw/errors.hpp"

namespace xkraw {

namespace {

constexpr int kShifts[] = {3, 2, 1, -1, -2, -3};

}  // namespace

Dense<double> RateMatrix::to_double() const {
  Dense<double> out(size(), size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) out(i, j) = entries_(i, j).to_double();
  }
  return out;
}

std::vector<double> EmpiricalDistribution::frequencies() const {
  std::vector<double> out(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out[i] = static_cast<double>(counts[i]) / static_cast<double>(trajectories);
  }
  return out;
}

RateMatrix rate_matrix(const ModelConfig& cfg) {
  if (cfg.ell() != 2) throw InvalidConfig("the walk is defined for ell = 2 only");
  const std::size_t size = cfg.size();
  Dense<Rational> a(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    const int n = cfg.label(i);
    const RecurrenceCoeffs c = recurrence_coeffs(cfg, n);
    for (const int shift : kShifts) {
      const Rational& rate = c.by_shift(shift);
      if (rate.is_zero()) continue;
      if (!cfg.is_label(n + shift)) {
        throw Error("rate from " + std::to_string(n) + " leaves Lambda_2 (shift " + std::to_string(shift) + ")");
      }
      if (rate.sign() < 0) {
        throw NegativeRate("rate " + std::to_string(n) + " -> " + std::to_string(n + shift) + " is " + rate.str() +
                           " for p = " + cfg.p().str());
      }
      a(i, cfg.index_of_label(n + shift)) = rate;
    }
    a(i, i) = -c.total();
  }
  return RateMatrix(cfg, std::move(a));
}

ClassicalWalk::ClassicalWalk(const ModelConfig& cfg) : cfg_(cfg), table_(cfg), rates_(rate_matrix(cfg)) {
  const std::size_t size = cfg_.size();
  const std::vector<int> grid = cfg_.grid();
  for (const int x : grid) {
    lambda_.push_back(eigenvalue_classical(cfg_, x));
    lambda_d_.push_back(lambda_.back().to_double());
  }
  coeff_.resize(size * size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      for (std::size_t x = 0; x < size; ++x) {
        const Rational c = table_.weight_at(x) * table_.value_at(i, x) * table_.value_at(j, x) / table_.norm_at(j);
        coeff_[(i * size + j) * size + x] = c.to_double();
      }
    }
  }
}

TransitionMatrix ClassicalWalk::transition(double t) const {
  if (t < 0.0) throw InvalidConfig("time must be non-negative");
  const std::size_t size = cfg_.size();
  std::vector<double> decay(size);
  for (std::size_t x = 0; x < size; ++x) decay[x] = std::exp(lambda_d_[x] * t);
  TransitionMatrix out{Dense<double>(size, size), t};
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      double acc = 0.0;
      const double* c = &coeff_[(i * size + j) * size];
      for (std::size_t x = 0; x < size; ++x) acc += c[x] * decay[x];
      out.entries(i, j) = acc;
    }
  }
  return out;
}

TransitionMatrix transition_matrix(const ModelConfig& cfg, double t) { return ClassicalWalk(cfg).transition(t); }

std::vector<Rational> stationary(const ModelConfig& cfg) {
  cfg.require_walk();
  const int big_n = cfg.N();
  const Rational& p = cfg.p();
  const Rational q = cfg.q();
  const Rational denom = pochhammer(Rational(big_n + 2), 2) *
                         krawtchouk_eval<Rational>(2, Rational(-big_n - 2), Rational(-big_n - 1), p);
  std::vector<Rational> r;
  for (const int j : cfg.labels()) {
    r.push_back(binomial(big_n + 3, j) * pochhammer(Rational(big_n - j + 1), 2) * pow(p, j - 2) *
                pow(q, big_n - j + 3) / denom);
  }
  return r;
}

Dense<double> matexp(const Dense<double>& a, double t) {
  const std::size_t n = a.rows();
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(a(i, j) * t);
    norm = std::max(norm, row);
  }
  int squarings = 0;
  while (norm / std::ldexp(1.0, squarings) > 0.5) ++squarings;
  const double scale = t / std::ldexp(1.0, squarings);

  Dense<double> b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b(i, j) = a(i, j) * scale;
  }
  Dense<double> result = Dense<double>::identity(n);
  Dense<double> term = Dense<double>::identity(n);
  for (int k = 1; k <= 20; ++k) {
    term = term * b;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        term(i, j) /= static_cast<double>(k);
        result(i, j) += term(i, j);
      }
    }
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

TransitionMatrix matexp_oracle(const RateMatrix& rates, double t) {
  if (t < 0.0) throw InvalidConfig("time must be non-negative");
  return TransitionMatrix{matexp(rates.to_double(), t), t};
}

unsigned default_thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("XKRAW_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return std::min(hw, static_cast<unsigned>(v));
  }
  return hw;
}

namespace {

struct Jump {
  std::size_t target;
  double rate;
};

struct JumpTable {
  std::vector<std::vector<Jump>> jumps;  // per state, in shift order +3..-3
  std::vector<double> totals;
};

JumpTable make_jump_table(const RateMatrix& rates) {
  const ModelConfig& cfg = rates.config();
  JumpTable table;
  table.jumps.resize(rates.size());
  table.totals.resize(rates.size());
  for (std::size_t i = 0; i < rates.size(); ++i) {
    const int n = cfg.label(i);
    double total = 0.0;
    for (const int shift : kShifts) {
      if (!cfg.is_label(n + shift)) continue;
      const std::size_t j = cfg.index_of_label(n + shift);
      const double r = rates.at(i, j).to_double();
      if (r <= 0.0) continue;
      table.jumps[i].push_back({j, r});
      total += r;
    }
    table.totals[i] = total;
  }
  return table;
}

std::size_t simulate(const JumpTable& table, std::size_t state, double horizon, CounterRng& rng) {
  double t = 0.0;
  while (true) {
    const double total = table.totals[state];
    if (total <= 0.0) return state;
    t += -std::log1p(-rng.uniform()) / total;
    if (t > horizon) return state;
    const double target = rng.uniform() * total;
    const auto& jumps = table.jumps[state];
    double acc = 0.0;
    std::size_t next = jumps.back().target;
    for (const Jump& jump : jumps) {
      acc += jump.rate;
      if (target < acc) {
        next = jump.target;
        break;
      }
    }
    state = next;
  }
}

}  // namespace

EmpiricalDistribution gillespie_sample(const ModelConfig& cfg, int start, double horizon,
                                       std::uint64_t trajectories, std::uint64_t seed, unsigned threads) {
  if (trajectories == 0) throw InvalidConfig("at least one trajectory is required");
  if (horizon < 0.0) throw InvalidConfig("horizon must be non-negative");
  const RateMatrix rates = rate_matrix(cfg);
  const std::size_t start_index = cfg.index_of_label(start);
  const JumpTable table = make_jump_table(rates);

  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trajectories));
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(cfg.size(), 0));
  const auto work = [&](unsigned worker) {
    const std::uint64_t begin = trajectories * worker / threads;
    const std::uint64_t end = trajectories * (worker + 1) / threads;
    for (std::uint64_t k = begin; k < end; ++k) {
      CounterRng rng(seed, k);
      ++partial[worker][simulate(table, start_index, horizon, rng)];
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  EmpiricalDistribution out;
  out.counts.assign(cfg.size(), 0);
  for (const auto& counts : partial) {
    for (std::size_t i = 0; i < counts.size(); ++i) out.counts[i] += counts[i];
  }
  out.trajectories = trajectories;
  out.horizon = horizon;
  out.seed = seed;
  return out;
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) s += std::abs(a[i] - b[i]);
  return 0.5 * s;
}

}  // namespace xkraw
