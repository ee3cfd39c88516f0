#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "xkraw/exactnum.hpp"

namespace xkraw {

// Problem parameters (N, p, ell). Index set Lambda_ell = {0..N, N+ell+1} and
// grid X_N = {-1..N} are derived from it. Dense arrays use index n for labels
// 0..N and index N+1 for the label N+ell+1; grid point x sits at index x+1.
class ModelConfig {
 public:
  // Throws InvalidConfig unless N >= 1, 0 < p < 1, ell >= 1.
  ModelConfig(int N, Rational p, int ell = 2);

  int N() const { return n_; }
  const Rational& p() const { return p_; }
  Rational q() const { return Rational(1) - p_; }
  int ell() const { return ell_; }

  // N + 2, the number of labels and of grid points.
  std::size_t size() const { return static_cast<std::size_t>(n_) + 2; }
  int top_label() const { return n_ + ell_ + 1; }
  std::vector<int> labels() const;
  int label(std::size_t index) const;
  bool is_label(int n) const { return (n >= 0 && n <= n_) || n == top_label(); }
  std::size_t index_of_label(int n) const;

  std::vector<int> grid() const;
  bool on_grid(int x) const { return x >= -1 && x <= n_; }
  std::size_t index_of_grid(int x) const;

  // Requirements of the walk constructions: ell == 2 and 0 < p <= 1/2.
  void require_walk() const;
  void require_even_ell() const;

  std::string describe() const;

 private:
  int n_;
  Rational p_;
  int ell_;
};

}  // namespace xkraw
