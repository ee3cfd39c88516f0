#include "xkraw/model_config.hpp"

#include <utility>

#include "xkraw/errors.hpp"

namespace xkraw {

ModelConfig::ModelConfig(int N, Rational p, int ell) : n_(N), p_(std::move(p)), ell_(ell) {
  if (n_ < 1) throw InvalidConfig("N must be a positive integer");
  if (p_ <= Rational(0) || p_ >= Rational(1)) throw InvalidConfig("p must satisfy 0 < p < 1, got " + p_.str());
  if (ell_ < 1) throw InvalidConfig("ell must be a positive integer");
}

std::vector<int> ModelConfig::labels() const {
  std::vector<int> out;
  out.reserve(size());
  for (int n = 0; n <= n_; ++n) out.push_back(n);
  out.push_back(top_label());
  return out;
}

int ModelConfig::label(std::size_t index) const {
  if (index > static_cast<std::size_t>(n_) + 1) throw IndexOutOfRange("label index " + std::to_string(index));
  return index == static_cast<std::size_t>(n_) + 1 ? top_label() : static_cast<int>(index);
}

std::size_t ModelConfig::index_of_label(int n) const {
  if (!is_label(n)) throw IndexOutOfRange("label " + std::to_string(n) + " not in Lambda_" + std::to_string(ell_));
  return n == top_label() ? static_cast<std::size_t>(n_) + 1 : static_cast<std::size_t>(n);
}

std::vector<int> ModelConfig::grid() const {
  std::vector<int> out;
  out.reserve(size());
  for (int x = -1; x <= n_; ++x) out.push_back(x);
  return out;
}

std::size_t ModelConfig::index_of_grid(int x) const {
  if (!on_grid(x)) throw IndexOutOfRange("grid point " + std::to_string(x) + " not in X_N");
  return static_cast<std::size_t>(x + 1);
}

void ModelConfig::require_walk() const {
  if (ell_ != 2) throw InvalidConfig("walks are defined for ell = 2 only");
  if (p_ > Rational(1, 2)) throw InvalidConfig("walks require 0 < p <= 1/2, got p = " + p_.str());
}

void ModelConfig::require_even_ell() const {
  if (ell_ % 2 != 0) throw InvalidConfig("weights are positive only for even ell");
}

std::string ModelConfig::describe() const {
  return "N=" + std::to_string(n_) + ", p=" + p_.str() + ", ell=" + std::to_string(ell_);
}

}  // namespace xkraw
