#pragma once

// Published 7x7 Hamiltonians for N = 5 at p = 1/4 and p = 1/2, transcribed
// entry by entry as a*sqrt(b)/c.

#include <array>
#include <cmath>
#include <string>

#include "xkraw/exactnum.hpp"

namespace reference {

struct Surd {
  long a = 0;
  long b = 1;
  long c = 1;
  double value() const { return static_cast<double>(a) * std::sqrt(static_cast<double>(b)) / static_cast<double>(c); }
  xkraw::Rational square() const { return xkraw::Rational(a * a * b, c * c); }
  std::string str() const {
    std::string s = std::to_string(a);
    if (b != 1) s += "*sqrt(" + std::to_string(b) + ")";
    if (c != 1) s += "/" + std::to_string(c);
    return s;
  }
};

using Display = std::array<std::array<Surd, 7>, 7>;

inline constexpr Surd z{0, 1, 1};

inline const Display& quarter() {
  static const Display m{{
      {{{92, 1, 7}, {15, 210, 28}, {3, 30, 7}, {3, 3, 14}, z, z, z}},
      {{{15, 210, 28}, {25, 1, 2}, {87, 7, 28}, {9, 70, 28}, {3, 21, 28}, z, z}},
      {{{3, 30, 7}, {87, 7, 28}, {74, 1, 7}, {9, 10, 4}, {9, 3, 7}, {3, 15, 28}, z}},
      {{{3, 3, 14}, {9, 70, 28}, {9, 10, 4}, {55, 1, 7}, {27, 30, 28}, {15, 6, 28}, z}},
      {{z, {3, 21, 28}, {9, 3, 7}, {3, 15, 28}, {34, 1, 7}, {39, 5, 28}, z}},
      {{z, z, {3, 15, 28}, {15, 6, 28}, {39, 5, 28}, {29, 1, 14}, {3, 42, 28}}},
      {{z, z, z, z, z, {3, 42, 28}, z}},
  }};
  return m;
}

inline const Display& half() {
  static const Display m{{
      {{z, {1, 70, 28}, z, {1, 1, 14}, z, z, z}},
      {{{1, 70, 28}, z, {3, 21, 28}, z, {1, 7, 28}, z, z}},
      {{z, {3, 21, 28}, z, {3, 30, 28}, z, {1, 5, 28}, z}},
      {{{1, 1, 14}, z, {3, 30, 28}, z, {5, 10, 28}, z, z}},
      {{z, {1, 7, 28}, z, {5, 10, 28}, z, {3, 15, 28}, z}},
      {{z, z, {1, 5, 28}, z, {3, 15, 28}, z, {1, 14, 28}}},
      {{z, z, z, z, z, {1, 14, 28}, z}},
  }};
  return m;
}

}  // namespace reference
