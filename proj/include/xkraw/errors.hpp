#pragma once

#include <stdexcept>

namespace xkraw {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters outside the admissible range (N, p, ell, site labels).
class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// A Laurent series whose eps -> 0 limit does not exist.
class NonvanishingPole : public Error {
 public:
  using Error::Error;
};

// A Laurent operation left the fixed exponent window or ran out of exact terms.
class LaurentWindowOverflow : public Error {
 public:
  using Error::Error;
};

class AllZero : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroPochhammer : public Error {
 public:
  using Error::Error;
};

class SingularEvaluationPoint : public Error {
 public:
  using Error::Error;
};

class NegativeRate : public Error {
 public:
  using Error::Error;
};

class NegativeUnderRoot : public Error {
 public:
  using Error::Error;
};

class DegenerateSpectrum : public Error {
 public:
  using Error::Error;
};

}  // namespace xkraw
