#pragma once

#include <stdexcept>
#include <string>

namespace nidim {

// Base class for all computational errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A Gamma-function prefactor (or an equivalent closed-form factor) sits on a pole.
class PoleArgument : public Error {
 public:
  using Error::Error;
};

// Third hypergeometric parameter is a nonpositive integer.
class DegenerateC : public Error {
 public:
  using Error::Error;
};

// A series or quadrature failed to reach the requested tolerance.
class NonConvergent : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

// An integral/series was requested outside its absolute-convergence region.
class OutsideConvergence : public Error {
 public:
  using Error::Error;
};

// Effective mass squared is nonpositive: a pole pinches the integration path.
class NegativeMassSquared : public Error {
 public:
  using Error::Error;
};

// Evaluation requested exactly at (or too close to) a pole of a zeta function.
class AtPole : public Error {
 public:
  using Error::Error;
};

class NoPoleDetected : public Error {
 public:
  using Error::Error;
};

class CutoffTooSmall : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace nidim
