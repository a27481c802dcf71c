#pragma once

#include <stdexcept>

namespace staoi {

// Base class for every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid model/system parameters or a policy violating its invariants.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Mismatched vector lengths between per-state quantities.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// The optimization problem has no feasible point.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A computation left the representable range or a search failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

// A requested search space exceeds the supported size.
class SizeError : public Error {
 public:
  using Error::Error;
};

}  // namespace staoi
