#ifndef CYLCOVER_ERRORS_HPP_
#define CYLCOVER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cylcover {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A ray with vanishing vertical component was used where a height
// parametrization is required.
class ZeroVerticalComponent : public Error {
 public:
  ZeroVerticalComponent()
      : Error("ray direction has zero vertical component") {}
};

class InvalidIntensity : public Error {
 public:
  explicit InvalidIntensity(double rho)
      : Error("intensity must be positive, got " + std::to_string(rho)) {}
};

class InvalidSteps : public Error {
 public:
  explicit InvalidSteps(long long n)
      : Error("number of Brownian steps must be >= 1, got " +
              std::to_string(n)) {}
};

class UnsupportedCombination : public Error {
 public:
  using Error::Error;
};

class InvalidDistance : public Error {
 public:
  using Error::Error;
};

// Raised when a query point (or integration region) touches the base
// x_d = 0, where the covering intensity diverges.
class DegenerateHeight : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IOFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace cylcover

#endif  // CYLCOVER_ERRORS_HPP_
