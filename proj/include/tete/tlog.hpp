#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "tete/error.hpp"

namespace tete {

/// Temperature of the generalized log/exp pair. Valid range is (0, 2];
/// the value 1 selects the classical log/exp branch (exact comparison,
/// not a tolerance).
class Temperature {
 public:
  explicit Temperature(double value) : value_(value) {
    if (!(value > 0.0) || !(value <= 2.0)) {
      throw ValidationError("temperature must lie in (0, 2], got " +
                            std::to_string(value));
    }
  }

  double value() const { return value_; }
  bool is_one() const { return value_ == 1.0; }

 private:
  double value_;
};

/// Generalized logarithm: log(x) at t = 1, otherwise (x^(1-t) - 1) / (1 - t).
/// Concave, non-decreasing, and log_t(1) = 0 for every temperature.
inline double log_t(double x, Temperature t) {
  if (!(x > 0.0)) {
    throw ValidationError("log_t requires x > 0, got " + std::to_string(x));
  }
  if (t.is_one()) return std::log(x);
  const double one_minus_t = 1.0 - t.value();
  // x^(1-t) as exp((1-t) log x); x > 0 so the log is safe.
  return (std::exp(one_minus_t * std::log(x)) - 1.0) / one_minus_t;
}

/// Generalized exponential, the inverse of log_t:
/// exp(x) at t = 1, otherwise [1 + (1-t) x]_+ ^ (1/(1-t)).
/// The clamp [.]_+ makes every real x valid. For t > 1 the clamp hits
/// only for x >= 1/(t-1), beyond the range of log_t; there the value
/// diverges and +infinity is returned.
inline double exp_t(double x, Temperature t) {
  if (t.is_one()) return std::exp(x);
  const double one_minus_t = 1.0 - t.value();
  const double base = 1.0 + one_minus_t * x;
  if (base <= 0.0) {
    return one_minus_t > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return std::exp(std::log(base) / one_minus_t);
}

/// Robust transform of a non-negative loss: log_t(1 + loss).
/// Zero at zero loss. For t > 1 the value stays strictly below the cap
/// 1/(t-1) for every finite loss; at t = 1 it degrades to the uncapped
/// log(1 + loss).
inline double rho_capped(double loss, Temperature t) {
  if (!(loss >= 0.0)) {
    throw ValidationError("rho_capped requires loss >= 0, got " +
                          std::to_string(loss));
  }
  return log_t(1.0 + loss, t);
}

/// Cap value of rho_capped for t > 1.
inline double rho_cap(Temperature t) {
  if (t.value() <= 1.0) return std::numeric_limits<double>::infinity();
  return 1.0 / (t.value() - 1.0);
}

}  // namespace tete
