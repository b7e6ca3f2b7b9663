#pragma once

#include <cmath>
#include <stdexcept>

#include "fbms/errors.hpp"

namespace fbms {

/// Legendre function of the second kind, degree 1:
/// Q1(x) = (x/2) ln((1+x)/(1-x)) - 1 = x artanh(x) - 1, |x| < 1.
inline double legendre_q1(double x) {
  if (!(std::abs(x) < 1.0)) {
    throw std::domain_error("legendre_q1: |x| must be < 1");
  }
  return x * std::atanh(x) - 1.0;
}

/// Q1'(x) = artanh(x) + x / (1 - x^2).
inline double legendre_q1_prime(double x) {
  if (!(std::abs(x) < 1.0)) {
    throw std::domain_error("legendre_q1_prime: |x| must be < 1");
  }
  return std::atanh(x) + x / (1.0 - x * x);
}

/// Q1''(x) = 1/(1-x^2) + (1+x^2)/(1-x^2)^2; equals (2x Q1' - 2 Q1)/(1-x^2)
/// by the degree-1 Legendre equation.
inline double legendre_q1_second(double x) {
  if (!(std::abs(x) < 1.0)) {
    throw std::domain_error("legendre_q1_second: |x| must be < 1");
  }
  const double w = 1.0 - x * x;
  return 1.0 / w + (1.0 + x * x) / (w * w);
}

}  // namespace fbms
