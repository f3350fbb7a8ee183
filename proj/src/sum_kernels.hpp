#pragma once

// Internal helpers shared by the dielectric and response photon sums.

#include <cmath>

namespace plasmod::detail {

// exp(x) with a hard floor: exponents at or below -745 are exactly 0 on
// every platform instead of platform-dependent subnormals.
inline double exp_or_zero(double x) {
  return x <= -745.0 ? 0.0 : std::exp(x);
}

// lambda * exp(-lambda^2 * c), assembled in log space once the direct
// product would land in the subnormal range. Odd in lambda bit-for-bit.
inline double lambda_exp_term(double lambda, double c) {
  const double expo = -(lambda * lambda) * c;
  if (expo > -600.0) return lambda * exp_or_zero(expo);
  if (lambda == 0.0) return 0.0;
  const double mag = exp_or_zero(expo + std::log(std::abs(lambda)));
  return lambda > 0.0 ? mag : -mag;
}

// 1/l^2 + tq/l^4 (even in lambda bit-for-bit).
inline double even_pole_term(double lambda, double tq) {
  const double il2 = 1.0 / (lambda * lambda);
  return il2 + tq * il2 * il2;
}

// 2/l^3 + td/l^5 (odd in lambda bit-for-bit).
inline double odd_pole_term(double lambda, double td) {
  const double il2 = 1.0 / (lambda * lambda);
  return (il2 / lambda) * (2.0 + td * il2);
}

// 1/l^3 (odd in lambda bit-for-bit).
inline double inv_cube(double lambda) {
  const double il2 = 1.0 / (lambda * lambda);
  return il2 / lambda;
}

}  // namespace plasmod::detail
