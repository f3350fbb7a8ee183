#pragma once

#include <vector>

namespace plasmod {

inline constexpr double kDefaultTailTol = 1e-12;

// Table of J_m(x) for m = 0..order, built in a single backward-recurrence
// pass. The photon sums consume weight(m) = J_m(x)^2, which is even in m;
// signed values for negative orders follow from J_{-m}(x) = (-1)^m J_m(x).
//
// completeness = J_0^2 + 2 sum_{m=1..order} J_m^2. It is computed from the
// recurrence bookkeeping so that completeness <= 1 holds structurally and
// 1 - completeness bounds the discarded tail of the identity sum_m J_m^2 = 1.
struct BesselWeights {
  double x = 0.0;
  int order = 0;
  std::vector<double> j;     // J_0(x) .. J_order(x)
  double completeness = 1.0;

  [[nodiscard]] double j_signed(int m) const;  // J_m(x), any sign of m; 0 beyond order
  [[nodiscard]] double weight(int m) const;    // J_{|m|}(x)^2; 0 beyond order
};

// J_m(x) for integer m (any sign), |x| < 1e6.
// Accuracy: |result - J_m(x)| <= 1e-13 * max(1, |J_m(x)|).
[[nodiscard]] double bessel_j(int m, double x);

// Smallest M >= ceil(|x| + 10 |x|^{1/3} + 10) with
// 1 - sum_{|m|<=M} J_m(x)^2 <= tail_tol. tail_tol must lie in (0, 1e-6].
[[nodiscard]] int truncation_order(double x, double tail_tol = kDefaultTailTol);

[[nodiscard]] BesselWeights bessel_weights(double x,
                                           double tail_tol = kDefaultTailTol);

}  // namespace plasmod
