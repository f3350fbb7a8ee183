#include "plasmod/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace plasmod {

namespace {

constexpr double kArgGuard = 1e6;
// Below this, J_0 = 1 and J_1 = x/2 to full double precision and every
// higher order underflows; the recurrence path is skipped entirely.
constexpr double kTinyArg = 1e-150;
// Power-of-two rescale bound: scaling is exact and p^2 stays finite.
constexpr double kRescaleAt = 0x1p466;   // ~1.9e140
constexpr double kRescaleBy = 0x1p-466;

int heuristic_floor(double x_abs) {
  return static_cast<int>(std::ceil(x_abs + 10.0 * std::cbrt(x_abs) + 10.0));
}

// Backward (Miller) recurrence table on x in [kTinyArg, kArgGuard).
// Returns J_0..J_top plus, per order k, the quadratic tail ratio
//   tail_ratio[k] = (sum_{|m| > k} J_m^2) / (sum_m J_m^2),
// accumulated in descending order. Prefix sums of nonnegative terms are
// monotone, so 1 - tail_ratio[k] can never exceed 1.
struct JTable {
  std::vector<double> j;
  std::vector<double> tail_ratio;
};

JTable build_table(double x_abs, int top) {
  const int pad = std::max(
      40, static_cast<int>(std::ceil(12.0 * std::cbrt(std::max(x_abs, 1.0)))));
  long start = std::max<long>(top, static_cast<long>(std::ceil(x_abs))) + pad;
  if (start % 2 != 0) ++start;

  std::vector<double> p(static_cast<size_t>(top) + 1, 0.0);
  std::vector<double> tail(static_cast<size_t>(top) + 1, 0.0);

  double quad = 0.0;   // running p_0^2 + 2 sum p_k^2, accumulated downward
  double lin = 0.0;    // running p_0 + 2 sum p_{2k}; only its sign is used
  double pk1 = 0.0;    // p_{k+1}
  double pk = 1e-100;  // trial seed at order `start`
  long written = start + 1;  // lowest order already stored in p/tail

  for (long k = start; k >= 0; --k) {
    while (std::abs(pk) >= kRescaleAt) {
      pk *= kRescaleBy;
      pk1 *= kRescaleBy;
      lin *= kRescaleBy;
      quad *= kRescaleBy * kRescaleBy;
      for (long i = written; i <= top; ++i) {
        p[static_cast<size_t>(i)] *= kRescaleBy;
        tail[static_cast<size_t>(i)] *= kRescaleBy * kRescaleBy;
      }
    }
    if (k <= top) {
      tail[static_cast<size_t>(k)] = quad;  // orders strictly above k
      p[static_cast<size_t>(k)] = pk;
      written = k;
    }
    quad += (k == 0) ? pk * pk : 2.0 * pk * pk;
    if (k % 2 == 0) lin += (k == 0) ? pk : 2.0 * pk;

    if (k > 0) {
      const double pm1 = (2.0 * static_cast<double>(k) / x_abs) * pk - pk1;
      pk1 = pk;
      pk = pm1;
    }
  }

  JTable out;
  out.j.resize(static_cast<size_t>(top) + 1);
  out.tail_ratio.resize(static_cast<size_t>(top) + 1);
  const double norm = (lin < 0.0 ? -1.0 : 1.0) / std::sqrt(quad);
  for (long k = 0; k <= top; ++k) {
    out.j[static_cast<size_t>(k)] = p[static_cast<size_t>(k)] * norm;
    out.tail_ratio[static_cast<size_t>(k)] = tail[static_cast<size_t>(k)] / quad;
  }
  return out;
}

void check_arg(double x) {
  if (!(std::abs(x) < kArgGuard))
    throw std::invalid_argument("bessel: |x| must be finite and < 1e6");
}

void check_tail_tol(double tail_tol) {
  if (!(tail_tol > 0.0 && tail_tol <= 1e-6))
    throw std::invalid_argument("bessel: tail_tol must lie in (0, 1e-6]");
}

}  // namespace

double BesselWeights::j_signed(int m) const {
  const int a = m < 0 ? -m : m;
  if (a > order) return 0.0;
  const double v = j[static_cast<size_t>(a)];
  return (m < 0 && (a % 2 != 0)) ? -v : v;
}

double BesselWeights::weight(int m) const {
  const int a = m < 0 ? -m : m;
  if (a > order) return 0.0;
  const double v = j[static_cast<size_t>(a)];
  return v * v;
}

double bessel_j(int m, double x) {
  check_arg(x);
  const int a = m < 0 ? -m : m;
  // J_{-m}(x) = (-1)^m J_m(x) and J_m(-x) = (-1)^m J_m(x)
  const bool flip = ((m < 0) != (x < 0.0)) && (a % 2 != 0);
  const double xa = std::abs(x);

  double v;
  if (xa < kTinyArg) {
    v = (a == 0) ? 1.0 : (a == 1 ? 0.5 * xa : 0.0);
  } else {
    v = build_table(xa, a).j[static_cast<size_t>(a)];
  }
  return flip ? -v : v;
}

int truncation_order(double x, double tail_tol) {
  check_arg(x);
  check_tail_tol(tail_tol);
  const double xa = std::abs(x);
  const int floor_m = heuristic_floor(xa);
  if (xa < kTinyArg) return floor_m;

  int top = floor_m + 64;
  for (int attempt = 0; attempt < 24; ++attempt) {
    const JTable tbl = build_table(xa, top);
    for (int M = floor_m; M <= top; ++M) {
      if (tbl.tail_ratio[static_cast<size_t>(M)] <= tail_tol) return M;
    }
    top = 2 * top + 128;
  }
  throw std::runtime_error("truncation_order: completeness tolerance not reached");
}

BesselWeights bessel_weights(double x, double tail_tol) {
  check_arg(x);
  check_tail_tol(tail_tol);
  const double xa = std::abs(x);

  BesselWeights w;
  w.x = xa;
  if (xa < kTinyArg) {
    w.order = heuristic_floor(xa);
    w.j.assign(static_cast<size_t>(w.order) + 1, 0.0);
    w.j[0] = 1.0;
    if (w.order >= 1) w.j[1] = 0.5 * xa;
    w.completeness = 1.0;
    return w;
  }

  const int M = truncation_order(xa, tail_tol);
  const JTable tbl = build_table(xa, M);
  w.order = M;
  w.j = tbl.j;
  w.completeness = 1.0 - tbl.tail_ratio[static_cast<size_t>(M)];
  return w;
}

}  // namespace plasmod
