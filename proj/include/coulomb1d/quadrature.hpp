#pragma once

// Adaptive Gauss-Kronrod (7-15) integration on finite intervals, with a
// helper that truncates semi-infinite exponentially decaying integrands.

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace coulomb1d {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  double tail_cutoff = 1e-18;  // truncate where integrand < cutoff * peak
  int max_subdivisions = 4000;
};

inline void validate(const QuadratureConfig& q) {
  if (!(q.abs_tol > 0) || !(q.abs_tol < 1e-6) || !(q.rel_tol > 0) || !(q.rel_tol < 1e-6))
    throw std::invalid_argument("QuadratureConfig: tolerances must be positive and < 1e-6");
  if (!(q.tail_cutoff > 0) || q.max_subdivisions < 8)
    throw std::invalid_argument("QuadratureConfig: bad tail_cutoff or max_subdivisions");
}

namespace detail {

// Kronrod-15 nodes/weights on [-1, 1]; odd-indexed nodes are the Gauss-7 set.
inline constexpr double kKronrodX[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};
inline constexpr double kKronrodW[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename F>
inline std::pair<double, double> gk15(F&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double resk = kKronrodW[7] * f(c);
  double resg = kGaussW[3] * f(c);
  for (int i = 0; i < 7; ++i) {
    const double fv = f(c - h * kKronrodX[i]) + f(c + h * kKronrodX[i]);
    resk += kKronrodW[i] * fv;
    if (i % 2 == 1) resg += kGaussW[i / 2] * fv;
  }
  return {resk * h, std::abs(resk - resg) * h};
}

}  // namespace detail

/// Adaptive integral of f over [a, b]; bisects the interval with the worst
/// error estimate until the summed estimate meets the tolerance.
template <typename F>
inline double integrate(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
  validate(cfg);
  if (a == b) return 0.0;
  struct Seg {
    double a, b, val, err;
  };
  auto [v0, e0] = detail::gk15(f, a, b);
  std::vector<Seg> segs{{a, b, v0, e0}};
  for (int it = 0; it < cfg.max_subdivisions; ++it) {
    double total = 0, err = 0;
    size_t worst = 0;
    for (size_t i = 0; i < segs.size(); ++i) {
      total += segs[i].val;
      err += segs[i].err;
      if (segs[i].err > segs[worst].err) worst = i;
    }
    if (err <= cfg.abs_tol || err <= cfg.rel_tol * std::abs(total)) return total;
    const Seg s = segs[worst];
    const double m = 0.5 * (s.a + s.b);
    if (m <= s.a || m >= s.b) return total;  // resolution limit
    auto [v1, e1] = detail::gk15(f, s.a, m);
    auto [v2, e2] = detail::gk15(f, m, s.b);
    segs[worst] = {s.a, m, v1, e1};
    segs.push_back({m, s.b, v2, e2});
  }
  throw std::runtime_error("integrate: subdivision limit reached without convergence");
}

/// Integral of a decaying f over [a, inf): walks forward in blocks, tracking
/// the peak of |f|, and stops once block contributions fall below
/// tail_cutoff relative to the running peak scale.
template <typename F>
inline double integrate_to_infinity(F&& f, double a, double block,
                                    const QuadratureConfig& cfg = {}) {
  validate(cfg);
  if (!(block > 0)) throw std::invalid_argument("integrate_to_infinity: block must be positive");
  double total = 0, lo = a, peak = 0;
  int tiny = 0;
  for (int k = 0; k < 100000; ++k) {
    const double hi = lo + block;
    const double mid_mag = std::abs(f(0.5 * (lo + hi)));
    if (mid_mag > peak) peak = mid_mag;
    total += integrate(f, lo, hi, cfg);
    // Two consecutive tiny blocks, so a node of f at one midpoint cannot end
    // the walk early.
    tiny = (mid_mag <= cfg.tail_cutoff * peak) ? tiny + 1 : 0;
    if (k > 2 && tiny >= 2) return total;
    lo = hi;
  }
  throw std::runtime_error("integrate_to_infinity: tail did not fall below cutoff");
}

}  // namespace coulomb1d
