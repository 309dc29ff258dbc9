#pragma once

// Closed-form small-delta results: quantum-defect constants, defect
// expansions for both parities, the reduced even-parity eigenvalue equation
// and the expanded odd-parity equation.  Throughout x = 1/ln(1/delta).

#include <cmath>
#include <stdexcept>

#include "coulomb1d/specfun.hpp"

namespace coulomb1d {

inline double defect_x(double delta) { return 1.0 / std::log(1.0 / delta); }

struct DefectConstants {
  int n = 0;
  double c_n = 0.0;
};

/// c_0 = gamma + 2 ln2 - 1; c_n = gamma - 1 - 1/(2n) + ln2 + (H_n - ln n).
inline DefectConstants defect_constant(int n) {
  if (n < 0) throw std::invalid_argument("defect_constant: n must be >= 0");
  const double ln2 = std::log(2.0);
  if (n == 0) return {0, euler_gamma + 2.0 * ln2 - 1.0};
  const double harmonic_minus_log = digamma(n + 1.0) + euler_gamma - std::log(n);
  return {n, euler_gamma - 1.0 - 0.5 / n + ln2 + harmonic_minus_log};
}

/// n -> infinity limit of c_n.
inline double defect_constant_limit() {
  return 2.0 * euler_gamma - 1.0 + std::log(2.0);
}

/// Even-parity defect: rho_n = x(1 + c_n x) for n >= 1,
/// rho_0 = (x/2)[1 + x(c_0 - ln x)].
inline double rho_even(int n, double delta) {
  if (!(delta > 0) || !(delta < 1))
    throw std::invalid_argument("rho_even: requires 0 < delta < 1");
  const double x = defect_x(delta);
  if (n == 0) {
    const double c0 = defect_constant(0).c_n;
    return 0.5 * x * (1.0 + x * (c0 - std::log(x)));
  }
  return x * (1.0 + defect_constant(n).c_n * x);
}

/// Leading-order ("crude") variants: rho_0 ~ x/2, rho_n ~ x.
inline double rho_even_crude(int n, double delta) {
  const double x = defect_x(delta);
  return n == 0 ? 0.5 * x : x;
}

/// Odd-parity defect, independent of n: rho_n = (2/3) delta^2.
inline double rho_odd(int n, double delta) {
  if (n < 1) throw std::invalid_argument("rho_odd: requires n >= 1");
  return 2.0 / 3.0 * delta * delta;
}

/// Loudon's earlier excited-state defect, 1/rho = 1/x - (ln2 - ln n),
/// kept as a labeled comparison formula.
inline double loudon_rho_excited(int n, double delta) {
  if (n < 1) throw std::invalid_argument("loudon_rho_excited: requires n >= 1");
  const double x = defect_x(delta);
  return x / (1.0 - x * (std::log(2.0) - std::log(n)));
}

/// Residual of the reduced even-parity equation
///   2 = 1/beta + 2[2 gamma + ln(2 delta / beta) + Psi(1 - beta)],
/// as left minus right; diverges to -inf as beta -> n from above.
inline double rege_residual(double beta, double delta) {
  if (!(beta > 0)) throw std::domain_error("rege_residual: requires beta > 0");
  if (beta == std::floor(beta))
    throw std::domain_error("rege_residual: digamma pole at integer beta");
  const double rhs = 1.0 / beta + 2.0 * (2.0 * euler_gamma +
                                         std::log(2.0 * delta / beta) +
                                         digamma(1.0 - beta));
  return 2.0 - rhs;
}

/// delta -> 0 limit of the excited even-parity energies, -1/n^2.
inline double limiting_energy(int n) {
  if (n < 1) throw std::invalid_argument("limiting_energy: requires n >= 1");
  return -1.0 / (static_cast<double>(n) * n);
}

/// Residual of the second-order expansion of the odd-parity eigenvalue
/// equation (the derivation path behind rho_n = (2/3) delta^2).
inline double odd_series_residual(double beta, double delta) {
  if (!(beta > 0)) throw std::domain_error("odd_series_residual: requires beta > 0");
  if (beta == std::floor(beta))
    throw std::domain_error("odd_series_residual: digamma pole at integer beta");
  const double L = std::log(2.0 * delta / beta);
  const double psi1 = -euler_gamma;        // Psi(1)
  const double psi2 = 1.0 - euler_gamma;   // Psi(2)
  const double psi3 = 1.5 - euler_gamma;   // Psi(3)
  const double p1mb = digamma(1.0 - beta);
  const double p2mb = digamma(2.0 - beta);
  const double lhs = -1.0 + 2.0 * delta / 3.0 - delta / beta;
  const double num = (L + p1mb - 2.0 * psi1) +
                     (1.0 - beta) * (2.0 * delta / beta) * (L + p2mb - 2.0 * psi2);
  const double den = 1.0 / (2.0 * delta) - (L + p1mb - psi1 - psi2) +
                     (beta - 1.0) * (delta / beta) * (L + p2mb - psi2 - psi3);
  return lhs - num / den;
}

namespace detail {

template <typename F>
inline double bisect_root(F&& f, double lo, double hi, double tol, int max_iter) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw std::runtime_error("bisect_root: endpoints do not bracket a sign change");
  for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // resolution limit
    const double fm = f(mid);
    if (fm == 0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

/// Root of the reduced even-parity equation in (n, n + 1/2); the digamma
/// pole at integer beta guarantees the lower endpoint's sign.  n = 0 solves
/// on (0, 1) for the ground-state branch.
inline double solve_rege(int n, double delta) {
  if (n < 0) throw std::invalid_argument("solve_rege: n must be >= 0");
  auto f = [delta](double b) { return rege_residual(b, delta); };
  const double lo = (n == 0) ? 1e-8 : n + 1e-12;
  const double hi = (n == 0) ? 1.0 - 1e-9 : n + 0.5;
  return detail::bisect_root(f, lo, hi, 1e-14, 200);
}

}  // namespace coulomb1d
