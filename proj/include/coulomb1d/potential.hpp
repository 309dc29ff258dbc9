#pragma once

// The dimensionless model: lengths in Bohr radii, energies in |E0|, so the
// potential is -2/delta inside the core and -2/|x| outside, E = -1/beta^2,
// and q = sqrt(2/delta - 1/beta^2).

#include <cmath>
#include <stdexcept>

#include "coulomb1d/specfun.hpp"

namespace coulomb1d {

struct PotentialParams {
  double delta = 0.01;  // core half-width, 0 < delta <= 1
};

inline void validate(const PotentialParams& p) {
  if (!(p.delta > 0) || !(p.delta <= 1))
    throw std::invalid_argument("PotentialParams: delta must lie in (0, 1]");
}

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

struct BetaPoint {
  double beta = 1.0;  // E = -1/beta^2
};

inline double potential(double x, const PotentialParams& p) {
  const double ax = std::abs(x);
  return ax <= p.delta ? -2.0 / p.delta : -2.0 / ax;
}

inline double wave_vector_q(const BetaPoint& b, const PotentialParams& p) {
  const double r = 2.0 / p.delta - 1.0 / (b.beta * b.beta);
  if (!(r > 0))
    throw std::domain_error("wave_vector_q: E <= -V0, requires beta > sqrt(delta/2)");
  return std::sqrt(r);
}

/// psi'/psi at x = delta for the inner trigonometric solution.
inline double logderiv_inner(Parity parity, const BetaPoint& b,
                             const PotentialParams& p) {
  const double q = wave_vector_q(b, p);
  const double u = q * p.delta;
  if (parity == Parity::Even) {
    if (std::abs(std::cos(u)) < 1e-300)
      throw std::domain_error("logderiv_inner: cos(q delta) pole");
    return -q * std::tan(u);
  }
  if (std::abs(std::sin(u)) < 1e-300)
    throw std::domain_error("logderiv_inner: sin(q delta) pole");
  return q / std::tan(u);
}

namespace detail {

// U(1-beta,1;z)/U(1-beta,2;z) with z = 2 delta / beta, evaluated in quad
// precision end to end.
inline double u_ratio(double beta, double delta) {
  const qfloat a = 1 - static_cast<qfloat>(beta);
  const qfloat z = 2 * static_cast<qfloat>(delta) / static_cast<qfloat>(beta);
  const qfloat u1 = tricomi_u_int_b_q(a, 0, z, 500);
  const qfloat u2 = tricomi_u_int_b_q(a, 1, z, 500);
  return to_double(u1 / u2);
}

}  // namespace detail

/// psi'/psi at x = delta for the outer Tricomi solution (recurrence-reduced
/// form of the matching ratio).
inline double logderiv_outer(const BetaPoint& b, const PotentialParams& p) {
  if (!(b.beta > 0)) throw std::domain_error("logderiv_outer: requires beta > 0");
  const double beta = b.beta;
  return (beta * beta / p.delta * detail::u_ratio(beta, p.delta) - 1.0) / beta;
}

/// Same ratio evaluated directly from the U(2-beta,3;.)/U(1-beta,2;.) form,
/// kept for the internal-consistency check of the recurrence reduction.
inline double logderiv_outer_unsimplified(const BetaPoint& b,
                                          const PotentialParams& p) {
  if (!(b.beta > 0)) throw std::domain_error("logderiv_outer: requires beta > 0");
  const double beta = b.beta;
  const double delta = p.delta;
  const detail::qfloat a = 1 - static_cast<detail::qfloat>(beta);
  const detail::qfloat z = 2 * static_cast<detail::qfloat>(delta) / beta;
  const detail::qfloat u3 = detail::tricomi_u_int_b_q(a + 1, 2, z, 500);
  const detail::qfloat u2 = detail::tricomi_u_int_b_q(a, 1, z, 500);
  const double ratio = detail::to_double(u3 / u2);
  return (1.0 - delta / beta - 2.0 * delta / beta * (1.0 - beta) * ratio) / delta;
}

/// Difference of inner and outer log-derivatives at x = delta; vanishes at
/// eigenvalues and is continuous in beta between trig poles.
inline double eigen_residual(Parity parity, const BetaPoint& b,
                             const PotentialParams& p) {
  const double q = wave_vector_q(b, p);
  const double u = q * p.delta;
  const double beta = b.beta;
  const double rhs =
      (1.0 - beta * beta / p.delta * detail::u_ratio(beta, p.delta)) / beta;
  if (parity == Parity::Even) {
    if (std::abs(std::cos(u)) < 1e-300)
      throw std::domain_error("eigen_residual: cos(q delta) pole");
    return q * std::tan(u) - rhs;
  }
  if (std::abs(std::sin(u)) < 1e-300)
    throw std::domain_error("eigen_residual: sin(q delta) pole");
  return -q / std::tan(u) - rhs;
}

}  // namespace coulomb1d
