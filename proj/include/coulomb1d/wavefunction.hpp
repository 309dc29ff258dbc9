#pragma once

// Piecewise eigenfunctions: trig core, Tricomi tail, normalization over the
// full line, sampling onto symmetric grids, and the limiting closed forms.
//
// Sign convention: psi > 0 just outside the origin on x > 0 for every state,
// solved or limiting, so curves can be compared without global sign flips.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "coulomb1d/eigensolver.hpp"
#include "coulomb1d/quadrature.hpp"
#include "coulomb1d/specfun.hpp"

namespace coulomb1d {

enum class Region { Inner, Outer };

inline const char* to_string(Region r) { return r == Region::Inner ? "inner" : "outer"; }

struct WaveGrid {
  std::vector<double> xs;
  std::vector<double> psis;
  std::vector<Region> region_tags;
  EigenState state;
};

namespace detail {

inline double outer_shape(double beta, double x) {
  const qfloat a = 1 - static_cast<qfloat>(beta);
  const qfloat z = 2 * static_cast<qfloat>(x) / beta;
  return x / beta * std::exp(-x / beta) * to_double(tricomi_u_int_b_q(a, 1, z, 500));
}

// d/dx of outer_shape via dU/dz = -a U(a+1, b+1, z).
inline double outer_shape_deriv(double beta, double x) {
  const double ad = 1.0 - beta;
  const qfloat a = 1 - static_cast<qfloat>(beta);
  const double z = 2.0 * x / beta;
  const double u2 = to_double(tricomi_u_int_b_q(a, 1, static_cast<qfloat>(z), 500));
  const double u3 = to_double(tricomi_u_int_b_q(a + 1, 2, static_cast<qfloat>(z), 500));
  return 1.0 / beta * std::exp(-x / beta) * (u2 * (1.0 - 0.5 * z) - ad * z * u3);
}

}  // namespace detail

/// Unnormalized amplitudes from continuity of psi at x = delta with the
/// outer coefficient set to 1 (roles swap if the trig factor vanishes).
inline std::pair<double, double> match_amplitudes(const EigenState& state,
                                                  const PotentialParams& p) {
  if (!(state.residual < 1e-10))
    throw std::invalid_argument("match_amplitudes: state residual too large");
  EigenState st = state;
  detail::fill_amplitudes(st, p);
  return {st.a_inner, st.b_outer};
}

/// psi(x) for a solved state; inner trig for |x| <= delta, Tricomi tail
/// outside, parity reflection for x < 0.
inline double eval(const EigenState& state, const PotentialParams& p, double x) {
  const double ax = std::abs(x);
  const double sign = (x < 0 && state.parity == Parity::Odd) ? -1.0 : 1.0;
  if (ax <= p.delta) {
    const double q = wave_vector_q({state.beta}, p);
    const double core = state.parity == Parity::Even ? std::cos(q * ax) : std::sin(q * ax);
    return sign * state.a_inner * core;
  }
  return sign * state.b_outer * detail::outer_shape(state.beta, ax);
}

/// dpsi/dx; one-sided values coincide at |x| = delta up to the eigenvalue
/// residual.
inline double eval_deriv(const EigenState& state, const PotentialParams& p, double x) {
  const double ax = std::abs(x);
  const double sign = (x < 0 && state.parity == Parity::Even) ? -1.0 : 1.0;
  if (ax <= p.delta) {
    const double q = wave_vector_q({state.beta}, p);
    const double core = state.parity == Parity::Even ? -q * std::sin(q * ax)
                                                     : q * std::cos(q * ax);
    return sign * state.a_inner * core;
  }
  return sign * state.b_outer * detail::outer_shape_deriv(state.beta, ax);
}

/// Rescale the amplitudes so that the full-line norm is 1 and psi > 0 just
/// outside the origin.  The inner integral is closed-form; the tail integral
/// runs in the decay variable t = (x - delta)/beta so the e^{-2t} falloff
/// sets a uniform block scale.
inline EigenState normalize(EigenState state, const PotentialParams& p,
                            const QuadratureConfig& qc = {}) {
  validate(qc);
  const double beta = state.beta;
  const double q = wave_vector_q({beta}, p);
  const double s2 = std::sin(2.0 * q * p.delta) / (4.0 * q);
  const double inner_int = state.parity == Parity::Even ? p.delta / 2.0 + s2
                                                        : p.delta / 2.0 - s2;
  const double b = state.b_outer;
  const auto tail = [&](double t) {
    const double v = b * detail::outer_shape(beta, p.delta + beta * t);
    return v * v;
  };
  const double outer_int = beta * integrate_to_infinity(tail, 0.0, 2.0, qc);
  const double half_norm = state.a_inner * state.a_inner * inner_int + outer_int;
  if (!(half_norm > 0)) throw std::runtime_error("normalize: non-positive norm integral");
  double scale = 1.0 / std::sqrt(2.0 * half_norm);
  if (state.a_inner * scale < 0) scale = -scale;
  state.a_inner *= scale;
  state.b_outer *= scale;
  return state;
}

/// Limiting odd-parity eigenstate, (2/n^3)^{1/2} (x/n) e^{-|x|/n}
/// L_{n-1}^{(1)}(2|x|/n), with the alternating prefactor absorbed into the
/// sign convention.
inline double limiting_odd(int n, double x) {
  if (n < 1) throw std::invalid_argument("limiting_odd: requires n >= 1");
  const double ax = std::abs(x);
  const double mag = std::sqrt(2.0 / (static_cast<double>(n) * n * n)) * (ax / n) *
                     std::exp(-ax / n) * laguerre(n - 1, 1.0, 2.0 * ax / n);
  return x < 0 ? -mag : mag;
}

/// Limiting even-parity forms: |x|-symmetrized odd state for n >= 1 (cusp at
/// the origin), normalized exponential spike (1/sqrt(beta)) e^{-|x|/beta}
/// for n = 0 at the supplied finite beta.
inline double limiting_even(int n, double x, double beta_for_n0 = 0.0) {
  if (n < 0) throw std::invalid_argument("limiting_even: requires n >= 0");
  if (n == 0) {
    if (!(beta_for_n0 > 0))
      throw std::invalid_argument("limiting_even: n = 0 requires beta > 0");
    return std::exp(-std::abs(x) / beta_for_n0) / std::sqrt(beta_for_n0);
  }
  return limiting_odd(n, std::abs(x));
}

/// Symmetric sample of a normalized state; parity is enforced exactly by
/// mirroring the x >= 0 values.
inline WaveGrid sample(const EigenState& state, const PotentialParams& p,
                       double xmax, int npoints) {
  if (!(xmax > p.delta)) throw std::invalid_argument("sample: xmax must exceed delta");
  if (npoints < 3 || npoints % 2 == 0)
    throw std::invalid_argument("sample: npoints must be odd and >= 3");
  WaveGrid g;
  g.state = state;
  g.xs.resize(npoints);
  g.psis.resize(npoints);
  g.region_tags.resize(npoints);
  const int half = npoints / 2;
  const double h = xmax / half;
  for (int i = 0; i <= half; ++i) {
    const double x = i * h;
    const double v = eval(state, p, x);
    g.xs[half + i] = x;
    g.psis[half + i] = v;
    g.region_tags[half + i] = x <= p.delta ? Region::Inner : Region::Outer;
    g.xs[half - i] = -x;
    g.psis[half - i] = state.parity == Parity::Odd ? -v : v;
    g.region_tags[half - i] = g.region_tags[half + i];
  }
  return g;
}

}  // namespace coulomb1d
