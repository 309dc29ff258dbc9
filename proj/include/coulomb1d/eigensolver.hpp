#pragma once

// Root location for the eigenvalue conditions: bracket a sign change of the
// matching residual near the asymptotic guess, refine by safeguarded
// bisection/secant, and assemble the full spectrum.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "coulomb1d/asymptotics.hpp"
#include "coulomb1d/potential.hpp"

namespace coulomb1d {

struct SolverConfig {
  double beta_tol = 1e-12;
  int max_iter = 200;
  int n_max = 3;
  double bracket_pad = 0.4;   // half-width of the search window around n
  double delta_switch = 1e-8; // below this, solve the asymptotic equations
};

inline void validate(const SolverConfig& c) {
  if (!(c.beta_tol > 0)) throw std::invalid_argument("SolverConfig: beta_tol must be positive");
  if (c.max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter must be positive");
  if (c.n_max < 1) throw std::invalid_argument("SolverConfig: n_max must be positive");
  if (!(c.bracket_pad > 0) || !(c.bracket_pad < 0.5))
    throw std::invalid_argument("SolverConfig: bracket_pad must lie in (0, 0.5)");
  if (!(c.delta_switch >= 0))
    throw std::invalid_argument("SolverConfig: delta_switch must be non-negative");
}

struct BetaInterval {
  double lo = 0.0;
  double hi = 0.0;
};

struct EigenState {
  Parity parity = Parity::Even;
  int n = 0;
  double beta = 0.0;
  double energy = 0.0;    // -1/beta^2
  double residual = 0.0;  // matching residual scaled by the log-derivative size
  double a_inner = 0.0;   // unnormalized inner amplitude
  double b_outer = 0.0;   // unnormalized outer amplitude
};

namespace detail {

inline void check_state_label(Parity parity, int n) {
  if (n < 0 || (n == 0 && parity != Parity::Even))
    throw std::invalid_argument("eigensolver: n must be >= 1, or 0 with even parity");
}

// The residual compares two log-derivatives whose common magnitude grows like
// 1/delta for odd states near integer beta; quoting the residual relative to
// that magnitude keeps the convergence criterion meaningful at small delta.
inline double residual_scale(Parity parity, double beta, const PotentialParams& p) {
  double s = 1.0;
  try {
    s = std::max(s, std::abs(logderiv_inner(parity, {beta}, p)));
  } catch (const std::domain_error&) {
  }
  return s;
}

}  // namespace detail

/// Sign-change interval for the (parity, n) residual, grown geometrically
/// around the asymptotic guess and backed by a subdivision scan of the full
/// window [n - pad, n + pad] (ground state: (sqrt(delta/2), 0.5)).
inline BetaInterval bracket(Parity parity, int n, const PotentialParams& p,
                            const SolverConfig& cfg) {
  validate(p);
  validate(cfg);
  detail::check_state_label(parity, n);

  const double delta = p.delta;
  const double floor_beta = std::sqrt(delta / 2.0) * (1.0 + 1e-12);
  double win_lo, win_hi, guess;
  if (n == 0) {
    win_lo = floor_beta;
    win_hi = 0.5;
    guess = std::clamp(rho_even(0, delta), win_lo, win_hi);
  } else {
    win_lo = std::max(n - cfg.bracket_pad, floor_beta);
    win_hi = n + cfg.bracket_pad;
    const double rho = parity == Parity::Even ? rho_even(n, delta) : rho_odd(n, delta);
    guess = std::clamp(n + rho, win_lo, win_hi);
  }
  if (!(win_lo < win_hi))
    throw std::runtime_error("bracket: empty search window, delta too large for this n");

  auto f = [&](double b) { return eigen_residual(parity, {b}, p); };

  double w = std::max({0.5 * std::abs(guess - n), 16 * std::abs(guess) * 1e-16, 1e-15});
  for (; w <= win_hi - win_lo; w *= 2.0) {
    const double lo = std::max(guess - w, win_lo);
    const double hi = std::min(guess + w, win_hi);
    if (!(lo < hi)) continue;
    if (std::signbit(f(lo)) != std::signbit(f(hi))) return {lo, hi};
  }
  // Subdivision scan guards against a guess that landed on the wrong side.
  constexpr int kScan = 16;
  double prev_x = win_lo;
  double prev_f = f(prev_x);
  for (int i = 1; i <= kScan; ++i) {
    const double x = win_lo + (win_hi - win_lo) * i / kScan;
    const double fx = f(x);
    if (std::signbit(prev_f) != std::signbit(fx)) return {prev_x, x};
    prev_x = x;
    prev_f = fx;
  }
  throw std::runtime_error(
      "bracket: no sign change for parity=" + std::string(to_string(parity)) +
      " n=" + std::to_string(n) + " in [" + std::to_string(win_lo) + ", " +
      std::to_string(win_hi) + "] at delta=" + std::to_string(delta));
}

namespace detail {

// Raw amplitudes from continuity at x = delta, outer coefficient fixed to 1;
// if the trig factor vanishes the roles are swapped instead.  The overall
// sign is chosen later by the normalization step.
inline void fill_amplitudes(EigenState& st, const PotentialParams& p) {
  const double q = wave_vector_q({st.beta}, p);
  const double u = q * p.delta;
  const double trig = st.parity == Parity::Even ? std::cos(u) : std::sin(u);
  const qfloat a = 1 - static_cast<qfloat>(st.beta);
  const qfloat z = 2 * static_cast<qfloat>(p.delta) / st.beta;
  const double outer_val = p.delta / st.beta * std::exp(-p.delta / st.beta) *
                           to_double(tricomi_u_int_b_q(a, 1, z, 500));
  if (std::abs(trig) >= 1e-8) {
    st.a_inner = outer_val / trig;
    st.b_outer = 1.0;
  } else {
    st.a_inner = 1.0;
    st.b_outer = trig / outer_val;
  }
}

}  // namespace detail

/// Bisection with secant acceleration confined to the bracket; iterates past
/// beta_tol toward the floating-point resolution limit so that the residual
/// reflects the root, not the tolerance.
inline EigenState refine(BetaInterval iv, Parity parity, int n,
                         const PotentialParams& p, const SolverConfig& cfg) {
  validate(p);
  validate(cfg);
  detail::check_state_label(parity, n);

  auto f = [&](double b) { return eigen_residual(parity, {b}, p); };
  double lo = iv.lo, hi = iv.hi;
  if (!(lo <= hi)) throw std::invalid_argument("refine: inverted interval");
  double flo = f(lo), fhi = f(hi);
  double best = std::abs(flo) <= std::abs(fhi) ? lo : hi;
  double fbest = std::abs(flo) <= std::abs(fhi) ? flo : fhi;
  if (fbest != 0 && std::signbit(flo) == std::signbit(fhi)) {
    const double scale = detail::residual_scale(parity, best, p);
    if (std::abs(fbest) / scale < 1e-10) {
      lo = hi = best;  // degenerate bracket already at the root
    } else {
      throw std::invalid_argument("refine: endpoints do not bracket a sign change");
    }
  }

  int iter = 0;
  while (lo < hi && fbest != 0) {
    if (++iter > cfg.max_iter)
      throw std::runtime_error("refine: max_iter exceeded for parity=" +
                               std::string(to_string(parity)) + " n=" + std::to_string(n));
    double mid = 0.5 * (lo + hi);
    if (fhi != flo) {
      const double sec = (lo * fhi - hi * flo) / (fhi - flo);
      if (sec > lo && sec < hi) mid = sec;
    }
    if (mid <= lo || mid >= hi) break;  // adjacent doubles, fully resolved
    const double fm = f(mid);
    if (std::abs(fm) < std::abs(fbest)) {
      best = mid;
      fbest = fm;
    }
    if (fm == 0) {
      best = mid;
      fbest = 0;
      break;
    }
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
    const double scale = detail::residual_scale(parity, best, p);
    if (hi - lo < cfg.beta_tol && std::abs(fbest) / scale < 1e-12) break;
  }

  EigenState st;
  st.parity = parity;
  st.n = n;
  st.beta = best;
  st.energy = -1.0 / (best * best);
  st.residual = std::abs(fbest) / detail::residual_scale(parity, best, p);
  detail::fill_amplitudes(st, p);
  return st;
}

inline EigenState solve_state(Parity parity, int n, const PotentialParams& p,
                              const SolverConfig& cfg) {
  validate(p);
  validate(cfg);
  detail::check_state_label(parity, n);

  if (p.delta < cfg.delta_switch) {
    // Double precision cannot separate the two log-derivative branches this
    // close to the singular limit; the asymptotic equations are exact to far
    // below any representable defect here.
    EigenState st;
    st.parity = parity;
    st.n = n;
    if (parity == Parity::Even) {
      st.beta = solve_rege(n, p.delta);
      st.residual = std::abs(rege_residual(st.beta, p.delta));
    } else {
      st.beta = n + rho_odd(n, p.delta);
      st.residual = 0.0;  // defect below double resolution of beta
    }
    st.energy = -1.0 / (st.beta * st.beta);
    detail::fill_amplitudes(st, p);
    return st;
  }
  return refine(bracket(parity, n, p, cfg), parity, n, p, cfg);
}

/// All states up to n_max, sorted by increasing energy; within each n >= 1
/// the odd state lies below the even one (its defect is smaller, so its beta
/// is smaller and its energy more negative).
inline std::vector<EigenState> spectrum(const PotentialParams& p,
                                        const SolverConfig& cfg) {
  validate(p);
  validate(cfg);
  std::vector<EigenState> states;
  states.push_back(solve_state(Parity::Even, 0, p, cfg));
  for (int n = 1; n <= cfg.n_max; ++n) {
    states.push_back(solve_state(Parity::Odd, n, p, cfg));
    states.push_back(solve_state(Parity::Even, n, p, cfg));
  }
  std::sort(states.begin(), states.end(),
            [](const EigenState& a, const EigenState& b) { return a.energy < b.energy; });
  for (size_t i = 1; i < states.size(); ++i)
    if (!(states[i - 1].energy < states[i].energy))
      throw std::runtime_error("spectrum: energies not strictly increasing");
  return states;
}

}  // namespace coulomb1d
