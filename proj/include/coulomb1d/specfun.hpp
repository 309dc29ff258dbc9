#pragma once

// Real-argument special functions: Gamma, digamma, Pochhammer, Kummer M,
// Tricomi U and associated Laguerre polynomials.
//
// Tricomi U for integer second parameter is evaluated from its logarithmic
// series.  The series prefactor 1/Gamma(a-n) vanishes and the digamma terms
// diverge as the first parameter approaches a non-positive integer, so that
// regime is handled by an explicit limit (the series collapses to a Laguerre
// polynomial) plus a first-order correction in the distance from the integer.
// All series are summed in binary128; the public interface is double.

#include <cmath>
#include <stdexcept>

#include "coulomb1d/detail/qfloat.hpp"

namespace coulomb1d {

inline constexpr double euler_gamma = detail::kEulerGamma;

struct SeriesControl {
  int max_terms = 500;
  double rel_tol = 1e-15;
  double overflow_guard = 1e300;
};

inline void validate(const SeriesControl& c) {
  if (c.max_terms < 50) throw std::invalid_argument("SeriesControl: max_terms must be >= 50");
  if (!(c.rel_tol > 0) || !(c.rel_tol < 1e-6))
    throw std::invalid_argument("SeriesControl: rel_tol must lie in (0, 1e-6)");
  if (!(c.overflow_guard > 0))
    throw std::invalid_argument("SeriesControl: overflow_guard must be positive");
}

inline bool is_nonpositive_integer(double z) {
  return z <= 0.0 && z == std::floor(z);
}

inline double gamma(double z) {
  if (is_nonpositive_integer(z))
    throw std::domain_error("gamma: pole at non-positive integer");
  return detail::to_double(tgammaq(static_cast<detail::qfloat>(z)));
}

inline double digamma(double z) {
  if (is_nonpositive_integer(z))
    throw std::domain_error("digamma: pole at non-positive integer");
  return detail::to_double(detail::q_digamma(static_cast<detail::qfloat>(z)));
}

inline double pochhammer(double a, int k) {
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= a + i;
  return p;
}

namespace detail {

// M(a,b;z) ascending series.  Truncates exactly when a is a non-positive
// integer; throws when b hits one first.
inline qfloat kummer_m_q(qfloat a, qfloat b, qfloat z, int max_terms,
                         qfloat rel_tol, qfloat guard) {
  qfloat term = 1, sum = 1;
  int consec = 0;
  for (int k = 0; k < max_terms; ++k) {
    if (a + k == 0) return sum;  // polynomial case
    if (b + k == 0)
      throw std::domain_error("kummer_m: parameter pole, b is a non-positive integer");
    term *= (a + k) * z / ((b + k) * (k + 1));
    sum += term;
    if (fabsq(sum) > guard || fabsq(term) > guard)
      throw std::overflow_error("kummer_m: magnitude exceeded overflow_guard");
    consec = (fabsq(term) <= rel_tol * fabsq(sum)) ? consec + 1 : 0;
    if (consec >= 2) return sum;
  }
  throw std::runtime_error("kummer_m: series did not converge within max_terms");
}

// U(-m, n+1; z) = (-1)^m (n+m)!/n! * M(-m, n+1; z), exact polynomial limit.
inline qfloat tricomi_u_poly_q(int m, int n, qfloat z) {
  qfloat sum = 1, term = 1;
  for (int k = 0; k < m; ++k) {
    term *= (-m + k) * z / ((n + 1 + k) * (k + 1));
    sum += term;
  }
  qfloat pre = q_factorial(n + m) / q_factorial(n);
  return (m % 2 == 0) ? pre * sum : -pre * sum;
}

// Logarithmic series, DLMF 13.2.9 form, for a away from non-positive integers.
inline qfloat tricomi_u_b5_q(qfloat a, int n, qfloat z, int max_terms) {
  const qfloat logz = logq(z);
  const qfloat pre = ((n + 1) % 2 == 0 ? 1 : -1) * q_rgamma(a - n) / q_factorial(n);
  qfloat s1 = 0;
  if (pre != 0) {
    qfloat c = 1, peak = 0;
    int consec = 0;
    for (int k = 0;; ++k) {
      if (k >= max_terms)
        throw std::runtime_error("tricomi_u: log series did not converge within max_terms");
      const qfloat bracket = logz + q_digamma(a + k) -
                             q_digamma(static_cast<qfloat>(1 + k)) -
                             q_digamma(static_cast<qfloat>(n + k + 1));
      const qfloat t = c * bracket;
      s1 += t;
      const qfloat mag = fabsq(s1);
      if (mag > peak) peak = mag;
      consec = (fabsq(t) <= 1e-34Q * peak && k > 0) ? consec + 1 : 0;
      if (consec >= 3) break;
      c *= (a + k) * z / ((n + 1 + k) * (k + 1));
    }
    s1 *= pre;
  }
  qfloat s2 = 0;
  const qfloat rga = q_rgamma(a);
  if (rga != 0) {
    for (int k = 1; k <= n; ++k)
      s2 += q_factorial(k - 1) * q_pochhammer(1 - a + k, n - k) /
            q_factorial(n - k) * powq(z, -k);
    s2 *= rga;
  }
  return s1 + s2;
}

// Poincare expansion U ~ z^{-a} 2F0(a, a-b+1; -1/z), truncated at the
// smallest term.  Used for z beyond the reach of the ascending series.
inline qfloat tricomi_u_asym_q(qfloat a, qfloat b, qfloat z) {
  qfloat sum = 1, term = 1;
  for (int k = 1; k < 400; ++k) {
    const qfloat next = term * (a + k - 1) * (a - b + k) / (-z * k);
    if (fabsq(next) >= fabsq(term)) break;
    term = next;
    sum += term;
    if (fabsq(term) < 1e-35Q * fabsq(sum)) break;
  }
  return powq(z, -a) * sum;
}

// Laplace representation U = (1/Gamma(a)) int_0^inf e^{-zt} t^{a-1}
// (1+t)^{b-a-1} dt, valid for a > 0.  The integrand is positive, so this
// path has no cancellation; used where the ascending series would lose the
// result to the e^z growth of its terms.  Double-exponential (exp-sinh)
// nodes handle both the t^{a-1} endpoint and the infinite tail.
inline qfloat tricomi_u_laplace_q(qfloat a, qfloat b, qfloat z) {
  const qfloat c = M_PIq / 2;
  const auto integrand = [&](qfloat u) -> qfloat {
    const qfloat lt = c * sinhq(u);  // ln t
    if (lt > 300) return 0;          // e^{-zt} dead long before this for z > 4
    const qfloat t = expq(lt);
    const qfloat ex = -z * t + a * lt + (b - a - 1) * log1pq(t);
    return expq(ex) * c * coshq(u);
  };
  const auto strided_sum = [&](qfloat start, qfloat stride) -> qfloat {
    qfloat sum = 0;
    for (int dir : {1, -1}) {
      // For large z the integrand underflows near u = 0 and only revives
      // around its peak at negative u, so negligible terms end the walk only
      // once something non-negligible has been seen in this direction.
      int tiny = 0;
      bool seen = false;
      for (int k = (dir > 0 ? 0 : 1); k < 8000; ++k) {
        const qfloat u = dir > 0 ? start + k * stride : start - k * stride;
        if (fabsq(u) > 22) break;
        const qfloat t = integrand(u);
        sum += t;
        if (t > 1e-38Q * (sum + 1e-4900Q)) {
          seen = true;
          tiny = 0;
        } else if (seen && ++tiny >= 4) {
          break;
        }
      }
    }
    return sum;
  };
  qfloat h = static_cast<qfloat>(0.5);
  qfloat node_sum = strided_sum(0, h);  // includes u = 0 once
  qfloat prev = node_sum * h;
  while (h > static_cast<qfloat>(0.02)) {
    h /= 2;
    node_sum += strided_sum(h, 2 * h);  // new odd nodes
    const qfloat cur = node_sum * h;
    if (fabsq(cur - prev) <= 1e-30Q * fabsq(cur)) return cur * q_rgamma(a);
    prev = cur;
  }
  return prev * q_rgamma(a);
}

inline qfloat tricomi_u_int_b_q(qfloat a, int n, qfloat z, int max_terms) {
  const qfloat ar = rintq(a);
  if (ar <= 0 && fabsq(a - ar) < 1e-12Q) {
    const int m = static_cast<int>(-ar);
    qfloat u = tricomi_u_poly_q(m, n, z);
    const qfloat eps = a - ar;
    if (eps != 0) {
      // First-order correction in the distance from the integer.  dU/da is
      // taken by central difference at a safe offset, where the direct
      // series still has ~27 good digits; for z beyond the series range the
      // asymptotic expansion is smooth in a and serves the same purpose.
      const qfloat h = 1e-6Q;
      const qfloat du =
          z > 40 ? (tricomi_u_asym_q(ar + h, n + 1, z) -
                    tricomi_u_asym_q(ar - h, n + 1, z)) / (2 * h)
                 : (tricomi_u_b5_q(ar + h, n, z, max_terms) -
                    tricomi_u_b5_q(ar - h, n, z, max_terms)) / (2 * h);
      u += eps * du;
    }
    return u;
  }
  if (ar <= 0 && fabsq(a - ar) < 1e-8Q) {
    // Near but not on the integer the direct series still carries enough
    // quad digits, and it avoids the Laplace path's t^{a-1} endpoint when a
    // sits just above zero.  Large z goes through the asymptotic expansion,
    // which is smooth in a.
    return z > 40 ? tricomi_u_asym_q(a, n + 1, z)
                  : tricomi_u_b5_q(a, n, z, max_terms);
  }
  if (a > 0 && z > 4) return tricomi_u_laplace_q(a, n + 1, z);
  if (z > 40) return tricomi_u_asym_q(a, n + 1, z);
  return tricomi_u_b5_q(a, n, z, max_terms);
}

inline qfloat tricomi_u_q(qfloat a, qfloat b, qfloat z, int max_terms,
                          qfloat rel_tol, qfloat guard) {
  const qfloat br = rintq(b);
  if (br >= 1 && fabsq(b - br) < 1e-9Q)
    return tricomi_u_int_b_q(a, static_cast<int>(br) - 1, z, max_terms);
  if (a > 0 && z > 4) return tricomi_u_laplace_q(a, b, z);
  if (z > 40) return tricomi_u_asym_q(a, b, z);
  // Non-integer b: reflection through two M series.
  const qfloat m1 = kummer_m_q(a, b, z, max_terms, rel_tol, guard);
  const qfloat m2 = kummer_m_q(1 + a - b, 2 - b, z, max_terms, rel_tol, guard);
  return q_pi() / q_sinpi(b) *
         (m1 * q_rgamma(1 + a - b) * q_rgamma(b) -
          powq(z, 1 - b) * m2 * q_rgamma(a) * q_rgamma(2 - b));
}

}  // namespace detail

inline double kummer_m(double a, double b, double z, SeriesControl ctrl = {}) {
  validate(ctrl);
  if (is_nonpositive_integer(b))
    throw std::domain_error("kummer_m: b must not be a non-positive integer");
  if (std::abs(z) > ctrl.overflow_guard)
    throw std::overflow_error("kummer_m: |z| exceeds overflow_guard");
  return detail::to_double(detail::kummer_m_q(
      a, b, z, ctrl.max_terms, static_cast<detail::qfloat>(ctrl.rel_tol),
      static_cast<detail::qfloat>(ctrl.overflow_guard)));
}

/// Tricomi U on the principal branch, z > 0.
inline double tricomi_u(double a, double b, double z, SeriesControl ctrl = {}) {
  validate(ctrl);
  if (!(z > 0)) throw std::domain_error("tricomi_u: requires z > 0");
  return detail::to_double(detail::tricomi_u_q(
      a, b, z, ctrl.max_terms, static_cast<detail::qfloat>(ctrl.rel_tol),
      static_cast<detail::qfloat>(ctrl.overflow_guard)));
}

/// Associated Laguerre polynomial L_n^{(alpha)}(x), three-term recurrence.
inline double laguerre(int n, double alpha, double x) {
  if (n < 0) throw std::invalid_argument("laguerre: n must be non-negative");
  if (n == 0) return 1.0;
  double lm1 = 1.0;
  double l = 1.0 + alpha - x;
  for (int k = 2; k <= n; ++k) {
    const double lnext = ((2 * k - 1 + alpha - x) * l - (k - 1 + alpha) * lm1) / k;
    lm1 = l;
    l = lnext;
  }
  return l;
}

}  // namespace coulomb1d
