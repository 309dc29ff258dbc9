#pragma once

// Quad-precision (binary128) helpers used internally by the special-function
// kernel.  The public API is double; the extra working precision absorbs the
// cancellation of the logarithmic Tricomi series at moderate arguments.

#include <quadmath.h>

#include <stdexcept>

namespace coulomb1d::detail {

using qfloat = __float128;

inline constexpr double kEulerGamma = 0.5772156649015328606065120900824024310;

inline qfloat q_pi() { return M_PIq; }

inline double to_double(qfloat x) { return static_cast<double>(x); }

// sin(pi*x) with argument reduction done exactly in floating point.
inline qfloat q_sinpi(qfloat x) {
  const qfloat m = rintq(x);
  const qfloat r = x - m;
  qfloat s = sinq(M_PIq * r);
  const long long mi = static_cast<long long>(m);
  return (mi % 2 == 0) ? s : -s;
}

// cot(pi*x); accurate arbitrarily close to (but not at) integers.
inline qfloat q_cotpi(qfloat x) {
  const qfloat r = x - rintq(x);
  if (r == 0) throw std::domain_error("cot(pi*x): pole at integer argument");
  return cosq(M_PIq * r) / sinq(M_PIq * r);
}

// 1/Gamma(x).  Entire function; vanishes exactly at non-positive integers.
inline qfloat q_rgamma(qfloat x) {
  if (x > static_cast<qfloat>(0.5)) return 1 / tgammaq(x);
  return q_sinpi(x) * tgammaq(1 - x) / M_PIq;
}

inline bool q_is_nonpositive_integer(qfloat x) {
  return x <= 0 && x == rintq(x);
}

// Digamma.  Reflection for x < 0.5, then recurrence up to the asymptotic
// region.  The Bernoulli tail below reaches ~1e-36 at x = 30.
inline qfloat q_digamma(qfloat x) {
  if (x < static_cast<qfloat>(0.5)) {
    if (q_is_nonpositive_integer(x))
      throw std::domain_error("digamma: pole at non-positive integer");
    return q_digamma(1 - x) - M_PIq * q_cotpi(x);
  }
  qfloat s = 0;
  while (x < 30) {
    s -= 1 / x;
    x += 1;
  }
  // B_{2k}/(2k) for the asymptotic series, as exact rationals.
  static const struct { long long num, den; } b2k[] = {
      {1, 6},           {-1, 30},         {1, 42},         {-1, 30},
      {5, 66},          {-691, 2730},     {7, 6},          {-3617, 510},
      {43867, 798},     {-174611, 330},   {854513, 138},   {-236364091, 2730},
      {8553103, 6},     {-23749461029, 870}};
  const qfloat x2 = 1 / (x * x);
  qfloat p = x2;
  qfloat tail = 0;
  for (int k = 0; k < 14; ++k) {
    tail += (static_cast<qfloat>(b2k[k].num) / b2k[k].den) / (2 * (k + 1)) * p;
    p *= x2;
  }
  return s + logq(x) - 1 / (2 * x) - tail;
}

inline qfloat q_pochhammer(qfloat a, int k) {
  qfloat p = 1;
  for (int i = 0; i < k; ++i) p *= a + i;
  return p;
}

inline qfloat q_factorial(int n) {
  qfloat p = 1;
  for (int i = 2; i <= n; ++i) p *= i;
  return p;
}

}  // namespace coulomb1d::detail
