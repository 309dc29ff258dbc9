#pragma once

// Independent verification paths.  Nothing here shares special-function or
// model code with the main library: the U reference sums the logarithmic
// series with MPFR, and the finite-difference solver discretizes the
// Schroedinger operator directly and diagonalizes with LAPACK.

#include <lapacke.h>
#include <mpfr.h>

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coulomb1d::oracle {

namespace detail {

// Minimal RAII wrapper around mpfr_t, just enough for the series below.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec) : prec_(prec) { mpfr_init2(v_, prec); }
  MpReal(double d, mpfr_prec_t prec) : MpReal(prec) { mpfr_set_d(v_, d, MPFR_RNDN); }
  MpReal(const MpReal& o) : MpReal(o.prec_) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  MpReal& operator=(const MpReal& o) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~MpReal() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return prec_; }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  MpReal& operator+=(const MpReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  MpReal& operator-=(const MpReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  MpReal& operator*=(const MpReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  MpReal& operator/=(const MpReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  MpReal& operator*=(long i) { mpfr_mul_si(v_, v_, i, MPFR_RNDN); return *this; }
  MpReal& operator/=(long i) { mpfr_div_si(v_, v_, i, MPFR_RNDN); return *this; }
  MpReal& operator+=(long i) { mpfr_add_si(v_, v_, i, MPFR_RNDN); return *this; }

  friend MpReal operator+(MpReal a, const MpReal& b) { return a += b; }
  friend MpReal operator-(MpReal a, const MpReal& b) { return a -= b; }
  friend MpReal operator*(MpReal a, const MpReal& b) { return a *= b; }
  friend MpReal operator/(MpReal a, const MpReal& b) { return a /= b; }

  MpReal abs() const {
    MpReal r(prec_);
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }
  bool operator<(const MpReal& o) const { return mpfr_cmp(v_, o.v_) < 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  static MpReal log(const MpReal& x) {
    MpReal r(x.prec_);
    mpfr_log(r.v_, x.v_, MPFR_RNDN);
    return r;
  }
  static MpReal digamma(const MpReal& x) {
    MpReal r(x.prec_);
    mpfr_digamma(r.v_, x.v_, MPFR_RNDN);
    return r;
  }
  static MpReal gamma(const MpReal& x) {
    MpReal r(x.prec_);
    mpfr_gamma(r.v_, x.v_, MPFR_RNDN);
    return r;
  }
  static MpReal pow_si(const MpReal& x, long e) {
    MpReal r(x.prec_);
    mpfr_pow_si(r.v_, x.v_, e, MPFR_RNDN);
    return r;
  }
  static MpReal ldexp(double d, long e, mpfr_prec_t prec) {
    MpReal r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_prec_t prec_;
  mpfr_t v_;
};

inline MpReal mp_factorial(long n, mpfr_prec_t prec) {
  MpReal r(1.0, prec);
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline MpReal mp_pochhammer(const MpReal& a, long k) {
  MpReal r(1.0, a.prec());
  for (long i = 0; i < k; ++i) {
    MpReal f = a;
    f += i;
    r *= f;
  }
  return r;
}

// Direct summation of the logarithmic U series at precision prec;
// requires a to be bounded away from non-positive integers.
inline MpReal u_series_mp(const MpReal& a, int n, const MpReal& z,
                          mpfr_prec_t prec) {
  const MpReal logz = MpReal::log(z);
  MpReal pre = MpReal::gamma(a - MpReal(static_cast<double>(n), prec));
  pre = MpReal(1.0, prec) / pre;
  pre /= mp_factorial(n, prec);
  if ((n + 1) % 2 != 0) pre *= -1;

  MpReal sum1(0.0, prec);
  MpReal c(1.0, prec);
  MpReal peak(0.0, prec);
  const MpReal cutoff = MpReal::ldexp(1.0, -static_cast<long>(prec) - 4, prec);
  int consec = 0;
  for (int k = 0; k < 4000; ++k) {
    MpReal ak = a;
    ak += k;
    MpReal bracket = logz + MpReal::digamma(ak) -
                     MpReal::digamma(MpReal(1.0 + k, prec)) -
                     MpReal::digamma(MpReal(static_cast<double>(n + k + 1), prec));
    MpReal t = c * bracket;
    sum1 += t;
    if (peak < sum1.abs()) peak = sum1.abs();
    const bool small = t.abs() < cutoff * peak;
    consec = (small && k > 0) ? consec + 1 : 0;
    if (consec >= 3) break;
    if (k == 3999)
      throw std::runtime_error("u_series_reference: log series did not converge");
    c *= ak * z;
    c /= static_cast<long>(n + 1 + k);
    c /= static_cast<long>(k + 1);
  }
  sum1 *= pre;

  MpReal sum2(0.0, prec);
  for (int k = 1; k <= n; ++k) {
    MpReal one_minus_a = MpReal(1.0 + k, prec) - a;
    MpReal term = mp_factorial(k - 1, prec) * mp_pochhammer(one_minus_a, n - k);
    term /= mp_factorial(n - k, prec);
    term *= MpReal::pow_si(z, -k);
    sum2 += term;
  }
  if (!sum2.is_zero()) sum2 /= MpReal::gamma(a);
  return sum1 + sum2;
}

}  // namespace detail

/// High-precision reference for U(a, b; z) with integer b >= 1, by direct
/// summation of the logarithmic series at >= `digits` decimal digits.
/// Integer a <= b - 1 is reached as the mean of two evaluations a symmetric
/// tiny offset away (the function is entire in a, so the linear terms cancel
/// and the quadratic remainder is far below certification level).
inline double u_series_reference(double a, int b, double z, int digits = 50) {
  if (!(z > 0)) throw std::domain_error("u_series_reference: requires z > 0");
  if (b < 1) throw std::domain_error("u_series_reference: requires integer b >= 1");
  if (digits < 30) digits = 30;
  const int n = b - 1;
  const double ar = std::round(a);
  // The direct series needs both a and a - n away from the gamma poles, so
  // any integer a <= n (non-positive integers included) goes through the
  // averaged evaluation.
  if (ar <= n && std::abs(a - ar) < 1e-12) {
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>((digits + 45) * 3.33) + 16;
    detail::MpReal eta = detail::MpReal::ldexp(1.0, -80, prec);  // ~8e-25
    detail::MpReal zq(z, prec);
    detail::MpReal am(ar, prec);
    detail::MpReal up = detail::u_series_mp(am + eta, n, zq, prec);
    detail::MpReal dn = detail::u_series_mp(am - eta, n, zq, prec);
    detail::MpReal half(0.5, prec);
    return ((up + dn) * half).to_double();
  }
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 16;
  detail::MpReal aq(a, prec);
  detail::MpReal zq(z, prec);
  return detail::u_series_mp(aq, n, zq, prec).to_double();
}

enum class ParityBc { EvenAtOrigin, OddAtOrigin };

struct FdConfig {
  double box_half_width = 120.0;
  int grid_points = 20001;  // must be odd
  ParityBc parity_bc = ParityBc::OddAtOrigin;
};

struct FdState {
  double energy = 0.0;
  std::vector<double> psi;  // on the interior grid, unnormalized
};

struct FdSolution {
  double h = 0.0;
  std::vector<double> xs;
  std::vector<FdState> states;
};

/// Lowest k eigenpairs of -psi'' + V(x) psi on [0, L] with a parity boundary
/// condition at the origin and psi(L) = 0, second-order central differences.
inline FdSolution fd_eigen_potential(const std::function<double(double)>& V,
                                     const FdConfig& cfg, int k_states) {
  const int N = cfg.grid_points;
  if (N < 5 || N % 2 == 0)
    throw std::invalid_argument("fd_eigen: grid_points must be odd and >= 5");
  const double L = cfg.box_half_width;
  const double h = L / N;
  const bool even = cfg.parity_bc == ParityBc::EvenAtOrigin;

  // Unknowns: x_i = i*h for i in [i0, N-1]; i0 = 0 carries the even ghost row.
  const int i0 = even ? 0 : 1;
  const int dim = N - i0;
  std::vector<double> diag(dim), off(dim - 1, -1.0 / (h * h));
  std::vector<double> xs(dim);
  for (int i = 0; i < dim; ++i) {
    xs[i] = (i + i0) * h;
    diag[i] = 2.0 / (h * h) + V(xs[i]);
  }
  // Even BC psi'(0)=0 via the symmetric ghost point; the similarity scaling
  // psi_0 -> sqrt(2) psi_0 keeps the matrix symmetric.
  if (even) off[0] = -std::sqrt(2.0) / (h * h);

  std::vector<double> w(dim), zvec(static_cast<size_t>(dim) * k_states);
  std::vector<lapack_int> isuppz(2 * static_cast<size_t>(k_states));
  lapack_int m_found = 0;
  const lapack_int info = LAPACKE_dstevr(
      LAPACK_COL_MAJOR, 'V', 'I', dim, diag.data(), off.data(), 0.0, 0.0, 1,
      k_states, 0.0, &m_found, w.data(), zvec.data(), dim, isuppz.data());
  if (info != 0 || m_found < k_states)
    throw std::runtime_error("fd_eigen: LAPACK dstevr failed, info=" +
                             std::to_string(info));

  FdSolution sol;
  sol.h = h;
  sol.xs = xs;
  sol.states.resize(k_states);
  for (int s = 0; s < k_states; ++s) {
    sol.states[s].energy = w[s];
    auto& psi = sol.states[s].psi;
    psi.assign(zvec.begin() + static_cast<size_t>(s) * dim,
               zvec.begin() + static_cast<size_t>(s + 1) * dim);
    if (even) psi[0] *= std::sqrt(2.0);  // undo the similarity scaling
  }
  return sol;
}

/// Finite-difference eigenpairs for the regularized Coulomb model.  The
/// potential is written out locally so this path shares no model code with
/// the main library.
inline FdSolution fd_eigen(double delta, const FdConfig& cfg, int k_states) {
  if (!(delta > 0)) throw std::invalid_argument("fd_eigen: delta must be positive");
  const double h = cfg.box_half_width / cfg.grid_points;
  if (delta < 20.0 * h)
    throw std::invalid_argument(
        "fd_eigen: core under-resolved, need delta >= 20 grid spacings");
  auto V = [delta](double x) {
    return x <= delta ? -2.0 / delta : -2.0 / x;
  };
  return fd_eigen_potential(V, cfg, k_states);
}

}  // namespace coulomb1d::oracle
