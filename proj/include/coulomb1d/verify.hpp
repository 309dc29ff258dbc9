#pragma once

// Named invariant checks behind the CLI verify command.  Quick level covers
// the special-function identities and one spectrum; full adds the
// finite-difference cross-check, the extended-precision U certification and
// the delta sweep.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "coulomb1d/asymptotics.hpp"
#include "coulomb1d/eigensolver.hpp"
#include "coulomb1d/oracle.hpp"
#include "coulomb1d/wavefunction.hpp"

namespace coulomb1d::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  double metric = 0.0;     // worst observed residual/error
  double tolerance = 0.0;  // threshold it was compared against
};

namespace detail {

inline void record(std::vector<CheckResult>& out, const std::string& name,
                   double metric, double tol) {
  out.push_back({name, metric < tol, metric, tol});
}

inline double rel_err(double v, double ref) {
  return std::abs(v - ref) / (std::abs(ref) + 1e-15);
}

}  // namespace detail

inline std::vector<CheckResult> run_quick_checks(double beta_tol = 1e-12) {
  std::vector<CheckResult> out;
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  // Gamma reflection on random z in (0, 1).
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    double z = unif(rng);
    if (z < 1e-3 || z > 1 - 1e-3) continue;
    const double lhs = gamma(1.0 - z) * gamma(z) * std::sin(M_PI * z) / M_PI;
    worst = std::max(worst, std::abs(lhs - 1.0));
  }
  detail::record(out, "gamma_reflection", worst, 1e-12);

  // Gamma duplication over z in (0.1, 20).
  worst = 0;
  for (int i = 0; i < 200; ++i) {
    const double z = 0.1 + 19.9 * unif(rng);
    const double lhs = std::sqrt(M_PI) * gamma(2.0 * z);
    const double rhs = std::pow(2.0, 2.0 * z - 1.0) * gamma(z) * gamma(z + 0.5);
    worst = std::max(worst, detail::rel_err(lhs, rhs));
  }
  detail::record(out, "gamma_duplication", worst, 1e-11);

  // Digamma recurrence and reflection.
  worst = 0;
  for (int i = 0; i < 200; ++i) {
    const double z = 0.05 + 5.0 * unif(rng);
    worst = std::max(worst, std::abs(digamma(z + 1.0) - digamma(z) - 1.0 / z));
    if (z < 1.0 && std::abs(z - 0.5) > 1e-3)
      worst = std::max(worst, std::abs(digamma(1.0 - z) - digamma(z) -
                                       M_PI / std::tan(M_PI * z)));
  }
  detail::record(out, "digamma_recurrence_reflection", worst, 1e-12);

  // Tricomi recurrences over a grid; the first needs b-1 >= 1, the second
  // b+1 <= 3 to stay on the integer-b production path.
  worst = 0;
  for (double a = -4.5; a <= 4.5; a += 0.75) {
    for (double z : {1e-4, 0.03, 0.4, 2.0, 11.0, 47.0}) {
      for (int b : {2, 3}) {
        const double u0 = tricomi_u(a, b, z);
        const double r1 = u0 - a * tricomi_u(a + 1, b, z) - tricomi_u(a, b - 1, z);
        worst = std::max(worst, std::abs(r1) / (std::abs(u0) + 1e-15));
      }
      for (int b : {1, 2}) {
        const double u0 = tricomi_u(a, b, z);
        const double r2 = (b - a) * u0 + tricomi_u(a - 1, b, z) -
                          z * tricomi_u(a, b + 1, z);
        worst = std::max(worst, std::abs(r2) / (std::abs(u0) + 1e-15));
      }
    }
  }
  detail::record(out, "tricomi_recurrences", worst, 1e-10);

  // U reduction to Laguerre polynomials at non-positive integer a.
  worst = 0;
  for (int n = 0; n <= 8; ++n) {
    for (double alpha : {0.0, 1.0, 2.0}) {
      for (double z : {0.3, 1.7, 6.0}) {
        double fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        const double ref = (n % 2 == 0 ? 1 : -1) * fact * laguerre(n, alpha, z);
        worst = std::max(worst, detail::rel_err(tricomi_u(-n, alpha + 1, z), ref));
      }
    }
  }
  detail::record(out, "tricomi_laguerre_reduction", worst, 1e-10);

  // dU/dz = -a U(a+1, b+1, z) under central differences.
  worst = 0;
  for (double a : {-1.3, -0.4, 0.7, 2.2}) {
    for (double z : {0.5, 2.0, 8.0}) {
      const double h = 1e-5 * z;
      const double fd = (tricomi_u(a, 2, z + h) - tricomi_u(a, 2, z - h)) / (2 * h);
      worst = std::max(worst, detail::rel_err(fd, -a * tricomi_u(a + 1, 3, z)));
    }
  }
  detail::record(out, "tricomi_derivative_identity", worst, 1e-8);

  // Laguerre identity L_n^{(alpha-1)} = L_n^{(alpha)} - L_{n-1}^{(alpha)}.
  worst = 0;
  for (int n = 1; n <= 20; ++n)
    for (double x : {0.2, 1.0, 4.0})
      worst = std::max(
          worst, detail::rel_err(laguerre(n, 1.0, x),
                                 laguerre(n, 2.0, x) - laguerre(n - 1, 2.0, x)));
  detail::record(out, "laguerre_index_identity", worst, 1e-12);

  // One spectrum: residuals, ordering, positive defects.
  {
    PotentialParams p{1e-3};
    SolverConfig cfg;
    cfg.beta_tol = beta_tol;
    cfg.n_max = 3;
    const auto sp = spectrum(p, cfg);
    double worst_res = 0, worst_order = 1.0, worst_rho = 1.0;
    double prev_e = -1e30;
    for (const auto& s : sp) {
      worst_res = std::max(worst_res, s.residual);
      worst_order = std::min(worst_order, s.energy - prev_e);
      prev_e = s.energy;
      if (s.n >= 1) worst_rho = std::min(worst_rho, s.beta - s.n);
    }
    detail::record(out, "spectrum_residuals", worst_res, 1e-10);
    detail::record(out, "spectrum_energy_ordering", worst_order > 0 ? 0.0 : 1.0, 0.5);
    detail::record(out, "spectrum_positive_defects", worst_rho > 0 ? 0.0 : 1.0, 0.5);

    // Normalization and matching continuity for two representative states.
    double worst_norm = 0, worst_cont = 0, worst_dcont = 0;
    for (const auto& s0 : {sp[1], sp[2]}) {
      const auto s = normalize(s0, p);
      const double q = wave_vector_q({s.beta}, p);
      const double s2 = std::sin(2.0 * q * p.delta) / (4.0 * q);
      const double inner = s.a_inner * s.a_inner *
                           (s.parity == Parity::Even ? p.delta / 2 + s2 : p.delta / 2 - s2);
      const auto tail = [&](double t) {
        const double v = eval(s, p, p.delta + s.beta * t);
        return v * v;
      };
      const double norm = 2.0 * (inner + s.beta * integrate_to_infinity(tail, 0.0, 2.0));
      worst_norm = std::max(worst_norm, std::abs(norm - 1.0));
      // Both branch formulas evaluated at the seam itself; straddling points
      // would pick up genuine psi variation of order the point separation
      // times the O(1/delta) log-derivative.
      const double pl = eval(s, p, p.delta);
      const double pr = s.b_outer * coulomb1d::detail::outer_shape(s.beta, p.delta);
      worst_cont = std::max(worst_cont, std::abs(pl - pr) / std::abs(pl));
      const double dl = eval_deriv(s, p, p.delta);
      const double dr = s.b_outer * coulomb1d::detail::outer_shape_deriv(s.beta, p.delta);
      worst_dcont = std::max(worst_dcont,
                             std::abs(dl - dr) / std::max({std::abs(dl), std::abs(dr), 1.0}));
    }
    detail::record(out, "wavefunction_norm", worst_norm, 1e-8);
    detail::record(out, "wavefunction_continuity", worst_cont, 1e-12);
    detail::record(out, "wavefunction_deriv_continuity", worst_dcont, 1e-8);
  }
  return out;
}

inline std::vector<CheckResult> run_full_checks(double beta_tol = 1e-12) {
  auto out = run_quick_checks(beta_tol);

  // U against the extended-precision series reference (reduced grid; the
  // acceptance harness runs the complete sweep).
  double worst = 0;
  for (double a = -4.5; a <= 4.5; a += 0.5) {
    for (int b : {1, 2, 3}) {
      for (double z : {1e-5, 1e-3, 0.05, 0.8, 5.0, 20.0, 50.0}) {
        worst = std::max(worst, detail::rel_err(tricomi_u(a, b, z),
                                                oracle::u_series_reference(a, b, z)));
      }
    }
  }
  detail::record(out, "tricomi_reference_certification", worst, 1e-12);

  // Finite-difference oracle cross-check at delta = 0.1 and 0.01.
  worst = 0;
  SolverConfig cfg;
  cfg.beta_tol = beta_tol;
  cfg.n_max = 3;
  for (double d : {0.1, 0.01}) {
    PotentialParams p{d};
    const double tol = d == 0.1 ? 1e-4 : 1e-3;
    for (auto par : {Parity::Even, Parity::Odd}) {
      oracle::FdConfig fc;
      fc.box_half_width = 60.0;
      fc.grid_points = d == 0.1 ? 48001 : 240001;
      fc.parity_bc = par == Parity::Even ? oracle::ParityBc::EvenAtOrigin
                                         : oracle::ParityBc::OddAtOrigin;
      auto c2 = fc;
      c2.grid_points = 2 * fc.grid_points + 1;
      const auto s1 = oracle::fd_eigen(d, fc, 4);
      const auto s2 = oracle::fd_eigen(d, c2, 4);
      const int kmax = par == Parity::Even ? 4 : 3;
      for (int k = 0; k < kmax; ++k) {
        const int n = par == Parity::Even ? k : k + 1;
        const auto st = solve_state(par, n, p, cfg);
        const double e1 = s1.states[k].energy, e2 = s2.states[k].energy;
        const double rich = e2 + (e2 - e1) / 3.0;
        worst = std::max(worst, std::abs((rich - st.energy) / st.energy) / tol);
      }
    }
  }
  detail::record(out, "fd_oracle_energies", worst, 1.0);

  // Ground-state divergence along the delta sweep.
  {
    double prev_beta = 1.0, worst_mono = 0.0;
    for (double d : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7}) {
      const auto st = solve_state(Parity::Even, 0, PotentialParams{d}, cfg);
      if (st.beta >= prev_beta) worst_mono = 1.0;
      prev_beta = st.beta;
    }
    detail::record(out, "ground_state_divergence", worst_mono, 0.5);
  }

  // Defect tracking at small delta.
  worst = 0;
  for (double d : {1e-5, 1e-7}) {
    PotentialParams p{d};
    for (int n = 1; n <= 3; ++n) {
      const auto se = solve_state(Parity::Even, n, p, cfg);
      worst = std::max(worst, std::abs(se.beta - n - rho_even(n, d)) /
                                  (se.beta - n) / 0.15);
    }
  }
  for (double d : {1e-3, 1e-2}) {
    PotentialParams p{d};
    for (int n = 1; n <= 3; ++n) {
      const auto so = solve_state(Parity::Odd, n, p, cfg);
      worst = std::max(worst, std::abs(so.beta - n - rho_odd(n, d)) /
                                  (so.beta - n) / 0.05);
    }
  }
  detail::record(out, "asymptotic_defect_tracking", worst, 1.0);

  return out;
}

}  // namespace coulomb1d::verify
