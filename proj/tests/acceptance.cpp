// Acceptance harness: one line per criterion, exit 0 iff all pass.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "coulomb1d/asymptotics.hpp"
#include "coulomb1d/eigensolver.hpp"
#include "coulomb1d/oracle.hpp"
#include "coulomb1d/verify.hpp"
#include "coulomb1d/wavefunction.hpp"

using namespace coulomb1d;

namespace {

int failures = 0;

void report(int idx, const char* label, bool pass, const std::string& detail) {
  std::printf("criterion %2d [%s]: %s  (%s)\n", idx, label, pass ? "PASS" : "FAIL",
              detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

void criterion_1() {
  const double e1 = std::abs(defect_constant(1).c_n - 0.7704);
  const double e2 = std::abs(defect_constant(2).c_n - 0.8272);
  const double e3 = std::abs(defect_constant_limit() - 0.8476);
  const double worst = std::max({e1, e2, e3});
  report(1, "defect constants", worst < 5e-5, "max |c - ref| = " + fmt(worst));
}

void criterion_2() {
  SolverConfig cfg;
  double worst = 0;
  for (double d : {1e-3, 3e-3, 1e-2}) {
    PotentialParams p{d};
    const double pred = 2.0 / 3.0 * d * d;
    for (int n = 1; n <= 3; ++n) {
      const auto s = solve_state(Parity::Odd, n, p, cfg);
      worst = std::max(worst, std::abs(s.beta - n - pred) / pred);
    }
  }
  report(2, "odd quantum defects", worst < 0.05, "max rel dev = " + fmt(worst));
}

void criterion_3() {
  SolverConfig cfg;
  double worst_exc = 0, worst_gnd = 0, worst_root = 0;
  for (double d : {1e-5, 1e-6, 1e-7}) {
    PotentialParams p{d};
    for (int n = 1; n <= 3; ++n) {
      const auto s = solve_state(Parity::Even, n, p, cfg);
      const double rho = s.beta - n;
      worst_exc = std::max(worst_exc, std::abs(rho - rho_even(n, d)) / rho);
      if (d == 1e-7)
        worst_root = std::max(worst_root, std::abs(solve_rege(n, d) - s.beta));
    }
    const auto g = solve_state(Parity::Even, 0, p, cfg);
    worst_gnd = std::max(worst_gnd, std::abs(g.beta - rho_even(0, d)) / g.beta);
  }
  const bool pass = worst_exc < 0.15 && worst_gnd < 0.20 && worst_root < 1e-3;
  report(3, "even quantum defects", pass,
         "excited " + fmt(worst_exc) + ", ground " + fmt(worst_gnd) +
             ", reduced-eq root gap " + fmt(worst_root));
}

void criterion_4() {
  SolverConfig cfg;
  double worst7 = 0, worst3 = 0;
  for (int n = 1; n <= 3; ++n) {
    worst7 = std::max(worst7, std::abs(solve_state(Parity::Odd, n, PotentialParams{1e-7},
                                                   cfg).energy + 1.0 / (n * n)));
    worst3 = std::max(worst3, std::abs(solve_state(Parity::Odd, n, PotentialParams{1e-3},
                                                   cfg).energy + 1.0 / (n * n)));
  }
  report(4, "limiting energies", worst7 < 5e-3 && worst3 < 1e-5,
         "odd |E + 1/n^2|: " + fmt(worst7) + " at 1e-7, " + fmt(worst3) + " at 1e-3");
}

void criterion_5() {
  SolverConfig cfg;
  cfg.n_max = 3;
  double worst_norm = 0, worst_cont = 0, worst_dcont = 0;
  for (double d : {1e-1, 1e-3, 1e-5}) {
    PotentialParams p{d};
    for (const auto& s0 : spectrum(p, cfg)) {
      const auto s = normalize(s0, p);
      const double q = wave_vector_q({s.beta}, p);
      const double s2 = std::sin(2.0 * q * d) / (4.0 * q);
      const double inner = s.a_inner * s.a_inner *
                           (s.parity == Parity::Even ? d / 2 + s2 : d / 2 - s2);
      const auto tail = [&](double t) {
        const double v = eval(s, p, d + s.beta * t);
        return v * v;
      };
      const double norm = 2.0 * (inner + s.beta * integrate_to_infinity(tail, 0.0, 2.0));
      worst_norm = std::max(worst_norm, std::abs(norm - 1.0));
      // Inner and outer formulas compared at the seam point itself.
      const double pl = eval(s, p, d);
      const double pr = s.b_outer * detail::outer_shape(s.beta, d);
      worst_cont = std::max(worst_cont, std::abs(pl - pr) / std::abs(pl));
      const double dl = eval_deriv(s, p, d);
      const double dr = s.b_outer * detail::outer_shape_deriv(s.beta, d);
      worst_dcont = std::max(worst_dcont,
                             std::abs(dl - dr) / std::max({std::abs(dl), std::abs(dr), 1.0}));
    }
  }
  const bool pass = worst_norm < 1e-8 && worst_cont < 1e-12 && worst_dcont < 1e-8;
  report(5, "normalization & continuity", pass,
         "norm " + fmt(worst_norm) + ", psi " + fmt(worst_cont) + ", psi' " +
             fmt(worst_dcont));
}

void criterion_6() {
  SolverConfig cfg;
  double worst_odd = 0;
  {
    PotentialParams p{1e-3};
    for (int n : {1, 2}) {
      const auto s = normalize(solve_state(Parity::Odd, n, p, cfg), p);
      for (int i = 0; i <= 400; ++i) {
        const double x = 20.0 * i / 400;
        worst_odd = std::max(worst_odd, std::abs(eval(s, p, x) - limiting_odd(n, x)));
      }
    }
  }
  // Even n = 1: sup distance on [0.5, 20] after sign alignment (the solved
  // state keeps an interior node near the origin, so its bulk sign is
  // opposite to the near-origin convention).
  std::vector<double> sups;
  bool monotone = true;
  for (double d : {1e-4, 1e-5, 1e-6, 1e-7}) {
    PotentialParams p{d};
    const auto s = normalize(solve_state(Parity::Even, 1, p, cfg), p);
    const double sign = eval(s, p, 2.0) * limiting_even(1, 2.0) < 0 ? -1.0 : 1.0;
    double sup = 0;
    for (int i = 0; i <= 400; ++i) {
      const double x = 0.5 + 19.5 * i / 400;
      sup = std::max(sup, std::abs(sign * eval(s, p, x) - limiting_even(1, x)));
    }
    if (!sups.empty() && sup >= sups.back()) monotone = false;
    sups.push_back(sup);
  }
  const bool pass = worst_odd < 1e-3 && monotone;
  std::string detail = "odd sup " + fmt(worst_odd) + ", even sups";
  for (double s : sups) detail += " " + fmt(s);
  report(6, "limiting wavefunctions", pass, detail);
}

void criterion_7() {
  SolverConfig cfg;
  double worst = 0;
  for (double d : {0.1, 0.01}) {
    PotentialParams p{d};
    const double tol = d == 0.1 ? 1e-4 : 1e-3;
    for (auto par : {Parity::Even, Parity::Odd}) {
      oracle::FdConfig fc;
      fc.box_half_width = 60.0;
      fc.grid_points = d == 0.1 ? 48001 : 240001;
      fc.parity_bc = par == Parity::Even ? oracle::ParityBc::EvenAtOrigin
                                         : oracle::ParityBc::OddAtOrigin;
      auto fc2 = fc;
      fc2.grid_points = 2 * fc.grid_points + 1;
      const auto s1 = oracle::fd_eigen(d, fc, 4);
      const auto s2 = oracle::fd_eigen(d, fc2, 4);
      const int kmax = par == Parity::Even ? 4 : 3;
      for (int k = 0; k < kmax; ++k) {
        const int n = par == Parity::Even ? k : k + 1;
        const auto st = solve_state(par, n, p, cfg);
        const double rich = s2.states[k].energy +
                            (s2.states[k].energy - s1.states[k].energy) / 3.0;
        worst = std::max(worst, std::abs((rich - st.energy) / st.energy) / tol);
      }
    }
  }
  report(7, "oracle equivalence", worst < 1.0, "max error/tol = " + fmt(worst));
}

void criterion_8() {
  double worst = 0;
  std::vector<double> as;
  for (double a = -4.5; a <= 4.51; a += 0.25) as.push_back(a);
  for (double m : {0.0, -1.0, -2.0, -3.0, -4.0}) {
    as.push_back(m + 1e-10);  // integer-limit points
    as.push_back(m - 1e-10);
  }
  std::vector<double> zs;
  for (int i = 0; i < 13; ++i)
    zs.push_back(std::pow(10.0, -5.0 + (std::log10(50.0) + 5.0) * i / 12.0));
  for (double a : as)
    for (int b : {1, 2, 3})
      for (double z : zs) {
        const double ref = oracle::u_series_reference(a, b, z);
        const double val = tricomi_u(a, b, z);
        worst = std::max(worst, std::abs(val - ref) / (std::abs(ref) + 1e-15));
      }
  // Identity suites from the verification module.
  bool suites = true;
  for (const auto& c : verify::run_quick_checks())
    if (c.name.rfind("gamma", 0) == 0 || c.name.rfind("digamma", 0) == 0 ||
        c.name.rfind("tricomi", 0) == 0 || c.name.rfind("laguerre", 0) == 0)
      suites = suites && c.passed;
  report(8, "special-function certification", worst < 1e-12 && suites,
         "max rel err vs reference = " + fmt(worst) +
             (suites ? ", identity suites pass" : ", identity suite FAILURE"));
}

void criterion_9() {
  SolverConfig cfg;
  bool monotone = true;
  double prev_beta = 1.0, prev_e = 0.0, worst_track = 0;
  for (double d : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7}) {
    const auto s = solve_state(Parity::Even, 0, PotentialParams{d}, cfg);
    if (!(s.beta < prev_beta) || !(s.energy < prev_e)) monotone = false;
    prev_beta = s.beta;
    prev_e = s.energy;
    worst_track = std::max(worst_track, std::abs(s.beta - rho_even(0, d)) / s.beta);
  }
  report(9, "ground-state divergence", monotone && worst_track < 0.20,
         std::string(monotone ? "monotone" : "NOT monotone") +
             ", asym tracking dev " + fmt(worst_track));
}

void criterion_10() {
  // Overlap of the normalized spike with a unit Gaussian.  Analytically
  // <psi0|g> = 2 g(0) sqrt(beta) (1 - beta^2 + ...), so the probability
  // |<psi0|g>|^2 falls by a factor that approaches 10 per decade strictly
  // from below (the beta^2 deficit never quite vanishes at finite beta).
  // The criterion therefore asks for the measured squared ratios to climb
  // monotonically toward the exact rate and land within 0.01 of 10 at the
  // smallest widths, never dropping below 9.5.
  const auto g = [](double x) {
    return std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
  };
  std::vector<double> amps;
  for (double b : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}) {
    const auto f = [&](double x) { return limiting_even(0, x, b) * g(x); };
    amps.push_back(2.0 * integrate_to_infinity(f, 0.0, b));
  }
  std::vector<double> sq;
  for (size_t i = 1; i < amps.size(); ++i) {
    const double ar = amps[i - 1] / amps[i];
    sq.push_back(ar * ar);
  }
  bool pass = sq.front() >= 9.5 && std::abs(sq.back() - 10.0) < 0.01;
  for (size_t i = 1; i < sq.size(); ++i)
    if (!(sq[i] > sq[i - 1] && sq[i] < 10.0)) pass = false;
  std::string detail = "squared per-decade fall:";
  for (double r : sq) detail += " " + fmt(r);
  report(10, "overlap vanishing", pass, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("%s\n", failures == 0 ? "all criteria passed"
                                    : (std::to_string(failures) + " criteria failed").c_str());
  return failures == 0 ? 0 : 1;
}
