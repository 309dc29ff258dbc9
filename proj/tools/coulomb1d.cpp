// Command-line front end: spectra, defect deviation tables, sampled
// wavefunctions and the invariant verification suites, emitted as
// deterministic CSV/JSON with a manifest per run.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coulomb1d/asymptotics.hpp"
#include "coulomb1d/eigensolver.hpp"
#include "coulomb1d/io.hpp"
#include "coulomb1d/verify.hpp"
#include "coulomb1d/wavefunction.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

double env_beta_tol(double fallback) {
  const char* s = std::getenv("COULOMB1D_TOL");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  const double v = std::strtod(s, &end);
  if (end == s || !(v > 0))
    throw CLI::ValidationError("COULOMB1D_TOL", "must be a positive number");
  return v;
}

void emit_table(const coulomb1d::io::CsvTable& table, const std::string& out,
                const std::string& format, coulomb1d::io::RunManifest manifest) {
  using namespace coulomb1d::io;
  write_atomic(out, format == "json" ? to_json_rows(table) : to_csv(table));
  manifest.version = kVersion;
  manifest.timestamp = iso_timestamp();
  manifest.outputs.push_back(out);
  write_manifest(manifest, out + ".manifest.json");
}

std::vector<double> parse_delta_list(const std::string& arg) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos < arg.size()) {
    size_t comma = arg.find(',', pos);
    if (comma == std::string::npos) comma = arg.size();
    const std::string tok = arg.substr(pos, comma - pos);
    if (!tok.empty()) {
      size_t used = 0;
      const double v = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("bad delta value: " + tok);
      out.push_back(v);
    }
    pos = comma + 1;
  }
  return out;
}

coulomb1d::Parity parse_parity(const std::string& s) {
  return s == "even" ? coulomb1d::Parity::Even : coulomb1d::Parity::Odd;
}

int cmd_spectrum(double delta, int nmax, const std::string& parity,
                 const std::string& out, const std::string& format, double beta_tol) {
  using namespace coulomb1d;
  PotentialParams p{delta};
  SolverConfig cfg;
  cfg.beta_tol = beta_tol;
  cfg.n_max = nmax;

  std::vector<EigenState> states;
  if (parity == "both") {
    states = spectrum(p, cfg);
  } else {
    const Parity par = parse_parity(parity);
    if (par == Parity::Even) states.push_back(solve_state(Parity::Even, 0, p, cfg));
    for (int n = 1; n <= nmax; ++n) states.push_back(solve_state(par, n, p, cfg));
  }

  io::CsvTable t;
  t.header = {"delta", "parity", "n", "beta", "energy", "rho", "residual", "x"};
  const double x = defect_x(delta);
  for (const auto& s : states)
    t.rows.push_back({io::format_double(delta), to_string(s.parity),
                      std::to_string(s.n), io::format_double(s.beta),
                      io::format_double(s.energy), io::format_double(s.beta - s.n),
                      io::format_double(s.residual), io::format_double(x)});

  io::RunManifest m;
  m.command = "spectrum";
  m.parameters = {{"delta", delta},   {"nmax", nmax},     {"parity", parity},
                  {"out", out},       {"format", format}, {"beta_tol", beta_tol}};
  emit_table(t, out, format, m);
  return 0;
}

int cmd_deviations(const std::string& deltas_arg, int nmax, const std::string& out,
                   const std::string& format, double beta_tol) {
  using namespace coulomb1d;
  const auto deltas = parse_delta_list(deltas_arg);
  if (deltas.empty()) throw CLI::ValidationError("--deltas", "list must not be empty");

  io::CsvTable t;
  t.header = {"delta", "x", "parity", "n", "rho_exact", "rho_asym", "rho_crude", "abs_err"};
  SolverConfig cfg;
  cfg.beta_tol = beta_tol;
  cfg.n_max = nmax;
  for (double d : deltas) {
    PotentialParams p{d};
    const double x = defect_x(d);
    for (int n = 0; n <= nmax; ++n) {
      for (auto par : {Parity::Even, Parity::Odd}) {
        if (n == 0 && par == Parity::Odd) continue;
        const auto s = solve_state(par, n, p, cfg);
        const double rho_exact = s.beta - n;
        const double rho_asym = par == Parity::Even ? rho_even(n, d) : rho_odd(n, d);
        const double rho_crude = par == Parity::Even ? rho_even_crude(n, d) : rho_odd(n, d);
        t.rows.push_back({io::format_double(d), io::format_double(x), to_string(par),
                          std::to_string(n), io::format_double(rho_exact),
                          io::format_double(rho_asym), io::format_double(rho_crude),
                          io::format_double(std::abs(rho_exact - rho_asym))});
      }
    }
  }

  io::RunManifest m;
  m.command = "deviations";
  m.parameters = {{"deltas", deltas_arg}, {"nmax", nmax},     {"out", out},
                  {"format", format},     {"beta_tol", beta_tol}};
  emit_table(t, out, format, m);
  return 0;
}

int cmd_wavefunction(double delta, const std::string& parity, int n, double xmax,
                     int points, bool limiting, const std::string& out,
                     const std::string& format, double beta_tol) {
  using namespace coulomb1d;
  if (points < 3 || points % 2 == 0)
    throw CLI::ValidationError("--points", "must be odd and >= 3 to include x = 0");
  PotentialParams p{delta};
  SolverConfig cfg;
  cfg.beta_tol = beta_tol;
  cfg.n_max = std::max(1, n);
  const Parity par = parse_parity(parity);

  const auto state = normalize(solve_state(par, n, p, cfg), p);
  const auto grid = sample(state, p, xmax, points);

  io::CsvTable t;
  t.header = {"x", "psi", "region"};
  if (limiting) t.header.push_back("psi_limiting");
  for (size_t i = 0; i < grid.xs.size(); ++i) {
    std::vector<std::string> row = {io::format_double(grid.xs[i]),
                                    io::format_double(grid.psis[i]),
                                    to_string(grid.region_tags[i])};
    if (limiting) {
      const double lim = par == Parity::Odd
                             ? limiting_odd(n, grid.xs[i])
                             : limiting_even(n, grid.xs[i], state.beta);
      row.push_back(io::format_double(lim));
    }
    t.rows.push_back(std::move(row));
  }

  io::RunManifest m;
  m.command = "wavefunction";
  m.parameters = {{"delta", delta}, {"parity", parity},   {"n", n},
                  {"xmax", xmax},   {"points", points},   {"limiting", limiting},
                  {"out", out},     {"format", format},   {"beta_tol", beta_tol}};
  emit_table(t, out, format, m);
  return 0;
}

int cmd_verify(const std::string& level, const std::string& out, double beta_tol) {
  using namespace coulomb1d;
  const auto results = level == "full" ? verify::run_full_checks(beta_tol)
                                       : verify::run_quick_checks(beta_tol);
  nlohmann::json j;
  j["level"] = level;
  j["checks"] = nlohmann::json::array();
  bool all_passed = true;
  for (const auto& r : results) {
    j["checks"].push_back({{"name", r.name},
                           {"passed", r.passed},
                           {"metric", r.metric},
                           {"tolerance", r.tolerance}});
    all_passed = all_passed && r.passed;
    std::printf("%-36s %s  (metric %.3e, tol %.0e)\n", r.name.c_str(),
                r.passed ? "pass" : "FAIL", r.metric, r.tolerance);
  }
  j["all_passed"] = all_passed;

  io::RunManifest m;
  m.command = "verify";
  m.parameters = {{"level", level}, {"out", out}, {"beta_tol", beta_tol}};
  m.version = kVersion;
  m.timestamp = iso_timestamp();
  m.outputs.push_back(out);
  io::write_atomic(out, j.dump(2) + "\n");
  io::write_manifest(m, out + ".manifest.json");
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound states of the regularized 1D Coulomb potential"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  double beta_tol_flag = -1.0;
  app.add_option("--beta-tol", beta_tol_flag,
                 "Override the eigenvalue tolerance (also via COULOMB1D_TOL)");

  double delta = 1e-3, xmax = 20.0;
  int nmax = 3, n = 1, points = 2001;
  bool limiting = false;
  std::string parity = "both", out, format = "csv", deltas_arg, level = "quick";

  auto* sp = app.add_subcommand("spectrum", "Solve all states up to nmax");
  sp->add_option("--delta", delta, "Cutoff half-width")->required();
  sp->add_option("--nmax", nmax, "Highest quantum label")->check(CLI::PositiveNumber);
  sp->add_option("--parity", parity)->check(CLI::IsMember({"even", "odd", "both"}));
  sp->add_option("--out", out, "Output path");
  sp->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* dv = app.add_subcommand("deviations", "Quantum defects vs asymptotic forms");
  dv->add_option("--deltas", deltas_arg, "Comma-separated cutoff list")->required();
  dv->add_option("--nmax", nmax)->check(CLI::PositiveNumber);
  dv->add_option("--out", out, "Output path");
  dv->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* wf = app.add_subcommand("wavefunction", "Sample one normalized eigenstate");
  wf->add_option("--delta", delta)->required();
  wf->add_option("--parity", parity)->required()->check(CLI::IsMember({"even", "odd"}));
  wf->add_option("--n", n, "Quantum label")->required();
  wf->add_option("--xmax", xmax)->check(CLI::PositiveNumber);
  wf->add_option("--points", points, "Grid points (odd)");
  wf->add_flag("--limiting", limiting, "Append the closed-form limiting column");
  wf->add_option("--out", out, "Output path");
  wf->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* vf = app.add_subcommand("verify", "Run the invariant suites");
  vf->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
  vf->add_option("--out", out, "Report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    const double beta_tol = beta_tol_flag > 0 ? beta_tol_flag : env_beta_tol(1e-12);
    if (sp->parsed())
      return cmd_spectrum(delta, nmax, parity,
                          out.empty() ? "spectrum.csv" : out, format, beta_tol);
    if (dv->parsed())
      return cmd_deviations(deltas_arg, nmax, out.empty() ? "deviations.csv" : out,
                            format, beta_tol);
    if (wf->parsed())
      return cmd_wavefunction(delta, parity, n, xmax, points, limiting,
                              out.empty() ? "wavefunction.csv" : out, format, beta_tol);
    if (vf->parsed())
      return cmd_verify(level, out.empty() ? "verify_report.json" : out, beta_tol);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "solver error: %s\n", e.what());
    return kExitSolver;
  }
  return kExitUsage;
}
