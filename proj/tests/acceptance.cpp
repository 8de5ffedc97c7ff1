// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hegf/genfun.hpp"
#include "hegf/hermite.hpp"
#include "hegf/report.hpp"
#include "hegf/verify.hpp"

using namespace hegf;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct SuiteRun {
  std::map<std::string, IdentityReport> rows;
  double seconds = 0.0;
};

SuiteRun run_suite(Suite s) {
  SuiteRun r;
  const auto start = Clock::now();
  for (auto& row : run_verify({s, 0, std::nullopt})) r.rows.emplace(row.identity_id, std::move(row));
  r.seconds = seconds_since(start);
  return r;
}

// All named rows exist and pass; the first failing id goes to detail.
bool rows_pass(const SuiteRun& run, std::initializer_list<const char*> ids, std::string& detail) {
  for (const char* id : ids) {
    const auto it = run.rows.find(id);
    if (it == run.rows.end()) {
      detail += std::string(" missing ") + id;
      return false;
    }
    if (!it->second.passed) {
      detail += std::string(" ") + id + " residual=" + format_shortest(it->second.residual);
      return false;
    }
  }
  return true;
}

int failures = 0;

void report(const char* id, const char* what, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ' ' << what << detail << '\n';
  if (!ok) ++failures;
}

std::string timing(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.3f s)", s);
  return buf;
}

IdentityReport random_report(std::mt19937_64& rng) {
  static const char* const kNotes[] = {"", "a, b", "say \"hi\"", "line\nbreak"};
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::uniform_int_distribution<int> k(0, 3);
  std::vector<std::pair<std::string, double>> inputs;
  for (int i = 0, n = k(rng); i < n; ++i) inputs.emplace_back("v" + std::to_string(i), u(rng));
  return IdentityReport::make("r" + std::to_string(k(rng)), std::move(inputs), std::abs(u(rng)) * 1e-15,
                              1e-12, kNotes[k(rng)]);
}

int run_cli(std::vector<std::string> args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int rc = cli::run_command(args, o, e);
  if (out) *out = o.str();
  return rc;
}

}  // namespace

int main() {
  std::string d;

  const auto hermite = run_suite(Suite::hermite);
  d.clear();
  bool ok = rows_pass(hermite, {"he_recurrence", "he_derivative"}, d) && hermite.seconds < 1.0;
  report("AC1", "recurrence and cross-form suite", ok, d + timing(hermite.seconds));

  const auto special = run_suite(Suite::special);
  d.clear();
  ok = rows_pass(special, {"erfc_gamma_identity", "erfc_reflection", "erfcx_golden", "erfcx_complex_golden"}, d);
  report("AC2", "special-function identities", ok, d);

  const auto genfun = run_suite(Suite::genfun);
  d.clear();
  report("AC3", "closed-form equivalence", rows_pass(genfun, {"closed_form_equivalence"}, d), d);

  d.clear();
  ok = rows_pass(genfun, {"pde_residual", "characteristic_g", "classic_pde", "classic_characteristic", "gradient_fd"}, d);
  report("AC4", "PDE, characteristics and gradients", ok, d);

  {
    const auto start = Clock::now();
    const double t4[] = {1e-4};
    double worst_order = 0.0;
    for (double x : {0.0, 0.5, 2.0})
      for (unsigned N = 0; N <= 10; ++N) worst_order = std::max(worst_order, asymptotic_order_check(x, N, t4)[0].rel_dev);
    double worst_trunc = 0.0;
    for (double x : {-2.0, 0.0, 0.5, 2.0})
      for (double t : {0.05, -0.045, 0.04}) {
        const auto c = truncation_check(x, t, static_cast<unsigned>(1.5 / (t * t)) + 10);
        worst_trunc = std::max(worst_trunc, c.error / c.min_term);
      }
    const double s = seconds_since(start);
    d = " order_rel_dev=" + format_shortest(worst_order) + " error/min_term=" + format_shortest(worst_trunc);
    ok = worst_order <= 0.01 && worst_trunc <= 2.0 && s < 1.0 && rows_pass(genfun, {"asymptotic_order", "optimal_truncation"}, d);
    report("AC5", "asymptotic-series contract", ok, d + timing(s));
  }

  d.clear();
  ok = rows_pass(genfun, {"limit_unit", "limit_z1200"}, d);
  if (ok) d = " g(z=1200)=" + format_shortest(genfun.rows.at("limit_z1200").inputs.back().second) + " (stated 0.994 not reproduced)";
  report("AC6", "limit checks", ok, d);

  const auto cdf = run_suite(Suite::cdf);
  d.clear();
  ok = rows_pass(cdf, {"cdf_series_mu10", "cdf_series_mu8", "cdf_squared", "cdf_turnaround"}, d);
  report("AC7", "normal CDF series", ok, d);

  const auto bivariate = run_suite(Suite::bivariate);
  d.clear();
  ok = rows_pass(bivariate, {"bivar_identity", "bivar_oracle", "bivar_homogeneity"}, d);
  report("AC8", "bivariate coefficients", ok, d);

  const auto contour = run_suite(Suite::contour);
  d.clear();
  ok = rows_pass(contour, {"classic_contour_re", "classic_contour_im", "classic_contour_radius"}, d);
  report("AC9", "classic contour integral", ok, d);

  {
    d.clear();
    std::string a, b;
    const std::vector<std::string> args{"contour", "new", "--grid", "--format", "csv"};
    const int rc1 = run_cli(args, &a), rc2 = run_cli(args, &b);
    ok = rows_pass(contour, {"new_contour_determinism"}, d) && rc1 == 0 && rc2 == 0 && a == b &&
         a.find("overflow_nodes") != std::string::npos;
    report("AC10", "contour experiment grid is deterministic", ok, d);
  }

  {
    d.clear();
    std::mt19937_64 rng(11);
    int round_trips = 0;
    for (int i = 0; i < 20; ++i) {
      std::vector<IdentityReport> rows(static_cast<std::size_t>(1 + i % 4));
      for (auto& r : rows) r = random_report(rng);
      bool same = true;
      for (const auto f : {ReportFormat::json, ReportFormat::csv}) {
        std::ostringstream os;
        emit_report(rows, f, os);
        same = same && parse_report(os.str(), f) == rows;
      }
      round_trips += same;
    }
    const auto start = Clock::now();
    const int rc = run_cli({"verify", "--suite", "all", "--format", "json"});
    const double s = seconds_since(start);
    ok = round_trips == 20 && rc == 0 && s < 30.0;
    d = " round_trips=" + std::to_string(round_trips) + "/20 verify_exit=" + std::to_string(rc);
    report("AC11", "report round trip and full verify", ok, d + timing(s));
  }

  return failures == 0 ? 0 : 1;
}
