#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hegf/bivariate.hpp"
#include "hegf/cdf_link.hpp"
#include "hegf/contour.hpp"
#include "hegf/errors.hpp"
#include "hegf/genfun.hpp"
#include "hegf/hermite.hpp"
#include "hegf/report.hpp"
#include "hegf/special_fn.hpp"
#include "hegf/verify.hpp"

namespace hegf::cli {

namespace {

// One output value. Integers are kept as exact decimal text.
struct Cell {
  enum class Kind { number, integer, text } kind = Kind::number;
  double number = 0.0;
  std::string text;

  Cell(double v) : number(v) {}
  Cell(unsigned v) : number(v) {}
  Cell(const char* s) : kind(Kind::text), text(s) {}
  Cell(std::string s) : kind(Kind::text), text(std::move(s)) {}
  static Cell integer(std::string digits) {
    Cell c(std::move(digits));
    c.kind = Kind::integer;
    return c;
  }
};

// Command result: scalar fields (`meta`) and an optional table of rows.
struct Table {
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::optional<std::string> human_key;  // human mode prints only this meta value
};

std::string human(const Cell& c) {
  return c.kind == Cell::Kind::number ? format_shortest(c.number) : c.text;
}

std::string json_cell(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::number:
      return std::isfinite(c.number) ? format_fixed17(c.number) : nlohmann::json(format_fixed17(c.number)).dump();
    case Cell::Kind::integer:
      return c.text;
    case Cell::Kind::text:
      break;
  }
  return nlohmann::json(c.text).dump();
}

std::string csv_cell(const Cell& c) {
  if (c.kind == Cell::Kind::number) return format_fixed17(c.number);
  if (c.text.find_first_of(",\"\n\r") == std::string::npos) return c.text;
  std::string q = "\"";
  for (char ch : c.text) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

void emit_json_object(std::ostream& os, const std::vector<std::pair<std::string, Cell>>& fields) {
  os << '{';
  for (std::size_t i = 0; i < fields.size(); ++i)
    os << (i ? "," : "") << nlohmann::json(fields[i].first).dump() << ':' << json_cell(fields[i].second);
  os << '}';
}

std::vector<std::pair<std::string, Cell>> row_fields(const Table& t, std::size_t r) {
  std::vector<std::pair<std::string, Cell>> f;
  for (std::size_t c = 0; c < t.columns.size(); ++c) f.emplace_back(t.columns[c], t.rows[r][c]);
  return f;
}

void emit_table(const Table& t, std::optional<ReportFormat> format, std::ostream& os) {
  if (!format) {
    if (t.human_key) {
      for (const auto& [k, v] : t.meta)
        if (k == *t.human_key) os << human(v) << '\n';
      return;
    }
    for (const auto& [k, v] : t.meta) os << k << ": " << human(v) << '\n';
    if (t.columns.empty()) return;
    if (!t.meta.empty()) os << '\n';
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "  " : "") << t.columns[c];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "  " : "") << human(row[c]);
      os << '\n';
    }
    return;
  }

  if (*format == ReportFormat::json) {
    if (t.columns.empty()) {
      emit_json_object(os, t.meta);
      os << '\n';
      return;
    }
    if (!t.meta.empty()) {
      os << '{';
      for (const auto& [k, v] : t.meta) os << nlohmann::json(k).dump() << ':' << json_cell(v) << ',';
      os << "\"rows\":";
    }
    os << '[';
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      os << (r ? ",\n " : "\n ");
      emit_json_object(os, row_fields(t, r));
    }
    os << (t.rows.empty() ? "]" : "\n]");
    if (!t.meta.empty()) os << '}';
    os << '\n';
    return;
  }

  // CSV: scalar fields lead every row so the file stays rectangular.
  std::vector<std::string> header;
  for (const auto& [k, v] : t.meta) header.push_back(k);
  header.insert(header.end(), t.columns.begin(), t.columns.end());
  for (std::size_t c = 0; c < header.size(); ++c) os << (c ? "," : "") << header[c];
  os << '\n';
  const auto emit_row = [&](const std::vector<Cell>* row) {
    bool first = true;
    for (const auto& [k, v] : t.meta) {
      os << (first ? "" : ",") << csv_cell(v);
      first = false;
    }
    if (row)
      for (const auto& c : *row) {
        os << (first ? "" : ",") << csv_cell(c);
        first = false;
      }
    os << '\n';
  };
  if (t.columns.empty()) emit_row(nullptr);
  for (const auto& row : t.rows) emit_row(&row);
}

// Options shared by every leaf command.
struct Common {
  std::string format;
  std::string out;
  std::optional<double> tol;
};

// Result of a command: what to print and whether its assertion-mode check held.
struct Outcome {
  Table table;
  bool passed = true;
};

bool within(std::optional<double> tol, double residual) { return !tol || residual <= *tol; }

Branch parse_branch(const std::string& s) {
  if (s == "positive") return Branch::positive_only;
  if (s == "extended") return Branch::extended;
  throw usage_error("unknown branch '" + s + "' (expected positive or extended)");
}

std::string branch_name(Branch b) { return b == Branch::positive_only ? "positive" : "extended"; }

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermite polynomial generating functions: evaluation, identity checks and contour experiments",
               "hegf"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  Common common;
  std::function<Outcome()> action;
  std::function<bool(std::ostream&, std::optional<ReportFormat>)> report_action;

  const auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    auto* s = parent->add_subcommand(name, desc);
    s->add_option("--format", common.format, "Machine-readable output instead of the human form")
        ->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--out", common.out, "Write output to this file instead of standard output");
    s->add_option_function<double>("--tol", [&](const double& v) { common.tol = v; },
                                   "Fail (exit 1) when the command's residual exceeds this value");
    return s;
  };

  // he ----------------------------------------------------------------------
  auto* he = app.add_subcommand("he", "Probabilist Hermite polynomials");
  he->require_subcommand(1);
  unsigned he_n = 0;
  double he_x = 0.0;
  {
    auto* s = leaf(he, "eval", "He_n(x) by the three-term recurrence");
    s->add_option("--n", he_n, "Degree")->required();
    s->add_option("--x", he_x, "Argument")->required();
    s->callback([&] {
      action = [&] {
        Outcome o;
        o.table.meta = {{"n", he_n}, {"x", he_x}, {"value", he_eval(he_n, he_x)}};
        o.table.human_key = "value";
        return o;
      };
    });
  }
  {
    auto* s = leaf(he, "coeffs", "Exact integer coefficients of He_n");
    s->add_option("--n", he_n, "Degree")->required();
    s->callback([&] {
      action = [&] {
        Outcome o;
        const auto c = he_coefficients(he_n);
        o.table.meta = {{"n", he_n}};
        o.table.columns = {"k", "coeff"};
        for (std::size_t k = 0; k < c.coeffs.size(); ++k)
          o.table.rows.push_back({static_cast<unsigned>(k), Cell::integer(to_string(c.coeffs[k]))});
        return o;
      };
    });
  }
  {
    auto* s = leaf(he, "seq", "He_0(x) .. He_n(x)");
    s->add_option("--n", he_n, "Highest degree")->required();
    s->add_option("--x", he_x, "Argument")->required();
    s->callback([&] {
      action = [&] {
        Outcome o;
        const auto h = he_sequence(he_n, he_x);
        o.table.meta = {{"x", he_x}};
        o.table.columns = {"n", "value"};
        for (unsigned k = 0; k <= he_n; ++k) o.table.rows.push_back({k, h[k]});
        return o;
      };
    });
  }

  // gf ----------------------------------------------------------------------
  auto* gf = app.add_subcommand("gf", "Generating function g(x, t) = sum t^n He_n(x)");
  gf->require_subcommand(1);
  double gf_x = 0.0;
  double gf_t = 0.0;
  unsigned gf_N = 10;
  std::string gf_branch = "positive";
  std::vector<double> gf_ts{1e-2, 1e-3, 1e-4};
  const auto point_options = [&](CLI::App* s) {
    s->add_option("--x", gf_x, "x")->required();
    s->add_option("--t", gf_t, "t (nonzero)")->required();
  };
  const auto branch_option = [&](CLI::App* s) {
    s->add_option("--branch", gf_branch, "positive (1 - x t > 0 only) or extended")
        ->check(CLI::IsMember({"positive", "extended"}));
  };
  {
    auto* s = leaf(gf, "eval", "Closed form of g(x, t)");
    point_options(s);
    branch_option(s);
    s->callback([&] {
      action = [&] {
        Outcome o;
        const GenFunPoint p(gf_x, gf_t);
        const auto b = parse_branch(gf_branch);
        o.table.meta = {{"x", gf_x}, {"t", gf_t}, {"z", p.z()}, {"g", g_closed(p, b)}, {"branch", branch_name(b)}};
        o.table.human_key = "g";
        return o;
      };
    });
  }
  {
    auto* s = leaf(gf, "grad", "Analytic partial derivatives of g");
    point_options(s);
    branch_option(s);
    s->callback([&] {
      action = [&] {
        Outcome o;
        const GenFunPoint p(gf_x, gf_t);
        const auto d = g_gradient(p, parse_branch(gf_branch));
        o.table.meta = {{"x", gf_x}, {"t", gf_t}, {"dg_dt", d.dt}, {"dg_dx", d.dx}};
        return o;
      };
    });
  }
  {
    auto* s = leaf(gf, "pde", "Residual of t^2 g_t - g_x + t g = 0");
    point_options(s);
    branch_option(s);
    s->callback([&] {
      action = [&] {
        Outcome o;
        const auto r = pde_residual(GenFunPoint(gf_x, gf_t), parse_branch(gf_branch));
        o.table.meta = {{"x", gf_x}, {"t", gf_t}, {"residual", r.residual}, {"scale", r.scale},
                        {"scaled", r.scaled()}};
        o.passed = within(common.tol, r.scaled());
        return o;
      };
    });
  }
  {
    auto* s = leaf(gf, "sum", "Partial sums of the divergent series and optimal truncation");
    point_options(s);
    s->add_option("--N", gf_N, "Highest power kept")->capture_default_str();
    s->callback([&] {
      action = [&] {
        Outcome o;
        const auto ps = partial_sum(gf_x, gf_t, gf_N);
        const GenFunPoint p(gf_x, gf_t);
        const double g = p.positive_branch() ? g_closed(p) : std::nan("");
        const double best = ps.partial_sums[ps.n_star];
        o.table.meta = {{"x", gf_x},           {"t", gf_t},        {"N", gf_N},  {"n_star", static_cast<unsigned>(ps.n_star)},
                        {"min_term", ps.min_term}, {"g", g},        {"optimal_sum", best},
                        {"optimal_error", std::abs(g - best)}};
        o.table.columns = {"n", "term", "partial_sum"};
        for (unsigned n = 0; n <= gf_N; ++n) o.table.rows.push_back({n, ps.terms[n], ps.partial_sums[n]});
        return o;
      };
    });
  }
  {
    auto* s = leaf(gf, "order", "(g - S_N) / t^(N+1) against He_{N+1}(x) as t shrinks");
    s->add_option("--x", gf_x, "x")->required();
    s->add_option("--N", gf_N, "Truncation order")->capture_default_str();
    s->add_option("--t", gf_ts, "Values of t")->expected(1, -1)->capture_default_str();
    s->callback([&] {
      action = [&] {
        Outcome o;
        const auto rows = asymptotic_order_check(gf_x, gf_N, gf_ts);
        o.table.meta = {{"x", gf_x}, {"N", gf_N}};
        o.table.columns = {"t", "order", "ratio", "target", "rel_dev"};
        for (const auto& r : rows) {
          o.table.rows.push_back({r.t, r.order, r.ratio, r.target, r.rel_dev});
          o.passed = o.passed && within(common.tol, r.rel_dev);
        }
        return o;
      };
    });
  }

  // cdf ---------------------------------------------------------------------
  auto* cdf = app.add_subcommand("cdf", "Normal CDF through the series in 1/mu");
  cdf->require_subcommand(1);
  double cdf_x = 0.0;
  double cdf_mu = 10.0;
  unsigned cdf_N = 40;
  const auto cdf_options = [&](CLI::App* s) {
    s->add_option("--x", cdf_x, "Evaluation point")->capture_default_str();
    s->add_option("--mu", cdf_mu, "Mean of the normal distribution")->capture_default_str();
    s->add_option("--N", cdf_N, "Highest power kept")->capture_default_str();
  };
  {
    auto* s = leaf(cdf, "asym", "Phi(x; mu, 1) from the truncated series");
    cdf_options(s);
    s->callback([&] {
      action = [&] {
        Outcome o;
        const auto r = cdf_asymptotic(cdf_x, cdf_mu, cdf_N);
        o.table.meta = {{"x", r.x},           {"mu", r.mu},         {"N", r.n_terms},
                        {"raw_sum", r.raw_sum}, {"value", r.value},  {"reference", r.reference},
                        {"rel_error", r.rel_error}};
        o.passed = within(common.tol, r.rel_error);
        return o;
      };
    });
  }
  {
    auto* s = leaf(cdf, "square", "Truncated double sum against the squared Mills ratio");
    cdf_options(s);
    s->callback([&] {
      action = [&] {
        Outcome o;
        const double res = squared_identity_residual(cdf_x, cdf_mu, cdf_N);
        const double m = mills_ratio_reference(cdf_x, cdf_mu);
        o.table.meta = {{"x", cdf_x}, {"mu", cdf_mu}, {"N", cdf_N}, {"reference", m * m}, {"residual", res}};
        o.passed = within(common.tol, res);
        return o;
      };
    });
  }

  // bivar -------------------------------------------------------------------
  auto* bivar = app.add_subcommand("bivar", "Bivariate family from a 2x2 mixing matrix");
  bivar->require_subcommand(1);
  MixMatrix mix;
  double bx = 0.0;
  double by = 0.0;
  double bt = 0.1;
  double bs = 0.1;
  unsigned bn = 0;
  unsigned bm = 0;
  unsigned bN = 6;
  const auto matrix_options = [&](CLI::App* s) {
    s->add_option("--a", mix.a, "M[0][0]")->capture_default_str();
    s->add_option("--b", mix.b, "M[0][1]")->capture_default_str();
    s->add_option("--c", mix.c, "M[1][0]")->capture_default_str();
    s->add_option("--d", mix.d, "M[1][1]")->capture_default_str();
    s->add_option("--x", bx, "x")->capture_default_str();
    s->add_option("--y", by, "y")->capture_default_str();
  };
  {
    auto* s = leaf(bivar, "coeff", "He_{n,m}(M; x, y)");
    matrix_options(s);
    s->add_option("--n", bn, "Power of t")->required();
    s->add_option("--m", bm, "Power of s")->required();
    s->callback([&] {
      action = [&] {
        Outcome o;
        o.table.meta = {{"n", bn}, {"m", bm}, {"x", bx}, {"y", by}, {"value", he2_coeff(mix, bn, bm, bx, by)}};
        o.table.human_key = "value";
        return o;
      };
    });
  }
  {
    auto* s = leaf(bivar, "eval", "Closed form g(x, t') g(y, s')");
    matrix_options(s);
    s->add_option("--t", bt, "t")->capture_default_str();
    s->add_option("--s", bs, "s")->capture_default_str();
    s->callback([&] {
      action = [&] {
        Outcome o;
        const auto [tp, sp] = mix_transform(mix, bt, bs);
        o.table.meta = {{"x", bx},        {"y", by},         {"t", bt},
                        {"s", bs},        {"t_prime", tp},   {"s_prime", sp},
                        {"g2", g2_closed(bx, by, bt, bs, mix)}};
        o.table.human_key = "g2";
        return o;
      };
    });
  }
  {
    auto* s = leaf(bivar, "oracle", "Coefficient formula against the truncated series product");
    matrix_options(s);
    s->add_option("--N", bN, "Total degree")->capture_default_str();
    s->callback([&] {
      action = [&] {
        Outcome o;
        const auto grid = series_product_oracle(mix, bx, by, bN);
        double worst = 0.0;
        o.table.columns = {"n", "m", "formula", "oracle", "abs_diff"};
        for (unsigned n = 0; n <= bN; ++n) {
          for (unsigned m = 0; n + m <= bN; ++m) {
            const double f = he2_coeff(mix, n, m, bx, by);
            const double g = grid.at(n, m);
            const double d = std::abs(f - g);
            const double r = d == 0.0 ? 0.0 : d / std::max(std::abs(g), 1.0);
            worst = std::max(worst, r);
            o.table.rows.push_back({n, m, f, g, d});
          }
        }
        o.table.meta = {{"N", bN}, {"max_rel_diff", worst}};
        o.passed = within(common.tol, worst);
        return o;
      };
    });
  }

  // contour -----------------------------------------------------------------
  auto* contour = app.add_subcommand("contour", "Contour-integral representations of He_n");
  contour->require_subcommand(1);
  unsigned cn = 0;
  double cx = 0.0;
  ContourSpec spec;
  std::string cbranch = "sqrt2_times_t";
  bool grid = false;
  std::vector<double> grid_xs{0.0, 0.5, 1.0};
  const auto spec_options = [&](CLI::App* s) {
    s->add_option("--radius", spec.radius, "Circle radius")->capture_default_str();
    s->add_option("--nodes", spec.nodes, "Trapezoidal nodes (even, >= 16)")->capture_default_str();
  };
  {
    auto* s = leaf(contour, "classic", "n!/(2 pi i) contour of exp(x t - t^2/2) / t^(n+1)");
    s->add_option("--n", cn, "Degree")->required();
    s->add_option("--x", cx, "Argument")->required();
    spec_options(s);
    s->callback([&] {
      action = [&] {
        Outcome o;
        const auto v = classic_contour_he(cn, cx, spec);
        const double ref = he_eval(cn, cx);
        const double rel_err = std::abs(v.real() - ref) / std::max(1.0, std::abs(ref));
        o.table.meta = {{"n", cn},        {"x", cx},         {"radius", spec.radius}, {"nodes", static_cast<unsigned>(spec.nodes)},
                        {"re", v.real()}, {"im", v.imag()},  {"reference", ref},      {"rel_error", rel_err}};
        o.passed = within(common.tol, rel_err);
        return o;
      };
    });
  }
  {
    auto* s = leaf(contour, "new", "Scaled incomplete-gamma contour, measured not trusted");
    s->add_option("--n", cn, "Degree")->capture_default_str();
    s->add_option("--x", cx, "Argument")->capture_default_str();
    spec_options(s);
    s->add_option("--branch", cbranch, "sqrt2_times_t or abs_like_principal")
        ->check(CLI::IsMember({"sqrt2_times_t", "abs_like_principal"}))
        ->capture_default_str();
    s->add_flag("--grid", grid, "Run n = 0..4, r in {0.02, 0.05, 0.1}, both branches, for every --xs value");
    s->add_option("--xs", grid_xs, "x values of the grid")->expected(1, -1)->capture_default_str();
    s->callback([&] {
      action = [&] {
        Outcome o;
        std::vector<NewContourDiagnostics> rows;
        if (grid) {
          rows = new_contour_grid(grid_xs, spec.nodes);
        } else {
          spec.branch = parse_sqrt_branch(cbranch);
          rows.push_back(new_contour_he(cn, cx, spec));
        }
        o.table.columns = {"n",          "x",           "radius",           "nodes",
                           "branch",     "value_re",    "value_im",         "reference",
                           "signed_error", "finite_re", "max_abs_integrand", "min_abs_integrand",
                           "overflow_nodes", "first_overflow_node", "max_overflow_exponent"};
        for (const auto& d : rows) {
          const bool any = d.overflow_nodes > 0;
          o.table.rows.push_back({d.n, d.x, d.radius, static_cast<unsigned>(d.nodes), std::string(to_string(d.branch)),
                                  d.value.real(), d.value.imag(), d.reference, d.signed_error, d.finite_value.real(),
                                  d.max_abs_integrand, d.min_abs_integrand, static_cast<unsigned>(d.overflow_nodes),
                                  any ? Cell(static_cast<unsigned>(d.first_overflow_node)) : Cell(std::nan("")),
                                  any ? Cell(d.max_overflow_exponent) : Cell(std::nan(""))});
        }
        return o;
      };
    });
  }

  // verify ------------------------------------------------------------------
  VerifyOptions vopt;
  std::string suite = "all";
  {
    auto* s = leaf(&app, "verify", "Identity sweeps; exit 1 when any check fails");
    s->add_option("--suite", suite, "special, hermite, genfun, cdf, bivariate, contour or all")
        ->check(CLI::IsMember({"special", "hermite", "genfun", "cdf", "bivariate", "contour", "all"}))
        ->capture_default_str();
    s->add_option("--seed", vopt.seed, "Seed of the random sweeps")->capture_default_str();
    s->callback([&] {
      report_action = [&](std::ostream& os, std::optional<ReportFormat> format) {
        vopt.suite = parse_suite(suite);
        vopt.tolerance = common.tol;
        const auto rows = run_verify(vopt);
        if (format) {
          emit_report(rows, *format, os);
        } else {
          for (const auto& r : rows)
            os << (r.passed ? "[PASS] " : "[FAIL] ") << r.identity_id << "  residual=" << format_shortest(r.residual)
               << "  tolerance=" << format_shortest(r.tolerance) << '\n';
        }
        return all_passed(rows);
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::optional<ReportFormat> format;
    if (!common.format.empty()) format = parse_report_format(common.format);

    std::ofstream file;
    if (!common.out.empty()) {
      file.open(common.out);
      if (!file) {
        err << "error: cannot open '" << common.out << "' for writing\n";
        return kCheckFailed;
      }
    }
    std::ostream& sink = common.out.empty() ? out : file;

    // Render into a buffer first so a failing command leaves no partial output.
    std::ostringstream buffer;
    bool passed = true;
    if (report_action) {
      passed = report_action(buffer, format);
    } else {
      const Outcome o = action();
      emit_table(o.table, format, buffer);
      passed = o.passed;
    }
    sink << buffer.str();
    sink.flush();
    if (!sink) {
      err << "error: write failed\n";
      return kCheckFailed;
    }
    if (!passed) {
      err << "check failed\n";
      return kCheckFailed;
    }
    return kOk;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const capacity_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace hegf::cli
