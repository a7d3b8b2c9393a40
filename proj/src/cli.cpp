#include "bergdir/cli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "bergdir/asymptotics.hpp"
#include "bergdir/bargmann.hpp"
#include "bergdir/bergman.hpp"
#include "bergdir/errors.hpp"
#include "bergdir/quad.hpp"

namespace bergdir::cli {

namespace {

using json = nlohmann::json;

/// Flag error detected after parsing; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double v) { return fmt::format("{:.17g}", v); }

// shortest round-trip form, for echoed parameters
std::string param(double v) { return fmt::format("{}", v); }

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " value '" + text + "'");
  }
}

// "re" or "re,im"
Complex parse_complex(const std::string& text, const std::string& what) {
  const auto parts = split_on(text, ',');
  if (parts.empty() || parts.size() > 2) throw UsageError(what + " must be re or re,im");
  const double re = parse_double(parts[0], what);
  const double im = parts.size() == 2 ? parse_double(parts[1], what) : 0.0;
  return {re, im};
}

// "re,im;re,im;..."
CVector parse_point(const std::string& text, const std::string& what) {
  std::vector<Complex> components;
  for (const auto& c : split_on(text, ';')) components.push_back(parse_complex(c, what));
  if (components.empty()) throw UsageError(what + " must have at least one component");
  return CVector(std::move(components));
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const auto& item : split_on(text, ',')) out.push_back(parse_double(item, what));
  if (out.empty()) throw UsageError(what + " list is empty");
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (double v : parse_list(text, what)) {
    if (v != std::nearbyint(v)) throw UsageError(what + " entries must be integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string index_label(const MultiIndex& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? ";" : "") + std::to_string(p[i]);
  return out;
}

/// Self-describing table: parameters first, then a header row and data rows.
class Table {
 public:
  Table(std::string command, std::vector<std::pair<std::string, std::string>> meta,
        std::vector<std::string> columns)
      : command_(std::move(command)), meta_(std::move(meta)), columns_(std::move(columns)) {}

  void add_row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  void write(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      json meta = {{"command", command_}};
      for (const auto& [k, v] : meta_) meta[k] = cell_json(v);
      json rows = json::array();
      for (const auto& row : rows_) {
        json obj;
        for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = cell_json(row[i]);
        rows.push_back(std::move(obj));
      }
      out << json{{"meta", meta}, {"rows", rows}}.dump(2) << '\n';
      return;
    }
    out << "# command=" << command_;
    for (const auto& [k, v] : meta_) out << ' ' << k << '=' << v;
    out << '\n';
    for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
    out << '\n';
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << '\n';
    }
  }

 private:
  static json cell_json(const std::string& cell) {
    if (cell.empty()) return nullptr;
    try {
      std::size_t used = 0;
      const long long i = std::stoll(cell, &used);
      if (used == cell.size()) return i;
    } catch (const std::exception&) {
    }
    try {
      std::size_t used = 0;
      const double v = std::stod(cell, &used);
      if (used == cell.size()) return v;
    } catch (const std::exception&) {
    }
    return cell;
  }

  std::string command_;
  std::vector<std::pair<std::string, std::string>> meta_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

struct SpaceFlags {
  std::string space = "ball";
  int n = 2;
  double alpha = 0.0;
  double nu = 1.0;
  int m = 0;
  double radius = 1.0;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--space", space, "ball (weighted Bergman-Dirichlet) or fock (Bargmann-Dirichlet)")
        ->check(CLI::IsMember({"ball", "fock"}));
    cmd.add_option("--n", n, "complex dimension");
    cmd.add_option("--alpha", alpha, "ball weight exponent, > -1");
    cmd.add_option("--nu", nu, "Gaussian parameter, > 0");
    cmd.add_option("--m", m, "order, >= 0");
    cmd.add_option("--radius", radius, "ball radius R, > 0");
  }

  std::vector<std::pair<std::string, std::string>> meta() const {
    std::vector<std::pair<std::string, std::string>> out = {{"space", space},
                                                             {"n", std::to_string(n)}};
    if (space == "ball") {
      out.emplace_back("alpha", param(alpha));
      out.emplace_back("radius", param(radius));
    } else {
      out.emplace_back("nu", param(nu));
    }
    out.emplace_back("m", std::to_string(m));
    return out;
  }

  BergmanDirichletSpace ball() const {
    if (n < 1) throw InvalidParameter("invariant violated: n >= 1");
    return {static_cast<std::size_t>(n), alpha, m, radius};
  }
  BargmannDirichletSpace fock() const {
    if (n < 1) throw InvalidParameter("invariant violated: n >= 1");
    return {static_cast<std::size_t>(n), nu, m};
  }
};

struct SeriesFlags {
  double tol = 1e-17;
  int max_terms = 100000;
  int max_degree = 200;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--tol", tol, "relative stop tolerance of the hypergeometric series");
    cmd.add_option("--max-terms", max_terms, "term cap of the hypergeometric series");
    cmd.add_option("--max-degree", max_degree, "truncation degree of the series kernel");
  }

  SeriesOptions options() const {
    if (!(tol > 0.0)) throw UsageError("--tol must be positive");
    if (max_terms < 1) throw UsageError("--max-terms must be >= 1");
    return {tol, max_terms};
  }
};

// --t or the pair --z/--w
struct ArgumentFlags {
  std::string t;
  std::string z;
  std::string w;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--t", t, "<z,w> as re[,im]");
    cmd.add_option("--z", z, "point z as re,im;re,im;...");
    cmd.add_option("--w", w, "point w as re,im;re,im;...");
  }

  Complex resolve(int n) const {
    if (!t.empty()) {
      if (!z.empty() || !w.empty()) throw UsageError("pass either --t or --z/--w, not both");
      return parse_complex(t, "--t");
    }
    if (z.empty() || w.empty()) throw UsageError("pass --t or both --z and --w");
    const CVector zp = parse_point(z, "--z");
    const CVector wp = parse_point(w, "--w");
    if (zp.size() != static_cast<std::size_t>(n) || wp.size() != static_cast<std::size_t>(n)) {
      throw UsageError("--z/--w must have n = " + std::to_string(n) + " components");
    }
    return inner(zp, wp);
  }

  std::string label(Complex value) const {
    return param(value.real()) + ";" + param(value.imag());
  }
};

// ---------------------------------------------------------------- kernel

struct KernelCommand {
  SpaceFlags space;
  SeriesFlags series;
  ArgumentFlags arg;
  std::string method = "closed";
  std::string format = "csv";

  void run(std::ostream& out) const {
    const Complex t = arg.resolve(space.n);
    const auto options = series.options();
    if (series.max_degree < 0) throw UsageError("--max-degree must be >= 0");
    SeriesResult result;
    if (space.space == "ball") {
      const auto s = space.ball();
      result = method == "closed" ? bergman::kernel_closed_result(s, t, options)
                                  : bergman::kernel_series_result(s, t, series.max_degree);
    } else {
      const auto s = space.fock();
      result = method == "closed" ? bargmann::kernel_closed_result(s, t, options)
                                  : bargmann::kernel_series_result(s, t, series.max_degree);
    }
    auto meta = space.meta();
    meta.emplace_back("t", arg.label(t));
    meta.emplace_back("method", method);
    if (method == "closed") {
      meta.emplace_back("tol", param(series.tol));
      meta.emplace_back("max_terms", std::to_string(series.max_terms));
    } else {
      meta.emplace_back("max_degree", std::to_string(series.max_degree));
    }
    Table table("kernel", meta, {"re", "im", "terms_used", "error_estimate"});
    table.add_row({num(result.value.real()), num(result.value.imag()),
                   std::to_string(result.terms_used), num(result.error_estimate)});
    table.write(out, format);
  }
};

// ----------------------------------------------------------------- norms

struct NormsCommand {
  SpaceFlags space;
  int max_total_degree = 4;
  std::string format = "csv";

  void run(std::ostream& out) const {
    if (max_total_degree < 0) throw UsageError("--max-total-degree must be >= 0");
    auto meta = space.meta();
    meta.emplace_back("max_total_degree", std::to_string(max_total_degree));
    Table table("norms", meta, {"p", "degree", "gamma", "norm_sq"});
    if (space.space == "ball") {
      const auto s = space.ball();
      for (int k = 0; k <= max_total_degree; ++k) {
        for (const auto& p : enumerate_indices(s.n(), k)) {
          table.add_row({index_label(p), std::to_string(k), num(bergman::gamma_coeff(s, p)),
                         num(bergman::monomial_norm_sq(s, p))});
        }
      }
    } else {
      const auto s = space.fock();
      for (int k = 0; k <= max_total_degree; ++k) {
        for (const auto& p : enumerate_indices(s.n(), k)) {
          table.add_row({index_label(p), std::to_string(k), "",
                         num(bargmann::monomial_norm_sq(s, p))});
        }
      }
    }
    table.write(out, format);
  }
};

// ---------------------------------------------------------------- verify

struct Worst {
  double error = 0.0;
  std::string label = "none";
  int cases = 0;

  void record(double e, const std::string& where) {
    ++cases;
    if (!(e <= error)) {  // NaN counts as worst
      error = e;
      label = where;
    }
  }
};

TaylorSeries random_polynomial(std::size_t n, int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  TaylorSeries f(n);
  for (int k = 0; k <= degree; ++k) {
    for (const auto& p : enumerate_indices(n, k)) {
      const double re = coeff(rng);
      const double im = coeff(rng);
      f.set(p, {re, im});
    }
  }
  return f;
}

struct VerifyCommand {
  std::string suite;
  std::string space = "ball";
  std::string n_list = "1,2";
  std::string alpha_list = "0,0.5,2";
  std::string nu_list = "0.5,1,2";
  std::string m_list = "0,1,2,3";
  int degree_cap = -1;  // suite default
  int samples = 3;
  unsigned long long seed = 20160101;
  bool paper_nu_variant = false;
  std::string format = "csv";

  double tolerance() const {
    if (suite == "orthogonality") return 1e-10;
    if (suite == "identities") return 1e-12;
    return 1e-8;
  }

  void run_identities(Worst& worst) const {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int k = 0; k <= 10; ++k) {
      for (int s = 0; s < samples; ++s) {
        const double z1 = coord(rng);
        const double z2 = coord(rng);
        const double lhs = std::abs(falling_factorial(z1 + z2, k));
        worst.record(snomial_identity_residual(z1, z2, k) / std::max(1.0, lhs),
                     fmt::format("snomial z1={} z2={} k={}", num(z1), num(z2), k));
        for (std::size_t n = 1; n <= 3; ++n) {
          std::vector<Complex> z(n);
          std::vector<Complex> w(n);
          for (auto& c : z) c = {coord(rng) / 2, coord(rng) / 2};
          for (auto& c : w) c = {coord(rng) / 2, coord(rng) / 2};
          Complex t = 0.0;
          for (std::size_t i = 0; i < n; ++i) t += z[i] * std::conj(w[i]);
          const double scale =
              std::max(1.0, std::pow(std::abs(t), k) / to_double(factorial(k)));
          worst.record(power_sum_residual(z, w, k) / scale,
                       fmt::format("power_sum n={} k={}", n, k));
        }
      }
    }
  }

  template <typename Space, typename GridFactory, typename Check>
  void sweep_spaces(Worst& worst, const std::vector<Space>& spaces, GridFactory make_grid,
                    Check check) const {
    for (const auto& s : spaces) {
      const QuadratureGrid grid = make_grid(s);
      check(s, grid, worst);
    }
  }

  void run(std::ostream& out, int& exit_code) {
    if (suite != "norms" && suite != "orthogonality" && suite != "sobolev" &&
        suite != "identities") {
      throw UsageError("--suite must be one of norms, orthogonality, sobolev, identities");
    }
    if (degree_cap == -1) degree_cap = suite == "orthogonality" ? 4 : 6;
    if (degree_cap < 0) throw UsageError("--degree-cap must be >= 0");
    if (samples < 1) throw UsageError("--samples must be >= 1");
    const auto ns = parse_int_list(n_list, "--n");
    const auto ms = parse_int_list(m_list, "--m");
    for (int n : ns) {
      if (n != 1 && n != 2) throw UsageError("quadrature suites support --n in {1,2}");
    }
    std::vector<BergmanDirichletSpace> balls;
    std::vector<BargmannDirichletSpace> focks;
    if (space == "ball") {
      for (double a : parse_list(alpha_list, "--alpha")) {
        for (int n : ns) {
          for (int m : ms) balls.emplace_back(static_cast<std::size_t>(n), a, m);
        }
      }
    } else {
      for (double v : parse_list(nu_list, "--nu")) {
        for (int n : ns) {
          for (int m : ms) focks.emplace_back(static_cast<std::size_t>(n), v, m);
        }
      }
    }

    Worst worst;
    std::mt19937_64 rng(seed);
    auto label = [](const auto& s) {
      if constexpr (std::is_same_v<std::decay_t<decltype(s)>, BergmanDirichletSpace>) {
        return fmt::format("ball n={} alpha={} m={}", s.n(), num(s.alpha()), s.m());
      } else {
        return fmt::format("fock n={} nu={} m={}", s.n(), num(s.nu()), s.m());
      }
    };
    auto monomials = [&](const auto& s, int cap) {
      std::vector<MultiIndex> out;
      for (int k = 0; k <= cap; ++k) {
        for (auto& p : enumerate_indices(s.n(), k)) out.push_back(std::move(p));
      }
      return out;
    };

    auto check = [&](const auto& s, const QuadratureGrid& grid, Worst& w) {
      if (suite == "norms") {
        for (const auto& p : monomials(s, degree_cap)) {
          double e = 0.0;
          if constexpr (std::is_same_v<std::decay_t<decltype(s)>, BargmannDirichletSpace>) {
            e = verify_monomial_norm(s, p, grid,
                                     paper_nu_variant ? BargmannNormForm::printed
                                                      : BargmannNormForm::kernel_consistent);
          } else {
            e = verify_monomial_norm(s, p, grid);
          }
          w.record(e, label(s) + " p=" + index_label(p));
        }
      } else if (suite == "orthogonality") {
        const auto ps = monomials(s, degree_cap);
        for (std::size_t i = 0; i < ps.size(); ++i) {
          for (std::size_t j = i + 1; j < ps.size(); ++j) {
            w.record(verify_orthogonality(s, ps[i], ps[j], grid),
                     label(s) + " p=" + index_label(ps[i]) + " q=" + index_label(ps[j]));
          }
        }
      } else {
        for (int sample = 0; sample < samples; ++sample) {
          const auto f = random_polynomial(s.n(), degree_cap, rng);
          w.record(verify_sobolev_norm(s, f, grid),
                   label(s) + " sample=" + std::to_string(sample));
        }
      }
    };

    if (suite == "identities") {
      run_identities(worst);
    } else if (space == "ball") {
      sweep_spaces(worst, balls,
                   [&](const BergmanDirichletSpace& s) {
                     return QuadratureGrid::ball(s.alpha(), degree_cap);
                   },
                   check);
    } else {
      sweep_spaces(worst, focks,
                   [&](const BargmannDirichletSpace&) {
                     return QuadratureGrid::gaussian(degree_cap);
                   },
                   check);
    }

    const bool passed = worst.error <= tolerance();
    std::vector<std::pair<std::string, std::string>> meta = {
        {"suite", suite}, {"space", space}, {"n", n_list}, {"m", m_list},
        {"degree_cap", std::to_string(degree_cap)}};
    if (space == "ball") {
      meta.emplace_back("alpha", alpha_list);
    } else {
      meta.emplace_back("nu", nu_list);
    }
    if (suite == "sobolev" || suite == "identities") {
      meta.emplace_back("samples", std::to_string(samples));
      meta.emplace_back("seed", std::to_string(seed));
    }
    if (paper_nu_variant) meta.emplace_back("paper_nu_variant", "true");
    Table table("verify", meta, {"cases", "worst_error", "tolerance", "worst_case", "passed"});
    table.add_row({std::to_string(worst.cases), num(worst.error), num(tolerance()), worst.label,
                   passed ? "true" : "false"});
    table.write(out, format);
    exit_code = passed ? kPass : kVerificationFailure;
  }
};

// ----------------------------------------------------------------- sweep

struct SweepCommand {
  double nu = 1.0;
  int m = 0;
  int n = 2;
  ArgumentFlags arg;
  std::string radii = "5,10,20,40";
  std::string format = "csv";

  void run(std::ostream& out) const {
    if (n < 1) throw InvalidParameter("invariant violated: n >= 1");
    const BargmannDirichletSpace check_flags(static_cast<std::size_t>(n), nu, m);
    const Complex t = arg.resolve(n);
    const auto rs = parse_list(radii, "--radii");
    const auto records = asymptotics::convergence_sweep(nu, m, static_cast<std::size_t>(n), t, rs);
    Table table("sweep",
                {{"nu", param(nu)},
                 {"m", std::to_string(m)},
                 {"n", std::to_string(n)},
                 {"t", arg.label(t)},
                 {"radii", radii}},
                {"R", "Re(K_R)", "Im(K_R)", "Re(K_inf)", "Im(K_inf)", "abs_error", "error_ratio"});
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& r = records[i];
      table.add_row({num(r.radius), num(r.kernel_value.real()), num(r.kernel_value.imag()),
                     num(r.limit_value.real()), num(r.limit_value.imag()), num(r.abs_error),
                     i == 0 ? "" : num(records[i - 1].abs_error / r.abs_error)});
    }
    table.write(out, format);
  }
};

void add_format(CLI::App& cmd, std::string& format) {
  cmd.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bergman-Dirichlet and Bargmann-Dirichlet kernels, norms and checks", "bergdir"};
  app.require_subcommand(1);

  KernelCommand kernel;
  auto* kernel_cmd = app.add_subcommand("kernel", "evaluate a reproducing kernel");
  kernel.space.add_to(*kernel_cmd);
  kernel.series.add_to(*kernel_cmd);
  kernel.arg.add_to(*kernel_cmd);
  kernel_cmd->add_option("--method", kernel.method, "closed or series")
      ->check(CLI::IsMember({"closed", "series"}));
  add_format(*kernel_cmd, kernel.format);

  NormsCommand norms;
  auto* norms_cmd = app.add_subcommand("norms", "tabulate squared monomial norms");
  norms.space.add_to(*norms_cmd);
  norms_cmd->add_option("--max-total-degree", norms.max_total_degree, "largest |p|");
  add_format(*norms_cmd, norms.format);

  VerifyCommand verify;
  auto* verify_cmd = app.add_subcommand("verify", "check closed forms against quadrature");
  verify_cmd->add_option("--suite", verify.suite, "norms, orthogonality, sobolev or identities")
      ->required();
  verify_cmd->add_option("--space", verify.space, "ball or fock")
      ->check(CLI::IsMember({"ball", "fock"}));
  verify_cmd->add_option("--n", verify.n_list, "dimensions, comma separated");
  verify_cmd->add_option("--alpha", verify.alpha_list, "ball weights, comma separated");
  verify_cmd->add_option("--nu", verify.nu_list, "Gaussian parameters, comma separated");
  verify_cmd->add_option("--m", verify.m_list, "orders, comma separated");
  verify_cmd->add_option("--degree-cap", verify.degree_cap,
                          "largest total degree checked (default 6, orthogonality 4)");
  verify_cmd->add_option("--samples", verify.samples, "random draws per space");
  verify_cmd->add_option("--seed", verify.seed, "random seed");
  verify_cmd->add_flag("--paper-nu-variant", verify.paper_nu_variant)->group("");
  add_format(*verify_cmd, verify.format);

  SweepCommand sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "ball kernel with alpha = nu R^2 against the Fock kernel");
  sweep_cmd->add_option("--nu", sweep.nu, "Gaussian parameter, > 0");
  sweep_cmd->add_option("--m", sweep.m, "order, >= 0");
  sweep_cmd->add_option("--n", sweep.n, "complex dimension");
  sweep.arg.add_to(*sweep_cmd);
  sweep_cmd->add_option("--radii", sweep.radii, "strictly increasing radii, comma separated");
  add_format(*sweep_cmd, sweep.format);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  std::ostringstream buffer;
  int exit_code = kPass;
  try {
    if (kernel_cmd->parsed()) {
      kernel.run(buffer);
    } else if (norms_cmd->parsed()) {
      norms.run(buffer);
    } else if (verify_cmd->parsed()) {
      verify.run(buffer, exit_code);
    } else {
      sweep.run(buffer);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidParameter& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DimensionMismatch& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  out << buffer.str();
  return exit_code;
}

}  // namespace bergdir::cli
