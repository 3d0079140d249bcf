#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wojcik/closed_form.hpp"
#include "wojcik/errors.hpp"
#include "wojcik/series.hpp"
#include "wojcik/spectral.hpp"

namespace wojcik::cli {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_phi_half_open(double phi) {
  if (!(phi >= 0.0 && phi < 1.0)) {
    throw UsageError("--phi must lie in [0,1), got " + num(phi));
  }
}

void require_phi_open(double phi) {
  if (!(phi > 0.0 && phi < 1.0)) {
    throw UsageError("--phi must lie in (0,1) for this command, got " + num(phi));
  }
}

// Tabular output shared by the CSV and JSON writers.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;

  void write(std::ostream& os, Format format) const {
    if (format == Format::kJson) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& row : rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
        arr.push_back(std::move(obj));
      }
      os << arr.dump(2) << '\n';
      return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
      os << (i ? "," : "") << columns[i];
    }
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ',';
        const auto& cell = row[i];
        if (cell.is_number_float()) {
          os << num(cell.get<double>());
        } else if (cell.is_string()) {
          os << cell.get<std::string>();
        } else {
          os << cell.dump();
        }
      }
      os << '\n';
    }
  }
};

std::string rational_string(const boost::multiprecision::cpp_int& v) {
  return v.str();
}

void emit_series(const RunConfig& cfg, std::ostream& os) {
  if (cfg.order < 0) throw UsageError("--order must be >= 0");
  Table t{{"n", "numerator", "denominator"}, {}};
  auto push = [&](std::int64_t n, const Rational& r) {
    t.rows.push_back({n, rational_string(boost::multiprecision::numerator(r)),
                      rational_string(boost::multiprecision::denominator(r))});
  };
  if (cfg.what == "rstar") {
    for (std::int64_t n = 1; n <= cfg.order; ++n) push(n, rstar(n));
  } else if (cfg.what == "sqrt1z4") {
    const PowerSeries s = sqrt1z4_series(cfg.order);
    for (std::int64_t n = 0; n <= cfg.order; ++n) push(n, s[n]);
  } else if (cfg.what == "first-return") {
    const PowerSeries s = first_return_series(cfg.order);
    for (std::int64_t n = 1; n <= cfg.order; ++n) push(n, s[n]);
  } else {
    throw UsageError("--what must be one of rstar|sqrt1z4|first-return");
  }
  t.write(os, cfg.format);
}

int dispatch(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
  const WalkParams& p = cfg.params;
  switch (cfg.command) {
    case Command::kSimulate: {
      require_phi_half_open(p.phi);
      if (cfg.steps < 0) throw UsageError("--steps must be >= 0");
      const WalkState s = evolve(p, cfg.steps);
      const std::int64_t reach = std::min(cfg.steps, cfg.xmax.value_or(cfg.steps));
      Table t{{"x", "prob_L", "prob_R", "prob"}, {}};
      for (std::int64_t x = -reach; x <= reach; ++x) {
        const Spinor a = s.at(x);
        t.rows.push_back({x, std::norm(a.left), std::norm(a.right), a.norm2()});
      }
      t.write(os, cfg.format);
      return kExitOk;
    }
    case Command::kTimeAverage: {
      require_phi_half_open(p.phi);
      if (cfg.T < 1) throw UsageError("--T must be >= 1");
      const std::int64_t xmax = cfg.xmax.value_or(10);
      const Measure m = time_average(p, cfg.T, xmax);
      Table t{{"x", "mu_bar_T"}, {}};
      for (std::int64_t x = -xmax; x <= xmax; ++x) t.rows.push_back({x, m.at(x)});
      t.write(os, cfg.format);
      return kExitOk;
    }
    case Command::kLimit: {
      require_phi_half_open(p.phi);
      const std::int64_t xmax = cfg.xmax.value_or(10);
      Table t{{"x", "mu_inf"}, {}};
      for (std::int64_t x = -xmax; x <= xmax; ++x) {
        t.rows.push_back({x, mu_inf(x, p.phi, p.alpha, p.beta)});
      }
      t.write(os, cfg.format);
      return kExitOk;
    }
    case Command::kCompare: {
      require_phi_half_open(p.phi);
      if (cfg.T < 1) throw UsageError("--T must be >= 1");
      const std::int64_t xmax = cfg.xmax.value_or(10);
      const Measure m = time_average(p, cfg.T, xmax);
      Table t{{"x", "mu_bar_T", "mu_inf", "abs_err"}, {}};
      double worst = 0.0;
      for (std::int64_t x = -xmax; x <= xmax; ++x) {
        const double lim = mu_inf(x, p.phi, p.alpha, p.beta);
        const double e = std::abs(m.at(x) - lim);
        worst = std::max(worst, e);
        t.rows.push_back({x, m.at(x), lim, e});
      }
      if (cfg.format == Format::kJson) {
        std::ostringstream rows;
        t.write(rows, Format::kJson);
        nlohmann::json doc;
        doc["max_abs_err"] = worst;
        doc["rows"] = nlohmann::json::parse(rows.str());
        os << doc.dump(2) << '\n';
      } else {
        t.write(os, Format::kCsv);
        os << "max_abs_err=" << num(worst) << '\n';
      }
      return kExitOk;
    }
    case Command::kSpectrum: {
      require_phi_open(p.phi);
      Table t{{"branch", "lambda_sq", "residue_norm", "residue_prefactor",
               "sign", "theta_s"},
              {}};
      for (const auto& c : residue_norms_origin(p.phi, p.alpha, p.beta)) {
        t.rows.push_back({std::string(branch_name(c.point.branch)),
                          c.point.lambda_sq, c.norm_sq,
                          c.point.residue_prefactor, c.point.sign,
                          c.point.theta_s});
      }
      t.write(os, cfg.format);
      return kExitOk;
    }
    case Command::kSeries:
      emit_series(cfg, os);
      return kExitOk;
    case Command::kStationary: {
      require_phi_open(p.phi);
      StationaryBranch b;
      if (cfg.branch == "plus") {
        b = StationaryBranch::kBetaIAlpha;
      } else if (cfg.branch == "minus") {
        b = StationaryBranch::kBetaMinusIAlpha;
      } else {
        throw UsageError("--branch must be plus (beta=i alpha) or minus (beta=-i alpha)");
      }
      const std::int64_t xmax = cfg.xmax.value_or(10);
      Table t{{"x", "mu_stationary"}, {}};
      for (std::int64_t x = -xmax; x <= xmax; ++x) {
        t.rows.push_back({x, stationary_measure(x, p.phi, 0.5, b)});
      }
      t.write(os, cfg.format);
      return kExitOk;
    }
    case Command::kVerify: {
      const bool ok = run_verify(os);
      if (!ok) err << "verify: at least one check failed\n";
      return ok ? kExitOk : kExitVerifyFailed;
    }
  }
  return kExitUsage;
}

}  // namespace

double parse_phi(const std::string& token) {
  const auto slash = token.find('/');
  std::size_t used = 0;
  try {
    if (slash != std::string::npos) {
      const std::string a = token.substr(0, slash);
      const std::string b = token.substr(slash + 1);
      const long long p = std::stoll(a, &used);
      if (used != a.size()) throw std::invalid_argument(token);
      const long long q = std::stoll(b, &used);
      if (used != b.size()) throw std::invalid_argument(token);
      if (q == 0) throw std::invalid_argument(token);
      return static_cast<double>(p) / static_cast<double>(q);
    }
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw UsageError("cannot parse phi '" + token + "' (expected decimal or p/q)");
  }
}

Complex parse_complex(const std::string& token) {
  const auto comma = token.find(',');
  std::size_t used = 0;
  try {
    if (comma == std::string::npos) {
      const double re = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      return {re, 0.0};
    }
    const std::string a = token.substr(0, comma);
    const std::string b = token.substr(comma + 1);
    const double re = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(token);
    const double im = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(token);
    return {re, im};
  } catch (const std::exception&) {
    throw UsageError("cannot parse complex '" + token + "' (expected re,im)");
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.out.empty()) return dispatch(config, out, err);
    std::ofstream file(config.out);
    if (!file) throw UsageError("cannot open --out file '" + config.out + "'");
    return dispatch(config, file, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DegenerateError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Defect Hadamard walk: simulation, limit measures and checks",
               "wojcik"};
  app.require_subcommand(1);

  struct Raw {
    std::string phi = "0";
    std::optional<int> eta;
    std::optional<std::string> alpha, beta;
    bool normalize = false;
    std::int64_t steps = 0, T = 1, order = 0;
    std::optional<std::int64_t> xmax;
    std::string what, branch, format, out;
  } raw;

  auto add_phi = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--phi", raw.phi, "defect phase in [0,1); decimal or p/q");
    if (required) o->required();
  };
  auto add_state = [&](CLI::App* sub) {
    sub->add_option("--eta", raw.eta, "symmetric state (1, eta i)/sqrt2, eta = +1 or -1")
        ->check(CLI::IsMember({1, -1}));
    sub->add_option("--alpha", raw.alpha, "initial L amplitude as re,im");
    sub->add_option("--beta", raw.beta, "initial R amplitude as re,im");
    sub->add_flag("--normalize", raw.normalize, "rescale a non-normalized state");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", raw.format, "csv or json (spectrum defaults to json)")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", raw.out, "output path (default: standard output)");
  };

  auto* simulate = app.add_subcommand("simulate", "probabilities at time --steps");
  add_phi(simulate, true);
  add_state(simulate);
  simulate->add_option("--steps", raw.steps, "number of steps")->required();
  simulate->add_option("--xmax", raw.xmax, "truncate output to |x| <= xmax");
  add_common(simulate);

  auto* tavg = app.add_subcommand("time-average", "time-averaged measure over n < T");
  add_phi(tavg, true);
  add_state(tavg);
  tavg->add_option("--T", raw.T, "averaging horizon")->required();
  tavg->add_option("--xmax", raw.xmax, "sites |x| <= xmax (default 10)");
  add_common(tavg);

  auto* limit = app.add_subcommand("limit", "closed-form time-averaged limit measure");
  add_phi(limit, true);
  add_state(limit);
  limit->add_option("--xmax", raw.xmax, "sites |x| <= xmax (default 10)");
  add_common(limit);

  auto* compare = app.add_subcommand("compare", "simulation against the closed-form limit");
  add_phi(compare, true);
  add_state(compare);
  compare->add_option("--T", raw.T, "averaging horizon")->required();
  compare->add_option("--xmax", raw.xmax, "sites |x| <= xmax (default 10)");
  add_common(compare);

  auto* spectrum = app.add_subcommand("spectrum", "unit-circle singular points and residues");
  add_phi(spectrum, true);
  add_state(spectrum);
  add_common(spectrum);

  auto* series = app.add_subcommand("series", "exact generating-function coefficients");
  series->add_option("--what", raw.what, "rstar | sqrt1z4 | first-return")
      ->required()
      ->check(CLI::IsMember({"rstar", "sqrt1z4", "first-return"}));
  series->add_option("--order", raw.order, "truncation order")->required();
  add_common(series);

  auto* stationary = app.add_subcommand("stationary", "stationary measure, normalized to mu(0)=1");
  add_phi(stationary, true);
  stationary->add_option("--branch", raw.branch, "plus (beta=i alpha) | minus (beta=-i alpha)")
      ->required()
      ->check(CLI::IsMember({"plus", "minus"}));
  stationary->add_option("--xmax", raw.xmax, "sites |x| <= xmax (default 10)");
  add_common(stationary);

  auto* verify = app.add_subcommand("verify", "run the invariant suite");

  std::vector<const char*> argv{"wojcik"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  RunConfig cfg;
  const std::pair<CLI::App*, Command> table[] = {
      {simulate, Command::kSimulate}, {tavg, Command::kTimeAverage},
      {limit, Command::kLimit},       {compare, Command::kCompare},
      {spectrum, Command::kSpectrum}, {series, Command::kSeries},
      {stationary, Command::kStationary}, {verify, Command::kVerify}};
  for (const auto& [sub, cmd] : table) {
    if (sub->parsed()) cfg.command = cmd;
  }

  try {
    cfg.phi = parse_phi(raw.phi);
    Complex alpha, beta;
    if (raw.alpha || raw.beta) {
      if (raw.eta) throw UsageError("give either --eta or --alpha/--beta, not both");
      if (!raw.alpha || !raw.beta) throw UsageError("--alpha and --beta must be given together");
      alpha = parse_complex(*raw.alpha);
      beta = parse_complex(*raw.beta);
      const double n2 = std::norm(alpha) + std::norm(beta);
      if (n2 == 0.0) throw UsageError("initial state must be nonzero");
      if (raw.normalize) {
        alpha /= std::sqrt(n2);
        beta /= std::sqrt(n2);
      } else if (std::abs(n2 - 1.0) > 1e-9) {
        throw UsageError("initial state is not normalized: |alpha|^2+|beta|^2 = " +
                         num(n2) + " (pass --normalize to rescale)");
      }
    } else {
      const WalkParams preset = WalkParams::preset(0.0, raw.eta.value_or(1));
      alpha = preset.alpha;
      beta = preset.beta;
    }
    cfg.params = WalkParams{cfg.phi, alpha, beta};
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  cfg.steps = raw.steps;
  cfg.T = raw.T;
  cfg.xmax = raw.xmax;
  if (cfg.xmax && *cfg.xmax < 0) {
    err << "error: --xmax must be >= 0\n";
    return kExitUsage;
  }
  cfg.order = raw.order;
  cfg.what = raw.what;
  cfg.branch = raw.branch;
  const std::string format =
      raw.format.empty() ? (spectrum->parsed() ? "json" : "csv") : raw.format;
  cfg.format = format == "json" ? Format::kJson : Format::kCsv;
  cfg.out = raw.out;
  return run(cfg, out, err);
}

}  // namespace wojcik::cli
