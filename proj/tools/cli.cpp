#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "bring/bring_solver.hpp"
#include "bring/coefficients.hpp"
#include "bring/diagnostics.hpp"
#include "bring/errors.hpp"

namespace bring::cli {

namespace {

using nlohmann::json;

enum class Format { human, json, csv };

const std::map<std::string, Format> kFormats{
    {"human", Format::human}, {"json", Format::json}, {"csv", Format::csv}};

const std::map<std::string, Method> kMethods{{"series", Method::series},
                                             {"newton", Method::newton},
                                             {"bisect", Method::bisection},
                                             {"bring-radical", Method::bring_radical}};

/// Input the user can fix; maps to exit 2.
class UsageError : public Error {
 public:
  using Error::Error;
  [[nodiscard]] const char* kind() const noexcept override { return "usage"; }
};

std::string num(double v) { return fmt::format("{:.17g}", v); }

CoefficientTable make_table(std::size_t needed) {
  const char* env = std::getenv("BRING_SOLVER_MAX_K");
  if (env != nullptr) {
    return CoefficientTable(coefficient_capacity_from_env());
  }
  return CoefficientTable(std::max(kDefaultCoefficientCapacity, needed));
}

bool is_usage_error(const Error& e) {
  const std::string_view kind = e.kind();
  return kind == "usage" || kind == "divergence" || kind == "domain" ||
         kind == "invalid_argument" || kind == "capacity";
}

struct SolveArgs {
  double a = 0.0;
  std::string method = "series";
  std::optional<std::size_t> terms;
  std::optional<std::size_t> max_iter;
  std::optional<double> x0;
  double tol = 1e-12;
  std::string format = "human";
  bool dump = false;
  bool no_polish = false;
};

json ultraradicals_json(const UltraradicalSet& k) {
  json j;
  j["a"] = k.a;
  const char* names[] = {"K0", "K1", "K2", "K3", "K4"};
  json trunc = json::object();
  for (std::size_t i = 0; i < 5; ++i) {
    j[names[i]] = k.k[i];
    trunc[names[i]] = {{"m_used", k.truncation[i].m_used},
                       {"stop_reason", std::string(to_string(k.truncation[i].stop_reason))}};
  }
  j["truncation"] = trunc;
  return j;
}

void render_solve(const SolveReport& r, const SolveArgs& args, std::ostream& out) {
  const Format format = kFormats.at(args.format);
  const bool dump = args.dump && r.ultraradicals.has_value();
  switch (format) {
    case Format::json: {
      json j;
      j["root"] = r.root;
      j["scaled_root"] = r.scaled_root ? json(*r.scaled_root) : json(nullptr);
      j["residual"] = r.residual;
      j["method"] = std::string(to_string(r.method));
      j["terms_or_iterations"] = r.terms_or_iterations;
      j["polished"] = r.polished;
      if (dump) {
        j["ultraradicals"] = ultraradicals_json(*r.ultraradicals);
        json roots = json::array();
        for (const auto& z : r.quartic_roots->roots) {
          roots.push_back({{"re", z.real()}, {"im", z.imag()}});
        }
        j["quartic_roots"] = {{"roots", roots}, {"max_residual", r.quartic_roots->max_residual}};
      }
      out << j.dump() << '\n';
      break;
    }
    case Format::csv: {
      out << "root,scaled_root,residual,method,terms_or_iterations,polished";
      if (dump) {
        out << ",K0,K1,K2,K3,K4";
      }
      out << '\n';
      out << num(r.root) << ',' << (r.scaled_root ? num(*r.scaled_root) : "") << ','
          << num(r.residual) << ',' << to_string(r.method) << ',' << r.terms_or_iterations << ','
          << (r.polished ? "true" : "false");
      if (dump) {
        for (const double k : r.ultraradicals->k) {
          out << ',' << num(k);
        }
      }
      out << '\n';
      break;
    }
    case Format::human: {
      out << fmt::format("root                 {}\n", num(r.root));
      out << fmt::format("scaled_root          {}\n",
                         r.scaled_root ? num(*r.scaled_root) : std::string("n/a"));
      out << fmt::format("residual             {}\n", num(r.residual));
      out << fmt::format("method               {}\n", to_string(r.method));
      out << fmt::format("terms_or_iterations  {}\n", r.terms_or_iterations);
      out << fmt::format("polished             {}\n", r.polished);
      if (dump) {
        const auto& k = *r.ultraradicals;
        for (std::size_t i = 0; i < 5; ++i) {
          out << fmt::format("K{}                   {}  (m_used {}, stop {})\n", i, num(k.k[i]),
                             k.truncation[i].m_used, to_string(k.truncation[i].stop_reason));
        }
        for (const auto& z : r.quartic_roots->roots) {
          out << fmt::format("quartic root         {} {:+}i\n", num(z.real()), z.imag());
        }
      }
      break;
    }
  }
}

void cmd_solve(const SolveArgs& args, std::ostream& out) {
  SolveRequest req;
  req.a = args.a;
  req.method = kMethods.at(args.method);
  req.tol = args.tol;
  req.x0 = args.x0;
  req.polish = !args.no_polish;
  if (args.max_iter) {
    req.max_iter = *args.max_iter;
  }
  if (args.terms) {
    switch (req.method) {
      case Method::series: req.policy.m_max = *args.terms; break;
      case Method::bring_radical: req.terms = *args.terms; break;
      default: throw UsageError("--terms applies to the series and bring-radical methods only");
    }
  }
  const CoefficientTable coeffs = make_table(req.policy.required_coefficients());
  render_solve(solve(req, coeffs), args, out);
}

std::vector<double> parse_double_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw UsageError(std::string(flag) + ": '" + item + "' is not a number");
    }
    out.push_back(v);
  }
  if (out.empty()) {
    throw UsageError(std::string(flag) + " needs at least one value");
  }
  return out;
}

std::vector<std::size_t> parse_index_list(const std::string& text, const char* flag) {
  std::vector<std::size_t> out;
  for (const double v : parse_double_list(text, flag)) {
    if (!(v >= 1.0) || v != std::floor(v)) {
      throw UsageError(std::string(flag) + " values must be positive integers");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

void cmd_tables_c(std::size_t max_k, std::ostream& out) {
  if (max_k == 0) {
    throw UsageError("--max-k must be at least 1");
  }
  const CoefficientTable table = generate_coefficients(max_k);
  out << "k,c_k\n";
  for (std::size_t k = 1; k <= table.max_index(); ++k) {
    out << k << ',' << num(table[k]) << '\n';
  }
}

void cmd_tables_k0(double a, std::size_t m_max, std::ostream& out) {
  const CoefficientTable coeffs = make_table(5 * m_max);
  const TermTable t = k0_term_table(a, m_max, coeffs);
  out << "m,T_m\n";
  for (const auto& e : t.entries) {
    out << e.m << ',' << num(e.term) << '\n';
  }
}

void cmd_tables_partial(const std::string& a_list, const std::string& checkpoints,
                        std::ostream& out) {
  const auto as = parse_double_list(a_list, "--a-list");
  const auto ns = parse_index_list(checkpoints, "--checkpoints");
  const std::size_t deepest = *std::max_element(ns.begin(), ns.end());
  const CoefficientTable coeffs = make_table(5 * deepest);
  const PartialSumTable t = partial_sums(as, ns, coeffs);
  out << 'a';
  for (const auto n : t.checkpoints) {
    out << ",S_" << n;
  }
  out << '\n';
  for (std::size_t i = 0; i < t.a_values.size(); ++i) {
    out << num(t.a_values[i]);
    for (const double s : t.sums[i]) {
      out << ',' << num(s);
    }
    out << '\n';
  }
}

struct ScanArgs {
  double a_min = 0.0;
  double a_max = 0.0;
  std::size_t count = 10;
  std::size_t m_max = 14;
  std::string format = "csv";
};

int cmd_scan(const ScanArgs& args, std::ostream& out) {
  if (!(args.a_min > 1.0)) {
    throw DivergenceError("scan needs --a-min > 1; the series diverges for |a| <= 1");
  }
  TruncationPolicy policy;
  policy.m_max = args.m_max;
  const CoefficientTable coeffs = make_table(policy.required_coefficients());
  const auto points = accuracy_scan(args.a_min, args.a_max, args.count, policy, coeffs);
  const bool any_ok = std::any_of(points.begin(), points.end(),
                                  [](const ScanPoint& p) { return !p.error.has_value(); });
  if (kFormats.at(args.format) == Format::json) {
    json rows = json::array();
    for (const auto& p : points) {
      json row{{"a", p.a}};
      if (p.error) {
        row["error"] = *p.error;
      } else {
        row["series_root"] = p.series_root;
        row["oracle_root"] = p.oracle_root;
        row["abs_error"] = p.abs_error;
        row["m_used"] = p.m_used;
      }
      rows.push_back(row);
    }
    out << json{{"points", rows}}.dump() << '\n';
  } else {
    out << "a,series_root,oracle_root,abs_error,m_used,error\n";
    for (const auto& p : points) {
      out << num(p.a) << ',';
      if (p.error) {
        std::string msg = *p.error;
        std::replace(msg.begin(), msg.end(), ',', ';');
        out << ",,,," << msg << '\n';
      } else {
        out << num(p.series_root) << ',' << num(p.oracle_root) << ',' << num(p.abs_error) << ','
            << p.m_used << ",\n";
      }
    }
  }
  return any_ok ? kExitOk : kExitFailure;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real root of the Bring quintic x^5 + x = a", "bring-solver"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve x^5 + x = a");
  solve->add_option("--a", solve_args.a, "Right-hand side a")->required();
  solve->add_option("--method", solve_args.method, "series|newton|bisect|bring-radical")
      ->check(CLI::IsMember({"series", "newton", "bisect", "bring-radical"}));
  solve->add_option("--terms", solve_args.terms,
                    "Outer terms m_max (series) or number of terms (bring-radical)")
      ->check(CLI::PositiveNumber);
  solve->add_option("--max-iter", solve_args.max_iter, "Newton iteration cap")
      ->check(CLI::PositiveNumber);
  solve->add_option("--x0", solve_args.x0, "Newton starting point");
  solve->add_option("--tol", solve_args.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  solve->add_option("--format", solve_args.format, "human|json|csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  solve->add_flag("--dump-ultraradicals", solve_args.dump,
                  "Include K0..K4 and the quartic roots (series method)");
  solve->add_flag("--no-polish", solve_args.no_polish,
                  "Report the raw quartic-reduction root without a Newton step");

  auto* tables = app.add_subcommand("tables", "Coefficient and convergence tables as CSV");
  tables->require_subcommand(1);
  std::size_t max_k = 36;
  auto* tab_c = tables->add_subcommand("c", "Binomial coefficients c_1..c_K");
  tab_c->add_option("--max-k", max_k, "Largest index K")->required();

  double k0_a = 1.0;
  std::size_t k0_m_max = 40;
  auto* tab_k0 = tables->add_subcommand("k0-terms", "Raw outer terms T_m of K0");
  tab_k0->add_option("--a", k0_a, "Value of a")->required();
  tab_k0->add_option("--m-max", k0_m_max, "Last m")->required()->check(CLI::PositiveNumber);

  std::string a_list;
  std::string checkpoints = "11,21,31,41";
  auto* tab_ps = tables->add_subcommand("partial-sums", "Partial sums S_N of K0");
  tab_ps->add_option("--a-list", a_list, "Comma-separated a values")->required();
  tab_ps->add_option("--checkpoints", checkpoints, "Comma-separated N values");

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Series accuracy against bisection over a log grid");
  scan->add_option("--a-min", scan_args.a_min, "Smallest a (> 1)")->required();
  scan->add_option("--a-max", scan_args.a_max, "Largest a")->required();
  scan->add_option("--count", scan_args.count, "Grid points")->check(CLI::PositiveNumber);
  scan->add_option("--m-max", scan_args.m_max, "Outer-term cap")->check(CLI::PositiveNumber);
  scan->add_option("--format", scan_args.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  try {
    int code = kExitOk;
    if (solve->parsed()) {
      cmd_solve(solve_args, buffer);
    } else if (tab_c->parsed()) {
      cmd_tables_c(max_k, buffer);
    } else if (tab_k0->parsed()) {
      cmd_tables_k0(k0_a, k0_m_max, buffer);
    } else if (tab_ps->parsed()) {
      cmd_tables_partial(a_list, checkpoints, buffer);
    } else if (scan->parsed()) {
      code = cmd_scan(scan_args, buffer);
    }
    out << buffer.str();
    return code;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << one_line(e.what()) << '\n';
    return is_usage_error(e) ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: internal: " << one_line(e.what()) << '\n';
    return kExitFailure;
  }
}

}  // namespace bring::cli
