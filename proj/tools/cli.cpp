#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobrr/frobenius.hpp"
#include "frobrr/kclass.hpp"

namespace frobrr::cli {

namespace {

using verify::Reports;

const CLI::Validator kPrime(
    [](std::string& value) -> std::string {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(value, &used);
        if (used != value.size()) return "not an integer: " + value;
        if (!is_prime(v)) return value + " is not prime";
      } catch (const std::exception&) {
        return "not an integer: " + value;
      }
      return {};
    },
    "PRIME");

void append(Reports& into, Reports from) {
  for (auto& r : from) into.push_back(std::move(r));
}

std::string param_text(const verify::ParamValue& v) {
  struct Visitor {
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

nlohmann::json param_json(const verify::ParamValue& v) {
  return std::visit([](const auto& x) { return nlohmann::json(x); }, v);
}

double elapsed_ms(const verify::VerificationReport& r, bool timing) {
  if (!timing) return 0.0;
  const double ms = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return std::round(ms * 1000.0) / 1000.0;
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::coeffs: return "coeffs";
    case Command::verify_main: return "verify-main";
    case Command::verify_grading: return "verify-grading";
    case Command::verify_deligne: return "verify-deligne";
    case Command::verify_mumford: return "verify-mumford";
    case Command::verify_remark: return "verify-remark";
    case Command::verify_arr: return "verify-arr";
    case Command::verify_cube: return "verify-cube";
    case Command::frobenius: return "frobenius";
    case Command::sweep: return "sweep";
  }
  return "?";
}

ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out,
                        std::ostream& err) {
  CLI::App app{"Exact verification of Frobenius/Adams Riemann-Roch identities", "frobrr"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "text";
  bool no_timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", config.out_path, "Also write the JSON report to FILE");
  app.add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 for reproducible output");

  auto add_p = [&config](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--p", config.p, "Prime characteristic")->check(kPrime);
    if (required) opt->required();
  };
  auto add_mumford = [&config](CLI::App* sub) {
    sub->add_flag("--assume-mumford", config.assume_mumford, "Substitute lam -> ww/12");
  };
  auto add_n = [&config](CLI::App* sub) {
    sub->add_option("--n", config.n, "Power of omega")->required()->check(CLI::NonNegativeNumber);
  };

  std::vector<std::pair<CLI::App*, Command>> subs;
  auto sub = [&](const char* name, const char* help, Command c) {
    CLI::App* s = app.add_subcommand(name, help);
    subs.emplace_back(s, c);
    return s;
  };

  add_p(sub("coeffs", "Print the exponent table for a prime", Command::coeffs), true);
  {
    auto* s = sub("verify-main", "Main identity at degree level", Command::verify_main);
    add_p(s, true);
    add_mumford(s);
  }
  add_p(sub("verify-grading", "Main identity at grading level", Command::verify_grading), true);
  add_mumford(sub("verify-deligne", "Deligne's identity forms and controls", Command::verify_deligne));
  {
    auto* s = sub("verify-mumford", "lambda_n = lambda_1^(6n^2-6n+1)", Command::verify_mumford);
    add_n(s);
    add_p(s, false);
    add_mumford(s);
  }
  {
    auto* s = sub("verify-remark", "lambda_n^(p^4) expansion", Command::verify_remark);
    add_n(s);
    add_p(s, true);
    add_mumford(s);
  }
  {
    auto* s = sub("verify-arr", "Adams-Riemann-Roch on the projective line", Command::verify_arr);
    add_p(s, true);
    s->add_option("--d", config.d, "Twist; omitted runs symbolic d and all |d| <= 50");
  }
  {
    auto* s = sub("verify-cube", "Cube identity in the Frobenius expansion", Command::verify_cube);
    s->add_option("--t", config.t, "Evaluate at this t (requires --p)");
    s->add_option("--p", config.p, "Evaluate at this p (requires --t)");
  }
  {
    auto* s = sub("frobenius", "Decompose F_* O(d) on the projective line", Command::frobenius);
    add_p(s, true);
    s->add_option("--d", config.d, "Twist")->required();
  }
  {
    auto* s = sub("sweep", "Run every verification up to a prime bound", Command::sweep);
    s->add_option("--p-max", config.p_max, "Largest prime to include")
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{10000}));
    add_mumford(s);
    s->add_flag("--sequential", config.sequential, "Disable the per-prime thread pool");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  for (const auto& [s, c] : subs) {
    if (s->parsed()) config.command = c;
  }
  config.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  config.timing = !no_timing;
  return config;
}

std::optional<std::string> validate(const RunConfig& c) {
  auto need = [](const std::optional<std::int64_t>& v, const char* name) -> std::optional<std::string> {
    if (!v) return std::string("missing required parameter --") + name;
    return std::nullopt;
  };
  auto prime = [](const std::optional<std::int64_t>& v) -> std::optional<std::string> {
    if (v && !is_prime(*v)) return std::to_string(*v) + " is not prime";
    return std::nullopt;
  };
  std::optional<std::string> e;
  switch (c.command) {
    case Command::coeffs:
    case Command::verify_main:
    case Command::verify_grading:
    case Command::verify_arr:
      if ((e = need(c.p, "p"))) return e;
      return prime(c.p);
    case Command::frobenius:
      if ((e = need(c.p, "p")) || (e = need(c.d, "d"))) return e;
      return prime(c.p);
    case Command::verify_mumford:
      if ((e = need(c.n, "n"))) return e;
      if (*c.n < 0) return "--n must be >= 0";
      return prime(c.p);
    case Command::verify_remark:
      if ((e = need(c.n, "n")) || (e = need(c.p, "p"))) return e;
      if (*c.n < 0) return "--n must be >= 0";
      return prime(c.p);
    case Command::verify_cube:
      if (c.t.has_value() != c.p.has_value()) return "--t and --p must be given together";
      return std::nullopt;
    case Command::verify_deligne:
      return std::nullopt;
    case Command::sweep:
      if (c.p_max < 2) return "--p-max must be >= 2";
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

Reports execute(const RunConfig& c) {
  Reports reports;
  switch (c.command) {
    case Command::coeffs:
      reports.push_back(verify::report_coeff_table(*c.p));
      append(reports, verify::report_coeff_moments(*c.p));
      break;
    case Command::verify_main:
      reports.push_back(verify::verify_main_degree(*c.p, c.assume_mumford));
      break;
    case Command::verify_grading:
      append(reports, verify::verify_main_grading(*c.p));
      break;
    case Command::verify_deligne:
      append(reports, verify::verify_deligne(c.assume_mumford, true));
      break;
    case Command::verify_mumford:
      reports.push_back(verify::verify_mumford(*c.n, c.assume_mumford));
      break;
    case Command::verify_remark:
      reports.push_back(verify::verify_remark_lambda(*c.n, *c.p, c.assume_mumford));
      break;
    case Command::verify_arr:
      reports.push_back(verify::report_arr_symbolic(*c.p));
      if (c.d) {
        reports.push_back(verify::report_arr(*c.p, *c.d));
      } else {
        for (std::int64_t d = -50; d <= 50; ++d) reports.push_back(verify::report_arr(*c.p, d));
      }
      break;
    case Command::verify_cube:
      reports.push_back(verify::report_cube_identity());
      if (c.t && c.p) {
        const auto [lhs, rhs] = verify::cube_identity_at(Rational(*c.t), Rational(*c.p));
        verify::VerificationReport r;
        r.identity = "cube_identity_at";
        r.params = {{"t", *c.t}, {"p", *c.p}};
        r.lhs = lhs.to_string();
        r.rhs = rhs.to_string();
        r.residual = (lhs - rhs).to_string();
        r.status = r.lhs == r.rhs ? verify::Status::pass : verify::Status::fail;
        reports.push_back(std::move(r));
      }
      break;
    case Command::frobenius:
      append(reports, verify::report_frobenius(*c.p, *c.d));
      break;
    case Command::sweep: {
      verify::SweepOptions o;
      o.p_max = c.p_max;
      o.assume_mumford = c.assume_mumford;
      o.parallel = !c.sequential;
      reports = verify::sweep(o);
      break;
    }
  }
  return reports;
}

}  // namespace

std::string render_text(const Reports& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.passed() ? "PASS" : "FAIL") << "  " << r.identity;
    std::vector<std::pair<std::string, std::string>> long_params;
    for (const auto& [k, v] : r.params) {
      if (std::holds_alternative<std::string>(v)) {
        long_params.emplace_back(k, param_text(v));
      } else {
        os << ' ' << k << '=' << param_text(v);
      }
    }
    os << '\n';
    for (const auto& [k, v] : long_params) os << "    " << k << ": " << v << '\n';
    os << "    lhs: " << r.lhs << '\n' << "    rhs: " << r.rhs << '\n';
    if (!r.passed()) os << "    residual: " << r.residual << '\n';
  }
  const auto t = verify::tally(reports);
  os << "summary: " << t.passed << " passed, " << t.failed << " failed\n";
  return os.str();
}

std::string render_json(const RunConfig& config, const Reports& reports) {
  nlohmann::ordered_json doc;
  doc["command"] = command_name(config.command);
  auto& items = doc["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json item;
    item["identity"] = r.identity;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = param_json(v);
    item["params"] = std::move(params);
    item["status"] = r.passed() ? "pass" : "fail";
    item["lhs"] = r.lhs;
    item["rhs"] = r.rhs;
    item["elapsed_ms"] = elapsed_ms(r, config.timing);
    items.push_back(std::move(item));
  }
  const auto t = verify::tally(reports);
  doc["summary"] = {{"passed", t.passed}, {"failed", t.failed}};
  return doc.dump(2) + "\n";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (auto problem = validate(config)) {
    err << "error: " << *problem << "\n";
    return kExitUsage;
  }
  Reports reports;
  try {
    reports = execute(config);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (config.format == OutputFormat::json) {
    out << render_json(config, reports);
  } else {
    if (config.command == Command::coeffs) {
      const auto table = verify::coeff_table(*config.p);
      out << "p = " << table.p << "\n" << table.to_string() << "\n";
      out << std::setw(6) << "a" << std::setw(10) << "c_a" << "\n";
      for (const auto& e : table.entries) {
        out << std::setw(6) << e.twist << std::setw(10) << e.exponent << "\n";
      }
    } else if (config.command == Command::frobenius) {
      const frob::ProjLineBundle b(*config.d, *config.p);
      out << "F_* O(" << *config.d << ") = " << frob::frobenius_pushforward(b).to_string()
          << "  (p = " << *config.p << ")\n";
      out << "h0 = " << frob::h0(b) << ", h1 = " << frob::h1(b)
          << ", F^* O(" << *config.d << ") = O(" << frob::frobenius_pullback(b).twist() << ")\n";
    }
    out << render_text(reports);
  }

  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << *config.out_path << "\n";
      return kExitUsage;
    }
    file << render_json(config, reports);
  }
  return verify::tally(reports).failed == 0 ? kExitPass : kExitFail;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto parsed = parse_args(args, out, err);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return run(std::get<RunConfig>(parsed), out, err);
}

}  // namespace frobrr::cli
