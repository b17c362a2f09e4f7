#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eulersum/catalog.hpp"

namespace {

using namespace eulersum;

int write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output file '" << path << "'\n";
    return 2;
  }
  f << content;
  return 0;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

bool parse_range(const std::string& s, int& lo, int& hi) {
  try {
    std::size_t used = 0;
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
      lo = hi = std::stoi(s, &used);
      return used == s.size();
    }
    const std::string head = s.substr(0, dots);
    lo = std::stoi(head, &used);
    if (used != head.size()) return false;
    const std::string rest = s.substr(dots + 2);
    hi = std::stoi(rest, &used);
    return used == rest.size();
  } catch (const std::exception&) {
    return false;
  }
}

int cmd_eval(const std::string& input, int digits,
             const std::string& output) {
  const auto pos = input.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos) {
    std::cerr << "empty input\n";
    return 2;
  }
  PrecisionConfig cfg;
  cfg.target_digits = digits;
  try {
    cfg.validate();
    BigFloat value(cfg.working_digits());
    BigFloat err(cfg.working_digits());
    std::string method;
    if (input[pos] == '{') {
      const SeriesSpec spec = SeriesSpec::from_json(input);
      const ValueWithError v = eval_series(spec, cfg, &method);
      value = v.value;
      err = v.error_bound;
    } else {
      const ConstExpr e = parse_expr(input.substr(pos));
      value = eval_expr(e, cfg);
      err = (value.abs() + 1L) *
            BigFloat::pow10(3 - cfg.working_digits(), 10);
      method = "closed_form";
    }
    std::ostringstream os;
    os << value.to_string(digits) << "\n";
    os << "error_estimate: " << err.to_string(3) << "\n";
    os << "method: " << method << "\n";
    return write_out(output, os.str());
  } catch (const ConvergenceFailure& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_verify(const std::string& filter, int digits, int tolerance,
               const std::string& format, int workers,
               const std::string& output) {
  if (digits < tolerance + 5) {
    std::cerr << "precision (" << digits << ") must be at least tolerance + 5 ("
              << tolerance + 5 << ")\n";
    return 2;
  }
  PrecisionConfig cfg;
  cfg.target_digits = digits;
  try {
    cfg.validate();
    const auto results = verify_all(filter, cfg, tolerance, workers);
    if (results.empty()) {
      std::cerr << "filter '" << filter << "' matched no identities\n";
      return 2;
    }
    std::string report;
    if (format == "json") {
      report = results_to_json(results, digits);
    } else if (format == "csv") {
      report = results_to_csv(results, digits);
    } else {
      std::ostringstream os;
      std::size_t passed = 0;
      for (const auto& r : results) {
        if (r.pass) ++passed;
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.id;
        if (!r.params.empty()) os << " [" << r.params << "]";
        os << "  diff=" << r.abs_diff.to_string(3)
           << "  err=" << r.lhs_error_estimate.to_string(3) << "  "
           << r.method << "\n";
      }
      os << "passed " << passed << "/" << results.size() << "\n";
      report = os.str();
    }
    const int rc = write_out(output, report);
    if (rc != 0) return rc;
    const bool all =
        std::all_of(results.begin(), results.end(),
                    [](const VerificationResult& r) { return r.pass; });
    return all ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_table(const std::string& family, int p, const std::string& krange,
              int digits, int tolerance, const std::string& format,
              const std::string& output) {
  if (digits < tolerance + 5) {
    std::cerr << "precision (" << digits << ") must be at least tolerance + 5 ("
              << tolerance + 5 << ")\n";
    return 2;
  }
  int klo = 0;
  int khi = 0;
  if (!parse_range(krange, klo, khi) || klo < 1 || khi < klo) {
    std::cerr << "invalid k range '" << krange
              << "' (want a..b with 1 <= a <= b)\n";
    return 2;
  }
  const Family fam =
      family == "cubic" ? Family::kCubic : Family::kQuadratic;
  const std::vector<int> orders = fam == Family::kCubic
                                      ? std::vector<int>{1, 1, 1}
                                      : std::vector<int>{1, 2};
  PrecisionConfig cfg;
  cfg.target_digits = digits;
  try {
    cfg.validate();
    struct Row {
      int k;
      BigFloat direct;
      BigFloat reduced;
      BigFloat diff;
    };
    std::vector<Row> rows;
    for (int k = klo; k <= khi; ++k) {
      const ValueWithError d = wbar_direct(orders, p, k, cfg);
      const BigFloat red = wbar_reduced(fam, p, k, cfg);
      rows.push_back({k, d.value, red, (d.value - red).abs()});
    }
    std::string render;
    if (format == "json") {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json o;
        o["k"] = r.k;
        o["p"] = p;
        o["direct"] = r.direct.to_string(digits);
        o["reduced"] = r.reduced.to_string(digits);
        o["abs_diff"] = r.diff.to_string(6);
        arr.push_back(std::move(o));
      }
      render = arr.dump(2) + "\n";
    } else if (format == "csv") {
      std::ostringstream os;
      os << "k,p,direct,reduced,abs_diff\n";
      for (const auto& r : rows)
        os << r.k << "," << p << "," << r.direct.to_string(digits) << ","
           << r.reduced.to_string(digits) << "," << r.diff.to_string(6)
           << "\n";
      render = os.str();
    } else {
      std::ostringstream os;
      for (const auto& r : rows)
        os << "k=" << r.k << " p=" << p << "\n"
           << "  direct  = " << r.direct.to_string(digits) << "\n"
           << "  reduced = " << r.reduced.to_string(digits) << "\n"
           << "  |diff|  = " << r.diff.to_string(3) << "\n";
      render = os.str();
    }
    return write_out(output, render);
  } catch (const ConvergenceFailure& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_list(const std::string& format, const std::string& output) {
  const auto& recs = registry();
  std::string render;
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : recs) {
      nlohmann::ordered_json o;
      o["id"] = r.id;
      o["description"] = r.description;
      o["paper_ref"] = r.paper_ref;
      o["param_domain"] = r.param_domain;
      o["default_tolerance_digits"] = r.default_tolerance_digits;
      o["convergence_class"] = convergence_class_name(r.convergence_class);
      o["instances"] = r.instances.size();
      arr.push_back(std::move(o));
    }
    render = arr.dump(2) + "\n";
  } else if (format == "csv") {
    std::ostringstream os;
    os << "id,description,paper_ref,param_domain,tolerance,class,instances\n";
    for (const auto& r : recs)
      os << r.id << "," << csv_quote(r.description) << ","
         << csv_quote(r.paper_ref) << "," << csv_quote(r.param_domain) << ","
         << r.default_tolerance_digits << ","
         << convergence_class_name(r.convergence_class) << ","
         << r.instances.size() << "\n";
    render = os.str();
  } else {
    std::ostringstream os;
    for (const auto& r : recs) {
      os << r.id << "  [" << convergence_class_name(r.convergence_class)
         << ", tol " << r.default_tolerance_digits << ", "
         << r.instances.size()
         << (r.instances.size() == 1 ? " instance" : " instances") << "]\n"
         << "  domain: " << r.param_domain << "\n"
         << "  " << r.description << "\n"
         << "  ref: " << r.paper_ref << "\n";
    }
    os << recs.size() << " identities\n";
    render = os.str();
  }
  return write_out(output, render);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Arbitrary-precision evaluation and verification of Euler-type "
      "harmonic-number sums"};
  app.require_subcommand(1);

  const int hw =
      static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  std::string eval_input;
  int eval_digits = 30;
  std::string eval_output;
  auto* eval_cmd = app.add_subcommand(
      "eval", "Evaluate a series spec (JSON) or a closed-form expression");
  eval_cmd->add_option("input", eval_input,
                       "SeriesSpec JSON or expression text")
      ->required();
  eval_cmd->add_option("--digits", eval_digits, "Target decimal digits")
      ->check(CLI::Range(1, 1000))
      ->envname("EULERSUM_DIGITS");
  eval_cmd->add_option("--output", eval_output,
                       "Result path (default: standard output)");

  std::string v_filter;
  int v_digits = 30;
  int v_tol = 25;
  int v_workers = hw;
  std::string v_format = "text";
  std::string v_output;
  auto* verify_cmd = app.add_subcommand("verify", "Verify catalog identities");
  verify_cmd->add_option("--filter", v_filter,
                         "Record selector: id glob or class=<name>");
  verify_cmd->add_option("--digits", v_digits, "Target decimal digits")
      ->check(CLI::Range(1, 1000))
      ->envname("EULERSUM_DIGITS");
  verify_cmd->add_option("--tolerance", v_tol, "Pass threshold digits")
      ->check(CLI::Range(1, 1000));
  verify_cmd->add_option("--format", v_format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  verify_cmd->add_option("--workers", v_workers, "Concurrent instances")
      ->check(CLI::Range(1, 256))
      ->envname("EULERSUM_WORKERS");
  verify_cmd->add_option("--output", v_output,
                         "Report path (default: standard output)");

  std::string t_family;
  int t_p = 0;
  std::string t_k = "1..4";
  int t_digits = 30;
  int t_tol = 25;
  std::string t_format = "csv";
  std::string t_output;
  auto* table_cmd = app.add_subcommand(
      "table", "Dual-route table of binomial alternating sums");
  table_cmd->add_option("family", t_family, "quadratic or cubic")
      ->required()
      ->check(CLI::IsMember({"quadratic", "cubic"}));
  table_cmd->add_option("--p", t_p, "Extra 1/n^p power, 0 or 1")
      ->check(CLI::Range(0, 1));
  table_cmd->add_option("--k", t_k, "k range a..b");
  table_cmd->add_option("--digits", t_digits, "Target decimal digits")
      ->check(CLI::Range(1, 1000))
      ->envname("EULERSUM_DIGITS");
  table_cmd->add_option("--tolerance", t_tol, "Agreement threshold digits")
      ->check(CLI::Range(1, 1000));
  table_cmd->add_option("--format", t_format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  table_cmd->add_option("--output", t_output,
                        "Table path (default: standard output)");

  std::string l_format = "text";
  std::string l_output;
  auto* list_cmd = app.add_subcommand("list", "List the identity registry");
  list_cmd->add_option("--format", l_format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  list_cmd->add_option("--output", l_output,
                       "Listing path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (eval_cmd->parsed())
    return cmd_eval(eval_input, eval_digits, eval_output);
  if (verify_cmd->parsed())
    return cmd_verify(v_filter, v_digits, v_tol, v_format, v_workers,
                      v_output);
  if (table_cmd->parsed())
    return cmd_table(t_family, t_p, t_k, t_digits, t_tol, t_format, t_output);
  return cmd_list(l_format, l_output);
}
