#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "eulersum/closedform.hpp"
#include "json.hpp"

using namespace eulersum;
using nlohmann::json;

namespace {

std::string g_cli;
std::string g_srcdir;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd;
  if (!env.empty()) cmd += env + " ";
  cmd += "'" + g_cli + "' " + args + " 2>/dev/null";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int st = pclose(p);
  if (WIFEXITED(st)) r.code = WEXITSTATUS(st);
  return r;
}

std::string first_line(const std::string& s) {
  return s.substr(0, s.find('\n'));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string mask_millis(std::string s) {
  for (std::size_t at = s.find("\"millis\""); at != std::string::npos;
       at = s.find("\"millis\"", at + 1)) {
    std::size_t v = at + 9;
    while (v < s.size() && s[v] == ' ') ++v;
    if (v < s.size() && s[v] == ':') ++v;
    std::size_t e = v;
    while (e < s.size() && s[e] != ',' && s[e] != '\n' && s[e] != '}') ++e;
    s.replace(v, e - v, " 0");
  }
  return s;
}

BigFloat parse_value(const std::string& text, int digits) {
  return BigFloat::from_string(text, digits);
}

}  // namespace

TEST_CASE("eval prints the documented constant to the requested digits") {
  const RunResult r = run_cli("eval 'zeta(2)' --digits 10");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "1.644934067");
  CHECK(r.out.find("method: closed_form") != std::string::npos);
  CHECK(r.out.find("error_estimate:") != std::string::npos);
}

TEST_CASE("eval rejects empty and malformed input") {
  CHECK(run_cli("eval ''").code == 2);
  CHECK(run_cli("eval '   '").code == 2);
  CHECK(run_cli("eval '{\"kind\":\"NoSuch\"}'").code == 2);
  CHECK(run_cli("eval '{\"kind\":'").code == 2);
  CHECK(run_cli("eval 'zeta(1)'").code == 2);
}

TEST_CASE("eval accepts a series spec in JSON form") {
  const RunResult r = run_cli(
      "eval '{\"kind\":\"AltOverN\",\"term\":[[1,3]],\"p\":1}' --digits 30");
  REQUIRE(r.code == 0);
  PrecisionConfig cfg;
  cfg.target_digits = 35;
  const BigFloat expect = eval_expr(rhs_known("cor28_h3"), cfg);
  const BigFloat got = parse_value(first_line(r.out), 40);
  CHECK((got - expect).abs() < BigFloat::pow10(-28, 40));
}

TEST_CASE("eval handles scalar combinations of closed-form atoms") {
  const RunResult a = run_cli("eval '7/8*zeta(3)' --digits 25");
  REQUIRE(a.code == 0);
  const BigFloat expect = BigFloat::native_zeta(3, 40) * 7L / 8L;
  CHECK((parse_value(first_line(a.out), 40) - expect).abs() <
        BigFloat::pow10(-23, 40));
  // series-spec domain violations surface as usage errors
  CHECK(run_cli("eval '{\"kind\":\"AltOverN\",\"term\":[[2,1]],\"p\":0}'")
            .code == 2);
  CHECK(run_cli("eval '{\"kind\":\"NestedEta\",\"p\":3}' --digits 25").code ==
        0);
}

TEST_CASE("verify exits nonzero on an empty selection") {
  CHECK(run_cli("verify --filter 'nosuch'").code == 2);
}

TEST_CASE("verify reports a passing identity in text form") {
  const RunResult r = run_cli("verify --filter 'eq3.20'");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("eq3.20") != std::string::npos);
  CHECK(r.out.find("passed 1/1") != std::string::npos);
}

TEST_CASE("verify json validates against the shipped report schema") {
  const RunResult r = run_cli("verify --filter 'eq3.2?' --format json");
  REQUIRE(r.code == 0);
  std::ifstream sf(g_srcdir + "/schemas/report.schema.json");
  REQUIRE(sf.good());
  const json schema = json::parse(sf);
  const json rep = json::parse(r.out);
  REQUIRE(rep.is_array());
  CHECK(!rep.empty());
  const json& item = schema.at("items");
  const json& props = item.at("properties");
  for (const json& e : rep) {
    REQUIRE(e.is_object());
    for (const json& req : item.at("required"))
      CHECK(e.contains(req.get<std::string>()));
    for (auto it = e.begin(); it != e.end(); ++it) {
      REQUIRE(props.contains(it.key()));
      const std::string t = props.at(it.key()).at("type").get<std::string>();
      if (t == "string") CHECK(it.value().is_string());
      if (t == "boolean") CHECK(it.value().is_boolean());
      if (t == "number") CHECK(it.value().is_number());
    }
    CHECK(e.at("millis").get<double>() >= 0.0);
    CHECK(e.at("pass").get<bool>());
  }
}

TEST_CASE("verify output is deterministic apart from timing") {
  const RunResult a = run_cli("verify --filter 'eq3.17' --format json");
  const RunResult b = run_cli("verify --filter 'eq3.17' --format json",
                              "EULERSUM_WORKERS=3");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(mask_millis(a.out) == mask_millis(b.out));
  const RunResult c = run_cli("verify --filter 'eq3.17'");
  const RunResult d = run_cli("verify --filter 'eq3.17'");
  REQUIRE(c.code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("verify csv starts with the documented header") {
  const RunResult r = run_cli("verify --filter 'eq3.18' --format csv");
  REQUIRE(r.code == 0);
  CHECK(first_line(r.out) ==
        "id,params,lhs,rhs,abs_diff,error_estimate,pass,method,millis");
}

TEST_CASE("verify enforces the precision-tolerance gap") {
  CHECK(run_cli("verify --filter 'eq3.20' --digits 20 --tolerance 25").code ==
        2);
  CHECK(run_cli("verify --filter 'eq3.20' --digits 30 --tolerance 25").code ==
        0);
}

TEST_CASE("table matches the shifted-sum difference of known constants") {
  const RunResult r = run_cli("table quadratic --p 1 --k 1..1 --format csv");
  REQUIRE(r.code == 0);
  const std::vector<std::string> lines = split(r.out, '\n');
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0] == "k,p,direct,reduced,abs_diff");
  const std::vector<std::string> f = split(lines[1], ',');
  REQUIRE(f.size() == 5);
  CHECK(f[0] == "1");
  CHECK(f[1] == "1");
  PrecisionConfig cfg;
  cfg.target_digits = 35;
  const BigFloat expect = eval_expr(rhs_known("cor28_hh2"), cfg) -
                          eval_expr(rhs_thm11(Family::kQuadratic, 1), cfg);
  const BigFloat direct = parse_value(f[2], 40);
  const BigFloat reduced = parse_value(f[3], 40);
  CHECK((direct - expect).abs() < BigFloat::pow10(-25, 40));
  CHECK((reduced - expect).abs() < BigFloat::pow10(-25, 40));
  CHECK(parse_value(f[4], 20) < BigFloat::pow10(-25, 20));
}

TEST_CASE("table covers a k range and rejects k below one") {
  const RunResult r = run_cli("table cubic --p 0 --k 1..4 --format csv");
  REQUIRE(r.code == 0);
  const std::vector<std::string> lines = split(r.out, '\n');
  REQUIRE(lines.size() >= 5);
  for (int k = 1; k <= 4; ++k) {
    const std::vector<std::string> f = split(lines[static_cast<std::size_t>(k)], ',');
    REQUIRE(f.size() == 5);
    CHECK(f[0] == std::to_string(k));
    CHECK(parse_value(f[4], 20) < BigFloat::pow10(-25, 20));
  }
  CHECK(run_cli("table cubic --k 0..0").code == 2);
  CHECK(run_cli("table cubic --k 3..2").code == 2);
  CHECK(run_cli("table quartic --k 1..2").code == 2);
}

TEST_CASE("list enumerates the full catalog") {
  const RunResult r = run_cli("list");
  REQUIRE(r.code == 0);
  const std::vector<std::string> lines = split(r.out, '\n');
  std::string footer;
  for (auto it = lines.rbegin(); it != lines.rend(); ++it)
    if (!it->empty()) {
      footer = *it;
      break;
    }
  REQUIRE(footer.find(" identities") != std::string::npos);
  const int n = std::stoi(footer);
  CHECK(n >= 28);
  CHECK(r.out.find("thm1.1-cubic") != std::string::npos);
  CHECK(r.out.find("eq3.17") != std::string::npos);
}

TEST_CASE("list json carries the descriptive fields for every record") {
  const RunResult r = run_cli("list --format json");
  REQUIRE(r.code == 0);
  const json arr = json::parse(r.out);
  REQUIRE(arr.is_array());
  CHECK(arr.size() >= 28);
  for (const json& e : arr) {
    CHECK(e.at("id").is_string());
    CHECK(!e.at("description").get<std::string>().empty());
    CHECK(!e.at("paper_ref").get<std::string>().empty());
    CHECK(!e.at("param_domain").get<std::string>().empty());
  }
}

TEST_CASE("list rejects unknown formats") {
  CHECK(run_cli("list --format bogus").code == 2);
}

TEST_CASE("usage errors exit with the usage code") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("eval 'zeta(2)' --nope").code == 2);
  CHECK(run_cli("eval 'zeta(2)' --digits 0").code == 2);
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("environment variables override the numeric defaults") {
  const RunResult r = run_cli("eval 'zeta(2)'", "EULERSUM_DIGITS=10");
  REQUIRE(r.code == 0);
  CHECK(first_line(r.out) == "1.644934067");
  const RunResult d = run_cli("eval 'zeta(2)' --digits 12",
                              "EULERSUM_DIGITS=10");
  REQUIRE(d.code == 0);
  CHECK(first_line(d.out) == "1.64493406685");
}

TEST_CASE("output lands in the requested file") {
  const std::string path = "/tmp/eulersum_cli_out.txt";
  std::remove(path.c_str());
  const RunResult r =
      run_cli("eval 'ln2' --digits 15 --output " + path);
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().rfind("0.693147180559945", 0) == 0);
  std::remove(path.c_str());
  CHECK(run_cli("eval 'ln2' --output /nonexistent-dir/x.txt").code == 2);
}

TEST_CASE("the default verification sweep passes end to end") {
  const RunResult r = run_cli("verify");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

int main(int argc, char** argv) {
  std::vector<char*> pass;
  pass.push_back(argv[0]);
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (!a.empty() && a[0] != '-') {
      if (g_cli.empty()) {
        g_cli = a;
        continue;
      }
      if (g_srcdir.empty()) {
        g_srcdir = a;
        continue;
      }
    }
    pass.push_back(argv[i]);
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: test_cli <cli-binary> [source-dir]\n");
    return 1;
  }
  if (g_srcdir.empty()) g_srcdir = ".";
  doctest::Context ctx(static_cast<int>(pass.size()), pass.data());
  return ctx.run();
}
