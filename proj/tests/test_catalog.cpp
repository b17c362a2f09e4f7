#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "eulersum/catalog.hpp"

using namespace eulersum;

namespace {

PrecisionConfig config(int digits) {
  PrecisionConfig cfg;
  cfg.target_digits = digits;
  return cfg;
}

std::string mask_millis(std::string s) {
  static const std::regex re("\"millis\": [0-9.eE+-]+");
  return std::regex_replace(s, re, "\"millis\": 0");
}

}  // namespace

TEST_CASE("registry is populated, sorted, and free of duplicate ids") {
  const std::vector<IdentityRecord>& recs = registry();
  CHECK(recs.size() >= 28);
  const std::vector<std::string> expected = {
      "alt-h-n3",       "cor3.1-cubic",      "cor3.1-quadratic",
      "eq3.1",          "eq3.13",            "eq3.17",
      "eq3.18",         "eq3.20",            "eq3.21",
      "eq3.24",         "eq3.25",            "eq3.26",
      "eq3.27",         "eq3.3",             "eq3.5",
      "eq3.7",          "eq3.8",             "eq3.9",
      "eq4.2",          "eq4.4",             "int-ln3-1px",
      "int-ln4-1px",    "intro-binom",       "intro-w7",
      "intro-w9a",      "intro-w9b",         "thm1.1-cubic",
      "thm1.1-quadratic", "thm1.2-cubic-p0", "thm1.2-cubic-p1",
      "thm1.2-quadratic-p0", "thm1.2-quadratic-p1"};
  REQUIRE(recs.size() == expected.size());
  std::vector<std::string> ids;
  for (const IdentityRecord& r : recs) ids.push_back(r.id);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  CHECK(ids == expected);
}

TEST_CASE("every record carries its full describing payload") {
  for (const IdentityRecord& r : registry()) {
    CAPTURE(r.id);
    CHECK(!r.description.empty());
    CHECK(!r.paper_ref.empty());
    CHECK(r.paper_ref.find('"') != std::string::npos);
    CHECK(!r.lhs_template.empty());
    CHECK(!r.rhs_template.empty());
    CHECK(!r.param_domain.empty());
    CHECK(r.default_tolerance_digits >= 10);
    CHECK(!r.instances.empty());
    std::set<std::string> seen;
    for (const CatalogInstance& inst : r.instances)
      CHECK(seen.insert(inst.params).second);
  }
}

TEST_CASE("record lookup by id") {
  const IdentityRecord* rec = find_record("eq3.17");
  REQUIRE(rec != nullptr);
  CHECK(rec->id == "eq3.17");
  CHECK(rec->instances.size() == 5);
  CHECK(find_record("eq9.99") == nullptr);
}

TEST_CASE("single identities verify at their default tolerance") {
  const PrecisionConfig cfg = config(30);
  const VerificationResult res = verify("eq3.20", "", cfg, 0);
  CHECK(res.pass);
  CHECK(res.id == "eq3.20");
  const BigFloat thr = BigFloat::pow10(-25, 40);
  CHECK(res.abs_diff < thr);
  CHECK(res.lhs_error_estimate < thr);
  // explicit params route
  const VerificationResult one = verify("thm1.1-cubic", "k=3", cfg, 0);
  CHECK(one.pass);
  CHECK(one.params == "k=3");
}

TEST_CASE("verification rejects unknown ids and out-of-domain params") {
  const PrecisionConfig cfg = config(30);
  CHECK_THROWS_AS(verify("eq9.99", "", cfg, 0), UnknownIdentity);
  CHECK_THROWS_AS(verify("thm1.1-cubic", "k=9", cfg, 0), ParamOutOfDomain);
  // ambiguous empty selection on a multi-instance record
  CHECK_THROWS_AS(verify("thm1.1-cubic", "", cfg, 0), ParamOutOfDomain);
}

TEST_CASE("effective tolerance is the looser of caller and record default") {
  const PrecisionConfig cfg = config(30);
  // caller 10 lowers the bar below the record default of 30
  const VerificationResult loose = verify("eq3.21", "", cfg, 10);
  CHECK(loose.pass);
  CHECK(loose.abs_diff < BigFloat::pow10(-30, 45));
  // a tail-fitted record with default 10 keeps passing under caller 40,
  // proving the caller value cannot tighten past the record default
  const VerificationResult capped = verify("intro-binom", "k=1", cfg, 40);
  CHECK(capped.pass);
  CHECK(capped.lhs_error_estimate > BigFloat::pow10(-40, 45));
}

TEST_CASE("filters select by class and by glob") {
  const PrecisionConfig cfg = config(25);
  const std::vector<VerificationResult> all12 =
      verify_all("thm1.1-*", cfg, 0, 1);
  CHECK(all12.size() == 12);
  for (const VerificationResult& r : all12) {
    CHECK(r.id.rfind("thm1.1-", 0) == 0);
    CHECK(r.pass);
  }
  const std::vector<VerificationResult> slow =
      verify_all("class=algebraic_slow", cfg, 0, 1);
  CHECK(slow.size() >= 4);
  for (const VerificationResult& r : slow) {
    const IdentityRecord* rec = find_record(r.id);
    REQUIRE(rec != nullptr);
    CHECK(std::string(convergence_class_name(rec->convergence_class)) ==
          "algebraic_slow");
  }
  CHECK(verify_all("zz-*", cfg, 0, 1).empty());
  const std::vector<VerificationResult> q =
      verify_all("eq3.2?", cfg, 0, 1);
  for (const VerificationResult& r : q) {
    CHECK(r.id.size() == 6);
    CHECK(r.id.rfind("eq3.2", 0) == 0);
  }
  CHECK(!q.empty());
}

TEST_CASE("worker count changes neither membership nor order") {
  const PrecisionConfig cfg = config(20);
  const std::vector<VerificationResult> seq =
      verify_all("eq3.1", cfg, 0, 1);
  const std::vector<VerificationResult> par =
      verify_all("eq3.1", cfg, 0, 3);
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].id == par[i].id);
    CHECK(seq[i].params == par[i].params);
    CHECK(seq[i].pass == par[i].pass);
    CHECK((seq[i].lhs_value - par[i].lhs_value).abs().sign() == 0);
  }
}

TEST_CASE("reports are deterministic once timing is masked") {
  const PrecisionConfig cfg = config(25);
  const std::vector<VerificationResult> a =
      verify_all("eq3.17", cfg, 0, 1);
  const std::vector<VerificationResult> b =
      verify_all("eq3.17", cfg, 0, 2);
  CHECK(mask_millis(results_to_json(a, 30)) == mask_millis(results_to_json(b, 30)));
  const std::string csv = results_to_csv(a, 30);
  CHECK(csv.rfind("id,params,lhs,rhs,abs_diff,error_estimate,pass,method,"
                  "millis\n",
                  0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') ==
        static_cast<long>(a.size()) + 1);
}

TEST_CASE("json report carries every field for every instance") {
  const PrecisionConfig cfg = config(25);
  const std::vector<VerificationResult> rs =
      verify_all("int-ln?-1px", cfg, 0, 1);
  REQUIRE(rs.size() == 2);
  const std::string js = results_to_json(rs, 30);
  for (const char* key :
       {"\"id\"", "\"params\"", "\"lhs\"", "\"rhs\"", "\"abs_diff\"",
        "\"error_estimate\"", "\"pass\"", "\"method\"", "\"millis\""})
    CHECK(js.find(key) != std::string::npos);
  CHECK(js.find("int-ln3-1px") != std::string::npos);
  CHECK(js.find("int-ln4-1px") != std::string::npos);
  CHECK(js.back() == '\n');
}

TEST_CASE("config validation happens before any evaluation") {
  PrecisionConfig bad;
  bad.target_digits = 0;
  CHECK_THROWS_AS(verify("eq3.20", "", bad, 0), DomainError);
  CHECK_THROWS_AS(verify_all("", bad, 0, 1), DomainError);
}
