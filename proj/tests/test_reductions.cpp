#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "eulersum/reductions.hpp"

using namespace eulersum;

namespace {

PrecisionConfig config(int digits) {
  PrecisionConfig cfg;
  cfg.target_digits = digits;
  return cfg;
}

BigFloat tol10(int e) { return BigFloat::pow10(e, 20); }

}  // namespace

TEST_CASE("term evaluator carries incremental harmonic state correctly") {
  TermKind t;
  t.factors = {{1, 1}, {2, 1}};
  t.bell_k = 2;
  const TermFn fn = make_term_fn(t);
  std::vector<BigFloat> first;
  for (long n = 1; n <= 12; ++n) first.push_back(fn(n, 40));
  // restarting at n = 1 must reset the internal state
  for (long n = 1; n <= 12; ++n)
    CHECK((fn(n, 40) - first[static_cast<std::size_t>(n - 1)]).abs() <
          tol10(-35));
  // exact reference at a single later index
  const TermFn fresh = make_term_fn(t);
  BigFloat v(0L, 50);
  for (long n = 1; n <= 50; ++n) v = fresh(n, 45);
  const Rational exact =
      harmonic(50, 1) * harmonic(50, 2) * bell_Y(2, 50);
  CHECK((v - BigFloat(exact, 55)).abs() < tol10(-40));
}

TEST_CASE("shifted alternating sums match closed references") {
  const PrecisionConfig cfg = config(40);
  // sum (-1)^(n+1) H_n/(n+1) = ln^2(2)/2 by reindexing the H_n/n sum
  SeriesSpec s;
  s.kind = SeriesKind::kAltShifted;
  s.term.factors = {{1, 1}};
  s.k = 1;
  const BigFloat l2 = BigFloat::native_log2(60);
  CHECK((eval_series(s, cfg).value - l2 * l2 / 2L).abs() < tol10(-36));
  // k = 2 against an independently reindexed acceleration
  s.k = 2;
  const TermFn g = [h = BigFloat(0L, 10)](long m, int digits) mutable {
    if (m == 1) h = BigFloat(0L, digits + 10);
    if (m >= 3) h += BigFloat(1L, digits + 10) / (m - 2);
    return h / m;
  };
  const ValueWithError w = accelerate_alternating(g, cfg);
  CHECK((eval_series(s, cfg).value + w.value).abs() < tol10(-36));
}

TEST_CASE("power series route signs at x = -1") {
  const PrecisionConfig cfg = config(40);
  // sum H_n (-1)^n / n^3 is minus the alternating H_n/n^3 sum
  SeriesSpec s;
  s.kind = SeriesKind::kPowerSeriesAt;
  s.term.factors = {{1, 1}};
  s.x = Rational(-1);
  s.p = 3;
  const BigFloat got = eval_series(s, cfg).value;
  const BigFloat ref = eval_expr(rhs_known("alt_h_n3"), cfg);
  CHECK((got + ref).abs() < tol10(-36));
}

TEST_CASE("power series at x = 1 uses the tail model or refuses") {
  const PrecisionConfig cfg = config(30);
  SeriesSpec s;
  s.kind = SeriesKind::kPowerSeriesAt;
  s.term.factors = {{1, 1}};
  s.x = Rational(1);
  s.p = 3;
  std::string method;
  const ValueWithError v = eval_series(s, cfg, &method);
  CHECK(method == "tail_fit");
  const BigFloat truth = BigFloat::native_zeta(4, 60) * 5L / 4L;
  CHECK((v.value - truth).abs() < tol10(-24));
  // decay p = 1 diverges too slowly for the tail model
  s.p = 1;
  CHECK_THROWS_AS(eval_series(s, cfg), DomainError);
}

TEST_CASE("interior power series reports a direct-series route") {
  const PrecisionConfig cfg = config(35);
  SeriesSpec s;
  s.kind = SeriesKind::kPowerSeriesAt;
  s.term.factors = {{2, 1}};
  s.x = Rational(1, 2);
  s.p = 1;
  std::string method;
  const ValueWithError v = eval_series(s, cfg, &method);
  CHECK(method == "direct_series");
  // brute reference: H_n^(2) decays to zeta(2); 200 terms of (1/2)^n suffice
  BigFloat brute(0L, 60);
  Rational h2(0);
  Rational pw(1);
  for (long n = 1; n <= 200; ++n) {
    h2 += Rational(1, n * n);
    pw *= Rational(1, 2);
    brute += BigFloat(h2 * pw / Rational(n), 60);
  }
  CHECK((v.value - brute).abs() < tol10(-33));
  CHECK((v.value - brute).abs() <= v.error_bound + tol10(-40));
}

TEST_CASE("nested log sum at x = -1 against plain order-swapped truncation") {
  const BigFloat got = nested_log_sum(3, Rational(-1), 30);
  BigFloat brute(0L, 50);
  BigFloat inner(0L, 50);
  for (long n = 1; n <= 20000; ++n) {
    const BigFloat t = BigFloat(1L, 50) / n;
    if (n % 2 == 0) inner += t;
    else inner -= t;
    brute += inner / (n * n * n);
  }
  // truncation of the outer 1/n^3 tail caps the agreement near 1e-9
  CHECK((got - brute).abs() < tol10(-8));
  CHECK_THROWS_AS(nested_log_sum(1, Rational(1, 2), 30), DomainError);
  CHECK_THROWS_AS(nested_log_sum(3, Rational(1), 30), DomainError);
}

TEST_CASE("reflection series matches the polylogarithm product") {
  const PrecisionConfig cfg = config(35);
  SeriesSpec s;
  s.kind = SeriesKind::kReflection;
  s.p = 2;
  s.m = 2;
  s.x = Rational(1, 2);
  s.y = Rational(1, 2);
  const int d = 60;
  const BigFloat expect =
      polylog(2, Rational(1, 2), d) * polylog(2, Rational(1, 2), d) +
      polylog(4, Rational(1, 4), d);
  CHECK((eval_series(s, cfg).value - expect).abs() < tol10(-33));
}

TEST_CASE("beta moment integral equals its exact rational value") {
  const PrecisionConfig cfg = config(30);
  SeriesSpec s;
  s.kind = SeriesKind::kIntBeta;
  s.n = 3;
  s.kpow = 2;
  std::string method;
  const ValueWithError v = eval_series(s, cfg, &method);
  CHECK(method == "quadrature");
  CHECK((v.value - BigFloat(Rational(170, 108), 50)).abs() < tol10(-25));
}

TEST_CASE("dual routes of the binomial alternating sums agree") {
  const PrecisionConfig cfg = config(30);
  struct Case {
    std::vector<int> orders;
    Family family;
    int p;
    int k;
  };
  for (const Case& c : {Case{{1, 2}, Family::kQuadratic, 1, 2},
                        Case{{1, 1, 1}, Family::kCubic, 0, 3},
                        Case{{1, 1, 1}, Family::kCubic, 1, 1}}) {
    const ValueWithError direct = wbar_direct(c.orders, c.p, c.k, cfg);
    const BigFloat reduced = wbar_reduced(c.family, c.p, c.k, cfg);
    CHECK((direct.value - reduced).abs() < tol10(-26));
  }
  CHECK_THROWS_AS(wbar_direct({}, 0, 1, cfg), DomainError);
  CHECK_THROWS_AS(wbar_direct({1, 2}, 2, 1, cfg), DomainError);
  CHECK_THROWS_AS(wbar_reduced(Family::kQuadratic, 0, 0, cfg), DomainError);
}

TEST_CASE("non-alternating binomial check exposes its tail error") {
  const PrecisionConfig cfg = config(30);
  BigFloat err;
  const auto pr = nonalt_binomial_check(2, cfg, &err);
  CHECK((pr.first - pr.second).abs() < tol10(-20));
  CHECK(err.sign() > 0);
  CHECK((pr.first - pr.second).abs() <= err + tol10(-25));
}

TEST_CASE("series specs survive the JSON round-trip") {
  std::vector<SeriesSpec> specs;
  {
    SeriesSpec s;
    s.kind = SeriesKind::kAltShifted;
    s.term.factors = {{1, 3}};
    s.k = 4;
    specs.push_back(s);
  }
  {
    SeriesSpec s;
    s.kind = SeriesKind::kAltOverN;
    s.term.bell_k = 3;
    s.p = 1;
    specs.push_back(s);
  }
  {
    SeriesSpec s;
    s.kind = SeriesKind::kWbarAlt;
    s.orders = {1, 1, 1};
    s.p = 1;
    s.k = 2;
    specs.push_back(s);
  }
  {
    SeriesSpec s;
    s.kind = SeriesKind::kPowerSeriesAt;
    s.term.factors = {{1, 1}, {2, 1}};
    s.x = Rational(-9, 10);
    s.p = 2;
    s.shift = 3;
    specs.push_back(s);
  }
  {
    SeriesSpec s;
    s.kind = SeriesKind::kLemma21LHS;
    s.m = 3;
    s.k = 2;
    s.x = Rational(-1, 2);
    specs.push_back(s);
  }
  {
    SeriesSpec s;
    s.kind = SeriesKind::kReflection;
    s.p = 1;
    s.m = 3;
    s.x = Rational(1, 3);
    s.y = Rational(-1, 2);
    specs.push_back(s);
  }
  {
    SeriesSpec s;
    s.kind = SeriesKind::kIntLn1px;
    s.m = 4;
    s.z = Rational(1);
    specs.push_back(s);
  }
  {
    SeriesSpec s;
    s.kind = SeriesKind::kIntBeta;
    s.n = 5;
    s.kpow = 3;
    specs.push_back(s);
  }
  {
    SeriesSpec s;
    s.kind = SeriesKind::kNestedEta;
    s.p = 3;
    specs.push_back(s);
  }
  for (const SeriesSpec& s : specs) {
    const SeriesSpec back = SeriesSpec::from_json(s.to_json());
    CHECK(back == s);
  }
  CHECK_THROWS_AS(SeriesSpec::from_json("{"), ParseError);
  CHECK_THROWS_AS(SeriesSpec::from_json("{\"kind\":\"NoSuch\"}"), ParseError);
  CHECK_THROWS_AS(SeriesSpec::from_json("[1,2]"), ParseError);
}

TEST_CASE("the documented JSON example evaluates to the documented sum") {
  const SeriesSpec s =
      SeriesSpec::from_json("{\"kind\":\"AltOverN\",\"term\":[[1,3]],\"p\":1}");
  const PrecisionConfig cfg = config(35);
  const BigFloat got = eval_series(s, cfg).value;
  const BigFloat ref = eval_expr(rhs_known("cor28_h3"), cfg);
  CHECK((got - ref).abs() < tol10(-33));
}

TEST_CASE("series domain validation") {
  const PrecisionConfig cfg = config(30);
  SeriesSpec s;
  s.kind = SeriesKind::kAltShifted;
  s.term.factors = {{1, 1}};
  s.k = 0;
  CHECK_THROWS_AS(eval_series(s, cfg), DomainError);
  s.kind = SeriesKind::kLemma21LHS;
  s.m = 6;
  s.k = 1;
  s.x = Rational(1, 2);
  CHECK_THROWS_AS(eval_series(s, cfg), DomainError);
  s.kind = SeriesKind::kLemma24LHS;
  s.m = 2;
  s.x = Rational(1);
  CHECK_THROWS_AS(eval_series(s, cfg), DomainError);
  s.kind = SeriesKind::kNestedEta;
  s.p = 1;
  CHECK_THROWS_AS(eval_series(s, cfg), DomainError);
  s.kind = SeriesKind::kIntLn1px;
  s.m = 2;
  s.z = Rational(2);
  CHECK_THROWS_AS(eval_series(s, cfg), DomainError);
}
