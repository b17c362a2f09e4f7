#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "eulersum/catalog.hpp"
#include "eulersum/closedform.hpp"
#include "eulersum/exactcore.hpp"
#include "eulersum/numerics.hpp"
#include "eulersum/reductions.hpp"

using namespace eulersum;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& text) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n, text.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <typename F>
void guarded(int n, F f) {
  try {
    f();
  } catch (const std::exception& e) {
    report(n, false, std::string("unexpected exception: ") + e.what());
  }
}

PrecisionConfig config(int digits) {
  PrecisionConfig cfg;
  cfg.target_digits = digits;
  return cfg;
}

bool all_below(const std::vector<VerificationResult>& rs, int tol_digits) {
  if (rs.empty()) return false;
  for (const VerificationResult& r : rs) {
    const BigFloat thr =
        BigFloat::pow10(-tol_digits, 20 + tol_digits);
    if (!r.pass) return false;
    if (!(r.abs_diff < thr)) return false;
  }
  return true;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

int main() {
  guarded(1, [] {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<VerificationResult> rs =
        verify_all("thm1.1-*", config(45), 30, 1);
    const double dt = seconds_since(t0);
    const bool ok = rs.size() == 12 && all_below(rs, 30) && dt <= 60.0;
    report(1, ok,
           "quadratic and cubic shifted families, k=1..6, diffs < 1e-30, "
           "sweep took " +
               fmt(dt) + "s (budget 60s)");
  });

  guarded(2, [] {
    const std::vector<VerificationResult> rs =
        verify_all("thm1.2-*", config(30), 25, 1);
    report(2, rs.size() == 24 && all_below(rs, 25),
           "linear Euler-sum reductions, both families, p in {0,1}, k=1..6, "
           "24 instances, diffs < 1e-25");
  });

  guarded(3, [] {
    bool ok = true;
    for (const char* id :
         {"eq3.20", "eq3.21", "eq3.24", "eq3.25", "alt-h-n3"}) {
      const std::vector<VerificationResult> rs =
          verify_all(id, config(30), 30, 1);
      ok = ok && all_below(rs, 30);
    }
    report(3, ok,
           "weight-4 alternating constants, five closed forms, diffs < "
           "1e-30");
  });

  guarded(4, [] {
    const std::vector<VerificationResult> a =
        verify_all("eq3.26", config(30), 30, 1);
    const std::vector<VerificationResult> b =
        verify_all("eq3.27", config(30), 30, 1);
    bool ok = a.size() == 6 && b.size() == 6 && all_below(a, 30) &&
              all_below(b, 30);
    const PrecisionConfig cfg = config(40);
    const BigFloat thr = BigFloat::pow10(-30, 55);
    for (const auto& pr :
         {std::pair<Family, const char*>{Family::kQuadratic,
                                         "cor31_quadratic"},
          std::pair<Family, const char*>{Family::kCubic, "cor31_cubic"}}) {
      const BigFloat lit = eval_expr(rhs_known(pr.second), cfg);
      const BigFloat gen = eval_expr(rhs_thm11(pr.first, 2), cfg);
      ok = ok && (lit - gen).abs() < thr;
    }
    const std::vector<VerificationResult> c =
        verify_all("cor3.1-*", config(30), 30, 1);
    ok = ok && c.size() == 2 && all_below(c, 30);
    report(4, ok,
           "combination identities k=1..6 plus both k=2 literals against "
           "the general formula, diffs < 1e-30");
  });

  guarded(5, [] {
    const std::vector<VerificationResult> a =
        verify_all("eq3.17", config(30), 30, 1);
    const std::vector<VerificationResult> b =
        verify_all("eq3.18", config(30), 10, 1);
    report(5,
           a.size() == 5 && all_below(a, 30) && b.size() == 4 &&
               all_below(b, 10),
           "Bell-sum families m=1..5 at 1e-30 and the companion quadrature "
           "forms m=1..4 at 1e-10");
  });

  guarded(6, [] {
    const std::vector<VerificationResult> a =
        verify_all("eq3.13", config(30), 20, 1);
    bool ok = a.size() == 8 && all_below(a, 20);
    for (const char* id : {"int-ln3-1px", "int-ln4-1px"}) {
      const std::vector<VerificationResult> rs =
          verify_all(id, config(30), 20, 1);
      ok = ok && all_below(rs, 20);
    }
    report(6, ok,
           "log-power integrals, m=1..4 at z in {1/2, 1} plus the two "
           "displayed evaluations, diffs < 1e-20");
  });

  guarded(7, [] {
    bool ok = true;
    std::size_t count = 0;
    for (const char* id : {"eq3.1", "eq3.3", "eq3.7", "eq3.8"}) {
      const std::vector<VerificationResult> rs =
          verify_all(id, config(30), 25, 1);
      ok = ok && all_below(rs, 25);
      count += rs.size();
    }
    ok = ok && count == 248;
    report(7, ok,
           "generating-function lemmas over the sample grid, " +
               std::to_string(count) + " instances, diffs < 1e-25");
  });

  guarded(8, [] {
    bool ok = true;
    for (std::int64_t n = 1; n <= 30 && ok; ++n)
      for (int k = 1; k <= 5 && ok; ++k)
        ok = Rational(stirling1(n, k)) == stirling1_closed(n, k);
    const bool stirling_ok = ok;
    for (std::int64_t n = 0; n <= 30 && ok; ++n)
      for (int k = 1; k <= 4 && ok; ++k)
        ok = bell_Y(k, n) == bell_Y_closed(k, n);
    const bool bell_ok = ok;
    // log-power coefficients against an exact series convolution
    const int order = 20;
    std::vector<Rational> base(order + 1, Rational(0));
    for (int n = 1; n <= order; ++n) base[static_cast<std::size_t>(n)] = Rational(1, n);
    std::vector<Rational> power = base;
    for (int k = 1; k <= 4 && ok; ++k) {
      if (k > 1) {
        std::vector<Rational> next(order + 1, Rational(0));
        for (int i = 1; i <= order; ++i)
          for (int j = 1; i + j <= order; ++j)
            next[static_cast<std::size_t>(i + j)] +=
                power[static_cast<std::size_t>(i)] *
                base[static_cast<std::size_t>(j)];
        power = next;
      }
      for (int n = 1; n <= order && ok; ++n)
        ok = power[static_cast<std::size_t>(n)] ==
             Rational(factorial(k) * stirling1(n, k)) / Rational(factorial(n));
    }
    const bool coeff_ok = ok;
    // partial fractions of the reciprocal binomial on random indices
    std::mt19937 gen(987654321u);
    std::uniform_int_distribution<long> pick_n(1, 300);
    std::uniform_int_distribution<int> pick_k(1, 6);
    for (int trial = 0; trial < 500 && ok; ++trial) {
      const long n = pick_n(gen);
      const int k = pick_k(gen);
      Rational acc(0);
      for (const auto& rc : binom_recip_coeffs(k))
        acc += rc.second / Rational(n + rc.first);
      ok = acc == Rational(1) / Rational(binomial(n + k, k));
    }
    report(8, ok,
           std::string("exact suites: Stirling-number closed forms ") +
               (stirling_ok ? "ok" : "BAD") + ", Bell closed forms " +
               (bell_ok ? "ok" : "BAD") + ", series coefficients to order " +
               std::to_string(order) + " " + (coeff_ok ? "ok" : "BAD") +
               ", 500 random partial-fraction checks, all with zero "
               "tolerance");
  });

  guarded(9, [] {
    const std::vector<VerificationResult> rs =
        verify_all("eq3.5", config(30), 10, 1);
    report(9, rs.size() == 30 && all_below(rs, 10),
           "beta-moment quadratures n=1..6, powers 0..4, against exact "
           "rational values, diffs < 1e-10");
  });

  guarded(10, [] {
    const std::vector<VerificationResult> rs =
        verify_all("intro-*", config(30), 10, 1);
    report(10, rs.size() == 7 && all_below(rs, 10),
           "non-alternating weight-7 and weight-9 sums plus the central "
           "binomial family, tail-corrected to 10 digits");
  });

  guarded(11, [] {
    PrecisionConfig cfg = config(50);
    long terms_ln2 = 0;
    const TermFn f1 = [&terms_ln2](long n, int d) {
      if (n > terms_ln2) terms_ln2 = n;
      return BigFloat(1L, d) / n;
    };
    const ValueWithError v1 = accelerate_alternating(f1, cfg);
    const BigFloat thr = BigFloat::pow10(-50, 75);
    bool ok = (v1.value - BigFloat::native_log2(75)).abs() < thr;
    long terms_eta = 0;
    const TermFn f2 = [&terms_eta](long n, int d) {
      if (n > terms_eta) terms_eta = n;
      return BigFloat(1L, d) / n / n;
    };
    const ValueWithError v2 = accelerate_alternating(f2, cfg);
    ok = ok && (v2.value - BigFloat::native_zeta(2, 75) / 2L).abs() < thr;
    const double rate1 = 50.0 / static_cast<double>(terms_ln2);
    const double rate2 = 50.0 / static_cast<double>(terms_eta);
    ok = ok && rate1 >= 0.5 && rate2 >= 0.5;
    report(11, ok,
           "ln2 and eta(2) to 50 digits; accelerated rates " + fmt(rate1) +
               " and " + fmt(rate2) +
               " digits per term (documented floor 0.5)");
  });

  guarded(12, [] {
    const auto t0 = std::chrono::steady_clock::now();
    const int hw = static_cast<int>(
        std::max(1u, std::thread::hardware_concurrency()));
    const std::vector<VerificationResult> rs =
        verify_all("", config(30), 25, hw);
    const double dt = seconds_since(t0);
    bool ok = !rs.empty() && dt <= 300.0;
    std::size_t passed = 0;
    for (const VerificationResult& r : rs)
      if (r.pass) ++passed;
    ok = ok && passed == rs.size();
    report(12, ok,
           "full catalog sweep at default settings: " +
               std::to_string(passed) + "/" + std::to_string(rs.size()) +
               " instances passed in " + fmt(dt) + "s (budget 300s)");
  });

  if (failures == 0) {
    std::printf("all acceptance criteria satisfied\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
