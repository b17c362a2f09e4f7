#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eulersum/bigfloat.hpp"
#include "eulersum/closedform.hpp"
#include "eulersum/exactcore.hpp"
#include "eulersum/numerics.hpp"

namespace eulersum {

// Product of harmonic numbers Pi (H_n^(m))^e, optionally times the complete
// Bell value Y_{bell_k}(n). The empty term with bell_k = 0 is the constant 1.
struct TermKind {
  std::vector<std::pair<int, int>> factors;  // (order m >= 1, exponent e >= 1)
  int bell_k = 0;

  bool operator==(const TermKind&) const = default;
};

enum class SeriesKind {
  kAltShifted,       // sum_{n>=1} (-1)^(n+k) f(n)/(n+k)
  kAltOverN,         // sum_{n>=1} (-1)^(n+1) f(n)/n^p
  kWbarAlt,          // sum_{n>=1} (-1)^(n+1) prod H_n^(m_i) / (n^p C(n+k,k))
  kPowerSeriesAt,    // sum_{n>=1} f(n) x^(n+shift) / (n^p (n+shift)); the
                     // trailing factor is 1 when shift = 0
  kLemma21LHS,       // (-1)^m m! sum_n s(n+1,m+1)/((n+k) n!) x^(n+k)
                     //   + ln^(m+1)(1-x)/(m+1)
  kLemma22LHS,       // sum_{n>=1} H_n^(m) x^(n+k)/(n+k)
  kLemma24LHS,       // sum_{n>=1} H_n H_n^(m) x^n, |x| < 1
  kThm25LHS,         // sum_{n>=1} H_n H_n^(2) x^n, |x| < 1
  kReflection,       // sum_n y^n/n^m sum_{k<=n} x^k/k^p + the (x,p)<->(y,m)
                     // mirror image
  kIntLn1px,         // int_0^z ln^m(1+x)/x dx
  kIntBeta,          // int_0^1 t^(n-1) ln^kpow(1-t) dt
  kIntLn1mxOver1px,  // int_0^1 ln^m(1-x)/(1+x) dx
  kNestedEta,        // sum_{n>=1} n^-p sum_{k<=n} (-1)^(k-1)/k
};

// One left-hand side to evaluate. Only the fields a kind lists above are
// meaningful; the rest stay at their defaults and are ignored.
struct SeriesSpec {
  SeriesKind kind = SeriesKind::kAltOverN;
  TermKind term;
  std::vector<int> orders;
  int p = 0;
  int k = 0;
  int m = 0;
  int shift = 0;
  int kpow = 0;
  long n = 0;
  Rational x;
  Rational y;
  Rational z;

  bool operator==(const SeriesSpec&) const = default;

  // Canonical JSON: {"kind":"AltOverN","term":[[1,3]],"p":1}. Rationals are
  // encoded as strings ("-1/2"); a term with bell_k > 0 becomes
  // {"factors":[...],"bell_k":j}. from_json accepts integers for rationals.
  std::string to_json() const;
  static SeriesSpec from_json(const std::string& text);
};

const char* series_kind_name(SeriesKind k);

// Evaluator for the term products; calls must proceed with nondecreasing n
// and restart at n = 1 (or a changed digits) to reset the internal
// incremental harmonic state.
TermFn make_term_fn(const TermKind& t);

// sum_n n^-m sum_{k<=n} x^k/k for -1 <= x < 1, via the rearranged absolutely
// convergent form -ln(1-x) zeta(m) - sum_k H_{k-1}^(m) x^k / k. Requires
// m >= 2.
BigFloat nested_log_sum(int m, const Rational& x, int digits);

ValueWithError eval_series(const SeriesSpec& spec, const PrecisionConfig& cfg);

// As above; additionally reports which evaluation route ran ("crvz",
// "euler_average", "direct_series", "tail_fit", "quadrature").
ValueWithError eval_series(const SeriesSpec& spec, const PrecisionConfig& cfg,
                           std::string* method_out);

// sum_{n>=1} (-1)^(n+1) prod_i H_n^(m_i) / (n^p C(n+k,k)) by alternating
// acceleration.
ValueWithError wbar_direct(const std::vector<int>& orders, int p, int k,
                           const PrecisionConfig& cfg);

// The same quantity assembled from shifted-sum closed forms through the
// partial-fraction expansion of 1/C(n+k,k). Must agree with wbar_direct to
// target digits.
BigFloat wbar_reduced(Family family, int p, int k, const PrecisionConfig& cfg);

// Non-alternating sum_{n>=1} H_n H_n^(2)/(n C(n+k,k)): first the numeric
// value via tail-corrected summation, second the exact finite double-sum
// closed form evaluated from zeta values. When lhs_error is non-null it
// receives the tail-fit error estimate of the first value.
std::pair<BigFloat, BigFloat> nonalt_binomial_check(int k,
                                                    const PrecisionConfig& cfg,
                                                    BigFloat* lhs_error = nullptr);

}  // namespace eulersum
