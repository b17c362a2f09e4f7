#include "eulersum/reductions.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace eulersum {

const char* series_kind_name(SeriesKind k) {
  switch (k) {
    case SeriesKind::kAltShifted:
      return "AltShifted";
    case SeriesKind::kAltOverN:
      return "AltOverN";
    case SeriesKind::kWbarAlt:
      return "WbarAlt";
    case SeriesKind::kPowerSeriesAt:
      return "PowerSeriesAt";
    case SeriesKind::kLemma21LHS:
      return "Lemma21LHS";
    case SeriesKind::kLemma22LHS:
      return "Lemma22LHS";
    case SeriesKind::kLemma24LHS:
      return "Lemma24LHS";
    case SeriesKind::kThm25LHS:
      return "Thm25LHS";
    case SeriesKind::kReflection:
      return "Reflection";
    case SeriesKind::kIntLn1px:
      return "IntLn1px";
    case SeriesKind::kIntBeta:
      return "IntBeta";
    case SeriesKind::kIntLn1mxOver1px:
      return "IntLn1mxOver1px";
    case SeriesKind::kNestedEta:
      return "NestedEta";
  }
  return "?";
}

namespace {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

[[noreturn]] void jfail(const std::string& msg) { throw ParseError(msg, 0); }

OJson term_to_json(const TermKind& t) {
  OJson arr = OJson::array();
  for (const auto& fe : t.factors)
    arr.push_back(OJson::array({fe.first, fe.second}));
  if (t.bell_k > 0) {
    OJson o;
    o["factors"] = arr;
    o["bell_k"] = t.bell_k;
    return o;
  }
  return arr;
}

TermKind term_from_json(const Json& v) {
  TermKind t;
  const Json* factors = &v;
  static const Json kEmpty = Json::array();
  if (v.is_object()) {
    if (v.contains("bell_k")) {
      if (!v.at("bell_k").is_number_integer()) jfail("bell_k must be an integer");
      t.bell_k = v.at("bell_k").get<int>();
    }
    factors = v.contains("factors") ? &v.at("factors") : &kEmpty;
  }
  if (!factors->is_array()) jfail("term must be an array of [order, exponent] pairs");
  for (const auto& el : *factors) {
    if (!el.is_array() || el.size() != 2 || !el[0].is_number_integer() ||
        !el[1].is_number_integer())
      jfail("term factor must be [order, exponent]");
    t.factors.emplace_back(el[0].get<int>(), el[1].get<int>());
  }
  return t;
}

Rational rat_from_json(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      return Rational(s);
    } catch (const std::exception&) {
      jfail("malformed rational '" + s + "'");
    }
  }
  jfail("expected a rational as integer or string");
}

// Complete Bell value Y_k from H^(1)..H^(k) at the same index, via the
// recurrence Y_{j+1} = sum_i C(j,i) Y_{j-i} x_{i+1} with x_{i+1} = i! H^(i+1).
BigFloat bell_from_h(const std::vector<BigFloat>& h, int k, int digits) {
  std::vector<BigFloat> y;
  y.reserve(k + 1);
  y.push_back(BigFloat(1L, digits));
  for (int j = 0; j < k; ++j) {
    BigFloat s(0L, digits);
    for (int i = 0; i <= j; ++i) {
      const BigFloat xi = BigFloat(Rational(factorial(i)), digits) * h[i];
      s += BigFloat(Rational(binomial(j, i)), digits) * y[j - i] * xi;
    }
    y.push_back(s);
  }
  return y[k];
}

struct TermState {
  long done = 0;  // accumulators currently hold H_done
  int digits = -1;
  std::vector<BigFloat> acc;
  std::vector<BigFloat> bell_h;
};

// Generic evaluator for sum_{n>=1} f(n) x^(n+shift) / (n^p g(n)) with
// g(n) = n+shift for shift > 0 and 1 otherwise. Interior |x| < 1 sums
// directly with a geometric tail bound; x = -1 routes through alternating
// acceleration; x = 1 needs a tail-fit parameter set from the caller.
ValueWithError power_series_core(const TermFn& f, const Rational& xq, int p,
                                 long shift, const PrecisionConfig& cfg,
                                 const TailFitParams* fit,
                                 std::string* method) {
  if (p < 0 || shift < 0) throw DomainError("power series needs p, shift >= 0");
  const Rational axq = xq < 0 ? Rational(-xq) : xq;
  if (axq > 1) throw DomainError("power series needs |x| <= 1");

  auto plain_term = [f, p, shift](long n, int digits) {
    BigFloat v = f(n, digits);
    if (p != 0) v *= BigFloat::pow_int(BigFloat(n, digits), -p);
    if (shift > 0) v /= BigFloat(n + shift, digits);
    return v;
  };

  if (axq == 1) {
    if (xq < 0) {
      // x^(n+shift) = (-1)^(shift+1) (-1)^(n+1), so the accelerated
      // (-1)^(n+1) sum picks up a sign flip for even shift.
      ValueWithError r = accelerate_alternating(plain_term, cfg);
      if (shift % 2 == 0) r.value = -r.value;
      if (method) *method = "crvz";
      return r;
    }
    if (!fit)
      throw DomainError("series at x = 1 needs an algebraic tail model");
    if (method) *method = "tail_fit";
    return sum_with_tail(plain_term, *fit, cfg);
  }

  const int wd = cfg.working_digits() + 5;
  const BigFloat x(xq, wd);
  if (xq == 0) {
    ValueWithError r;
    r.value = BigFloat(0L, wd);
    r.error_bound = BigFloat(0L, wd);
    if (method) *method = "direct_series";
    return r;
  }
  const BigFloat ax = x.abs();
  const BigFloat gap = 1L - ax;
  const BigFloat thr = BigFloat::pow10(-(cfg.target_digits + 8), wd);
  const long cap = std::max<long>(cfg.max_terms, 200000);
  BigFloat pw = BigFloat::pow_int(x, shift);
  BigFloat s(0L, wd);
  BigFloat bound(0L, wd);
  bool done = false;
  for (long n = 1; n <= cap; ++n) {
    pw *= x;
    BigFloat t = f(n, wd) * pw;
    if (p != 0) t *= BigFloat::pow_int(BigFloat(n, wd), -p);
    if (shift > 0) t /= BigFloat(n + shift, wd);
    s += t;
    if (n >= 16) {
      // f varies slowly, so the remaining tail is close to geometric; the
      // factor 2 absorbs the residual growth of the harmonic factors.
      bound = 2L * t.abs() * ax / gap;
      if (bound < thr) {
        done = true;
        break;
      }
    }
  }
  if (!done)
    throw ConvergenceFailure("power series did not reach tolerance");
  if (method) *method = "direct_series";
  ValueWithError r;
  r.value = s;
  r.error_bound = bound + (s.abs() + 1L) * BigFloat::pow10(3 - wd, wd);
  return r;
}

}  // namespace

TermFn make_term_fn(const TermKind& t) {
  for (const auto& fe : t.factors)
    if (fe.first < 1 || fe.second < 1)
      throw DomainError("term factors need order >= 1 and exponent >= 1");
  if (t.bell_k < 0) throw DomainError("bell_k must be nonnegative");
  auto st = std::make_shared<TermState>();
  TermKind tk = t;
  return [st, tk](long n, int digits) -> BigFloat {
    if (n < 1) throw DomainError("term index must be positive");
    if (st->digits != digits || n < st->done) {
      st->digits = digits;
      st->done = 0;
      st->acc.assign(tk.factors.size(), BigFloat(0L, digits));
      st->bell_h.assign(static_cast<std::size_t>(tk.bell_k),
                        BigFloat(0L, digits));
    }
    while (st->done < n) {
      const BigFloat jf(st->done + 1, digits);
      for (std::size_t i = 0; i < tk.factors.size(); ++i)
        st->acc[i] += BigFloat::pow_int(jf, -tk.factors[i].first);
      for (int b = 0; b < tk.bell_k; ++b)
        st->bell_h[b] += BigFloat::pow_int(jf, -(b + 1));
      ++st->done;
    }
    BigFloat v(1L, digits);
    for (std::size_t i = 0; i < tk.factors.size(); ++i)
      v *= BigFloat::pow_int(st->acc[i], tk.factors[i].second);
    if (tk.bell_k > 0) v *= bell_from_h(st->bell_h, tk.bell_k, digits);
    return v;
  };
}

BigFloat nested_log_sum(int m, const Rational& x, int digits) {
  if (m < 2) throw DomainError("nested_log_sum needs m >= 2");
  if (x < -1 || x >= 1) throw DomainError("nested_log_sum needs -1 <= x < 1");
  const int wd = digits + 5;
  BigFloat total = ln_one_minus(x, wd) * zeta_int(m, wd);
  total = -total;
  if (x == 0) return total;
  if (x == -1) {
    // Alternating remainder sum_k (-1)^(k+1) H_{k-1}^(m) / k.
    auto st = std::make_shared<std::pair<long, BigFloat>>(0, BigFloat());
    auto shared_digits = std::make_shared<int>(-1);
    const int mm = m;
    auto mag = [st, shared_digits, mm](long n, int d) {
      if (*shared_digits != d || n - 1 < st->first) {
        *shared_digits = d;
        st->first = 0;
        st->second = BigFloat(0L, d);
      }
      while (st->first < n - 1) {
        st->second += BigFloat::pow_int(BigFloat(st->first + 1, d), -mm);
        ++st->first;
      }
      return st->second / BigFloat(n, d);
    };
    PrecisionConfig cfg;
    cfg.target_digits = digits;
    const ValueWithError r = accelerate_alternating(mag, cfg);
    return total + r.value;
  }
  const BigFloat xb(x, wd);
  const BigFloat gap = 1L - xb.abs();
  const BigFloat thr = BigFloat::pow10(-(digits + 8), wd);
  BigFloat h(0L, wd);  // H_{k-1}^(m)
  BigFloat pw(1L, wd);
  BigFloat s(0L, wd);
  for (long k = 1; k <= 400000; ++k) {
    pw *= xb;
    s += h * pw / BigFloat(k, wd);
    h += BigFloat::pow_int(BigFloat(k, wd), -m);
    if (k >= 16 && 2L * pw.abs() * h.abs() / gap < thr) return total - s;
  }
  throw ConvergenceFailure("nested_log_sum did not reach tolerance");
}

ValueWithError eval_series(const SeriesSpec& spec, const PrecisionConfig& cfg) {
  return eval_series(spec, cfg, nullptr);
}

ValueWithError eval_series(const SeriesSpec& spec, const PrecisionConfig& cfg,
                           std::string* method_out) {
  cfg.validate();
  switch (spec.kind) {
    case SeriesKind::kAltShifted: {
      if (spec.k < 1) throw DomainError("AltShifted needs k >= 1");
      auto f = make_term_fn(spec.term);
      const int k = spec.k;
      auto mag = [f, k](long n, int digits) {
        return f(n, digits) / BigFloat(n + k, digits);
      };
      // sum (-1)^(n+k) a_n = (-1)^(k+1) sum (-1)^(n+1) a_n.
      ValueWithError r = accelerate_alternating(mag, cfg);
      if (spec.k % 2 == 0) r.value = -r.value;
      if (method_out) *method_out = "crvz";
      return r;
    }
    case SeriesKind::kAltOverN: {
      if (spec.p < 1) throw DomainError("AltOverN needs p >= 1");
      auto f = make_term_fn(spec.term);
      const int p = spec.p;
      auto mag = [f, p](long n, int digits) {
        return f(n, digits) * BigFloat::pow_int(BigFloat(n, digits), -p);
      };
      ValueWithError r = accelerate_alternating(mag, cfg);
      if (method_out) *method_out = "crvz";
      return r;
    }
    case SeriesKind::kWbarAlt: {
      if (method_out) *method_out = "crvz";
      return wbar_direct(spec.orders, spec.p, spec.k, cfg);
    }
    case SeriesKind::kPowerSeriesAt: {
      auto f = make_term_fn(spec.term);
      if (spec.x == 1) {
        const int decay = spec.p + (spec.shift > 0 ? 1 : 0);
        if (decay < 2)
          throw DomainError("series at x = 1 needs decay >= 2");
        int logp = spec.term.bell_k;
        for (const auto& fe : spec.term.factors)
          if (fe.first == 1) logp += fe.second;
        TailFitParams fit;
        fit.decay = decay;
        fit.log_powers = logp;
        if (logp >= 3) {
          fit.basis_depth = 3;
          fit.cutoff = 30000;
        } else if (decay == 2) {
          fit.basis_depth = 5;
          fit.cutoff = 100000;
        } else {
          fit.basis_depth = 4;
          fit.cutoff = 100000;
        }
        return power_series_core(f, spec.x, spec.p, spec.shift, cfg, &fit,
                                 method_out);
      }
      return power_series_core(f, spec.x, spec.p, spec.shift, cfg, nullptr,
                               method_out);
    }
    case SeriesKind::kLemma21LHS: {
      if (spec.m < 1 || spec.m > 5)
        throw DomainError("Lemma21LHS needs m in 1..5");
      if (spec.k < 1) throw DomainError("Lemma21LHS needs k >= 1");
      if (spec.x < -1 || spec.x >= 1)
        throw DomainError("Lemma21LHS needs -1 <= x < 1");
      const int m = spec.m;
      auto f = [m](long n, int digits) {
        return BigFloat(stirling_ratio(n, m), digits);
      };
      const ValueWithError series =
          power_series_core(f, spec.x, 0, spec.k, cfg, nullptr, method_out);
      const int wd = cfg.working_digits();
      Rational cf(factorial(m));
      if (m % 2 == 1) cf = -cf;
      const BigFloat coeff(cf, wd);
      const BigFloat logpart =
          BigFloat::pow_int(ln_one_minus(spec.x, wd), m + 1) /
          BigFloat(m + 1, wd);
      ValueWithError out;
      out.value = coeff * series.value + logpart;
      out.error_bound = coeff.abs() * series.error_bound +
                        (out.value.abs() + 1L) * BigFloat::pow10(3 - wd, wd);
      return out;
    }
    case SeriesKind::kLemma22LHS: {
      if (spec.m < 1) throw DomainError("Lemma22LHS needs m >= 1");
      if (spec.k < 1) throw DomainError("Lemma22LHS needs k >= 1");
      if (spec.x < -1 || spec.x >= 1)
        throw DomainError("Lemma22LHS needs -1 <= x < 1");
      TermKind t;
      t.factors = {{spec.m, 1}};
      return power_series_core(make_term_fn(t), spec.x, 0, spec.k, cfg,
                               nullptr, method_out);
    }
    case SeriesKind::kLemma24LHS:
    case SeriesKind::kThm25LHS: {
      const int m = spec.kind == SeriesKind::kThm25LHS ? 2 : spec.m;
      if (m < 1) throw DomainError("Lemma24LHS needs m >= 1");
      if (spec.x <= -1 || spec.x >= 1)
        throw DomainError("this power series needs |x| < 1");
      TermKind t;
      t.factors = {{1, 1}, {m, 1}};
      return power_series_core(make_term_fn(t), spec.x, 0, 0, cfg, nullptr,
                               method_out);
    }
    case SeriesKind::kReflection: {
      if (spec.p < 1 || spec.m < 1)
        throw DomainError("Reflection needs p, m >= 1");
      if (spec.x <= -1 || spec.x >= 1 || spec.y <= -1 || spec.y >= 1)
        throw DomainError("Reflection needs |x| < 1 and |y| < 1");
      const int wd = cfg.working_digits() + 5;
      const BigFloat xb(spec.x, wd);
      const BigFloat yb(spec.y, wd);
      const BigFloat axb = xb.abs();
      const BigFloat ayb = yb.abs();
      const BigFloat mx = axb > ayb ? axb : ayb;
      const BigFloat gap = 1L - mx;
      const BigFloat thr = BigFloat::pow10(-(cfg.target_digits + 8), wd);
      BigFloat pwx(1L, wd), pwy(1L, wd);
      BigFloat ix(0L, wd), iy(0L, wd);
      BigFloat s(0L, wd);
      BigFloat bound(0L, wd);
      bool finished = false;
      for (long n = 1; n <= 200000; ++n) {
        pwx *= xb;
        pwy *= yb;
        const BigFloat nb(n, wd);
        const BigFloat tx = pwx * BigFloat::pow_int(nb, -spec.p);
        const BigFloat ty = pwy * BigFloat::pow_int(nb, -spec.m);
        ix += tx;
        iy += ty;
        s += ty * ix + tx * iy;
        if (n >= 16) {
          bound = (pwx.abs() + pwy.abs()) * (ix.abs() + iy.abs() + 1L) / gap;
          if (bound < thr) {
            finished = true;
            break;
          }
        }
      }
      if (!finished)
        throw ConvergenceFailure("reflection series did not reach tolerance");
      if (method_out) *method_out = "direct_series";
      ValueWithError r;
      r.value = s;
      r.error_bound = bound + (s.abs() + 1L) * BigFloat::pow10(3 - wd, wd);
      return r;
    }
    case SeriesKind::kIntLn1px: {
      if (spec.m < 1) throw DomainError("IntLn1px needs m >= 1");
      if (spec.z <= 0 || spec.z > 1)
        throw DomainError("IntLn1px needs 0 < z <= 1");
      const int m = spec.m;
      IntegrandFn f = [m](const BigFloat&, const BigFloat& xma,
                          const BigFloat&) {
        return BigFloat::pow_int(BigFloat::log1p(xma), m) / xma;
      };
      if (method_out) *method_out = "quadrature";
      return quad_de(f, Rational(0), spec.z, cfg);
    }
    case SeriesKind::kIntBeta: {
      if (spec.n < 1) throw DomainError("IntBeta needs n >= 1");
      if (spec.kpow < 0) throw DomainError("IntBeta needs kpow >= 0");
      const long n = spec.n;
      const int kp = spec.kpow;
      IntegrandFn f = [n, kp](const BigFloat& x, const BigFloat&,
                              const BigFloat& bmx) {
        BigFloat v = BigFloat::pow_int(x, n - 1);
        if (kp > 0) v *= BigFloat::pow_int(BigFloat::log(bmx), kp);
        return v;
      };
      if (method_out) *method_out = "quadrature";
      return quad_de(f, Rational(0), Rational(1), cfg);
    }
    case SeriesKind::kIntLn1mxOver1px: {
      if (spec.m < 1) throw DomainError("IntLn1mxOver1px needs m >= 1");
      const int m = spec.m;
      IntegrandFn f = [m](const BigFloat& x, const BigFloat&,
                          const BigFloat& bmx) {
        return BigFloat::pow_int(BigFloat::log(bmx), m) / (x + 1L);
      };
      if (method_out) *method_out = "quadrature";
      return quad_de(f, Rational(0), Rational(1), cfg);
    }
    case SeriesKind::kNestedEta: {
      if (spec.p < 2) throw DomainError("NestedEta needs p >= 2");
      const int p = spec.p;
      // After swapping the order of summation the inner partial sums become
      // zeta(p) - H_{n-1}^(p), alternating in n.
      auto st = std::make_shared<TermState>();
      auto mag = [st, p](long n, int digits) {
        if (st->digits != digits || n - 1 < st->done) {
          st->digits = digits;
          st->done = 0;
          st->acc.assign(1, BigFloat(0L, digits));
        }
        while (st->done < n - 1) {
          st->acc[0] += BigFloat::pow_int(BigFloat(st->done + 1, digits), -p);
          ++st->done;
        }
        return (zeta_int(p, digits) - st->acc[0]) / BigFloat(n, digits);
      };
      ValueWithError r = accelerate_alternating(mag, cfg);
      if (method_out) *method_out = "crvz";
      return r;
    }
  }
  throw DomainError("unknown series kind");
}

ValueWithError wbar_direct(const std::vector<int>& orders, int p, int k,
                           const PrecisionConfig& cfg) {
  cfg.validate();
  if (orders.empty()) throw DomainError("wbar_direct needs nonempty orders");
  if (p != 0 && p != 1) throw DomainError("wbar_direct needs p in {0,1}");
  if (k < 1) throw DomainError("wbar_direct needs k >= 1");
  std::map<int, int> merged;
  for (int m : orders) {
    if (m < 1) throw DomainError("orders must be positive");
    ++merged[m];
  }
  TermKind t;
  for (const auto& me : merged) t.factors.emplace_back(me.first, me.second);
  auto f = make_term_fn(t);
  const int kk = k;
  const int pp = p;
  auto mag = [f, kk, pp](long n, int digits) {
    BigFloat v = f(n, digits);
    if (pp != 0) v /= BigFloat(n, digits);
    return v / BigFloat(Rational(binomial(n + kk, kk)), digits);
  };
  return accelerate_alternating(mag, cfg);
}

BigFloat wbar_reduced(Family family, int p, int k, const PrecisionConfig& cfg) {
  cfg.validate();
  if (p != 0 && p != 1) throw DomainError("wbar_reduced needs p in {0,1}");
  if (k < 1) throw DomainError("wbar_reduced needs k >= 1");
  const int wd = cfg.working_digits();
  BigFloat total(0L, wd);
  // Each shifted piece enters as sum_n (-1)^(n+1) f(n)/(n+r), which equals
  // (-1)^(r+1) V_r for the closed-form value V_r of sum_n (-1)^(n+r) f(n)/(n+r).
  if (p == 0) {
    // 1/C(n+k,k) = sum_r (-1)^(r+1) r C(k,r)/(n+r); the partial-fraction sign
    // and the reindexing sign cancel, leaving r C(k,r) V_r.
    for (int r = 1; r <= k; ++r) {
      const BigFloat vr = eval_expr(rhs_thm11(family, r), cfg);
      total += BigFloat(Rational(r) * Rational(binomial(k, r)), wd) * vr;
    }
    return total;
  }
  // For p = 1, 1/(n C(n+k,k)) = sum_r (-1)^(r+1) C(k,r) (1/n - 1/(n+r)); the
  // 1/n piece contributes the fixed n^-1-weighted constant.
  const ConstExpr top =
      rhs_known(family == Family::kQuadratic ? "cor28_hh2" : "cor28_h3");
  const BigFloat topv = eval_expr(top, cfg);
  for (int r = 1; r <= k; ++r) {
    const BigFloat vr = eval_expr(rhs_thm11(family, r), cfg);
    const long sgn = (r % 2 == 1) ? 1 : -1;
    const BigFloat inner = topv - sgn * vr;
    total += sgn * BigFloat(Rational(binomial(k, r)), wd) * inner;
  }
  return total;
}

std::pair<BigFloat, BigFloat> nonalt_binomial_check(int k,
                                                    const PrecisionConfig& cfg,
                                                    BigFloat* lhs_error) {
  cfg.validate();
  if (k < 1) throw DomainError("nonalt_binomial_check needs k >= 1");
  TermKind t;
  t.factors = {{1, 1}, {2, 1}};
  auto f = make_term_fn(t);
  struct BinState {
    long done = 0;
    int digits = -1;
    BigFloat c;
  };
  auto st = std::make_shared<BinState>();
  const int kk = k;
  auto term = [f, st, kk](long n, int digits) {
    if (st->digits != digits || n < st->done) {
      st->digits = digits;
      st->done = 0;
    }
    while (st->done < n) {
      const long j = st->done + 1;
      if (j == 1)
        st->c = BigFloat(kk + 1L, digits);
      else
        st->c = st->c * BigFloat(j + kk, digits) / BigFloat(j, digits);
      ++st->done;
    }
    return f(n, digits) / (BigFloat(n, digits) * st->c);
  };
  TailFitParams fit;
  fit.decay = k + 1;
  fit.log_powers = 1;
  fit.basis_depth = 4;
  fit.cutoff = 30000;
  const ValueWithError lhs = sum_with_tail(term, fit, cfg);
  if (lhs_error) *lhs_error = lhs.error_bound;

  ConstExpr rhs;
  for (int r = 1; r <= k; ++r) {
    const Rational h1 = harmonic(r - 1, 1);
    const Rational h2 = harmonic(r - 1, 2);
    Rational sb(binomial(k, r));
    if (r % 2 == 0) sb = -sb;
    Rational c0(0);
    for (long i = 1; i < r; ++i) {
      const Rational hi = harmonic(i, 1);
      const Rational hi2 = harmonic(i, 2);
      Rational js(0);
      for (long j = 1; j <= i; ++j) js += harmonic(j, 1) / Rational(j * j);
      c0 += hi / Rational(i * i * i) - (hi * hi + hi2) / Rational(2 * i * i) -
            js / Rational(i);
    }
    rhs.add_term(sb * 2, {ConstAtom::zeta(4)});
    rhs.add_term(sb * 2 * h1, {ConstAtom::zeta(3)});
    rhs.add_term(sb * (h1 * h1 - h2) / 2, {ConstAtom::zeta(2)});
    rhs.add_constant(sb * c0);
  }
  return {lhs.value, eval_expr(rhs, cfg)};
}

std::string SeriesSpec::to_json() const {
  OJson j;
  j["kind"] = series_kind_name(kind);
  switch (kind) {
    case SeriesKind::kAltShifted:
      j["term"] = term_to_json(term);
      j["k"] = k;
      break;
    case SeriesKind::kAltOverN:
      j["term"] = term_to_json(term);
      j["p"] = p;
      break;
    case SeriesKind::kWbarAlt:
      j["orders"] = orders;
      j["p"] = p;
      j["k"] = k;
      break;
    case SeriesKind::kPowerSeriesAt:
      j["term"] = term_to_json(term);
      j["x"] = x.str();
      j["p"] = p;
      j["shift"] = shift;
      break;
    case SeriesKind::kLemma21LHS:
    case SeriesKind::kLemma22LHS:
      j["m"] = m;
      j["k"] = k;
      j["x"] = x.str();
      break;
    case SeriesKind::kLemma24LHS:
      j["m"] = m;
      j["x"] = x.str();
      break;
    case SeriesKind::kThm25LHS:
      j["x"] = x.str();
      break;
    case SeriesKind::kReflection:
      j["p"] = p;
      j["m"] = m;
      j["x"] = x.str();
      j["y"] = y.str();
      break;
    case SeriesKind::kIntLn1px:
      j["m"] = m;
      j["z"] = z.str();
      break;
    case SeriesKind::kIntBeta:
      j["n"] = n;
      j["kpow"] = kpow;
      break;
    case SeriesKind::kIntLn1mxOver1px:
      j["m"] = m;
      break;
    case SeriesKind::kNestedEta:
      j["p"] = p;
      break;
  }
  return j.dump();
}

SeriesSpec SeriesSpec::from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    jfail("spec needs a \"kind\" string");
  const std::string kn = j.at("kind").get<std::string>();
  SeriesSpec s;
  bool found = false;
  for (int i = 0; i <= static_cast<int>(SeriesKind::kNestedEta); ++i) {
    if (kn == series_kind_name(static_cast<SeriesKind>(i))) {
      s.kind = static_cast<SeriesKind>(i);
      found = true;
      break;
    }
  }
  if (!found) jfail("unknown series kind '" + kn + "'");
  auto need = [&j](const char* key) -> const Json& {
    if (!j.contains(key))
      jfail(std::string("missing field \"") + key + "\"");
    return j.at(key);
  };
  auto geti = [&need](const char* key) {
    const Json& v = need(key);
    if (!v.is_number_integer())
      jfail(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
  };
  switch (s.kind) {
    case SeriesKind::kAltShifted:
      s.term = term_from_json(need("term"));
      s.k = geti("k");
      break;
    case SeriesKind::kAltOverN:
      s.term = term_from_json(need("term"));
      s.p = geti("p");
      break;
    case SeriesKind::kWbarAlt: {
      const Json& o = need("orders");
      if (!o.is_array()) jfail("orders must be an array");
      for (const auto& el : o) {
        if (!el.is_number_integer()) jfail("orders must be integers");
        s.orders.push_back(el.get<int>());
      }
      s.p = geti("p");
      s.k = geti("k");
      break;
    }
    case SeriesKind::kPowerSeriesAt:
      s.term = term_from_json(need("term"));
      s.x = rat_from_json(need("x"));
      s.p = geti("p");
      s.shift = geti("shift");
      break;
    case SeriesKind::kLemma21LHS:
    case SeriesKind::kLemma22LHS:
      s.m = geti("m");
      s.k = geti("k");
      s.x = rat_from_json(need("x"));
      break;
    case SeriesKind::kLemma24LHS:
      s.m = geti("m");
      s.x = rat_from_json(need("x"));
      break;
    case SeriesKind::kThm25LHS:
      s.x = rat_from_json(need("x"));
      break;
    case SeriesKind::kReflection:
      s.p = geti("p");
      s.m = geti("m");
      s.x = rat_from_json(need("x"));
      s.y = rat_from_json(need("y"));
      break;
    case SeriesKind::kIntLn1px:
      s.m = geti("m");
      s.z = rat_from_json(need("z"));
      break;
    case SeriesKind::kIntBeta:
      s.n = geti("n");
      s.kpow = geti("kpow");
      break;
    case SeriesKind::kIntLn1mxOver1px:
      s.m = geti("m");
      break;
    case SeriesKind::kNestedEta:
      s.p = geti("p");
      break;
  }
  return s;
}

}  // namespace eulersum
