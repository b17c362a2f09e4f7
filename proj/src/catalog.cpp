#include "eulersum/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace eulersum {

const char* convergence_class_name(ConvergenceClass c) {
  switch (c) {
    case ConvergenceClass::kFast:
      return "fast";
    case ConvergenceClass::kAlternatingSlow:
      return "alternating_slow";
    case ConvergenceClass::kAlgebraicSlow:
      return "algebraic_slow";
  }
  return "?";
}

namespace {

using Parts = std::vector<std::pair<Rational, SeriesSpec>>;
using RhsFn = std::function<BigFloat(const PrecisionConfig&)>;
using RunFn = std::function<InstanceEval(const PrecisionConfig&)>;

const std::vector<Rational>& x_samples() {
  static const std::vector<Rational> s = {
      Rational(-9, 10), Rational(-1, 2), Rational(-1, 3),
      Rational(1, 3),   Rational(1, 2),  Rational(9, 10)};
  return s;
}

RunFn make_run(Parts parts, RhsFn rhs) {
  return [parts = std::move(parts),
          rhs = std::move(rhs)](const PrecisionConfig& cfg) {
    InstanceEval out;
    const int wd = cfg.working_digits();
    BigFloat lhs(0L, wd);
    BigFloat err(0L, wd);
    std::string method;
    for (const auto& part : parts) {
      std::string m;
      const ValueWithError v = eval_series(part.second, cfg, &m);
      const BigFloat c(part.first, wd);
      lhs += c * v.value;
      err += c.abs() * v.error_bound;
      if (method.empty())
        method = m;
      else if (method.find(m) == std::string::npos)
        method += "+" + m;
    }
    if (parts.empty()) method = "direct_series";
    out.lhs = lhs;
    out.lhs_error = err;
    out.method = method;
    out.rhs = rhs(cfg);
    return out;
  };
}

RhsFn expr_rhs(ConstExpr e) {
  return [e = std::move(e)](const PrecisionConfig& cfg) {
    return eval_expr(e, cfg);
  };
}

SeriesSpec alt_shifted(std::vector<std::pair<int, int>> factors, int k) {
  SeriesSpec s;
  s.kind = SeriesKind::kAltShifted;
  s.term.factors = std::move(factors);
  s.k = k;
  return s;
}

SeriesSpec alt_over_n(std::vector<std::pair<int, int>> factors, int p) {
  SeriesSpec s;
  s.kind = SeriesKind::kAltOverN;
  s.term.factors = std::move(factors);
  s.p = p;
  return s;
}

SeriesSpec power_at(std::vector<std::pair<int, int>> factors, const Rational& x,
                    int p, int shift) {
  SeriesSpec s;
  s.kind = SeriesKind::kPowerSeriesAt;
  s.term.factors = std::move(factors);
  s.x = x;
  s.p = p;
  s.shift = shift;
  return s;
}

// ---- numeric RHS callbacks ----

// Weighted-star right side of the Stirling-ratio shift identity: all star
// sums are taken at n = k-1, with the series argument in the innermost slot.
BigFloat lemma21_rhs_value(int m, int k, const Rational& x,
                           const PrecisionConfig& cfg) {
  const int wd = cfg.working_digits();
  const long K = k - 1;
  const BigFloat L = ln_one_minus(x, wd);
  BigFloat t(0L, wd);
  for (int j = 1; j < m; ++j) {
    const Composition comp(std::vector<int>(j + 1, 1));
    std::vector<Rational> w(j, Rational(1));
    w.push_back(x);
    const BigFloat diff = mhs_star_weighted(K, comp, w, wd) -
                          BigFloat(mhs_star(K, comp), wd);
    Rational c(factorial(j) * binomial(m, j));
    if (j % 2 == 0) c = -c;
    t += BigFloat(c, wd) * BigFloat::pow_int(L, m - j) * diff;
  }
  {
    const Composition one({1});
    const BigFloat diff = mhs_star_weighted(K, one, {x}, wd) -
                          BigFloat(mhs_star(K, one), wd);
    t -= BigFloat::pow_int(L, m) * diff;
  }
  {
    const Composition comp(std::vector<int>(m + 1, 1));
    std::vector<Rational> w(m, Rational(1));
    w.push_back(x);
    Rational c(factorial(m));
    if (m % 2 == 0) c = -c;
    t += BigFloat(c, wd) * mhs_star_weighted(K, comp, w, wd);
  }
  return t;
}

BigFloat lemma22_rhs_value(int m, int k, const Rational& x,
                           const PrecisionConfig& cfg) {
  const int wd = cfg.working_digits();
  const long K = k - 1;
  const BigFloat t = eval_series(power_at({{m, 1}}, x, 1, 0), cfg).value;
  BigFloat r = t - polylog(m + 1, x, wd);
  for (int j = 1; j < m; ++j) {
    const BigFloat w = mhs_star_weighted(K, Composition({j}), {x}, wd);
    Rational c(1);
    if (j % 2 == 0) c = -c;
    r -= BigFloat(c, wd) * polylog(m + 1 - j, x, wd) * w;
  }
  const Composition cm({m});
  const BigFloat diff =
      mhs_star_weighted(K, cm, {x}, wd) - BigFloat(mhs_star(K, cm), wd);
  const BigFloat tail = mhs_star_weighted(K, Composition({m, 1}),
                                          {Rational(1), x}, wd);
  if (m % 2 == 0) {
    r -= ln_one_minus(x, wd) * diff;
    r += tail;
  } else {
    r += ln_one_minus(x, wd) * diff;
    r -= tail;
  }
  return r;
}

BigFloat eq37_rhs_value(int m, const Rational& x, const PrecisionConfig& cfg) {
  const int wd = cfg.working_digits();
  const BigFloat t = eval_series(power_at({{1, 1}}, x, m, 0), cfg).value;
  const BigFloat nls = nested_log_sum(m, x, cfg.target_digits);
  return (t - nls - zeta_int(m, wd) * ln_one_minus(x, wd)) /
         BigFloat(Rational(1) - x, wd);
}

BigFloat eq38_rhs_value(const Rational& x, const PrecisionConfig& cfg) {
  const int wd = cfg.working_digits();
  const BigFloat t = eval_series(power_at({{1, 1}}, x, 2, 0), cfg).value;
  return (2L * polylog(3, x, wd) - ln_one_minus(x, wd) * polylog(2, x, wd) -
          t) /
         BigFloat(Rational(1) - x, wd);
}

BigFloat eq39_rhs_value(int p, int m, const Rational& x, const Rational& y,
                        const PrecisionConfig& cfg) {
  const int wd = cfg.working_digits();
  return polylog(p, x, wd) * polylog(m, y, wd) + polylog(p + m, x * y, wd);
}

BigFloat eq313_rhs_value(int m, const Rational& z, const PrecisionConfig& cfg) {
  const int wd = cfg.working_digits();
  const Rational w = Rational(1) / (Rational(1) + z);
  const BigFloat lz = ln_one_minus(-z, wd);
  BigFloat t = BigFloat::pow_int(lz, m + 1) / BigFloat(m + 1, wd);
  t += BigFloat(Rational(factorial(m)), wd) *
       (zeta_int(m + 1, wd) - polylog(m + 1, w, wd));
  for (int j = 1; j <= m; ++j) {
    const Rational c =
        Rational(factorial(m)) / Rational(factorial(m - j + 1));
    t -= BigFloat(c, wd) * BigFloat::pow_int(lz, m - j + 1) *
         polylog(j, w, wd);
  }
  return t;
}

BigFloat eq42_rhs_value(long n, const Rational& x, const PrecisionConfig& cfg) {
  const int wd = cfg.working_digits();
  const BigFloat lg = ln_one_minus(x, wd);
  Rational pw(1);
  Rational partial(0);
  for (long j = 1; j <= n; ++j) {
    pw *= x;
    partial += pw / Rational(j);
  }
  return (BigFloat::pow_int(BigFloat(x, wd), n) * lg -
          BigFloat(partial, wd) - lg) /
         BigFloat(n, wd);
}

// ---- registry construction ----

std::vector<IdentityRecord> build_registry() {
  std::vector<IdentityRecord> recs;

  const std::vector<std::pair<int, int>> quad_term = {{1, 1}, {2, 1}};
  const std::vector<std::pair<int, int>> cubic_term = {{1, 3}};

  {
    IdentityRecord r;
    r.id = "thm1.1-quadratic";
    r.description =
        "Alternating sum of H_n H_n^(2)/(n+k) in zeta values, powers of ln 2 "
        "and alternating star sums at n = k-1";
    r.paper_ref = "Eq (1.7): \"−5/16 ζ(4) − 1/4 ζ(2) ln²2\"";
    r.lhs_template = "sum_{n>=1} (-1)^(n+k) H_n H_n^(2)/(n+k)";
    r.rhs_template = "rhs_thm11(quadratic, k)";
    r.param_domain = "k=1..6";
    r.default_tolerance_digits = 30;
    r.convergence_class = ConvergenceClass::kAlternatingSlow;
    for (int k = 1; k <= 6; ++k) {
      CatalogInstance inst;
      inst.params = "k=" + std::to_string(k);
      inst.run = make_run({{Rational(1), alt_shifted(quad_term, k)}},
                          expr_rhs(rhs_thm11(Family::kQuadratic, k)));
      r.instances.push_back(std::move(inst));
    }
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "thm1.1-cubic";
    r.description =
        "Alternating sum of H_n^3/(n+k) in zeta values, powers of ln 2 and "
        "alternating star sums at n = k-1";
    r.paper_ref = "Eq (1.8): \"−5/16 ζ(4) + 9/8 ζ(3) ln 2\"";
    r.lhs_template = "sum_{n>=1} (-1)^(n+k) H_n^3/(n+k)";
    r.rhs_template = "rhs_thm11(cubic, k)";
    r.param_domain = "k=1..6";
    r.default_tolerance_digits = 30;
    r.convergence_class = ConvergenceClass::kAlternatingSlow;
    for (int k = 1; k <= 6; ++k) {
      CatalogInstance inst;
      inst.params = "k=" + std::to_string(k);
      inst.run = make_run({{Rational(1), alt_shifted(cubic_term, k)}},
                          expr_rhs(rhs_thm11(Family::kCubic, k)));
      r.instances.push_back(std::move(inst));
    }
    recs.push_back(std::move(r));
  }

  for (const auto& fam :
       {std::make_pair(Family::kQuadratic, std::string("quadratic")),
        std::make_pair(Family::kCubic, std::string("cubic"))}) {
    for (int p = 0; p <= 1; ++p) {
      IdentityRecord r;
      r.id = "thm1.2-" + fam.second + "-p" + std::to_string(p);
      r.description =
          "Binomial-weighted alternating " + fam.second +
          " sum reduced by partial fractions to the shifted-denominator "
          "closed forms";
      r.paper_ref = "Thm 1.2: \"W̄_k(1,2;0) = Σ (−1)^{r+1} r\"";
      r.lhs_template =
          fam.first == Family::kQuadratic
              ? "sum_{n>=1} (-1)^(n+1) H_n H_n^(2)/(n^p C(n+k,k))"
              : "sum_{n>=1} (-1)^(n+1) H_n^3/(n^p C(n+k,k))";
      r.rhs_template = "wbar_reduced(" + fam.second + ", p, k)";
      r.param_domain = "k=1..6";
      r.default_tolerance_digits = 25;
      r.convergence_class = ConvergenceClass::kAlternatingSlow;
      const std::vector<int> orders =
          fam.first == Family::kQuadratic ? std::vector<int>{1, 2}
                                          : std::vector<int>{1, 1, 1};
      for (int k = 1; k <= 6; ++k) {
        CatalogInstance inst;
        inst.params = "k=" + std::to_string(k);
        const Family family = fam.first;
        inst.run = [orders, p, k, family](const PrecisionConfig& cfg) {
          InstanceEval out;
          const ValueWithError d = wbar_direct(orders, p, k, cfg);
          out.lhs = d.value;
          out.lhs_error = d.error_bound;
          out.method = "crvz";
          out.rhs = wbar_reduced(family, p, k, cfg);
          return out;
        };
        r.instances.push_back(std::move(inst));
      }
      recs.push_back(std::move(r));
    }
  }

  {
    IdentityRecord r;
    r.id = "eq3.1";
    r.description =
        "Shifted power series of the Stirling ratio s(n+1,m+1)/n! in powers "
        "of ln(1-x) and weighted star sums at n = k-1";
    r.paper_ref = "Eq (3.1): \"s(n+1,m+1)\"";
    r.lhs_template =
        "(-1)^m m! sum_{n>=m} s(n+1,m+1)/n! x^(n+k)/(n+k) + "
        "ln^(m+1)(1-x)/(m+1)";
    r.rhs_template = "weighted star sums of depth up to m+1 at n = k-1";
    r.param_domain = "m=1..4, k=1..4, x in {-1} + sample set";
    r.default_tolerance_digits = 25;
    r.convergence_class = ConvergenceClass::kAlternatingSlow;
    std::vector<Rational> xs = {Rational(-1)};
    for (const auto& x : x_samples()) xs.push_back(x);
    for (int m = 1; m <= 4; ++m) {
      for (int k = 1; k <= 4; ++k) {
        for (const auto& x : xs) {
          CatalogInstance inst;
          inst.params = "m=" + std::to_string(m) + ",k=" + std::to_string(k) +
                        ",x=" + x.str();
          SeriesSpec sp;
          sp.kind = SeriesKind::kLemma21LHS;
          sp.m = m;
          sp.k = k;
          sp.x = x;
          inst.run = make_run({{Rational(1), sp}},
                              [m, k, x](const PrecisionConfig& cfg) {
                                return lemma21_rhs_value(m, k, x, cfg);
                              });
          r.instances.push_back(std::move(inst));
        }
      }
    }
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "eq3.3";
    r.description =
        "Shift reduction of the H_n^(m) power series to polylogarithms and "
        "weighted star sums at n = k-1";
    r.paper_ref = "Eq (3.3): \"Σ H_n^(m)/(n+k) x^{n+k}\"";
    r.lhs_template = "sum_{n>=1} H_n^(m) x^(n+k)/(n+k)";
    r.rhs_template =
        "H_n^(m)/n series minus polylogarithm corrections with weighted star "
        "sums at n = k-1";
    r.param_domain = "m=1..4, k=1..4, x in {-1} + sample set";
    r.default_tolerance_digits = 25;
    r.convergence_class = ConvergenceClass::kAlternatingSlow;
    std::vector<Rational> xs = {Rational(-1)};
    for (const auto& x : x_samples()) xs.push_back(x);
    for (int m = 1; m <= 4; ++m) {
      for (int k = 1; k <= 4; ++k) {
        for (const auto& x : xs) {
          CatalogInstance inst;
          inst.params = "m=" + std::to_string(m) + ",k=" + std::to_string(k) +
                        ",x=" + x.str();
          SeriesSpec sp;
          sp.kind = SeriesKind::kLemma22LHS;
          sp.m = m;
          sp.k = k;
          sp.x = x;
          inst.run = make_run({{Rational(1), sp}},
                              [m, k, x](const PrecisionConfig& cfg) {
                                return lemma22_rhs_value(m, k, x, cfg);
                              });
          r.instances.push_back(std::move(inst));
        }
      }
    }
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "eq3.5";
    r.description =
        "Moment integral of ln^k(1-x) against x^(n-1) equal to a signed "
        "complete Bell value at harmonic-number arguments";
    r.paper_ref = "Eq (3.5): \"(−1)^k Y_k(n)/n\"";
    r.lhs_template = "integral_0^1 x^(n-1) ln^kpow(1-x) dx";
    r.rhs_template = "(-1)^kpow Y_kpow(n)/n, exact rational";
    r.param_domain = "n=1..6, kpow=0..4";
    r.default_tolerance_digits = 10;
    r.convergence_class = ConvergenceClass::kFast;
    for (long n = 1; n <= 6; ++n) {
      for (int kpow = 0; kpow <= 4; ++kpow) {
        CatalogInstance inst;
        inst.params =
            "n=" + std::to_string(n) + ",kpow=" + std::to_string(kpow);
        SeriesSpec sp;
        sp.kind = SeriesKind::kIntBeta;
        sp.n = n;
        sp.kpow = kpow;
        inst.run = make_run({{Rational(1), sp}},
                            [n, kpow](const PrecisionConfig& cfg) {
                              Rational v = bell_Y(kpow, n) / Rational(n);
                              if (kpow % 2 == 1) v = -v;
                              return BigFloat(v, cfg.working_digits());
                            });
        r.instances.push_back(std::move(inst));
      }
    }
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "eq3.7";
    r.description =
        "Generating function of H_n H_n^(m) through the H_n/n^m series and a "
        "nested double sum, divided by 1-x";
    r.paper_ref = "Eq (3.7): \"1/(1−x) { Σ H_n/n^m x^n …\"";
    r.lhs_template = "sum_{n>=1} H_n H_n^(m) x^n";
    r.rhs_template =
        "(sum H_n x^n/n^m - nested log sum - zeta(m) ln(1-x)) / (1-x)";
    r.param_domain = "m=2..4, x in sample set";
    r.default_tolerance_digits = 25;
    r.convergence_class = ConvergenceClass::kFast;
    for (int m = 2; m <= 4; ++m) {
      for (const auto& x : x_samples()) {
        CatalogInstance inst;
        inst.params = "m=" + std::to_string(m) + ",x=" + x.str();
        SeriesSpec sp;
        sp.kind = SeriesKind::kLemma24LHS;
        sp.m = m;
        sp.x = x;
        inst.run = make_run({{Rational(1), sp}},
                            [m, x](const PrecisionConfig& cfg) {
                              return eq37_rhs_value(m, x, cfg);
                            });
        r.instances.push_back(std::move(inst));
      }
    }
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "eq3.8";
    r.description =
        "Generating function of H_n H_n^(2) in the trilogarithm, the "
        "dilogarithm and the H_n/n^2 series";
    r.paper_ref = "Eq (3.8): \"2Li_3(x) − ln(1−x)Li_2(x)\"";
    r.lhs_template = "sum_{n>=1} H_n H_n^(2) x^n";
    r.rhs_template = "(2 Li_3(x) - ln(1-x) Li_2(x) - sum H_n x^n/n^2)/(1-x)";
    r.param_domain = "x in sample set";
    r.default_tolerance_digits = 25;
    r.convergence_class = ConvergenceClass::kFast;
    for (const auto& x : x_samples()) {
      CatalogInstance inst;
      inst.params = "x=" + x.str();
      SeriesSpec sp;
      sp.kind = SeriesKind::kThm25LHS;
      sp.x = x;
      inst.run = make_run({{Rational(1), sp}},
                          [x](const PrecisionConfig& cfg) {
                            return eq38_rhs_value(x, cfg);
                          });
      r.instances.push_back(std::move(inst));
    }
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "eq3.9";
    r.description =
        "Reflection identity for two-variable nested polylogarithm partial "
        "sums";
    r.paper_ref = "Eq (3.9): \"a simple reflection formula\"";
    r.lhs_template =
        "sum_n y^n/n^m sum_{k<=n} x^k/k^p + sum_n x^n/n^p sum_{k<=n} y^k/k^m";
    r.rhs_template = "Li_p(x) Li_m(y) + Li_{p+m}(xy)";
    r.param_domain = "(p,m) in {(1,2),(2,2),(1,3)}, (x,y) fixed pairs";
    r.default_tolerance_digits = 25;
    r.convergence_class = ConvergenceClass::kFast;
    const std::vector<std::pair<int, int>> pms = {{1, 2}, {2, 2}, {1, 3}};
    const std::vector<std::pair<Rational, Rational>> xys = {
        {Rational(1, 2), Rational(1, 2)},
        {Rational(-1, 2), Rational(1, 2)},
        {Rational(1, 3), Rational(-1, 2)}};
    for (const auto& pm : pms) {
      for (const auto& xy : xys) {
        CatalogInstance inst;
        inst.params = "p=" + std::to_string(pm.first) +
                      ",m=" + std::to_string(pm.second) +
                      ",x=" + xy.first.str() + ",y=" + xy.second.str();
        SeriesSpec sp;
        sp.kind = SeriesKind::kReflection;
        sp.p = pm.first;
        sp.m = pm.second;
        sp.x = xy.first;
        sp.y = xy.second;
        const int p = pm.first;
        const int m = pm.second;
        const Rational x = xy.first;
        const Rational y = xy.second;
        inst.run = make_run({{Rational(1), sp}},
                            [p, m, x, y](const PrecisionConfig& cfg) {
                              return eq39_rhs_value(p, m, x, y, cfg);
                            });
        r.instances.push_back(std::move(inst));
      }
    }
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "eq3.13";
    r.description =
        "Integral of ln^m(1+x)/x over (0,z) in polylogarithms at 1/(1+z) and "
        "powers of ln(1+z)";
    r.paper_ref = "Eq (3.13): \"1/(m+1) ln^{m+1}(1+z)\"";
    r.lhs_template = "integral_0^z ln^m(1+x)/x dx";
    r.rhs_template =
        "ln^(m+1)(1+z)/(m+1) + m!(zeta(m+1) - Li_{m+1}(w)) - polylog ladder "
        "at w = 1/(1+z)";
    r.param_domain = "m=1..4, z in {1/2, 1}";
    r.default_tolerance_digits = 20;
    r.convergence_class = ConvergenceClass::kFast;
    for (int m = 1; m <= 4; ++m) {
      for (const Rational& z : {Rational(1, 2), Rational(1)}) {
        CatalogInstance inst;
        inst.params = "m=" + std::to_string(m) + ",z=" + z.str();
        SeriesSpec sp;
        sp.kind = SeriesKind::kIntLn1px;
        sp.m = m;
        sp.z = z;
        inst.run = make_run({{Rational(1), sp}},
                            [m, z](const PrecisionConfig& cfg) {
                              return eq313_rhs_value(m, z, cfg);
                            });
        r.instances.push_back(std::move(inst));
      }
    }
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "int-ln3-1px";
    r.description =
        "The m=3, z=1 instance of the ln^m(1+x)/x integral as an explicit "
        "weight-4 constant";
    r.paper_ref = "\"6ζ(4) + 3/2 ζ(2) ln²2\"";
    r.lhs_template = "integral_0^1 ln^3(1+x)/x dx";
    r.rhs_template = "rhs_known(int_ln3_1px)";
    r.param_domain = "none";
    r.default_tolerance_digits = 20;
    r.convergence_class = ConvergenceClass::kFast;
    CatalogInstance inst;
    SeriesSpec sp;
    sp.kind = SeriesKind::kIntLn1px;
    sp.m = 3;
    sp.z = Rational(1);
    inst.run =
        make_run({{Rational(1), sp}}, expr_rhs(rhs_known("int_ln3_1px")));
    r.instances.push_back(std::move(inst));
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "int-ln4-1px";
    r.description =
        "The m=4, z=1 instance of the ln^m(1+x)/x integral as an explicit "
        "weight-5 constant";
    r.paper_ref = "\"−24 Li_5(1/2)\"";
    r.lhs_template = "integral_0^1 ln^4(1+x)/x dx";
    r.rhs_template = "rhs_known(int_ln4_1px)";
    r.param_domain = "none";
    r.default_tolerance_digits = 20;
    r.convergence_class = ConvergenceClass::kFast;
    CatalogInstance inst;
    SeriesSpec sp;
    sp.kind = SeriesKind::kIntLn1px;
    sp.m = 4;
    sp.z = Rational(1);
    inst.run =
        make_run({{Rational(1), sp}}, expr_rhs(rhs_known("int_ln4_1px")));
    r.instances.push_back(std::move(inst));
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "eq3.17";
    r.description =
        "Alternating sum of the complete Bell value Y_m(n)/n equal to "
        "m! Li_{m+1}(1/2)";
    r.paper_ref = "Eq (3.17): \"m! Li_{m+1}(1/2)\"";
    r.lhs_template = "sum_{n>=1} (-1)^(n-1) Y_m(n)/n";
    r.rhs_template = "m! Li_{m+1}(1/2)";
    r.param_domain = "m=1..5";
    r.default_tolerance_digits = 30;
    r.convergence_class = ConvergenceClass::kAlternatingSlow;
    for (int m = 1; m <= 5; ++m) {
      CatalogInstance inst;
      inst.params = "m=" + std::to_string(m);
      SeriesSpec sp;
      sp.kind = SeriesKind::kAltOverN;
      sp.term.bell_k = m;
      sp.p = 1;
      inst.run =
          make_run({{Rational(1), sp}}, expr_rhs(rhs_known("thm27", m)));
      r.instances.push_back(std::move(inst));
    }
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "eq3.18";
    r.description =
        "Integral of ln^m(1-x)/(1+x) over (0,1) equal to "
        "(-1)^m m! Li_{m+1}(1/2)";
    r.paper_ref = "Eq (3.18): \"(−1)^m m! Li_{m+1}(1/2)\"";
    r.lhs_template = "integral_0^1 ln^m(1-x)/(1+x) dx";
    r.rhs_template = "(-1)^m m! Li_{m+1}(1/2)";
    r.param_domain = "m=1..4";
    r.default_tolerance_digits = 10;
    r.convergence_class = ConvergenceClass::kFast;
    for (int m = 1; m <= 4; ++m) {
      CatalogInstance inst;
      inst.params = "m=" + std::to_string(m);
      SeriesSpec sp;
      sp.kind = SeriesKind::kIntLn1mxOver1px;
      sp.m = m;
      inst.run =
          make_run({{Rational(1), sp}}, expr_rhs(rhs_known("eq318", m)));
      r.instances.push_back(std::move(inst));
    }
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "eq3.20";
    r.description =
        "Alternating sum of H_n^3/n as an explicit weight-4 constant";
    r.paper_ref = "Eq (3.20): \"5/8 ζ(4)\"";
    r.lhs_template = "sum_{n>=1} (-1)^(n-1) H_n^3/n";
    r.rhs_template = "rhs_known(cor28_h3)";
    r.param_domain = "none";
    r.default_tolerance_digits = 30;
    r.convergence_class = ConvergenceClass::kAlternatingSlow;
    CatalogInstance inst;
    inst.run = make_run({{Rational(1), alt_over_n(cubic_term, 1)}},
                        expr_rhs(rhs_known("cor28_h3")));
    r.instances.push_back(std::move(inst));
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "eq3.21";
    r.description =
        "Alternating sum of H_n H_n^(2)/n as an explicit weight-4 constant";
    r.paper_ref = "Eq (3.21): \"2 Li_4(1/2) + 1/12 ln⁴2\"";
    r.lhs_template = "sum_{n>=1} (-1)^(n-1) H_n H_n^(2)/n";
    r.rhs_template = "rhs_known(cor28_hh2)";
    r.param_domain = "none";
    r.default_tolerance_digits = 30;
    r.convergence_class = ConvergenceClass::kAlternatingSlow;
    CatalogInstance inst;
    inst.run = make_run({{Rational(1), alt_over_n(quad_term, 1)}},
                        expr_rhs(rhs_known("cor28_hh2")));
    r.instances.push_back(std::move(inst));
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "eq3.24";
    r.description =
        "Alternating tail sum with inner partial sums zeta(3) - H_{n-1}^(3), "
        "obtained by order swap, as an explicit weight-4 constant";
    r.paper_ref = "Eq (3.24): \"7/4 ζ(3) ln 2 − 5/16 ζ(4)\"";
    r.lhs_template = "sum_{n>=1} (-1)^(n-1) (zeta(3) - H_{n-1}^(3))/n";
    r.rhs_template = "rhs_known(eq324)";
    r.param_domain = "none";
    r.default_tolerance_digits = 30;
    r.convergence_class = ConvergenceClass::kAlternatingSlow;
    CatalogInstance inst;
    SeriesSpec sp;
    sp.kind = SeriesKind::kNestedEta;
    sp.p = 3;
    inst.run = make_run({{Rational(1), sp}}, expr_rhs(rhs_known("eq324")));
    r.instances.push_back(std::move(inst));
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "eq3.25";
    r.description =
        "Alternating sum of H_n^(3)/n as an explicit weight-4 constant";
    r.paper_ref = "Eq (3.25): \"19/16 ζ(4) − 3/4 ζ(3) ln 2\"";
    r.lhs_template = "sum_{n>=1} (-1)^(n-1) H_n^(3)/n";
    r.rhs_template = "rhs_known(eq325)";
    r.param_domain = "none";
    r.default_tolerance_digits = 30;
    r.convergence_class = ConvergenceClass::kAlternatingSlow;
    CatalogInstance inst;
    inst.run = make_run({{Rational(1), alt_over_n({{3, 1}}, 1)}},
                        expr_rhs(rhs_known("eq325")));
    r.instances.push_back(std::move(inst));
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "eq3.26";
    r.description =
        "Alternating sum of H_n^3 - 3 H_n H_n^(2) + 2 H_n^(3) over n+k in "
        "powers of ln 2 and alternating star sums";
    r.paper_ref = "Eq (3.26): \"1/4 ln⁴2 − 6ζ_{k−1}^⋆\"";
    r.lhs_template =
        "sum_{n>=1} (-1)^(n+k) (H_n^3 - 3 H_n H_n^(2) + 2 H_n^(3))/(n+k)";
    r.rhs_template = "rhs_cor29(y3combo, k)";
    r.param_domain = "k=1..6";
    r.default_tolerance_digits = 30;
    r.convergence_class = ConvergenceClass::kAlternatingSlow;
    for (int k = 1; k <= 6; ++k) {
      CatalogInstance inst;
      inst.params = "k=" + std::to_string(k);
      inst.run = make_run({{Rational(1), alt_shifted(cubic_term, k)},
                           {Rational(-3), alt_shifted(quad_term, k)},
                           {Rational(2), alt_shifted({{3, 1}}, k)}},
                          expr_rhs(rhs_cor29(Cor29Kind::kY3Combo, k)));
      r.instances.push_back(std::move(inst));
    }
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "eq3.27";
    r.description =
        "Alternating sum of H_n^(3)/(n+k) in zeta values, ln 2 and "
        "alternating star sums";
    r.paper_ref = "Eq (3.27): \"−5/16 ζ(4) + 3/4 ζ(3) ln 2\"";
    r.lhs_template = "sum_{n>=1} (-1)^(n+k) H_n^(3)/(n+k)";
    r.rhs_template = "rhs_cor29(h3order, k)";
    r.param_domain = "k=1..6";
    r.default_tolerance_digits = 30;
    r.convergence_class = ConvergenceClass::kAlternatingSlow;
    for (int k = 1; k <= 6; ++k) {
      CatalogInstance inst;
      inst.params = "k=" + std::to_string(k);
      inst.run = make_run({{Rational(1), alt_shifted({{3, 1}}, k)}},
                          expr_rhs(rhs_cor29(Cor29Kind::kH3Order, k)));
      r.instances.push_back(std::move(inst));
    }
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "eq4.2";
    r.description =
        "Shifted logarithm series -sum_{m>=1} x^(n+m)/(m(n+m)) in closed "
        "form";
    r.paper_ref = "Eq (4.2): \"x^n ln(1−x) − Σ x^j/j\"";
    r.lhs_template = "-sum_{m>=1} x^(n+m)/(m(n+m))";
    r.rhs_template =
        "(x^n ln(1-x) - sum_{j<=n} x^j/j - ln(1-x))/n";
    r.param_domain = "n in {1,3,10}, x in {-1,-1/2,1/2}";
    r.default_tolerance_digits = 25;
    r.convergence_class = ConvergenceClass::kAlternatingSlow;
    for (long n : {1L, 3L, 10L}) {
      for (const Rational& x :
           {Rational(-1), Rational(-1, 2), Rational(1, 2)}) {
        CatalogInstance inst;
        inst.params = "n=" + std::to_string(n) + ",x=" + x.str();
        inst.run = make_run(
            {{Rational(-1), power_at({}, x, 1, static_cast<int>(n))}},
            [n, x](const PrecisionConfig& cfg) {
              return eq42_rhs_value(n, x, cfg);
            });
        r.instances.push_back(std::move(inst));
      }
    }
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "eq4.4";
    r.description =
        "Partial-fraction intermediate for the quadratic alternating family; "
        "the half-ln^2 term carries the unbarred star value, since the "
        "barred variant disagrees numerically for k >= 2";
    r.paper_ref = "Eq (4.4): \"−5/8 ζ(3) ζ_{k−1}^⋆(1̄)\"";
    r.lhs_template =
        "sum_{i=1}^{k-1} sum_{n>=1} (-1)^(n+1) H_n/(n^2 (n+i))";
    r.rhs_template = "rhs_eq44(k)";
    r.param_domain = "k=1..6";
    r.default_tolerance_digits = 30;
    r.convergence_class = ConvergenceClass::kAlternatingSlow;
    for (int k = 1; k <= 6; ++k) {
      CatalogInstance inst;
      inst.params = "k=" + std::to_string(k);
      Parts parts;
      for (int i = 1; i < k; ++i)
        parts.push_back({Rational(1), power_at({{1, 1}}, Rational(-1), 2, i)});
      inst.run = make_run(std::move(parts), expr_rhs(rhs_eq44(k)));
      r.instances.push_back(std::move(inst));
    }
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "alt-h-n3";
    r.description =
        "Alternating sum of H_n/n^3 as an explicit weight-4 constant";
    r.paper_ref = "\"−2Li_4(1/2) + 11/4 ζ(4)\"";
    r.lhs_template = "sum_{n>=1} (-1)^(n-1) H_n/n^3";
    r.rhs_template = "rhs_known(alt_h_n3)";
    r.param_domain = "none";
    r.default_tolerance_digits = 30;
    r.convergence_class = ConvergenceClass::kAlternatingSlow;
    CatalogInstance inst;
    inst.run = make_run({{Rational(1), alt_over_n({{1, 1}}, 3)}},
                        expr_rhs(rhs_known("alt_h_n3")));
    r.instances.push_back(std::move(inst));
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "cor3.1-quadratic";
    r.description =
        "k=2 quadratic special value transcribed literally, cross-checking "
        "the general closed form at k=2";
    r.paper_ref = "Cor 3.1: \"Taking k=2 in Theorem 1.1\"";
    r.lhs_template = "sum_{n>=1} (-1)^n H_n H_n^(2)/(n+2)";
    r.rhs_template = "rhs_known(cor31_quadratic)";
    r.param_domain = "none";
    r.default_tolerance_digits = 30;
    r.convergence_class = ConvergenceClass::kAlternatingSlow;
    CatalogInstance inst;
    inst.run = make_run({{Rational(1), alt_shifted(quad_term, 2)}},
                        expr_rhs(rhs_known("cor31_quadratic")));
    r.instances.push_back(std::move(inst));
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "cor3.1-cubic";
    r.description =
        "k=2 cubic special value transcribed literally, cross-checking the "
        "general closed form at k=2";
    r.paper_ref = "Cor 3.1: \"Taking k=2 in Theorem 1.1\"";
    r.lhs_template = "sum_{n>=1} (-1)^n H_n^3/(n+2)";
    r.rhs_template = "rhs_known(cor31_cubic)";
    r.param_domain = "none";
    r.default_tolerance_digits = 30;
    r.convergence_class = ConvergenceClass::kAlternatingSlow;
    CatalogInstance inst;
    inst.run = make_run({{Rational(1), alt_shifted(cubic_term, 2)}},
                        expr_rhs(rhs_known("cor31_cubic")));
    r.instances.push_back(std::move(inst));
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "intro-w7";
    r.description =
        "Non-alternating sum of H_n^3/n^4 in zeta values and their products";
    r.paper_ref = "\"231/16 ζ(7)\"";
    r.lhs_template = "sum_{n>=1} H_n^3/n^4";
    r.rhs_template = "rhs_known(intro_w7)";
    r.param_domain = "none";
    r.default_tolerance_digits = 10;
    r.convergence_class = ConvergenceClass::kAlgebraicSlow;
    CatalogInstance inst;
    inst.run = make_run({{Rational(1), power_at({{1, 3}}, Rational(1), 4, 0)}},
                        expr_rhs(rhs_known("intro_w7")));
    r.instances.push_back(std::move(inst));
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "intro-w9a";
    r.description =
        "Non-alternating sum of [H_n^(2)]^2/n^5 in zeta values and their "
        "products; external-source: the source asserts this display with a "
        "citation rather than proving it";
    r.paper_ref = "\"−1069/36 ζ(9)\"";
    r.lhs_template = "sum_{n>=1} [H_n^(2)]^2/n^5";
    r.rhs_template = "rhs_known(intro_w9a)";
    r.param_domain = "none";
    r.default_tolerance_digits = 10;
    r.convergence_class = ConvergenceClass::kAlgebraicSlow;
    CatalogInstance inst;
    inst.run = make_run({{Rational(1), power_at({{2, 2}}, Rational(1), 5, 0)}},
                        expr_rhs(rhs_known("intro_w9a")));
    r.instances.push_back(std::move(inst));
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "intro-w9b";
    r.description =
        "Non-alternating sum of [H_n^(2)]^2 H_n^(3)/n^2 in zeta values and "
        "their products; external-source: the source asserts this display "
        "with a citation rather than proving it";
    r.paper_ref = "\"−617/72 ζ(9)\"";
    r.lhs_template = "sum_{n>=1} [H_n^(2)]^2 H_n^(3)/n^2";
    r.rhs_template = "rhs_known(intro_w9b)";
    r.param_domain = "none";
    r.default_tolerance_digits = 10;
    r.convergence_class = ConvergenceClass::kAlgebraicSlow;
    CatalogInstance inst;
    inst.run = make_run(
        {{Rational(1), power_at({{2, 2}, {3, 1}}, Rational(1), 2, 0)}},
        expr_rhs(rhs_known("intro_w9b")));
    r.instances.push_back(std::move(inst));
    recs.push_back(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "intro-binom";
    r.description =
        "Non-alternating binomial-weighted sum of H_n H_n^(2)/n against its "
        "finite double-sum closed form";
    r.paper_ref = "\"2ζ(4) + 2ζ(3)H_{r−1}\"";
    r.lhs_template = "sum_{n>=1} H_n H_n^(2)/(n C(n+k,k))";
    r.rhs_template =
        "sum_{r<=k} (-1)^(r+1) C(k,r) (2 zeta(4) + 2 H_{r-1} zeta(3) + ...)";
    r.param_domain = "k=1..4";
    r.default_tolerance_digits = 10;
    r.convergence_class = ConvergenceClass::kAlgebraicSlow;
    for (int k = 1; k <= 4; ++k) {
      CatalogInstance inst;
      inst.params = "k=" + std::to_string(k);
      inst.run = [k](const PrecisionConfig& cfg) {
        InstanceEval out;
        BigFloat err;
        const auto pr = nonalt_binomial_check(k, cfg, &err);
        out.lhs = pr.first;
        out.rhs = pr.second;
        out.lhs_error = err;
        out.method = "tail_fit";
        return out;
      };
      r.instances.push_back(std::move(inst));
    }
    recs.push_back(std::move(r));
  }

  std::sort(recs.begin(), recs.end(),
            [](const IdentityRecord& a, const IdentityRecord& b) {
              return a.id < b.id;
            });
  return recs;
}

bool glob_match(const char* p, const char* s) {
  const char* star = nullptr;
  const char* ss = nullptr;
  while (*s) {
    if (*p == '?' || *p == *s) {
      ++p;
      ++s;
    } else if (*p == '*') {
      star = p++;
      ss = s;
    } else if (star) {
      p = star + 1;
      s = ++ss;
    } else {
      return false;
    }
  }
  while (*p == '*') ++p;
  return *p == '\0';
}

VerificationResult run_one(const IdentityRecord& rec,
                           const CatalogInstance& inst,
                           const PrecisionConfig& cfg, int tolerance_digits) {
  VerificationResult res;
  res.id = rec.id;
  res.params = inst.params;
  int tol = rec.default_tolerance_digits;
  if (tolerance_digits > 0) tol = std::min(tol, tolerance_digits);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const InstanceEval ev = inst.run(cfg);
    res.lhs_value = ev.lhs;
    res.rhs_value = ev.rhs;
    res.abs_diff = (ev.lhs - ev.rhs).abs();
    res.lhs_error_estimate = ev.lhs_error;
    res.method = ev.method;
    const BigFloat thr = BigFloat::pow10(-tol, cfg.working_digits());
    res.pass = res.abs_diff < thr && res.lhs_error_estimate < thr;
  } catch (const std::exception& e) {
    res.pass = false;
    res.method = std::string("error: ") + e.what();
  }
  const auto t1 = std::chrono::steady_clock::now();
  res.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return res;
}

}  // namespace

const std::vector<IdentityRecord>& registry() {
  static const std::vector<IdentityRecord> recs = build_registry();
  return recs;
}

const IdentityRecord* find_record(const std::string& id) {
  for (const auto& r : registry())
    if (r.id == id) return &r;
  return nullptr;
}

VerificationResult verify(const std::string& id, const std::string& params,
                          const PrecisionConfig& cfg, int tolerance_digits) {
  cfg.validate();
  const IdentityRecord* rec = find_record(id);
  if (!rec) throw UnknownIdentity("unknown identity '" + id + "'");
  for (const auto& inst : rec->instances)
    if (inst.params == params) return run_one(*rec, inst, cfg, tolerance_digits);
  if (params.empty() && rec->instances.size() == 1)
    return run_one(*rec, rec->instances.front(), cfg, tolerance_digits);
  throw ParamOutOfDomain("identity '" + id + "' has no instance '" + params +
                         "'");
}

std::vector<VerificationResult> verify_all(const std::string& filter,
                                           const PrecisionConfig& cfg,
                                           int tolerance_digits, int workers) {
  cfg.validate();
  std::vector<std::pair<const IdentityRecord*, const CatalogInstance*>> tasks;
  for (const auto& rec : registry()) {
    bool selected;
    if (filter.empty()) {
      selected = true;
    } else if (filter.rfind("class=", 0) == 0) {
      selected = filter.substr(6) ==
                 convergence_class_name(rec.convergence_class);
    } else {
      selected = glob_match(filter.c_str(), rec.id.c_str());
    }
    if (!selected) continue;
    for (const auto& inst : rec.instances) tasks.push_back({&rec, &inst});
  }
  std::vector<VerificationResult> out(tasks.size());
  if (workers <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      out[i] = run_one(*tasks[i].first, *tasks[i].second, cfg,
                       tolerance_digits);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      out[i] =
          run_one(*tasks[i].first, *tasks[i].second, cfg, tolerance_digits);
    }
  };
  const std::size_t nthreads =
      std::min<std::size_t>(static_cast<std::size_t>(workers), tasks.size());
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return out;
}

std::string results_to_json(const std::vector<VerificationResult>& results,
                            int value_digits) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json o;
    o["id"] = r.id;
    o["params"] = r.params;
    o["lhs"] = r.lhs_value.to_string(value_digits);
    o["rhs"] = r.rhs_value.to_string(value_digits);
    o["abs_diff"] = r.abs_diff.to_string(6);
    o["error_estimate"] = r.lhs_error_estimate.to_string(6);
    o["pass"] = r.pass;
    o["method"] = r.method;
    o["millis"] = r.millis;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string results_to_csv(const std::vector<VerificationResult>& results,
                           int value_digits) {
  std::ostringstream os;
  os << "id,params,lhs,rhs,abs_diff,error_estimate,pass,method,millis\n";
  for (const auto& r : results) {
    os << r.id << ",\"" << r.params << "\"," << r.lhs_value.to_string(value_digits)
       << "," << r.rhs_value.to_string(value_digits) << ","
       << r.abs_diff.to_string(6) << "," << r.lhs_error_estimate.to_string(6)
       << "," << (r.pass ? "true" : "false") << ",\"" << r.method << "\","
       << r.millis << "\n";
  }
  return os.str();
}

}  // namespace eulersum
