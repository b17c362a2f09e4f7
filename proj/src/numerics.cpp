#include "eulersum/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace eulersum {

namespace {

// Re-tag a value at exactly the requested digits so module entry points
// return the precision they were asked for.
BigFloat round_to(const BigFloat& x, int digits) {
  BigFloat r(digits);
  mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

// The CRVZ coefficients reach (3+sqrt 8)^d, about 0.766 d decimal digits,
// and cancel back down in the final division, so the internal precision
// must absorb that growth on top of the working precision.
long crvz_order(const PrecisionConfig& cfg) {
  long d = cfg.acceleration_order > 0
               ? cfg.acceleration_order
               : static_cast<long>(std::ceil(cfg.working_digits() * 1.32)) + 6;
  if (2 * d > cfg.max_terms) {
    d = cfg.max_terms / 2;
  }
  if (d < 4) {
    throw ConvergenceFailure("alternating series budget below 8 terms");
  }
  return d;
}

ValueWithError crvz_sum(const TermFn& magnitude, const PrecisionConfig& cfg) {
  const int wt = cfg.working_digits();
  const long d = crvz_order(cfg);
  const int wi = wt + static_cast<int>(std::ceil(0.766 * d)) + 12;

  std::vector<BigFloat> a;
  a.reserve(static_cast<size_t>(d));
  for (long k = 1; k <= d; ++k) {
    a.push_back(magnitude(k, wi));
  }

  auto run = [&](long dd) {
    BigFloat big =
        BigFloat::pow_int(BigFloat(3, wi) + BigFloat::sqrt(BigFloat(8, wi)),
                          dd);
    big = (big + BigFloat(1, wi) / big) / 2;
    BigFloat b(-1, wi);
    BigFloat c = -big;
    BigFloat s(0, wi);
    for (long k = 0; k < dd; ++k) {
      c = b - c;
      s += c * a[static_cast<size_t>(k)];
      b = b * (2 * (k + dd) * (k - dd));
      b = b / ((2 * k + 1) * (k + 1));
    }
    return s / big;
  };

  BigFloat s_full = run(d);
  BigFloat s_check = run(d - 2);
  BigFloat floor =
      (s_full.abs() + BigFloat(1, wi)) * BigFloat::pow10(3 - wt, wi);
  return {round_to(s_full, wt), (s_full - s_check).abs() + floor};
}

ValueWithError euler_average(const TermFn& magnitude,
                             const PrecisionConfig& cfg) {
  const int wt = cfg.working_digits();
  long n = static_cast<long>(std::ceil(wt / 0.30)) + 16;
  if (n > cfg.max_terms) {
    n = cfg.max_terms;
  }
  if (n < 8) {
    throw ConvergenceFailure("alternating series budget below 8 terms");
  }
  const int wi = wt + 10;

  std::vector<BigFloat> t;
  t.reserve(static_cast<size_t>(n));
  BigFloat s(0, wi);
  for (long k = 1; k <= n; ++k) {
    BigFloat m = magnitude(k, wi);
    s += (k % 2 == 1) ? m : -m;
    t.push_back(s);
  }

  BigFloat prev(0, wi);
  for (long round = 1; round < n; ++round) {
    prev = t[0];
    for (long i = 0; i + round < n; ++i) {
      t[static_cast<size_t>(i)] =
          (t[static_cast<size_t>(i)] + t[static_cast<size_t>(i + 1)]) / 2;
    }
  }
  BigFloat floor = (t[0].abs() + BigFloat(1, wi)) * BigFloat::pow10(3 - wt, wi);
  return {round_to(t[0], wt), (t[0] - prev).abs() + floor};
}

std::mutex cache_mutex;
std::map<std::pair<int, int>, BigFloat> zeta_cache;
std::map<int, BigFloat> ln2_cache;

}  // namespace

ValueWithError accelerate_alternating(const TermFn& magnitude,
                                      const PrecisionConfig& cfg,
                                      AccelMethod method) {
  cfg.validate();
  if (method == AccelMethod::kEulerAverage) {
    return euler_average(magnitude, cfg);
  }
  ValueWithError r = crvz_sum(magnitude, cfg);
  if (!r.value.is_finite() || !r.error_bound.is_finite()) {
    return euler_average(magnitude, cfg);
  }
  return r;
}

BigFloat zeta_int(int s, int digits) {
  if (s < 2) {
    throw DomainError("zeta_int needs s >= 2");
  }
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = zeta_cache.find({s, digits});
    if (it != zeta_cache.end()) {
      return it->second;
    }
  }
  PrecisionConfig cfg;
  cfg.target_digits = digits;
  cfg.guard_digits = 10;
  ValueWithError eta = accelerate_alternating(
      [s](long k, int dg) { return BigFloat::pow_int(BigFloat(k, dg), -s); },
      cfg);
  // eta(s) = (1 - 2^{1-s}) zeta(s); the factor is exact.
  Rational factor = Rational(1) - Rational(BigInt(1), BigInt(1) << (s - 1));
  BigFloat z = round_to(eta.value / BigFloat(factor, digits + 10), digits);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return zeta_cache.emplace(std::make_pair(s, digits), z).first->second;
}

BigFloat ln_two(int digits) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = ln2_cache.find(digits);
    if (it != ln2_cache.end()) {
      return it->second;
    }
  }
  PrecisionConfig cfg;
  cfg.target_digits = digits;
  cfg.guard_digits = 10;
  ValueWithError v = accelerate_alternating(
      [](long k, int dg) { return BigFloat(Rational(1, k), dg); }, cfg);
  BigFloat l = round_to(v.value, digits);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return ln2_cache.emplace(digits, l).first->second;
}

BigFloat polylog(int p, const Rational& x, int digits) {
  if (p < 1) {
    throw DomainError("polylog needs p >= 1");
  }
  Rational ax = x < 0 ? Rational(-x) : x;
  if (ax > 1) {
    throw DomainError("polylog needs |x| <= 1");
  }
  if (x == 1) {
    if (p < 2) {
      throw DomainError("polylog diverges at x = 1 for p = 1");
    }
    return zeta_int(p, digits);
  }
  if (x == -1) {
    if (p == 1) {
      return -ln_two(digits);
    }
    Rational factor = Rational(1) - Rational(BigInt(1), BigInt(1) << (p - 1));
    return round_to(-(zeta_int(p, digits + 5) * BigFloat(factor, digits + 5)),
                    digits);
  }
  if (x == 0) {
    return BigFloat(0, digits);
  }

  const int wd = digits + 10;
  BigFloat xb(x, wd);
  BigFloat inv_gap(Rational(1) / (Rational(1) - ax), wd);
  BigFloat eps = BigFloat::pow10(-(digits + 6), wd);
  BigFloat xn(1, wd);
  BigFloat s(0, wd);
  for (long n = 1; n <= 2000000; ++n) {
    xn *= xb;
    s += xn * BigFloat::pow_int(BigFloat(n, wd), -p);
    if (xn.abs() * inv_gap < eps) {
      return round_to(s, digits);
    }
  }
  throw ConvergenceFailure("polylog series did not reach the target");
}

BigFloat ln_one_minus(const Rational& x, int digits) {
  if (x == 0) {
    return BigFloat(0, digits);
  }
  Rational ax = x < 0 ? Rational(-x) : x;
  if (ax > 1 || x == 1) {
    throw DomainError("ln_one_minus needs -1 <= x < 1");
  }
  return -polylog(1, x, digits);
}

namespace {

// m strictly increasing indices spread across [lo, hi].
std::vector<long> checkpoints(long lo, long hi, int m) {
  std::vector<long> out;
  out.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    long n = lo + static_cast<long>(std::llround(
                      static_cast<double>(i) * (hi - lo) / (m - 1)));
    if (!out.empty() && n <= out.back()) {
      n = out.back() + 1;
    }
    out.push_back(n);
  }
  return out;
}

// In-place Gaussian elimination with partial pivoting.
std::vector<BigFloat> solve_linear(std::vector<std::vector<BigFloat>>& a,
                                   std::vector<BigFloat>& rhs) {
  const size_t m = a.size();
  for (size_t col = 0; col < m; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < m; ++r) {
      if (a[r][col].abs() > a[piv][col].abs()) {
        piv = r;
      }
    }
    if (a[piv][col].sign() == 0) {
      throw ConvergenceFailure("tail fit system is singular");
    }
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (size_t r = col + 1; r < m; ++r) {
      BigFloat f = a[r][col] / a[col][col];
      for (size_t c = col; c < m; ++c) {
        a[r][c] -= f * a[col][c];
      }
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<BigFloat> x(m, rhs[0]);
  for (size_t ri = m; ri-- > 0;) {
    BigFloat acc = rhs[ri];
    for (size_t c = ri + 1; c < m; ++c) {
      acc -= a[ri][c] * x[c];
    }
    x[ri] = acc / a[ri][ri];
  }
  return x;
}

}  // namespace

ValueWithError sum_with_tail(const TermFn& term, const TailFitParams& fit,
                             const PrecisionConfig& cfg) {
  cfg.validate();
  if (fit.decay < 2) {
    throw DomainError("tail fit needs algebraic decay of at least 2");
  }
  if (fit.log_powers < 0 || fit.basis_depth < 1) {
    throw DomainError("tail fit basis is empty");
  }
  const int m = (fit.log_powers + 1) * fit.basis_depth + 1;
  const long n_max = fit.cutoff;
  if (n_max < 16L * m) {
    throw DomainError("tail fit cutoff too small for the basis size");
  }
  const int wd = cfg.working_digits() + 10;

  std::vector<long> win1 = checkpoints(n_max / 2, n_max, m);
  std::vector<long> win2 = checkpoints(n_max / 4, n_max / 2 - 1, m);

  std::map<long, BigFloat> psum;
  for (long n : win1) {
    psum.emplace(n, BigFloat(0, wd));
  }
  for (long n : win2) {
    psum.emplace(n, BigFloat(0, wd));
  }

  BigFloat s(0, wd);
  auto next = psum.begin();
  for (long n = 1; n <= n_max; ++n) {
    s += term(n, wd);
    if (next != psum.end() && next->first == n) {
      next->second = s;
      ++next;
    }
  }

  BigFloat ln_cap = BigFloat::log(BigFloat(n_max, wd));
  auto fit_window = [&](const std::vector<long>& win) {
    std::vector<std::vector<BigFloat>> a;
    std::vector<BigFloat> rhs;
    for (long n : win) {
      BigFloat ratio = BigFloat::log(BigFloat(n, wd)) / ln_cap;
      std::vector<BigFloat> row;
      row.push_back(BigFloat(1, wd));
      for (int lp = 0; lp <= fit.log_powers; ++lp) {
        BigFloat lg = BigFloat::pow_int(ratio, lp);
        for (int t = 0; t < fit.basis_depth; ++t) {
          row.push_back(
              -(lg * BigFloat::pow_int(BigFloat(n, wd), -(fit.decay - 1 + t))));
        }
      }
      a.push_back(std::move(row));
      rhs.push_back(psum.at(n));
    }
    return solve_linear(a, rhs)[0];
  };

  BigFloat s1 = fit_window(win1);
  BigFloat s2 = fit_window(win2);
  BigFloat floor = (s1.abs() + BigFloat(1, wd)) *
                   BigFloat::pow10(3 - cfg.working_digits(), wd);
  return {round_to(s1, cfg.working_digits()), (s1 - s2).abs() + floor};
}

ValueWithError quad_de(const IntegrandFn& f, const Rational& a,
                       const Rational& b, const PrecisionConfig& cfg) {
  cfg.validate();
  if (!(a < b)) {
    throw DomainError("quad_de needs a < b");
  }
  const int wt = cfg.working_digits();
  const int wd = wt + 10;
  BigFloat mid(Rational((a + b) / 2), wd);
  BigFloat half(Rational((b - a) / 2), wd);
  BigFloat pi_half(0, wd);
  mpfr_const_pi(pi_half.raw(), MPFR_RNDN);
  pi_half = pi_half / 2;

  // Past t_max the weights drop below the working precision.
  const double t_max =
      std::asinh(((wd + 8) * 2.302585092994046) / 3.141592653589793) + 0.5;

  // One transformed node pair at t = k h; contributions are accumulated
  // into acc with weight h omitted (applied by the caller).
  auto add_nodes = [&](long k, const BigFloat& h, BigFloat& acc) {
    BigFloat t = BigFloat(k, wd) * h;
    BigFloat sh(0, wd);
    BigFloat ch(0, wd);
    mpfr_sinh_cosh(sh.raw(), ch.raw(), t.raw(), MPFR_RNDN);
    BigFloat u = pi_half * sh;
    BigFloat chu(0, wd);
    mpfr_cosh(chu.raw(), u.raw(), MPFR_RNDN);
    BigFloat weight = pi_half * ch / (chu * chu) * half;
    BigFloat e = BigFloat::exp(u * -2L);
    BigFloat denom = e + 1;
    BigFloat near = half * 2L * e / denom;  // distance to the closer endpoint
    BigFloat far = half * 2L / denom;       // distance to the farther one
    BigFloat tanh_u = (BigFloat(1, wd) - e) / denom;
    BigFloat x_hi = mid + half * tanh_u;
    BigFloat fv = f(x_hi, far, near);
    if (fv.is_finite()) {
      acc += weight * fv;
    }
    if (k != 0) {
      BigFloat x_lo = mid - half * tanh_u;
      fv = f(x_lo, near, far);
      if (fv.is_finite()) {
        acc += weight * fv;
      }
    }
  };

  BigFloat eps = BigFloat::pow10(-(cfg.target_digits + 2), wd);
  BigFloat total(0, wd);
  BigFloat prev_val(0, wd);
  BigFloat diff(1, wd);
  const int first_level = 2;
  for (int level = first_level; level <= 13; ++level) {
    BigFloat h = BigFloat::pow_int(BigFloat(2, wd), -level);
    long k_cap = static_cast<long>(std::ceil(t_max * std::pow(2.0, level)));
    BigFloat acc(0, wd);
    if (level == first_level) {
      for (long k = 0; k <= k_cap; ++k) {
        add_nodes(k, h, acc);
      }
      total = acc * h;
    } else {
      for (long k = 1; k <= k_cap; k += 2) {
        add_nodes(k, h, acc);
      }
      total = total / 2 + acc * h;
    }
    if (level > first_level) {
      diff = (total - prev_val).abs();
      BigFloat scale = total.abs() + BigFloat(1, wd);
      if (diff < eps * scale) {
        prev_val = total;
        break;
      }
    }
    prev_val = total;
  }
  BigFloat floor = (total.abs() + BigFloat(1, wd)) * BigFloat::pow10(3 - wt, wd);
  return {round_to(total, wt), diff + floor};
}

BigFloat mhs_star_weighted(long n, const Composition& comp,
                           const std::vector<Rational>& weights, int digits) {
  const int m = comp.depth();
  if (m == 0 || static_cast<int>(weights.size()) != m) {
    throw DomainError("weighted star needs one weight per entry");
  }
  for (int e : comp.entries) {
    if (e <= 0) {
      throw DomainError("weighted star takes unbarred entries; signs belong in the weights");
    }
  }
  if (n < 0) {
    throw DomainError("weighted star needs n >= 0");
  }
  const int wd = digits + 10;
  std::vector<BigFloat> g(static_cast<size_t>(m) + 1, BigFloat(0, wd));
  g[0] = BigFloat(1, wd);
  std::vector<BigFloat> pw(static_cast<size_t>(m), BigFloat(1, wd));
  std::vector<BigFloat> wb;
  wb.reserve(static_cast<size_t>(m));
  for (const Rational& w : weights) {
    wb.emplace_back(w, wd);
  }
  for (long t = 1; t <= n; ++t) {
    BigFloat tb(t, wd);
    for (int i = 1; i <= m; ++i) {
      const size_t idx = static_cast<size_t>(m - i);
      pw[idx] *= wb[idx];
      g[static_cast<size_t>(i)] +=
          pw[idx] * BigFloat::pow_int(tb, -comp.entries[idx]) *
          g[static_cast<size_t>(i - 1)];
    }
  }
  return round_to(g[static_cast<size_t>(m)], digits);
}

}  // namespace eulersum
