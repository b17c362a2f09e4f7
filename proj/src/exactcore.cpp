#include "eulersum/exactcore.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

namespace eulersum {

Composition::Composition(std::vector<int> e) : entries(std::move(e)) {
  for (int s : entries)
    if (s == 0) throw DomainError("composition entries must be nonzero");
}

Composition::Composition(std::initializer_list<int> e) : Composition(std::vector<int>(e)) {}

int Composition::weight() const {
  int w = 0;
  for (int s : entries) w += s < 0 ? -s : s;
  return w;
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries[i]);
  }
  return out;
}

namespace {

std::mutex harmonic_mu;
std::map<int, std::vector<Rational>> harmonic_tab;

std::mutex stirling_mu;
std::vector<std::vector<BigInt>> stirling_tab;  // row n holds s(n,0..n)

constexpr int kRatioOrders = 6;  // u_j rows for j = 1..6 cover m <= 5
std::mutex ratio_mu;
std::vector<std::vector<Rational>> ratio_tab;  // ratio_tab[j-1][t] = s(t,j)/(t-1)!

}  // namespace

Rational harmonic(std::int64_t n, int m) {
  if (n < 0) throw DomainError("harmonic: n must be nonnegative");
  if (m < 1) throw DomainError("harmonic: order must be positive");
  std::lock_guard lock(harmonic_mu);
  auto& tab = harmonic_tab[m];
  if (tab.empty()) tab.push_back(Rational(0));
  while (static_cast<std::int64_t>(tab.size()) <= n) {
    auto j = static_cast<std::int64_t>(tab.size());
    BigInt p = 1;
    for (int i = 0; i < m; ++i) p *= j;
    tab.push_back(tab.back() + Rational(1, p));
  }
  return tab[static_cast<std::size_t>(n)];
}

HarmonicVector harmonic_vector(std::int64_t n, const std::vector<int>& orders) {
  HarmonicVector hv;
  hv.n = n;
  for (int m : orders) hv.values[m] = harmonic(n, m);
  return hv;
}

Rational mhs_star(std::int64_t n, const Composition& s) {
  if (n < 0) throw DomainError("mhs_star: n must be nonnegative");
  if (s.empty()) return Rational(1);
  if (n == 0) return Rational(0);
  // Prefix DP from the innermost index: after processing entry s_j, f[v] is
  // the star sum over (s_j,...,s_k) with outer index bound v.
  auto nn = static_cast<std::size_t>(n);
  std::vector<Rational> f(nn + 1, Rational(1));
  for (auto it = s.entries.rbegin(); it != s.entries.rend(); ++it) {
    int e = *it;
    int a = e < 0 ? -e : e;
    bool barred = e < 0;
    Rational acc(0);
    std::vector<Rational> g(nn + 1);
    g[0] = Rational(0);
    for (std::size_t v = 1; v <= nn; ++v) {
      BigInt p = 1;
      for (int i = 0; i < a; ++i) p *= v;
      Rational term(1, p);
      if (barred && (v % 2 == 1)) term = -term;
      acc += term * f[v];
      g[v] = acc;
    }
    f = std::move(g);
  }
  return f[nn];
}

BigInt stirling1(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw DomainError("stirling1: indices must be nonnegative");
  if (k > n) return BigInt(0);
  std::lock_guard lock(stirling_mu);
  if (stirling_tab.empty()) stirling_tab.push_back({BigInt(1)});
  while (static_cast<std::int64_t>(stirling_tab.size()) <= n) {
    auto r = static_cast<std::int64_t>(stirling_tab.size());
    const auto& prev = stirling_tab.back();
    std::vector<BigInt> row(static_cast<std::size_t>(r) + 1);
    row[0] = 0;
    for (std::int64_t j = 1; j <= r; ++j) {
      BigInt v = (r - 1) >= j ? prev[static_cast<std::size_t>(j)] * (r - 1) : BigInt(0);
      if (j - 1 <= r - 1) v += prev[static_cast<std::size_t>(j - 1)];
      row[static_cast<std::size_t>(j)] = v;
    }
    stirling_tab.push_back(std::move(row));
  }
  return stirling_tab[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Rational stirling1_closed(std::int64_t n, int k) {
  if (n < 1) throw DomainError("stirling1_closed: n must be positive");
  if (k < 1 || k > 5) throw DomainError("stirling1_closed: k must be in 1..5");
  Rational fact(factorial(n - 1));
  Rational h1 = harmonic(n - 1, 1), h2 = harmonic(n - 1, 2);
  Rational h3 = harmonic(n - 1, 3), h4 = harmonic(n - 1, 4);
  switch (k) {
    case 1: return fact;
    case 2: return fact * h1;
    case 3: return fact / 2 * (h1 * h1 - h2);
    case 4: return fact / 6 * (h1 * h1 * h1 - 3 * h1 * h2 + 2 * h3);
    default:
      return fact / 24 *
             (h1 * h1 * h1 * h1 - 6 * h4 - 6 * h1 * h1 * h2 + 3 * h2 * h2 + 8 * h1 * h3);
  }
}

Rational stirling_ratio(std::int64_t n, int m) {
  if (n < 0) throw DomainError("stirling_ratio: n must be nonnegative");
  if (m < 1 || m > 5) throw DomainError("stirling_ratio: m must be in 1..5");
  std::lock_guard lock(ratio_mu);
  if (ratio_tab.empty()) {
    ratio_tab.assign(kRatioOrders, {});
    for (int j = 1; j <= kRatioOrders; ++j) {
      ratio_tab[j - 1].push_back(Rational(0));               // t = 0 unused
      ratio_tab[j - 1].push_back(Rational(j == 1 ? 1 : 0));  // s(1,j)/0!
    }
  }
  std::size_t need = static_cast<std::size_t>(n) + 1;
  while (ratio_tab[0].size() <= need) {
    auto t = static_cast<std::int64_t>(ratio_tab[0].size()) - 1;
    ratio_tab[0].push_back(Rational(1));
    for (int j = 2; j <= kRatioOrders; ++j)
      ratio_tab[j - 1].push_back(ratio_tab[j - 1][static_cast<std::size_t>(t)] +
                                 ratio_tab[j - 2][static_cast<std::size_t>(t)] / t);
  }
  return ratio_tab[m][need];
}

Rational bell_Y(int k, std::int64_t n) {
  if (k < 0) throw DomainError("bell_Y: k must be nonnegative");
  if (n < 0) throw DomainError("bell_Y: n must be nonnegative");
  std::vector<Rational> y(static_cast<std::size_t>(k) + 1);
  y[0] = Rational(1);
  std::vector<Rational> x(static_cast<std::size_t>(k) + 1);  // x[m] = (m-1)! H_n^(m)
  for (int m = 1; m <= k; ++m) x[static_cast<std::size_t>(m)] = Rational(factorial(m - 1)) * harmonic(n, m);
  for (int kk = 0; kk + 1 <= k; ++kk) {
    Rational acc(0);
    for (int i = 0; i <= kk; ++i)
      acc += Rational(binomial(kk, i)) * y[static_cast<std::size_t>(kk - i)] *
             x[static_cast<std::size_t>(i + 1)];
    y[static_cast<std::size_t>(kk + 1)] = acc;
  }
  return y[static_cast<std::size_t>(k)];
}

Rational bell_Y_closed(int k, std::int64_t n) {
  if (k < 1 || k > 4) throw DomainError("bell_Y_closed: k must be in 1..4");
  if (n < 0) throw DomainError("bell_Y_closed: n must be nonnegative");
  Rational h1 = harmonic(n, 1), h2 = harmonic(n, 2);
  Rational h3 = harmonic(n, 3), h4 = harmonic(n, 4);
  switch (k) {
    case 1: return h1;
    case 2: return h1 * h1 + h2;
    case 3: return h1 * h1 * h1 + 3 * h1 * h2 + 2 * h3;
    default:
      return h1 * h1 * h1 * h1 + 8 * h1 * h3 + 6 * h1 * h1 * h2 + 3 * h2 * h2 + 6 * h4;
  }
}

std::vector<std::pair<int, Rational>> binom_recip_coeffs(int k) {
  if (k < 1) throw DomainError("binom_recip_coeffs: k must be positive");
  std::vector<std::pair<int, Rational>> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int r = 1; r <= k; ++r) {
    Rational a = Rational(r) * Rational(binomial(k, r));
    if (r % 2 == 0) a = -a;
    out.emplace_back(r, a);
  }
  return out;
}

Composition parse_composition(const std::string& text) {
  std::vector<int> entries;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) return Composition{};
  while (true) {
    skip_ws();
    std::size_t tok = i;
    bool barred = false;
    int sign = 1;
    if (i < text.size() && (text[i] == 'b' || text[i] == 'B')) {
      barred = true;
      ++i;
    } else if (i < text.size() && text[i] == '-') {
      sign = -1;
      ++i;
    }
    std::size_t digits = i;
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000) throw ParseError("composition entry too large", tok);
      ++i;
    }
    if (i == digits) throw ParseError("expected integer entry", tok);
    if (v == 0) throw ParseError("zero entry not allowed", tok);
    entries.push_back(barred ? -static_cast<int>(v) : sign * static_cast<int>(v));
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("expected ','", i);
    ++i;
  }
  return Composition(std::move(entries));
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return BigInt(0);
  k = std::min(k, n - k);
  BigInt num = 1, den = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    num *= n - k + i;
    den *= i;
  }
  return num / den;
}

BigInt factorial(std::int64_t n) {
  BigInt f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace eulersum
