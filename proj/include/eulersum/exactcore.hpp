#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eulersum {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text input; position is a 0-based character offset into the input.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos) : Error(msg), position(pos) {}
};

struct DomainError : Error {
  using Error::Error;
};

// An evaluator could not push its error estimate below tolerance within the
// configured term/level budget.
struct ConvergenceFailure : Error {
  using Error::Error;
};

// Signed multi-index (s_1,...,s_k). A negative entry -n is a barred entry:
// the corresponding index carries sign (-1)^{n_j} and exponent n. Entries are
// never zero. The empty composition is legal and denotes the empty product.
struct Composition {
  std::vector<int> entries;

  Composition() = default;
  explicit Composition(std::vector<int> e);
  Composition(std::initializer_list<int> e);

  int depth() const { return static_cast<int>(entries.size()); }
  int weight() const;
  bool empty() const { return entries.empty(); }
  bool operator==(const Composition&) const = default;
  auto operator<=>(const Composition&) const = default;
  // Canonical text form uses minus signs: "3,-1". parse_composition accepts
  // this and the "b" alias ("3,b1").
  std::string to_string() const;
};

// Index n together with H_n^(m) for each requested order m.
struct HarmonicVector {
  std::int64_t n = 0;
  std::map<int, Rational> values;
};

// H_n^(m) = sum_{j<=n} j^{-m}, exactly; 0 for n = 0. Values are cached per
// order as incrementally grown prefix tables.
Rational harmonic(std::int64_t n, int m);

HarmonicVector harmonic_vector(std::int64_t n, const std::vector<int>& orders);

// zeta*_n(s) = sum_{n>=n_1>=...>=n_k>=1} prod_j sgn(s_j)^{n_j} n_j^{-|s_j|},
// exactly. 1 for the empty composition, 0 for n = 0 with nonempty s.
Rational mhs_star(std::int64_t n, const Composition& s);

// Unsigned Stirling number of the first kind via
// s(n,k) = s(n-1,k-1) + (n-1) s(n-1,k); memoized triangular table.
BigInt stirling1(std::int64_t n, std::int64_t k);

// The explicit harmonic-number formulas for s(n,k), k in 1..5; must equal
// stirling1(n,k) exactly.
Rational stirling1_closed(std::int64_t n, int k);

// s(n+1,m+1)/n! as one exact rational. Computed via the ratio recurrence
// u_j(t) = s(t,j)/(t-1)!, u_j(t+1) = u_j(t) + u_{j-1}(t)/t, so the factorial
// never materializes. Cached. Requires m in 1..5.
Rational stirling_ratio(std::int64_t n, int m);

// Complete Bell polynomial Y_k evaluated at x_m = (m-1)! H_n^(m), via the
// recurrence Y_{k+1} = sum_{i<=k} C(k,i) Y_{k-i} x_{i+1}; Y_0 = 1.
Rational bell_Y(int k, std::int64_t n);

// The displayed Y_1..Y_4 formulas; must equal bell_Y(k,n) exactly.
Rational bell_Y_closed(int k, std::int64_t n);

// Pairs (r, (-1)^{r+1} r C(k,r)) for r = 1..k, the partial-fraction
// coefficients with 1/C(n+k,k) = sum_r A_r/(n+r) for every n >= 1.
std::vector<std::pair<int, Rational>> binom_recip_coeffs(int k);

// Comma-separated signed entries; "b" prefix is an alias for a negative
// (barred) entry; whitespace ignored; empty text is the empty composition.
Composition parse_composition(const std::string& text);

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::int64_t n);

}  // namespace eulersum
