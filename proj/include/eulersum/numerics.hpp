#pragma once

#include <functional>
#include <vector>

#include "eulersum/bigfloat.hpp"
#include "eulersum/exactcore.hpp"

namespace eulersum {

// Term callables receive the requested working precision in digits and are
// invoked with n = 1, 2, 3, ... strictly ascending within one evaluation, so
// they may carry incremental state (running harmonic numbers); a call with
// n == 1 must reset any such state.
using TermFn = std::function<BigFloat(long n, int digits)>;

// zeta(s) for integer s >= 2, computed through the alternating eta series
// and the factor 1/(1 - 2^{1-s}); cached per (s, digits).
BigFloat zeta_int(int s, int digits);

// log 2 as the accelerated alternating harmonic series; cached per digits.
BigFloat ln_two(int digits);

// Li_p(x) for integer p >= 1 and rational |x| <= 1 (x = 1 needs p >= 2).
// Interior x uses the defining power series with a geometric tail bound;
// x = +-1 reduces to zeta/eta values.
BigFloat polylog(int p, const Rational& x, int digits);

// log(1 - x) for rational x < 1, routed through polylog so the value is
// series-built like every other constant here.
BigFloat ln_one_minus(const Rational& x, int digits);

enum class AccelMethod {
  kCrvz,          // Cohen-Rodriguez Villegas-Zagier, about 0.78 digits/term
  kEulerAverage,  // iterated partial-sum averaging, about 0.33 digits/term
};

// Sum of sum_{k>=1} (-1)^{k-1} a(k) for positive magnitudes a(k).
// The magnitude callable follows the TermFn restart contract. The error
// bound is the difference between two acceleration orders, heuristic but
// validated conservative in the tests.
ValueWithError accelerate_alternating(const TermFn& magnitude,
                                      const PrecisionConfig& cfg,
                                      AccelMethod method = AccelMethod::kCrvz);

// Tail model for sum_with_tail: beyond the cutoff the terms are assumed to
// decay like ln^a(n) / n^b with a <= log_powers and the partial-sum tail
// carried by exponents b = decay - 1 .. decay - 2 + basis_depth.
struct TailFitParams {
  int decay = 2;        // leading algebraic decay exponent q of the terms
  int log_powers = 0;   // highest power of ln n multiplying the decay
  int basis_depth = 4;  // number of successive 1/n^b corrections fitted
  long cutoff = 100000; // partial sums are taken up to this index
};

// Sum of sum_{n>=1} term(n) for series with algebraic tails. Fits the tail
// model on checkpoints in [cutoff/2, cutoff]; a second fit on
// [cutoff/4, cutoff/2] supplies the error estimate.
ValueWithError sum_with_tail(const TermFn& term, const TailFitParams& fit,
                             const PrecisionConfig& cfg);

// Integrand for quad_de: receives the node x plus the stably computed
// distances x - a and b - x, so endpoint-singular factors keep precision.
using IntegrandFn = std::function<BigFloat(const BigFloat& x,
                                           const BigFloat& x_minus_a,
                                           const BigFloat& b_minus_x)>;

// Tanh-sinh quadrature of f over the finite interval [a, b] with level
// doubling; the error bound is the last inter-level difference.
ValueWithError quad_de(const IntegrandFn& f, const Rational& a,
                       const Rational& b, const PrecisionConfig& cfg);

// Weighted multiple harmonic star sum
//   sum_{1 <= k_m <= ... <= k_1 <= n} prod_j x_j^{k_j} / k_j^{s_j}
// with entries and weights aligned as (s_1, ..., s_m; x_1, ..., x_m); the
// last pair is the innermost index. Entries must be unbarred; signs belong
// in the weights.
BigFloat mhs_star_weighted(long n, const Composition& comp,
                           const std::vector<Rational>& weights, int digits);

}  // namespace eulersum
