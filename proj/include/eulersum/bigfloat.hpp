#pragma once

#include <mpfr.h>

#include <string>

#include "eulersum/exactcore.hpp"

namespace eulersum {

// Precision-tagged arbitrary-precision real. The tag is decimal digits; the
// precision of any binary operation's result is the minimum of the operand
// tags (it never silently exceeds it). Exact operands (long, Rational) adopt
// the float operand's tag. Rounding is to nearest throughout.
class BigFloat {
 public:
  explicit BigFloat(int digits = 30);
  BigFloat(long v, int digits);
  BigFloat(const Rational& q, int digits);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  ~BigFloat();
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;

  int precision_digits() const { return digits_; }
  bool is_finite() const;
  bool is_nan() const;
  int sign() const;  // -1, 0, +1

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
  BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
  BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }
  BigFloat& operator/=(const BigFloat& b) { return *this = *this / b; }

  friend BigFloat operator+(const BigFloat& a, long b);
  friend BigFloat operator-(const BigFloat& a, long b);
  friend BigFloat operator*(const BigFloat& a, long b);
  friend BigFloat operator/(const BigFloat& a, long b);
  friend BigFloat operator*(long a, const BigFloat& b) { return b * a; }
  friend BigFloat operator-(long a, const BigFloat& b) { return -(b - a); }

  friend bool operator<(const BigFloat& a, const BigFloat& b);
  friend bool operator<=(const BigFloat& a, const BigFloat& b);
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }
  friend bool operator==(const BigFloat& a, const BigFloat& b);

  BigFloat abs() const;
  static BigFloat sqrt(const BigFloat& x);
  static BigFloat log(const BigFloat& x);  // natural logarithm
  static BigFloat log1p(const BigFloat& x);  // ln(1+x), stable near 0
  static BigFloat exp(const BigFloat& x);
  static BigFloat pow_int(const BigFloat& base, long e);
  // 10^e at the given precision; used for tolerance thresholds.
  static BigFloat pow10(long e, int digits);

  double to_double() const;
  // Round-trippable decimal form with the given significant digits;
  // positional when the exponent is moderate, scientific otherwise.
  std::string to_string(int significant) const;
  static BigFloat from_string(const std::string& text, int digits);

  // mpfr built-ins, used only as independent oracles in tests.
  static BigFloat native_log2(int digits);
  static BigFloat native_pi(int digits);
  static BigFloat native_zeta(unsigned long s, int digits);

  // Escape hatch for module internals; precision tag stays authoritative.
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
  int digits_;
};

// target + guard is the working precision every evaluator computes at;
// max_terms caps series length; acceleration_order 0 lets the accelerator
// pick its order from the working precision.
struct PrecisionConfig {
  int target_digits = 30;
  int guard_digits = 15;
  long max_terms = 100000;
  int acceleration_order = 0;

  int working_digits() const { return target_digits + guard_digits; }
  void validate() const;
};

// error_bound is heuristic (inter-order / inter-level / inter-window
// differences), not a rigorous enclosure; see each producer.
struct ValueWithError {
  BigFloat value;
  BigFloat error_bound;
};

}  // namespace eulersum
