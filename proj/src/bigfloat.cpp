#include "eulersum/bigfloat.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace eulersum {

namespace {

// mpfr wants binary precision; a fixed slack covers conversion rounding.
mpfr_prec_t bits_for(int digits) {
  if (digits < 1) {
    throw DomainError("precision must be at least 1 digit");
  }
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 16;
}

}  // namespace

BigFloat::BigFloat(int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for(digits));
  mpfr_set_nan(v_);
}

BigFloat::BigFloat(long v, int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for(digits));
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& q, int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for(digits));
  mpfr_set_q(v_, q.backend().data(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : digits_(o.digits_) {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    digits_ = o.digits_;
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) {
    mpfr_swap(v_, o.v_);
    digits_ = o.digits_;
  }
  return *this;
}

bool BigFloat::is_finite() const { return mpfr_number_p(v_) != 0; }
bool BigFloat::is_nan() const { return mpfr_nan_p(v_) != 0; }
int BigFloat::sign() const {
  if (mpfr_nan_p(v_)) {
    throw DomainError("sign of nan");
  }
  return mpfr_sgn(v_);
}

namespace {

int min_digits(const BigFloat& a, const BigFloat& b) {
  return a.precision_digits() < b.precision_digits() ? a.precision_digits()
                                                     : b.precision_digits();
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(min_digits(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(min_digits(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(min_digits(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(min_digits(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(digits_);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, long b) {
  BigFloat r(a.precision_digits());
  mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, long b) {
  BigFloat r(a.precision_digits());
  mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, long b) {
  BigFloat r(a.precision_digits());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, long b) {
  BigFloat r(a.precision_digits());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

bool operator<(const BigFloat& a, const BigFloat& b) {
  return mpfr_less_p(a.v_, b.v_) != 0;
}

bool operator<=(const BigFloat& a, const BigFloat& b) {
  return mpfr_lessequal_p(a.v_, b.v_) != 0;
}

bool operator==(const BigFloat& a, const BigFloat& b) {
  return mpfr_equal_p(a.v_, b.v_) != 0;
}

BigFloat BigFloat::abs() const {
  BigFloat r(digits_);
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt(const BigFloat& x) {
  BigFloat r(x.digits_);
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::log(const BigFloat& x) {
  BigFloat r(x.digits_);
  mpfr_log(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::log1p(const BigFloat& x) {
  BigFloat r(x.digits_);
  mpfr_log1p(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp(const BigFloat& x) {
  BigFloat r(x.digits_);
  mpfr_exp(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow_int(const BigFloat& base, long e) {
  BigFloat r(base.digits_);
  mpfr_pow_si(r.v_, base.v_, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow10(long e, int digits) {
  BigFloat r(digits);
  mpfr_set_si(r.v_, 10, MPFR_RNDN);
  mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

double BigFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigFloat::to_string(int significant) const {
  if (significant < 1) {
    throw DomainError("need at least 1 significant digit");
  }
  if (mpfr_nan_p(v_)) {
    return "nan";
  }
  if (mpfr_inf_p(v_)) {
    return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  }
  if (mpfr_zero_p(v_)) {
    return "0";
  }
  mpfr_exp_t e10 = 0;
  char* s = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(significant),
                         v_, MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(digits.begin());
  }
  // digits represents 0.<digits> * 10^e10
  std::string out;
  if (e10 >= -3 && e10 <= significant + 4) {
    if (e10 <= 0) {
      out = "0." + std::string(static_cast<size_t>(-e10), '0') + digits;
    } else if (static_cast<size_t>(e10) >= digits.size()) {
      out = digits + std::string(static_cast<size_t>(e10) - digits.size(), '0');
    } else {
      out = digits.substr(0, static_cast<size_t>(e10)) + "." +
            digits.substr(static_cast<size_t>(e10));
    }
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) {
      out += "." + digits.substr(1);
    }
    long ee = static_cast<long>(e10) - 1;
    out += "e";
    out += (ee < 0) ? "-" : "+";
    long ea = ee < 0 ? -ee : ee;
    std::string es = std::to_string(ea);
    if (es.size() < 2) {
      es.insert(es.begin(), '0');
    }
    out += es;
  }
  return sign + out;
}

BigFloat BigFloat::from_string(const std::string& text, int digits) {
  BigFloat r(digits);
  if (text.empty() ||
      mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw ParseError("not a decimal number: " + text, 0);
  }
  return r;
}

BigFloat BigFloat::native_log2(int digits) {
  BigFloat r(digits);
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::native_pi(int digits) {
  BigFloat r(digits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::native_zeta(unsigned long s, int digits) {
  BigFloat r(digits);
  mpfr_zeta_ui(r.v_, s, MPFR_RNDN);
  return r;
}

void PrecisionConfig::validate() const {
  if (target_digits < 1) {
    throw DomainError("target_digits must be positive");
  }
  if (guard_digits < 0) {
    throw DomainError("guard_digits must be nonnegative");
  }
  if (acceleration_order < 0) {
    throw DomainError("acceleration_order must be nonnegative");
  }
  if (max_terms < 2 * static_cast<long>(acceleration_order)) {
    throw DomainError("max_terms must be at least twice acceleration_order");
  }
  if (max_terms < 1) {
    throw DomainError("max_terms must be positive");
  }
}

}  // namespace eulersum
