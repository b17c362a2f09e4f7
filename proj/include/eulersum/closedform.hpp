#pragma once

#include <string>
#include <vector>

#include "eulersum/bigfloat.hpp"
#include "eulersum/exactcore.hpp"

namespace eulersum {

// Constant atoms appearing in the closed forms: zeta values, ln 2,
// polylogarithms at one half, and finite multiple harmonic star values.
// PowLn is a rendering convenience for powers of ln 2; normalization
// expands it into repeated LnTwo atoms, so normalized expressions never
// contain it.
enum class AtomKind { kZeta, kLnTwo, kLiHalf, kMhsStar, kPowLn };

struct ConstAtom {
  AtomKind kind = AtomKind::kLnTwo;
  int arg = 0;       // s for kZeta, p for kLiHalf, exponent for kPowLn
  long sub = 0;      // subscript n for kMhsStar
  Composition comp;  // entries for kMhsStar, signed (negative = barred)

  static ConstAtom zeta(int s);
  static ConstAtom ln_two();
  static ConstAtom li_half(int p);
  static ConstAtom mhs(long n, Composition c);
  static ConstAtom pow_ln(int j);

  // True for star values over an empty range, which vanish identically.
  bool is_identically_zero() const;
  std::string render() const;

  friend bool operator==(const ConstAtom& a, const ConstAtom& b);
  friend bool operator<(const ConstAtom& a, const ConstAtom& b);
};

struct ConstTerm {
  Rational coeff;
  std::vector<ConstAtom> atoms;  // canonically sorted multiset

  friend bool operator==(const ConstTerm& a, const ConstTerm& b);
};

// Rational linear combination of products of constant atoms. Terms keep
// the order in which they were first added; adding a term whose atom
// multiset matches an existing one merges coefficients, and zero terms
// are dropped.
class ConstExpr {
 public:
  ConstExpr() = default;

  static ConstExpr constant(const Rational& c);

  void add_term(const Rational& coeff, std::vector<ConstAtom> atoms);
  void add_constant(const Rational& c) { add_term(c, {}); }

  const std::vector<ConstTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const ConstExpr& a, const ConstExpr& b);

 private:
  std::vector<ConstTerm> terms_;
};

enum class CombineOp { kAdd, kSub, kMul };

// Exact structural algebra; mul distributes over terms and unions the
// atom multisets. The optional scalar multiplies b's contribution.
ConstExpr expr_combine(const ConstExpr& a, const ConstExpr& b, CombineOp op,
                       const Rational& scalar = Rational(1));

BigFloat eval_expr(const ConstExpr& e, const PrecisionConfig& cfg);

// Canonical text form, e.g. "-5/16*zeta(4) + 7/8*zeta(3)*ln2 + zsk(2;3,-1)";
// parse_expr round-trips it.
std::string render_expr(const ConstExpr& e);
ConstExpr parse_expr(const std::string& text);

// JSON term list: [{"coeff": "...", "atoms": [...]}, ...] as a string.
std::string expr_to_json(const ConstExpr& e);

enum class Family { kQuadratic, kCubic };
enum class Cor29Kind { kY3Combo, kH3Order };

// Shifted-sum closed forms parameterized by k; every star subscript is
// instantiated at k-1, and star atoms over an empty range are dropped.
ConstExpr rhs_thm11(Family family, int k);
ConstExpr rhs_cor29(Cor29Kind which, int k);

// Auxiliary double-sum closed form; the half-ln^2 term takes the unbarred
// star value, since the barred variant disagrees numerically for k >= 2.
ConstExpr rhs_eq44(int k);

// Fixed transcribed closed forms by registry name; m parameterizes the
// "thm27" family and is ignored otherwise.
ConstExpr rhs_known(const std::string& name, int m = 0);

}  // namespace eulersum
