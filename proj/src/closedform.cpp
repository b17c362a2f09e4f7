#include "eulersum/closedform.hpp"

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "eulersum/numerics.hpp"

namespace eulersum {

namespace {

using Atoms = std::vector<ConstAtom>;

int atom_rank(AtomKind k) {
  switch (k) {
    case AtomKind::kZeta:
      return 0;
    case AtomKind::kLnTwo:
      return 1;
    case AtomKind::kPowLn:
      return 1;
    case AtomKind::kLiHalf:
      return 2;
    case AtomKind::kMhsStar:
      return 3;
  }
  return 4;
}

}  // namespace

ConstAtom ConstAtom::zeta(int s) {
  if (s < 2) throw DomainError("zeta atom needs s >= 2");
  ConstAtom a;
  a.kind = AtomKind::kZeta;
  a.arg = s;
  return a;
}

ConstAtom ConstAtom::ln_two() {
  ConstAtom a;
  a.kind = AtomKind::kLnTwo;
  return a;
}

ConstAtom ConstAtom::li_half(int p) {
  if (p < 2) throw DomainError("lihalf atom needs p >= 2");
  ConstAtom a;
  a.kind = AtomKind::kLiHalf;
  a.arg = p;
  return a;
}

ConstAtom ConstAtom::mhs(long n, Composition c) {
  if (n < 0) throw DomainError("zsk atom needs n >= 0");
  if (c.empty()) throw DomainError("zsk atom needs a nonempty composition");
  ConstAtom a;
  a.kind = AtomKind::kMhsStar;
  a.sub = n;
  a.comp = std::move(c);
  return a;
}

ConstAtom ConstAtom::pow_ln(int j) {
  if (j < 1) throw DomainError("ln2 power needs exponent >= 1");
  ConstAtom a;
  a.kind = AtomKind::kPowLn;
  a.arg = j;
  return a;
}

bool ConstAtom::is_identically_zero() const {
  return kind == AtomKind::kMhsStar && sub == 0 && !comp.empty();
}

std::string ConstAtom::render() const {
  switch (kind) {
    case AtomKind::kZeta:
      return "zeta(" + std::to_string(arg) + ")";
    case AtomKind::kLnTwo:
      return "ln2";
    case AtomKind::kPowLn:
      return arg == 1 ? std::string("ln2") : "ln2^" + std::to_string(arg);
    case AtomKind::kLiHalf:
      return "lihalf(" + std::to_string(arg) + ")";
    case AtomKind::kMhsStar:
      return "zsk(" + std::to_string(sub) + ";" + comp.to_string() + ")";
  }
  return "?";
}

bool operator==(const ConstAtom& a, const ConstAtom& b) {
  return a.kind == b.kind && a.arg == b.arg && a.sub == b.sub &&
         a.comp == b.comp;
}

bool operator<(const ConstAtom& a, const ConstAtom& b) {
  if (atom_rank(a.kind) != atom_rank(b.kind))
    return atom_rank(a.kind) < atom_rank(b.kind);
  if (a.arg != b.arg) return a.arg < b.arg;
  if (a.sub != b.sub) return a.sub < b.sub;
  return a.comp.entries < b.comp.entries;
}

bool operator==(const ConstTerm& a, const ConstTerm& b) {
  return a.coeff == b.coeff && a.atoms == b.atoms;
}

ConstExpr ConstExpr::constant(const Rational& c) {
  ConstExpr e;
  e.add_term(c, {});
  return e;
}

void ConstExpr::add_term(const Rational& coeff, std::vector<ConstAtom> atoms) {
  if (coeff == 0) return;
  std::vector<ConstAtom> flat;
  flat.reserve(atoms.size());
  for (ConstAtom& a : atoms) {
    if (a.is_identically_zero()) return;
    if (a.kind == AtomKind::kPowLn) {
      for (int j = 0; j < a.arg; ++j) flat.push_back(ConstAtom::ln_two());
    } else {
      flat.push_back(std::move(a));
    }
  }
  std::sort(flat.begin(), flat.end());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].atoms == flat) {
      terms_[i].coeff += coeff;
      if (terms_[i].coeff == 0) terms_.erase(terms_.begin() + i);
      return;
    }
  }
  terms_.push_back(ConstTerm{coeff, std::move(flat)});
}

bool operator==(const ConstExpr& a, const ConstExpr& b) {
  return a.terms_ == b.terms_;
}

ConstExpr expr_combine(const ConstExpr& a, const ConstExpr& b, CombineOp op,
                       const Rational& scalar) {
  ConstExpr out;
  switch (op) {
    case CombineOp::kAdd:
    case CombineOp::kSub: {
      const Rational s = (op == CombineOp::kSub) ? Rational(-scalar) : scalar;
      for (const ConstTerm& t : a.terms()) out.add_term(t.coeff, t.atoms);
      for (const ConstTerm& t : b.terms()) out.add_term(s * t.coeff, t.atoms);
      break;
    }
    case CombineOp::kMul: {
      for (const ConstTerm& ta : a.terms()) {
        for (const ConstTerm& tb : b.terms()) {
          Atoms atoms = ta.atoms;
          atoms.insert(atoms.end(), tb.atoms.begin(), tb.atoms.end());
          out.add_term(scalar * ta.coeff * tb.coeff, std::move(atoms));
        }
      }
      break;
    }
  }
  return out;
}

namespace {

BigFloat atom_value(const ConstAtom& a, int digits) {
  switch (a.kind) {
    case AtomKind::kZeta:
      return zeta_int(a.arg, digits);
    case AtomKind::kLnTwo:
      return ln_two(digits);
    case AtomKind::kPowLn:
      return BigFloat::pow_int(ln_two(digits), a.arg);
    case AtomKind::kLiHalf:
      return polylog(a.arg, Rational(1, 2), digits);
    case AtomKind::kMhsStar:
      return BigFloat(mhs_star(a.sub, a.comp), digits);
  }
  throw DomainError("unhandled atom kind");
}

}  // namespace

BigFloat eval_expr(const ConstExpr& e, const PrecisionConfig& cfg) {
  cfg.validate();
  const int wd = cfg.working_digits();
  BigFloat total(0L, wd);
  for (const ConstTerm& t : e.terms()) {
    BigFloat v(t.coeff, wd);
    for (const ConstAtom& a : t.atoms) v = v * atom_value(a, wd);
    total = total + v;
  }
  return total;
}

namespace {

std::string render_atoms(const Atoms& atoms) {
  std::string out;
  std::size_t i = 0;
  while (i < atoms.size()) {
    if (!out.empty()) out += "*";
    if (atoms[i].kind == AtomKind::kLnTwo) {
      std::size_t run = 0;
      while (i < atoms.size() && atoms[i].kind == AtomKind::kLnTwo) {
        ++run;
        ++i;
      }
      out += run == 1 ? "ln2" : "ln2^" + std::to_string(run);
    } else {
      out += atoms[i].render();
      ++i;
    }
  }
  return out;
}

}  // namespace

std::string render_expr(const ConstExpr& e) {
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (const ConstTerm& t : e.terms()) {
    const bool neg = t.coeff < 0;
    const Rational mag = neg ? Rational(-t.coeff) : t.coeff;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string body = render_atoms(t.atoms);
    if (body.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += body;
    } else {
      out += mag.str() + "*" + body;
    }
  }
  return out;
}

std::string expr_to_json(const ConstExpr& e) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ConstTerm& t : e.terms()) {
    nlohmann::json jt;
    jt["coeff"] = t.coeff.str();
    nlohmann::json atoms = nlohmann::json::array();
    for (const ConstAtom& a : t.atoms) {
      nlohmann::json ja;
      switch (a.kind) {
        case AtomKind::kZeta:
          ja["kind"] = "zeta";
          ja["s"] = a.arg;
          break;
        case AtomKind::kLnTwo:
        case AtomKind::kPowLn:
          ja["kind"] = "ln2";
          break;
        case AtomKind::kLiHalf:
          ja["kind"] = "lihalf";
          ja["p"] = a.arg;
          break;
        case AtomKind::kMhsStar:
          ja["kind"] = "zsk";
          ja["n"] = a.sub;
          ja["entries"] = a.comp.entries;
          break;
      }
      atoms.push_back(std::move(ja));
    }
    jt["atoms"] = std::move(atoms);
    arr.push_back(std::move(jt));
  }
  return arr.dump();
}

namespace {

struct ExprParser {
  const std::string& s;
  std::size_t i = 0;

  bool eof() const { return i >= s.size(); }
  char peek() const { return s[i]; }

  void ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, at);
  }

  void expect(char c) {
    if (eof() || s[i] != c)
      fail(std::string("expected '") + c + "'", i);
    ++i;
  }

  std::string digits() {
    std::size_t start = i;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected integer", start);
    return s.substr(start, i - start);
  }

  long integer() {
    std::size_t start = i;
    try {
      return std::stol(digits());
    } catch (const std::out_of_range&) {
      fail("integer out of range", start);
    }
  }

  int signed_entry() {
    bool neg = false;
    if (!eof() && (peek() == '-' || peek() == 'b' || peek() == 'B')) {
      neg = true;
      ++i;
    }
    long v = integer();
    return static_cast<int>(neg ? -v : v);
  }

  Rational rational() {
    BigInt num(digits());
    if (!eof() && peek() == '/') {
      ++i;
      std::size_t dpos = i;
      BigInt den(digits());
      if (den == 0) fail("zero denominator", dpos);
      return Rational(num) / Rational(den);
    }
    return Rational(num);
  }

  ConstAtom atom() {
    std::size_t start = i;
    std::string id;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(s[i])))) {
      id += s[i];
      ++i;
    }
    try {
      if (id == "zeta") {
        expect('(');
        long v = integer();
        expect(')');
        return ConstAtom::zeta(static_cast<int>(v));
      }
      if (id == "ln2") {
        if (!eof() && peek() == '^') {
          ++i;
          long j = integer();
          return ConstAtom::pow_ln(static_cast<int>(j));
        }
        return ConstAtom::ln_two();
      }
      if (id == "lihalf") {
        expect('(');
        long p = integer();
        expect(')');
        return ConstAtom::li_half(static_cast<int>(p));
      }
      if (id == "zsk") {
        expect('(');
        long n = integer();
        expect(';');
        std::vector<int> entries;
        entries.push_back(signed_entry());
        while (!eof() && peek() == ',') {
          ++i;
          entries.push_back(signed_entry());
        }
        expect(')');
        return ConstAtom::mhs(n, Composition(std::move(entries)));
      }
    } catch (const DomainError& e) {
      fail(e.what(), start);
    }
    fail("unknown atom '" + id + "'", start);
  }
};

}  // namespace

ConstExpr parse_expr(const std::string& text) {
  ExprParser p{text};
  ConstExpr e;
  p.ws();
  if (p.eof()) p.fail("empty expression", 0);
  while (true) {
    int sign = 1;
    if (p.peek() == '+' || p.peek() == '-') {
      if (p.peek() == '-') sign = -1;
      ++p.i;
      p.ws();
      if (p.eof()) p.fail("expected term", p.i);
    }
    Rational coeff(sign);
    std::vector<ConstAtom> atoms;
    if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
      coeff *= p.rational();
    } else if (std::isalpha(static_cast<unsigned char>(p.peek()))) {
      atoms.push_back(p.atom());
    } else {
      p.fail("expected term", p.i);
    }
    while (!p.eof() && p.peek() == '*') {
      ++p.i;
      if (p.eof() || !std::isalpha(static_cast<unsigned char>(p.peek())))
        p.fail("expected atom after '*'", p.i);
      atoms.push_back(p.atom());
    }
    e.add_term(coeff, std::move(atoms));
    p.ws();
    if (p.eof()) break;
    if (p.peek() != '+' && p.peek() != '-')
      p.fail("expected '+' or '-' between terms", p.i);
  }
  return e;
}

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

ConstAtom Z(int s) { return ConstAtom::zeta(s); }
ConstAtom L() { return ConstAtom::ln_two(); }
ConstAtom Lp(int j) { return ConstAtom::pow_ln(j); }
ConstAtom Li(int p) { return ConstAtom::li_half(p); }

ConstAtom S(long n, std::initializer_list<int> entries) {
  return ConstAtom::mhs(n, Composition(entries));
}

}  // namespace

ConstExpr rhs_thm11(Family family, int k) {
  if (k < 1) throw DomainError("rhs_thm11 needs k >= 1");
  const long K = k - 1;
  ConstExpr e;
  if (family == Family::kQuadratic) {
    e.add_term(R(-5, 16), {Z(4)});
    e.add_term(R(-1, 4), {Z(2), Lp(2)});
    e.add_term(R(7, 8), {Z(3), L()});
    e.add_term(R(7, 8), {Z(3), S(K, {-1})});
    e.add_term(R(-1, 4), {Z(3), S(K, {1})});
    e.add_term(R(-1, 2), {Z(2), S(K, {-2})});
    e.add_term(R(-1), {S(K, {3, -1})});
    e.add_term(R(1), {S(K, {1, 2, -1})});
    e.add_term(R(1, 2), {Z(2), S(K, {1, -1})});
    e.add_term(R(1), {S(K, {2, 1, -1})});
    e.add_term(R(1), {L(), S(K, {-3})});
    e.add_term(R(-1), {L(), S(K, {3})});
    e.add_term(R(-1, 2), {L(), Z(2), S(K, {-1})});
    e.add_term(R(1, 2), {L(), Z(2), S(K, {1})});
    e.add_term(R(1, 2), {Lp(2), S(K, {-2})});
    e.add_term(R(-1, 2), {Lp(2), S(K, {2})});
    e.add_term(R(-1), {L(), S(K, {2, -1})});
    e.add_term(R(1), {L(), S(K, {2, 1})});
    e.add_term(R(-1), {L(), S(K, {1, -2})});
    e.add_term(R(1), {L(), S(K, {1, 2})});
  } else {
    e.add_term(R(-5, 16), {Z(4)});
    e.add_term(R(9, 8), {Z(3), L()});
    e.add_term(R(-3, 4), {Z(2), Lp(2)});
    e.add_term(R(1, 4), {Lp(4)});
    e.add_term(R(9, 8), {Z(3), S(K, {-1})});
    e.add_term(R(-1, 2), {Z(2), S(K, {-2})});
    e.add_term(R(-1), {S(K, {3, -1})});
    e.add_term(R(3, 2), {Z(2), S(K, {1, -1})});
    e.add_term(R(-3, 4), {Z(3), S(K, {1})});
    e.add_term(R(3), {S(K, {1, 2, -1})});
    e.add_term(R(3), {S(K, {2, 1, -1})});
    e.add_term(R(-6), {S(K, {1, 1, 1, -1})});
    e.add_term(R(1), {L(), S(K, {-3})});
    e.add_term(R(-1), {L(), S(K, {3})});
    e.add_term(R(-3), {L(), S(K, {2, -1})});
    e.add_term(R(3), {L(), S(K, {2, 1})});
    e.add_term(R(-3), {L(), S(K, {1, -2})});
    e.add_term(R(3), {L(), S(K, {1, 2})});
    e.add_term(R(6), {L(), S(K, {1, 1, -1})});
    e.add_term(R(-6), {L(), S(K, {1, 1, 1})});
    e.add_term(R(-3), {Lp(2), S(K, {1, -1})});
    e.add_term(R(3), {Lp(2), S(K, {1, 1})});
    e.add_term(R(3, 2), {Lp(2), S(K, {-2})});
    e.add_term(R(-3, 2), {Lp(2), S(K, {2})});
    e.add_term(R(1), {Lp(3), S(K, {-1})});
    e.add_term(R(-1), {Lp(3), S(K, {1})});
    e.add_term(R(-3, 2), {L(), Z(2), S(K, {-1})});
    e.add_term(R(3, 2), {L(), Z(2), S(K, {1})});
  }
  return e;
}

ConstExpr rhs_cor29(Cor29Kind which, int k) {
  if (k < 1) throw DomainError("rhs_cor29 needs k >= 1");
  const long K = k - 1;
  ConstExpr e;
  if (which == Cor29Kind::kY3Combo) {
    e.add_term(R(1, 4), {Lp(4)});
    e.add_term(R(-6), {S(K, {1, 1, 1, -1})});
    e.add_term(R(1), {Lp(3), S(K, {-1})});
    e.add_term(R(-1), {Lp(3), S(K, {1})});
    e.add_term(R(-3), {Lp(2), S(K, {1, -1})});
    e.add_term(R(3), {Lp(2), S(K, {1, 1})});
    e.add_term(R(6), {L(), S(K, {1, 1, -1})});
    e.add_term(R(-6), {L(), S(K, {1, 1, 1})});
  } else {
    e.add_term(R(-5, 16), {Z(4)});
    e.add_term(R(3, 4), {Z(3), L()});
    e.add_term(R(1), {L(), S(K, {-3})});
    e.add_term(R(-1), {L(), S(K, {3})});
    e.add_term(R(3, 4), {Z(3), S(K, {-1})});
    e.add_term(R(-1, 2), {Z(2), S(K, {-2})});
    e.add_term(R(-1), {S(K, {3, -1})});
  }
  return e;
}

ConstExpr rhs_eq44(int k) {
  if (k < 1) throw DomainError("rhs_eq44 needs k >= 1");
  const long K = k - 1;
  ConstExpr e;
  e.add_term(R(-5, 8), {Z(3), S(K, {-1})});
  e.add_term(R(1, 2), {Z(2), S(K, {-2})});
  e.add_term(R(-1, 2), {Lp(2), S(K, {-2})});
  e.add_term(R(1), {L(), S(K, {2, -1})});
  e.add_term(R(-1), {L(), S(K, {2, 1})});
  e.add_term(R(-1), {L(), S(K, {-3})});
  e.add_term(R(1), {L(), S(K, {3})});
  e.add_term(R(1, 2), {Lp(2), S(K, {2})});
  e.add_term(R(-1), {S(K, {2, 1, -1})});
  e.add_term(R(1), {S(K, {3, -1})});
  return e;
}

ConstExpr rhs_known(const std::string& name, int m) {
  ConstExpr e;
  if (name == "cor28_h3") {
    e.add_term(R(5, 8), {Z(4)});
    e.add_term(R(3, 4), {Z(2), Lp(2)});
    e.add_term(R(-1, 4), {Lp(4)});
    e.add_term(R(-9, 8), {Z(3), L()});
    return e;
  }
  if (name == "cor28_hh2") {
    e.add_term(R(2), {Li(4)});
    e.add_term(R(1, 12), {Lp(4)});
    e.add_term(R(7, 8), {Z(3), L()});
    e.add_term(R(-1, 4), {Z(2), Lp(2)});
    e.add_term(R(-1), {Z(4)});
    return e;
  }
  if (name == "eq324") {
    e.add_term(R(7, 4), {Z(3), L()});
    e.add_term(R(-5, 16), {Z(4)});
    return e;
  }
  if (name == "eq325") {
    e.add_term(R(19, 16), {Z(4)});
    e.add_term(R(-3, 4), {Z(3), L()});
    return e;
  }
  if (name == "alt_h_n3") {
    e.add_term(R(-2), {Li(4)});
    e.add_term(R(11, 4), {Z(4)});
    e.add_term(R(1, 2), {Z(2), Lp(2)});
    e.add_term(R(-1, 12), {Lp(4)});
    e.add_term(R(-7, 4), {Z(3), L()});
    return e;
  }
  if (name == "thm27") {
    if (m < 1) throw DomainError("thm27 needs m >= 1");
    e.add_term(Rational(factorial(m)), {Li(m + 1)});
    return e;
  }
  if (name == "eq318") {
    if (m < 1) throw DomainError("eq318 needs m >= 1");
    Rational c(factorial(m));
    if (m % 2 == 1) c = -c;
    e.add_term(c, {Li(m + 1)});
    return e;
  }
  if (name == "int_ln3_1px") {
    e.add_term(R(6), {Z(4)});
    e.add_term(R(3, 2), {Z(2), Lp(2)});
    e.add_term(R(-1, 4), {Lp(4)});
    e.add_term(R(-21, 4), {Z(3), L()});
    e.add_term(R(-6), {Li(4)});
    return e;
  }
  if (name == "int_ln4_1px") {
    e.add_term(R(-24), {Li(5)});
    e.add_term(R(-24), {L(), Li(4)});
    e.add_term(R(-4, 5), {Lp(5)});
    e.add_term(R(-21, 2), {Z(3), Lp(2)});
    e.add_term(R(24), {Z(5)});
    e.add_term(R(4), {Z(2), Lp(3)});
    return e;
  }
  if (name == "intro_w7") {
    e.add_term(R(231, 16), {Z(7)});
    e.add_term(R(-51, 4), {Z(3), Z(4)});
    e.add_term(R(2), {Z(2), Z(5)});
    return e;
  }
  if (name == "intro_w9a") {
    e.add_term(R(-1069, 36), {Z(9)});
    e.add_term(R(4, 3), {Z(3), Z(3), Z(3)});
    e.add_term(R(7), {Z(2), Z(7)});
    e.add_term(R(-4, 3), {Z(3), Z(6)});
    e.add_term(R(33, 2), {Z(4), Z(5)});
    return e;
  }
  if (name == "intro_w9b") {
    e.add_term(R(-617, 72), {Z(9)});
    e.add_term(R(1), {Z(3), Z(3), Z(3)});
    e.add_term(R(91, 8), {Z(2), Z(7)});
    e.add_term(R(-17, 4), {Z(4), Z(5)});
    e.add_term(R(-329, 84), {Z(3), Z(6)});
    return e;
  }
  if (name == "cor31_cubic") {
    e.add_term(R(-5, 16), {Z(4)});
    e.add_term(R(9, 8), {Z(3), L()});
    e.add_term(R(-3, 4), {Z(2), Lp(2)});
    e.add_term(R(1, 4), {Lp(4)});
    e.add_term(R(-2), {L()});
    e.add_term(R(3), {Lp(2)});
    e.add_term(R(-2), {Lp(3)});
    e.add_term(R(3), {Z(2), L()});
    e.add_term(R(-15, 8), {Z(3)});
    e.add_term(R(-1), {Z(2)});
    e.add_constant(R(1));
    return e;
  }
  if (name == "cor31_quadratic") {
    e.add_term(R(-5, 16), {Z(4)});
    e.add_term(R(-1, 4), {Z(2), Lp(2)});
    e.add_term(R(7, 8), {Z(3), L()});
    e.add_term(R(-9, 8), {Z(3)});
    e.add_term(R(1), {Z(2), L()});
    e.add_term(R(2), {L()});
    e.add_term(R(-1), {Lp(2)});
    e.add_constant(R(-1));
    return e;
  }
  throw DomainError("unknown closed-form name: " + name);
}

}  // namespace eulersum
