#include "diracops/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace diracops {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Expr run() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("trailing input", pos_);
    return e;
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Expr expr() {
    Expr e;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Expr t = term();
    if (neg) {
      Expr n;
      n.kind = Expr::Kind::Neg;
      n.kids.push_back(std::move(t));
      t = std::move(n);
    }
    e = std::move(t);
    for (;;) {
      if (eat('+')) {
        Expr n;
        n.kind = Expr::Kind::Add;
        n.kids.push_back(std::move(e));
        n.kids.push_back(term());
        e = std::move(n);
      } else if (eat('-')) {
        Expr n;
        n.kind = Expr::Kind::Sub;
        n.kids.push_back(std::move(e));
        n.kids.push_back(term());
        e = std::move(n);
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = factor();
    while (eat('*')) {
      Expr n;
      n.kind = Expr::Kind::Mul;
      n.kids.push_back(std::move(e));
      n.kids.push_back(factor());
      e = std::move(n);
    }
    return e;
  }

  Expr factor() {
    Expr b = base();
    if (eat('^')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_]))
        throw SyntaxError("expected nonnegative integer exponent", pos_);
      Expr n;
      n.kind = Expr::Kind::Pow;
      n.exponent = (int)read_nat();
      n.kids.push_back(std::move(b));
      return n;
    }
    return b;
  }

  unsigned long read_nat() {
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
      v = v * 10 + (unsigned long)(text_[pos_++] - '0');
    return v;
  }

  Expr base() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == 'x' || c == 'y' || c == 'h' || c == 'Q' || c == 'D') {
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::Sym;
      e.sym = c;
      return e;
    }
    if (std::isdigit((unsigned char)c)) {
      unsigned long num = read_nat();
      unsigned long den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        size_t slash = pos_++;
        if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_]))
          throw SyntaxError("expected denominator", slash + 1);
        den = read_nat();
        if (den == 0) throw SyntaxError("zero denominator", slash + 1);
      }
      Expr e;
      e.kind = Expr::Kind::Num;
      e.num = rat((long)num, (long)den);
      return e;
    }
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (!eat(')')) throw SyntaxError("expected ')'", pos_);
      return e;
    }
    if (c == '[') {
      ++pos_;
      Expr n;
      n.kind = Expr::Kind::Bracket;
      n.kids.push_back(expr());
      if (!eat(',')) throw SyntaxError("expected ',' in bracket", pos_);
      n.kids.push_back(expr());
      if (!eat(']')) throw SyntaxError("expected ']'", pos_);
      return n;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }
};

}  // namespace

Expr parse(const std::string& text) { return Parser(text).run(); }

AlgebraElement evaluate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Sym:
      switch (e.sym) {
        case 'x': return AlgebraElement::gen(Gen::X);
        case 'y': return AlgebraElement::gen(Gen::Y);
        case 'h': return AlgebraElement::gen(Gen::H);
        case 'Q': return AlgebraElement::monomial({2, 0, 0});
        default: return AlgebraElement::monomial({0, 2, 0});  // D
      }
    case Expr::Kind::Num: return AlgebraElement::one() * e.num;
    case Expr::Kind::Add: return evaluate(e.kids[0]) + evaluate(e.kids[1]);
    case Expr::Kind::Sub: return evaluate(e.kids[0]) - evaluate(e.kids[1]);
    case Expr::Kind::Neg: return -evaluate(e.kids[0]);
    case Expr::Kind::Mul: return multiply(evaluate(e.kids[0]), evaluate(e.kids[1]));
    case Expr::Kind::Pow: return element_pow(evaluate(e.kids[0]), e.exponent);
    default: return super_commutator(evaluate(e.kids[0]), evaluate(e.kids[1]));
  }
}

namespace {

void append_power(std::ostringstream& os, bool& first, char sym, int deg) {
  if (deg == 0) return;
  if (!first) os << '*';
  first = false;
  os << sym;
  if (deg > 1) os << '^' << deg;
}

std::string format_monomial(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  append_power(os, first, 'x', m.xdeg);
  append_power(os, first, 'y', m.ydeg);
  append_power(os, first, 'h', m.hdeg);
  return os.str();
}

// Graded lexicographic, descending: higher total degree first, then
// lexicographically larger (xdeg, ydeg, hdeg) first.
bool term_order(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return std::tie(a.xdeg, a.ydeg, a.hdeg) > std::tie(b.xdeg, b.ydeg, b.hdeg);
}

}  // namespace

std::string format_element(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<Monomial, Scalar>> terms(a.terms().begin(), a.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& l, const auto& r) { return term_order(l.first, r.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Scalar coef = c;
    if (first) {
      if (coef < 0) {
        os << '-';
        coef = -coef;
      }
      first = false;
    } else {
      os << (coef < 0 ? " - " : " + ");
      if (coef < 0) coef = -coef;
    }
    std::string mono = format_monomial(m);
    if (mono.empty()) {
      os << to_string(coef);
    } else {
      if (coef != 1) os << to_string(coef) << '*';
      os << mono;
    }
  }
  return os.str();
}

}  // namespace diracops
