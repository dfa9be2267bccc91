#include "diracops/algebra.hpp"

#include <utility>

namespace diracops {

AlgebraElement AlgebraElement::gen(Gen g) {
  switch (g) {
    case Gen::X: return monomial({1, 0, 0});
    case Gen::Y: return monomial({0, 1, 0});
    default: return monomial({0, 0, 1});
  }
}

AlgebraElement AlgebraElement::monomial(Monomial m, Scalar c) {
  AlgebraElement e;
  e.add_term(m, c);
  return e;
}

int AlgebraElement::pure_parity() const {
  if (terms_.empty()) return 0;
  int p = terms_.begin()->first.parity();
  for (const auto& [m, c] : terms_)
    if (m.parity() != p) return -1;
  return p;
}

AlgebraElement& AlgebraElement::add_term(Monomial m, const Scalar& c) {
  if (c == 0) return *this;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

AlgebraElement AlgebraElement::operator*(const Scalar& c) const {
  AlgebraElement r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

namespace {

// y^b x in normal form, memoized.  Recursion from y x = 2h - x y:
//   y^b x = 2 y^{b-1} h - (y^{b-1} x) y
AlgebraElement mul_gen_right(const AlgebraElement& a, Gen g);

const AlgebraElement& y_pow_times_x(int b) {
  static thread_local std::map<int, AlgebraElement> cache;
  auto it = cache.find(b);
  if (it != cache.end()) return it->second;
  AlgebraElement r;
  if (b == 0) {
    r = AlgebraElement::gen(Gen::X);
  } else {
    r.add_term({0, b - 1, 1}, 2);
    r = r - mul_gen_right(y_pow_times_x(b - 1), Gen::Y);
  }
  return cache.emplace(b, std::move(r)).first->second;
}

AlgebraElement mul_gen_right(const AlgebraElement& a, Gen g) {
  AlgebraElement r;
  for (const auto& [m, c] : a.terms()) {
    switch (g) {
      case Gen::H:
        r.add_term({m.xdeg, m.ydeg, m.hdeg + 1}, c);
        break;
      case Gen::Y:
        // h^c y = y (h-1)^c
        for (int j = 0; j <= m.hdeg; ++j) {
          Scalar coef = c * binomial(m.hdeg, j);
          if ((m.hdeg - j) & 1) coef = -coef;
          r.add_term({m.xdeg, m.ydeg + 1, j}, coef);
        }
        break;
      case Gen::X:
        // x^a y^b h^c x = x^a (y^b x) (h+1)^c
        for (const auto& [m2, c2] : y_pow_times_x(m.ydeg).terms()) {
          for (int j = 0; j <= m.hdeg; ++j) {
            r.add_term({m.xdeg + m2.xdeg, m2.ydeg, m2.hdeg + j},
                       c * c2 * binomial(m.hdeg, j));
          }
        }
        break;
    }
  }
  return r;
}

}  // namespace

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement result;
  for (const auto& [m, c] : b.terms()) {
    AlgebraElement part = a;
    for (int i = 0; i < m.xdeg; ++i) part = mul_gen_right(part, Gen::X);
    for (int i = 0; i < m.ydeg; ++i) part = mul_gen_right(part, Gen::Y);
    for (int i = 0; i < m.hdeg; ++i) part = mul_gen_right(part, Gen::H);
    result = result + part * c;
  }
  return result;
}

AlgebraElement super_commutator(const AlgebraElement& a, const AlgebraElement& b) {
  int pa = a.pure_parity();
  int pb = b.pure_parity();
  if (pa < 0 || pb < 0) throw MixedParityError();
  AlgebraElement ab = multiply(a, b);
  AlgebraElement ba = multiply(b, a);
  return (pa && pb) ? ab + ba : ab - ba;
}

AlgebraElement reduce_mod_x_power(const AlgebraElement& a, int k) {
  AlgebraElement r;
  for (const auto& [m, c] : a.terms())
    if (m.xdeg < k) r.add_term(m, c);
  return r;
}

AlgebraElement interchange(const AlgebraElement& a) {
  AlgebraElement result;
  for (const auto& [m, c] : a.terms()) {
    // reversed word with substitutions: (-1)^{a+b} h^c x^b y^a
    AlgebraElement part = AlgebraElement::one();
    for (int i = 0; i < m.hdeg; ++i) part = mul_gen_right(part, Gen::H);
    for (int i = 0; i < m.ydeg; ++i) part = mul_gen_right(part, Gen::X);
    for (int i = 0; i < m.xdeg; ++i) part = mul_gen_right(part, Gen::Y);
    Scalar coef = c;
    if ((m.xdeg + m.ydeg) & 1) coef = -coef;
    result = result + part * coef;
  }
  return result;
}

AlgebraElement element_pow(const AlgebraElement& a, int k) {
  AlgebraElement r = AlgebraElement::one();
  for (int i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

AlgebraElement eval_poly(const std::vector<Scalar>& q, const AlgebraElement& t) {
  // Horner from the top coefficient.
  AlgebraElement r;
  for (auto it = q.rbegin(); it != q.rend(); ++it)
    r = multiply(r, t) + AlgebraElement::one() * (*it);
  return r;
}

AlgebraElement rising_factorial(const AlgebraElement& t, int p) {
  AlgebraElement r = AlgebraElement::one();
  for (int i = 0; i < p; ++i)
    r = multiply(r, t + AlgebraElement::one() * Scalar(i));
  return r;
}

namespace {

// Position of a reducible adjacent pair, or -1 if the word is normal-ordered.
int find_redex(const Word& w, RewriteStrategy strategy) {
  if (strategy == RewriteStrategy::Leftmost) {
    for (int i = 0; i + 1 < (int)w.size(); ++i)
      if (w[i] > w[i + 1]) return i;
    return -1;
  }
  for (int i = (int)w.size() - 2; i >= 0; --i)
    if (w[i] > w[i + 1]) return i;
  return -1;
}

}  // namespace

AlgebraElement rewrite_word(const Word& word, RewriteStrategy strategy) {
  AlgebraElement result;
  std::vector<std::pair<Word, Scalar>> work;
  work.emplace_back(word, Scalar(1));
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    int i = find_redex(w, strategy);
    if (i < 0) {
      Monomial m;
      for (Gen g : w) {
        if (g == Gen::X) ++m.xdeg;
        else if (g == Gen::Y) ++m.ydeg;
        else ++m.hdeg;
      }
      result.add_term(m, c);
      continue;
    }
    Gen a = w[i], b = w[i + 1];
    auto replaced = [&](std::initializer_list<Gen> repl) {
      Word nw(w.begin(), w.begin() + i);
      nw.insert(nw.end(), repl);
      nw.insert(nw.end(), w.begin() + i + 2, w.end());
      return nw;
    };
    if (a == Gen::Y && b == Gen::X) {
      work.emplace_back(replaced({Gen::H}), 2 * c);
      work.emplace_back(replaced({Gen::X, Gen::Y}), -c);
    } else if (a == Gen::H && b == Gen::X) {
      work.emplace_back(replaced({Gen::X, Gen::H}), c);
      work.emplace_back(replaced({Gen::X}), c);
    } else {  // h y -> y h - y
      work.emplace_back(replaced({Gen::Y, Gen::H}), c);
      work.emplace_back(replaced({Gen::Y}), -c);
    }
  }
  return result;
}

}  // namespace diracops
