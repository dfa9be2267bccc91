#include "diracops/symscalar.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace diracops {

Poly2 Poly2::term(int wdeg, int ndeg, const Scalar& c) {
  Poly2 p;
  p.add_term(wdeg, ndeg, c);
  return p;
}

int Poly2::wdeg() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k[0]);
  return d;
}

int Poly2::ndeg() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k[1]);
  return d;
}

Scalar Poly2::leading_coeff() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->second;
}

Poly2& Poly2::add_term(int wdeg, int ndeg, const Scalar& c) {
  if (c == 0) return *this;
  std::array<int, 2> k{wdeg, ndeg};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k[0], k[1], c);
  return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
  Poly2 r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k[0], k[1], -c);
  return r;
}

Poly2 Poly2::operator-() const {
  Poly2 r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) r.add_term(k1[0] + k2[0], k1[1] + k2[1], c1 * c2);
  return r;
}

Poly2 Poly2::operator*(const Scalar& c) const {
  Poly2 r;
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

Poly2 Poly2::divide_exact(const Poly2& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly2 rem = *this;
  Poly2 quot;
  auto lead_d = d.terms_.rbegin();
  while (!rem.is_zero()) {
    auto lead_r = rem.terms_.rbegin();
    int dw = lead_r->first[0] - lead_d->first[0];
    int dn = lead_r->first[1] - lead_d->first[1];
    if (dw < 0 || dn < 0) throw std::domain_error("inexact polynomial division");
    Scalar c = lead_r->second / lead_d->second;
    quot.add_term(dw, dn, c);
    rem = rem - d * Poly2::term(dw, dn, c);
  }
  return quot;
}

namespace {

// Univariate polynomials in n over Q, dense.
using PolyN = std::vector<Scalar>;

void trim(PolyN& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const PolyN& p) { return (int)p.size() - 1; }

PolyN mul(const PolyN& a, const PolyN& b) {
  if (a.empty() || b.empty()) return {};
  PolyN r(a.size() + b.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

PolyN sub(const PolyN& a, const PolyN& b) {
  PolyN r = a;
  if (b.size() > r.size()) r.resize(b.size(), Scalar(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// Remainder of a / b over the field Q.
PolyN rem(PolyN a, const PolyN& b) {
  while (deg(a) >= deg(b) && !a.empty()) {
    Scalar c = a.back() / b.back();
    int shift = deg(a) - deg(b);
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  return a;
}

PolyN quot_exact(PolyN a, const PolyN& b) {
  PolyN q(std::max<size_t>(a.size(), 1), Scalar(0));
  while (deg(a) >= deg(b) && !a.empty()) {
    Scalar c = a.back() / b.back();
    int shift = deg(a) - deg(b);
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  if (!a.empty()) throw std::domain_error("inexact PolyN division");
  return q;
}

PolyN gcd_n(PolyN a, PolyN b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyN r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Scalar lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

// View of a bivariate polynomial as a polynomial in w with PolyN coefficients.
using PolyW = std::vector<PolyN>;

PolyW to_polyw(const Poly2& p) {
  PolyW r(p.wdeg() + 1);
  for (const auto& [k, c] : p.terms()) {
    auto& coef = r[k[0]];
    if ((int)coef.size() <= k[1]) coef.resize(k[1] + 1, Scalar(0));
    coef[k[1]] = c;
  }
  return r;
}

Poly2 from_polyw(const PolyW& p) {
  Poly2 r;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p[i].size(); ++j) r.add_term((int)i, (int)j, p[i][j]);
  return r;
}

void trimw(PolyW& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

PolyN content(const PolyW& p) {
  PolyN g;
  for (const auto& c : p)
    if (!c.empty()) g = gcd_n(g, c);
  return g;
}

PolyW divide_content(const PolyW& p, const PolyN& c) {
  PolyW r(p.size());
  for (size_t i = 0; i < p.size(); ++i)
    if (!p[i].empty()) r[i] = quot_exact(p[i], c);
  return r;
}

// Pseudo-remainder of a by b in w over Q[n].
PolyW prem(PolyW a, const PolyW& b) {
  trimw(a);
  int db = (int)b.size() - 1;
  while ((int)a.size() - 1 >= db && !a.empty()) {
    int shift = (int)a.size() - 1 - db;
    PolyN la = a.back();
    const PolyN& lb = b.back();
    PolyW next(a.size() - 1);
    for (size_t i = 0; i + 1 < a.size(); ++i) next[i] = mul(a[i], lb);
    for (int i = 0; i < db; ++i) {
      size_t k = (size_t)(i + shift);
      next[k] = sub(next[k], mul(b[(size_t)i], la));
    }
    a = std::move(next);
    trimw(a);
  }
  return a;
}

}  // namespace

Poly2 gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero() && b.is_zero()) return Poly2();
  if (a.is_zero() || b.is_zero()) {
    Poly2 g = a.is_zero() ? b : a;
    return g * (Scalar(1) / g.leading_coeff());
  }
  PolyW pa = to_polyw(a), pb = to_polyw(b);
  trimw(pa);
  trimw(pb);
  PolyN ca = content(pa), cb = content(pb);
  PolyN cg = gcd_n(ca, cb);
  pa = divide_content(pa, ca);
  pb = divide_content(pb, cb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty()) {
    PolyW r = prem(pa, pb);
    if (!r.empty()) {
      PolyN cr = content(r);
      r = divide_content(r, cr);
    }
    pa = std::move(pb);
    pb = std::move(r);
  }
  PolyN cp = content(pa);
  pa = divide_content(pa, cp);
  Poly2 g = from_polyw(pa);
  // attach the content gcd (a polynomial in n only)
  Poly2 cgp;
  for (size_t j = 0; j < cg.size(); ++j) cgp.add_term(0, (int)j, cg[j]);
  g = g * cgp;
  return g * (Scalar(1) / g.leading_coeff());
}

std::string to_string(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<std::array<int, 2>, Scalar>> terms(p.terms().begin(), p.terms().end());
  std::reverse(terms.begin(), terms.end());
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
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
    std::string mono;
    if (k[0] > 0) {
      mono += "w";
      if (k[0] > 1) mono += "^" + std::to_string(k[0]);
    }
    if (k[1] > 0) {
      if (!mono.empty()) mono += "*";
      mono += "n";
      if (k[1] > 1) mono += "^" + std::to_string(k[1]);
    }
    if (mono.empty()) {
      os << to_string(coef);
    } else {
      if (coef != 1) os << to_string(coef) << '*';
      os << mono;
    }
  }
  return os.str();
}

SymScalar::SymScalar(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  reduce();
}

void SymScalar::reduce() {
  if (num_.is_zero()) {
    den_ = Poly2(Scalar(1));
    return;
  }
  Poly2 g = gcd(num_, den_);
  if (!(g == Poly2(Scalar(1)))) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  Scalar lead = den_.leading_coeff();
  if (lead != 1) {
    Scalar inv = Scalar(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

bool SymScalar::is_rational() const {
  return den_ == Poly2(Scalar(1)) && num_.wdeg() <= 0 && num_.ndeg() <= 0;
}

Scalar SymScalar::as_rational() const {
  if (num_.is_zero()) return 0;
  if (!is_rational()) throw std::domain_error("not a plain rational");
  return num_.terms().begin()->second;
}

SymScalar SymScalar::operator+(const SymScalar& o) const {
  return SymScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

SymScalar SymScalar::operator-(const SymScalar& o) const {
  return SymScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

SymScalar SymScalar::operator-() const {
  SymScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

SymScalar SymScalar::operator*(const SymScalar& o) const {
  return SymScalar(num_ * o.num_, den_ * o.den_);
}

SymScalar SymScalar::operator/(const SymScalar& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  return SymScalar(num_ * o.den_, den_ * o.num_);
}

bool SymScalar::operator<(const SymScalar& o) const {
  if (num_.terms() != o.num_.terms()) return num_.terms() < o.num_.terms();
  return den_.terms() < o.den_.terms();
}

SymScalar w_root(const SymScalar& c) {
  if (!(c.den() == Poly2(Scalar(1))) || c.num().wdeg() != 1)
    throw std::domain_error("not a polynomial linear in w");
  Poly2 a, b;  // c = a(n) w + b(n)
  for (const auto& [k, v] : c.num().terms()) {
    if (k[0] == 1)
      a.add_term(0, k[1], v);
    else
      b.add_term(0, k[1], v);
  }
  return SymScalar(-b, a);
}

std::string to_string(const SymScalar& s) {
  if (s.den() == Poly2(Scalar(1))) return to_string(s.num());
  return "(" + to_string(s.num()) + ")/(" + to_string(s.den()) + ")";
}

}  // namespace diracops
