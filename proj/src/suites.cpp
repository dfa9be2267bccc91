#include "diracops/suites.hpp"

#include <random>
#include <sstream>

#include "diracops/algebra.hpp"
#include "diracops/parser.hpp"

namespace diracops {

namespace {

using E = AlgebraElement;

E gx() { return E::gen(Gen::X); }
E gy() { return E::gen(Gen::Y); }
E gh() { return E::gen(Gen::H); }
E gQ() { return E::monomial({2, 0, 0}); }
E gD() { return E::monomial({0, 2, 0}); }
E xpow(int k) { return E::monomial({k, 0, 0}); }
E ypow(int k) { return E::monomial({0, k, 0}); }
E con(const Scalar& c) { return E::one() * c; }

Scalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  return rat(num(rng), den(rng));
}

std::vector<Scalar> random_poly(std::mt19937_64& rng, int maxdeg) {
  std::uniform_int_distribution<int> deg(0, maxdeg);
  std::vector<Scalar> q(deg(rng) + 1);
  for (auto& c : q) c = random_rational(rng);
  if (q.back() == 0) q.back() = 1;
  return q;
}

Case exact_case(const std::string& id, const E& computed, const E& expected) {
  Case c;
  c.id = id;
  c.expected = format_element(expected);
  c.computed = format_element(computed);
  c.status = computed == expected ? Status::Pass : Status::Fail;
  if (c.status == Status::Fail)
    c.note = "difference: " + format_element(computed - expected);
  return c;
}

// Identity whose paper display is known to clash with the engine: pass if
// the engine agrees with the display, flagged if it matches the certified
// corrected form instead, fail if it matches neither.
Case certified_case(const std::string& id, const E& computed, const E& paper_display,
                    const E& certified, const std::string& note) {
  Case c;
  c.id = id;
  c.expected = format_element(paper_display);
  c.computed = format_element(computed);
  if (computed == paper_display) {
    c.status = Status::Pass;
  } else if (computed == certified) {
    c.status = Status::Flagged;
    c.note = note;
  } else {
    c.status = Status::Fail;
    c.note = "matches neither the display nor the certified form";
  }
  return c;
}

void relations_suite(Report& r) {
  struct Rel {
    const char* id;
    E a, b, rhs;
  };
  const Rel rels[] = {
      {"[x,x] = 2Q", gx(), gx(), gQ() * Scalar(2)},
      {"[y,y] = 2D", gy(), gy(), gD() * Scalar(2)},
      {"[x,y] = 2h", gx(), gy(), gh() * Scalar(2)},
      {"[Q,x] = 0", gQ(), gx(), E::zero()},
      {"[Q,y] = -2x", gQ(), gy(), gx() * Scalar(-2)},
      {"[Q,h] = -2Q", gQ(), gh(), gQ() * Scalar(-2)},
      {"[D,x] = 2y", gD(), gx(), gy() * Scalar(2)},
      {"[D,y] = 0", gD(), gy(), E::zero()},
      {"[D,h] = 2D", gD(), gh(), gD() * Scalar(2)},
      {"[D,Q] = 4h", gD(), gQ(), gh() * Scalar(4)},
      {"[x,h] = -x", gx(), gh(), -gx()},
      {"[y,h] = y", gy(), gh(), gy()},
  };
  for (const auto& rel : rels)
    r.cases.push_back(exact_case(rel.id, super_commutator(rel.a, rel.b), rel.rhs));
}

void prop2_suite(Report& r, int pmax, std::mt19937_64& rng) {
  pmax = std::min(pmax, 8);
  for (int p = 1; p <= pmax; ++p) {
    for (int t = 0; t < 5; ++t) {
      auto q = random_poly(rng, 3);
      E qh = eval_poly(q, gh());
      E qhm = eval_poly(q, gh() - con(p));
      E qhp = eval_poly(q, gh() + con(p));
      std::string tag = " (p=" + std::to_string(p) + ", q#" + std::to_string(t) + ")";
      r.cases.push_back(
          exact_case("q(h)y^p = y^p q(h-p)" + tag, multiply(qh, ypow(p)), multiply(ypow(p), qhm)));
      r.cases.push_back(
          exact_case("y^p q(h) = q(h+p)y^p" + tag, multiply(ypow(p), qh), multiply(qhp, ypow(p))));
      r.cases.push_back(
          exact_case("q(h)x^p = x^p q(h+p)" + tag, multiply(qh, xpow(p)), multiply(xpow(p), qhp)));
      r.cases.push_back(
          exact_case("x^p q(h) = q(h-p)x^p" + tag, multiply(xpow(p), qh), multiply(qhm, xpow(p))));
    }
  }
}

void prop3_suite(Report& r, int pmax) {
  for (int p = 1; p <= pmax; ++p) {
    std::string tag = " (p=" + std::to_string(p) + ")";
    E h = gh();
    r.cases.push_back(exact_case("[y^2p,x] = 2p y^(2p-1)" + tag,
                                 super_commutator(ypow(2 * p), gx()),
                                 ypow(2 * p - 1) * Scalar(2 * p)));
    r.cases.push_back(exact_case("[y^(2p+1),x] = 2y^2p (h-p)" + tag,
                                 super_commutator(ypow(2 * p + 1), gx()),
                                 multiply(ypow(2 * p), h - con(p)) * Scalar(2)));
    r.cases.push_back(exact_case("[y^2p,x^2] = 4p y^(2p-2)(h-p+1)" + tag,
                                 super_commutator(ypow(2 * p), xpow(2)),
                                 multiply(ypow(2 * p - 2), h - con(p - 1)) * Scalar(4 * p)));
    r.cases.push_back(exact_case(
        "[y^(2p+1),x^2] = 4p y^(2p-1)(h-p) + 2y^2p x" + tag,
        super_commutator(ypow(2 * p + 1), xpow(2)),
        multiply(ypow(2 * p - 1), h - con(p)) * Scalar(4 * p) +
            multiply(ypow(2 * p), gx()) * Scalar(2)));
    r.cases.push_back(certified_case(
        "[x^2p,y]" + tag, super_commutator(xpow(2 * p), gy()),
        xpow(2 * p - 1) * Scalar(2 * p), xpow(2 * p - 1) * Scalar(-2 * p),
        "paper displays +2p x^(2p-1); certified -2p x^(2p-1), consistent with [Q,y] = -2x"));
    r.cases.push_back(exact_case("[x^(2p+1),y] = 2x^2p (h+p)" + tag,
                                 super_commutator(xpow(2 * p + 1), gy()),
                                 multiply(xpow(2 * p), h + con(p)) * Scalar(2)));
    r.cases.push_back(exact_case("[x^2p,y^2] = -4p x^(2p-2)(h+p-1)" + tag,
                                 super_commutator(xpow(2 * p), gD()),
                                 multiply(xpow(2 * p - 2), h + con(p - 1)) * Scalar(-4 * p)));
    r.cases.push_back(certified_case(
        "[x^(2p+1),y^2]" + tag, super_commutator(xpow(2 * p + 1), gD()),
        multiply(xpow(2 * p), gy()) * Scalar(2) +
            multiply(xpow(2 * p - 1), h + con(p)) * Scalar(-4 * p),
        multiply(xpow(2 * p), gy()) * Scalar(-2) +
            multiply(xpow(2 * p - 1), h + con(p)) * Scalar(-4 * p),
        "paper displays +2x^2p y; certified -2x^2p y"));
  }
}

void prop4_suite(Report& r, int pmax) {
  for (int p = 1; p <= pmax; ++p) {
    std::string tag = " (p=" + std::to_string(p) + ")";
    Scalar c = pow2(2 * (unsigned)p) * factorial((unsigned)p);

    // Even identity: y^2p x^2p = 2^2p p! [h]^p + x^2 Z_2p, Z extracted exactly.
    E lhs = multiply(ypow(2 * p), xpow(2 * p));
    E residual = lhs - rising_factorial(gh(), p) * c;
    bool divisible = true;
    E z;
    for (const auto& [m, coef] : residual.terms()) {
      if (m.xdeg < 2) {
        divisible = false;
        break;
      }
      z.add_term({m.xdeg - 2, m.ydeg, m.hdeg}, coef);
    }
    Case even;
    even.id = "y^2p x^2p = 2^2p p! [h]^p + x^2 Z" + tag;
    even.expected = "residual divisible by x^2 on the left";
    even.computed = divisible ? ("Z = " + format_element(z)) : format_element(residual);
    even.status = divisible ? Status::Pass : Status::Fail;
    r.cases.push_back(even);

    // Odd identity: the paper display fails already at p=1; the certified
    // normal form mod O(x^2) is published per p.
    E odd_lhs = reduce_mod_x_power(multiply(ypow(2 * p + 1), xpow(2 * p + 1)), 2);
    E display = reduce_mod_x_power(
        rising_factorial(gh() - E::one(), p + 1) * (-Scalar(2) * c) +
            multiply(rising_factorial(gh(), p), multiply(gy(), gx())) * c,
        2);
    Case odd;
    odd.id = "y^(2p+1) x^(2p+1) mod O(x^2)" + tag;
    odd.expected = format_element(display);
    odd.computed = format_element(odd_lhs);
    if (odd_lhs == display) {
      odd.status = Status::Pass;
    } else {
      odd.status = Status::Flagged;
      odd.note = "paper display disagrees with certified normal form; difference: " +
                 format_element(odd_lhs - display);
    }
    r.cases.push_back(odd);
  }
}

void jacobi_suite(Report& r) {
  struct Named {
    const char* name;
    E e;
  };
  const Named gens[] = {{"x", gx()}, {"y", gy()}, {"h", gh()}, {"Q", gQ()}, {"D", gD()}};
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& c : gens) {
        E lhs = super_commutator(a.e, super_commutator(b.e, c.e));
        E rhs = super_commutator(super_commutator(a.e, b.e), c.e);
        E cross = super_commutator(b.e, super_commutator(a.e, c.e));
        int sign = (a.e.pure_parity() & b.e.pure_parity()) ? -1 : 1;
        rhs = rhs + cross * Scalar(sign);
        std::string id = std::string("jacobi [") + a.name + ",[" + b.name + "," + c.name + "]]";
        r.cases.push_back(exact_case(id, lhs, rhs));
      }
}

void confluence_suite(Report& r, std::mt19937_64& rng) {
  for (int len = 2; len <= 8; ++len) {
    int mismatches = 0;
    const int kWords = 40;
    std::string first_bad;
    for (int t = 0; t < kWords; ++t) {
      Word w(len);
      std::uniform_int_distribution<int> pick(0, 2);
      for (auto& g : w) g = (Gen)pick(rng);
      E left = rewrite_word(w, RewriteStrategy::Leftmost);
      E right = rewrite_word(w, RewriteStrategy::Rightmost);
      // Third route: the closed-form product engine.
      E prod = E::one();
      for (Gen g : w) prod = multiply(prod, E::gen(g));
      if (!(left == right && left == prod)) {
        ++mismatches;
        if (first_bad.empty()) {
          std::ostringstream os;
          for (Gen g : w) os << "xyh"[(int)g];
          first_bad = os.str();
        }
      }
    }
    Case c;
    c.id = "confluence, " + std::to_string(kWords) + " words of length " + std::to_string(len);
    c.expected = "identical normal forms for both strategies and the product engine";
    c.computed = mismatches == 0 ? "all identical" : std::to_string(mismatches) + " mismatches";
    c.status = mismatches == 0 ? Status::Pass : Status::Fail;
    if (mismatches) c.note = "first mismatching word: " + first_bad;
    r.cases.push_back(c);
  }
}

}  // namespace

Report verify_identity_suite(AlgebraSuite suite, int pmax, long seed) {
  Report r;
  r.seed = seed;
  std::mt19937_64 rng((unsigned long)seed);
  switch (suite) {
    case AlgebraSuite::Relations:
      r.suite = "relations";
      relations_suite(r);
      break;
    case AlgebraSuite::Prop2:
      r.suite = "prop2";
      prop2_suite(r, pmax, rng);
      break;
    case AlgebraSuite::Prop3:
      r.suite = "prop3";
      prop3_suite(r, pmax);
      break;
    case AlgebraSuite::Prop4:
      r.suite = "prop4";
      prop4_suite(r, pmax);
      break;
    case AlgebraSuite::Jacobi:
      r.suite = "jacobi";
      jacobi_suite(r);
      break;
    case AlgebraSuite::Confluence:
      r.suite = "confluence";
      confluence_suite(r, rng);
      break;
  }
  return r;
}

}  // namespace diracops
