#pragma once

// Exact flat-space realization of the ambient operators: gamma matrices of
// arbitrary signature with Gaussian-rational entries, acting on spinor-valued
// polynomials.  Every check here is equality, never tolerance.

#include <map>
#include <stdexcept>
#include <vector>

#include "diracops/algebra.hpp"
#include "diracops/rational.hpp"
#include "diracops/report.hpp"

namespace diracops {

struct UnsupportedSignature : std::invalid_argument {
  UnsupportedSignature() : std::invalid_argument("signature needs r + s >= 2") {}
};
struct DimensionMismatch : std::invalid_argument {
  DimensionMismatch() : std::invalid_argument("spinor shape does not match signature") {}
};
struct NotNullError : std::invalid_argument {
  NotNullError() : std::invalid_argument("vector is not null for the metric") {}
};
struct ZeroVectorError : std::invalid_argument {
  ZeroVectorError() : std::invalid_argument("null vector must be nonzero") {}
};

// a + b i with exact rational a, b.
struct GaussianRational {
  Scalar re = 0;
  Scalar im = 0;

  GaussianRational() = default;
  GaussianRational(Scalar r) : re(std::move(r)) {}
  GaussianRational(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}
  static GaussianRational i() { return {0, 1}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const GaussianRational& o) const = default;

  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational operator/(const GaussianRational& o) const {
    Scalar n = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
};

std::string to_string(const GaussianRational& z);

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  GaussianRational& at(int i, int j) { return data_[i * cols_ + j]; }
  const GaussianRational& at(int i, int j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const = default;
  Matrix operator+(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const GaussianRational& c) const;
  GaussianRational trace() const;

  // In-place reduction to row echelon form; returns the rank.
  int row_reduce();

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<GaussianRational> data_;
};

using SpinorVec = std::vector<GaussianRational>;

SpinorVec mat_vec(const Matrix& m, const SpinorVec& v);

int rank(Matrix m);
std::vector<SpinorVec> null_space(const Matrix& m);
std::vector<SpinorVec> column_space(const Matrix& m);
// Whether each of the given vectors lies in the span of the basis.
bool spans_include(const std::vector<SpinorVec>& basis, const std::vector<SpinorVec>& vecs);

struct Signature {
  int r = 0;  // square +1 generators
  int s = 0;  // square -1 generators

  int dim() const { return r + s; }
  int spinor_dim() const { return 1 << (dim() / 2); }
  // Base dimension n, with ambient d = n + 2.
  Scalar base_n() const { return Scalar(dim() - 2); }
  int eps(int a) const { return a < r ? 1 : -1; }
};

struct GammaSet {
  Signature sig;
  std::vector<Matrix> gamma;  // gamma[a]^2 = eps(a) * I, pairwise anticommuting
};

GammaSet build_gammas(Signature sig);

// Spinor-valued polynomial: exponent multi-index (length d) -> spinor vector.
class PolySpinor {
 public:
  using Terms = std::map<std::vector<int>, SpinorVec>;

  PolySpinor() = default;
  static PolySpinor constant(const SpinorVec& v, int dim);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  int degree() const;

  PolySpinor& add_term(const std::vector<int>& exps, const SpinorVec& v);
  PolySpinor operator+(const PolySpinor& o) const;
  PolySpinor operator-(const PolySpinor& o) const;
  PolySpinor operator*(const GaussianRational& c) const;
  bool operator==(const PolySpinor& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

enum class AmbientOp { X, Y, H, Q, Lap };

// Exact application of one of the five concrete operators.
PolySpinor apply_op(AmbientOp which, const PolySpinor& psi, const GammaSet& gs);

// Normal-form evaluation: substitutes the concrete operators into an
// enveloping-algebra element.  Monomial x^a y^b h^c acts as
// op_x^a (op_y^b (op_h^c psi)) scaled by the coefficient.
PolySpinor evaluate_element(const AlgebraElement& e, const PolySpinor& psi, const GammaSet& gs);

// Canonical representative modulo the ideal generated by the quadratic form:
// eliminates x_0^2 until the degree in x_0 is at most 1.
PolySpinor reduce_mod_Q(const PolySpinor& psi, const GammaSet& gs);

// True iff psi restricted to the cone represents a section of S(G).
bool is_tangential(const PolySpinor& psi, const GammaSet& gs);

struct NullKernelResult {
  int rank = 0;
  bool ker_equals_im = false;
  GaussianRational trace_T;
};

// X = sum_a gamma_a v^a at a nonzero null vector v; checks the kernel/image
// lemma data exactly.
NullKernelResult null_kernel_analysis(const GammaSet& gs, const std::vector<Scalar>& v);

// Deterministic pseudo-random spinor polynomial (used by suites and tests).
PolySpinor random_spinor(const GammaSet& gs, int maxdeg, unsigned long seed);

// All twelve commutation relations plus x.x = Q and y.y = Lap as exact
// operator identities on random spinors.
Report verify_flat_relations(Signature sig, int maxdeg, int trials, long seed,
                             bool parallel = false);

// Kernel/image lemma over all signatures with r,s >= 1 and r+s <= dmax:
// the distinguished null vector e_t + e_u plus random rational null vectors.
Report kernel_suite(int dmax, int random_vectors, long seed, bool parallel = false);

// Cross-module oracle: normal-form evaluation vs direct word application.
Report cross_module_suite(Signature sig, int words, int maxlen, long seed,
                          bool parallel = false);

}  // namespace diracops
