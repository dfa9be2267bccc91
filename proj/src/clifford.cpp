#include "diracops/clifford.hpp"

#include <random>
#include <sstream>

#include "diracops/parser.hpp"
#include "diracops/runner.hpp"

namespace diracops {

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::ostringstream os;
  if (z.re != 0) os << to_string(z.re) << (z.im > 0 ? "+" : "");
  os << to_string(z.im) << "i";
  return os.str();
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator*(const GaussianRational& c) const {
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
  return r;
}

GaussianRational Matrix::trace() const {
  GaussianRational t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

int Matrix::row_reduce() {
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows_; ++i)
      if (!at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(rank, j));
    GaussianRational inv = GaussianRational(1) / at(rank, col);
    for (int j = 0; j < cols_; ++j) at(rank, j) = at(rank, j) * inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == rank || at(i, col).is_zero()) continue;
      GaussianRational f = at(i, col);
      for (int j = 0; j < cols_; ++j) at(i, j) = at(i, j) - f * at(rank, j);
    }
    ++rank;
  }
  return rank;
}

SpinorVec mat_vec(const Matrix& m, const SpinorVec& v) {
  SpinorVec r(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) r[i] += m.at(i, j) * v[j];
  return r;
}

int rank(Matrix m) { return m.row_reduce(); }

std::vector<SpinorVec> null_space(const Matrix& m) {
  Matrix e = m;
  e.row_reduce();
  int n = m.cols();
  // Locate pivot columns of the echelon form.
  std::vector<int> pivot_of_col(n, -1);
  int row = 0;
  for (int col = 0; col < n && row < e.rows(); ++col) {
    if (!e.at(row, col).is_zero()) pivot_of_col[col] = row++;
  }
  std::vector<SpinorVec> basis;
  for (int free = 0; free < n; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    SpinorVec v(n);
    v[free] = GaussianRational(1);
    for (int col = 0; col < free; ++col)
      if (pivot_of_col[col] >= 0) v[col] = -e.at(pivot_of_col[col], free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<SpinorVec> column_space(const Matrix& m) {
  Matrix e = m;
  e.row_reduce();
  std::vector<SpinorVec> basis;
  int row = 0;
  for (int col = 0; col < m.cols() && row < e.rows(); ++col) {
    if (e.at(row, col).is_zero()) continue;
    ++row;
    SpinorVec v(m.rows());
    for (int i = 0; i < m.rows(); ++i) v[i] = m.at(i, col);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool spans_include(const std::vector<SpinorVec>& basis, const std::vector<SpinorVec>& vecs) {
  if (basis.empty()) {
    for (const auto& v : vecs)
      for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
  }
  size_t n = basis[0].size();
  Matrix b((int)n, (int)basis.size());
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < n; ++i) b.at((int)i, (int)j) = basis[j][i];
  int base_rank = rank(b);
  for (const auto& v : vecs) {
    Matrix aug((int)n, (int)basis.size() + 1);
    for (size_t j = 0; j < basis.size(); ++j)
      for (size_t i = 0; i < n; ++i) aug.at((int)i, (int)j) = basis[j][i];
    for (size_t i = 0; i < n; ++i) aug.at((int)i, (int)basis.size()) = v[i];
    if (rank(aug) != base_rank) return false;
  }
  return true;
}

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

Matrix pauli(int which) {
  Matrix m(2, 2);
  switch (which) {
    case 1:
      m.at(0, 1) = m.at(1, 0) = GaussianRational(1);
      break;
    case 2:
      m.at(0, 1) = -GaussianRational::i();
      m.at(1, 0) = GaussianRational::i();
      break;
    default:
      m.at(0, 0) = GaussianRational(1);
      m.at(1, 1) = GaussianRational(-1);
      break;
  }
  return m;
}

}  // namespace

GammaSet build_gammas(Signature sig) {
  if (sig.dim() < 2) throw UnsupportedSignature();
  int d = sig.dim();
  int m = d / 2;
  // Tensor-product construction of d anticommuting matrices squaring to +1:
  //   G_{2k}   = s3^k (x) s1 (x) I^(m-k-1)
  //   G_{2k+1} = s3^k (x) s2 (x) I^(m-k-1)
  // and for odd d the extra generator s3^m.
  std::vector<Matrix> base;
  for (int a = 0; a < d; ++a) {
    Matrix g = Matrix::identity(1);
    if (a == 2 * m) {
      for (int j = 0; j < m; ++j) g = kron(g, pauli(3));
    } else {
      int k = a / 2;
      for (int j = 0; j < k; ++j) g = kron(g, pauli(3));
      g = kron(g, pauli(a % 2 ? 2 : 1));
      for (int j = k + 1; j < m; ++j) g = kron(g, Matrix::identity(2));
    }
    base.push_back(std::move(g));
  }
  GammaSet gs;
  gs.sig = sig;
  for (int a = 0; a < d; ++a)
    gs.gamma.push_back(sig.eps(a) < 0 ? base[a] * GaussianRational::i() : base[a]);
  return gs;
}

PolySpinor PolySpinor::constant(const SpinorVec& v, int dim) {
  PolySpinor p;
  p.add_term(std::vector<int>(dim, 0), v);
  return p;
}

int PolySpinor::degree() const {
  int deg = 0;
  for (const auto& [e, v] : terms_) {
    int total = 0;
    for (int k : e) total += k;
    deg = std::max(deg, total);
  }
  return deg;
}

PolySpinor& PolySpinor::add_term(const std::vector<int>& exps, const SpinorVec& v) {
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    it = terms_.emplace(exps, SpinorVec(v.size())).first;
  }
  bool nonzero = false;
  for (size_t i = 0; i < v.size(); ++i) {
    it->second[i] += v[i];
    if (!it->second[i].is_zero()) nonzero = true;
  }
  if (!nonzero) terms_.erase(it);
  return *this;
}

PolySpinor PolySpinor::operator+(const PolySpinor& o) const {
  PolySpinor r = *this;
  for (const auto& [e, v] : o.terms_) r.add_term(e, v);
  return r;
}

PolySpinor PolySpinor::operator-(const PolySpinor& o) const {
  return *this + o * GaussianRational(-1);
}

PolySpinor PolySpinor::operator*(const GaussianRational& c) const {
  PolySpinor r;
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) {
    SpinorVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] * c;
    r.terms_.emplace(e, std::move(w));
  }
  return r;
}

PolySpinor apply_op(AmbientOp which, const PolySpinor& psi, const GammaSet& gs) {
  int d = gs.sig.dim();
  int N = gs.sig.spinor_dim();
  PolySpinor out;
  for (const auto& [exps, vec] : psi.terms()) {
    if ((int)exps.size() != d || (int)vec.size() != N) throw DimensionMismatch();
    switch (which) {
      case AmbientOp::X:
        // sum_a x^a (gamma_a psi)
        for (int a = 0; a < d; ++a) {
          auto e = exps;
          ++e[a];
          out.add_term(e, mat_vec(gs.gamma[a], vec));
        }
        break;
      case AmbientOp::Y:
        // sum_a eps_a gamma_a d/dx^a
        for (int a = 0; a < d; ++a) {
          if (exps[a] == 0) continue;
          auto e = exps;
          --e[a];
          SpinorVec w = mat_vec(gs.gamma[a], vec);
          GaussianRational c(Scalar(gs.sig.eps(a) * exps[a]));
          for (auto& z : w) z = z * c;
          out.add_term(e, w);
        }
        break;
      case AmbientOp::H: {
        int total = 0;
        for (int k : exps) total += k;
        GaussianRational c(Scalar(total) + Scalar(d) / 2);
        SpinorVec w(vec.size());
        for (size_t i = 0; i < vec.size(); ++i) w[i] = vec[i] * c;
        out.add_term(exps, w);
        break;
      }
      case AmbientOp::Q:
        for (int a = 0; a < d; ++a) {
          auto e = exps;
          e[a] += 2;
          SpinorVec w(vec.size());
          GaussianRational c(Scalar(gs.sig.eps(a)));
          for (size_t i = 0; i < vec.size(); ++i) w[i] = vec[i] * c;
          out.add_term(e, w);
        }
        break;
      case AmbientOp::Lap:
        for (int a = 0; a < d; ++a) {
          if (exps[a] < 2) continue;
          auto e = exps;
          e[a] -= 2;
          SpinorVec w(vec.size());
          GaussianRational c(Scalar(gs.sig.eps(a) * exps[a] * (exps[a] - 1)));
          for (size_t i = 0; i < vec.size(); ++i) w[i] = vec[i] * c;
          out.add_term(e, w);
        }
        break;
    }
  }
  return out;
}

PolySpinor evaluate_element(const AlgebraElement& e, const PolySpinor& psi, const GammaSet& gs) {
  PolySpinor out;
  for (const auto& [m, c] : e.terms()) {
    PolySpinor part = psi;
    for (int i = 0; i < m.hdeg; ++i) part = apply_op(AmbientOp::H, part, gs);
    for (int i = 0; i < m.ydeg; ++i) part = apply_op(AmbientOp::Y, part, gs);
    for (int i = 0; i < m.xdeg; ++i) part = apply_op(AmbientOp::X, part, gs);
    out = out + part * GaussianRational(c);
  }
  return out;
}

PolySpinor reduce_mod_Q(const PolySpinor& psi, const GammaSet& gs) {
  int d = gs.sig.dim();
  PolySpinor out;
  std::vector<std::pair<std::vector<int>, SpinorVec>> work(psi.terms().begin(),
                                                           psi.terms().end());
  while (!work.empty()) {
    auto [exps, vec] = std::move(work.back());
    work.pop_back();
    if (exps[0] < 2) {
      out.add_term(exps, vec);
      continue;
    }
    // x_0^2 = -eps_0 * sum_{a>=1} eps_a x_a^2 on the cone Q = 0.
    for (int a = 1; a < d; ++a) {
      auto e = exps;
      e[0] -= 2;
      e[a] += 2;
      SpinorVec w(vec.size());
      GaussianRational c(Scalar(-gs.sig.eps(0) * gs.sig.eps(a)));
      for (size_t i = 0; i < vec.size(); ++i) w[i] = vec[i] * c;
      work.emplace_back(std::move(e), std::move(w));
    }
  }
  return out;
}

bool is_tangential(const PolySpinor& psi, const GammaSet& gs) {
  return reduce_mod_Q(apply_op(AmbientOp::X, psi, gs), gs).is_zero();
}

NullKernelResult null_kernel_analysis(const GammaSet& gs, const std::vector<Scalar>& v) {
  int d = gs.sig.dim();
  int N = gs.sig.spinor_dim();
  if ((int)v.size() != d) throw DimensionMismatch();
  bool zero = true;
  Scalar norm = 0;
  for (int a = 0; a < d; ++a) {
    if (v[a] != 0) zero = false;
    norm += Scalar(gs.sig.eps(a)) * v[a] * v[a];
  }
  if (zero) throw ZeroVectorError();
  if (norm != 0) throw NotNullError();

  Matrix X(N, N);
  for (int a = 0; a < d; ++a)
    if (v[a] != 0) X = X + gs.gamma[a] * GaussianRational(v[a]);

  NullKernelResult res;
  res.rank = rank(X);
  res.ker_equals_im =
      spans_include(column_space(X), null_space(X)) && res.rank == N - res.rank;

  // Adapted pair: first +1-square and first -1-square direction with a
  // nonzero component of v.
  int t = -1, u = -1;
  for (int a = 0; a < d; ++a) {
    if (v[a] == 0) continue;
    if (gs.sig.eps(a) > 0 && t < 0) t = a;
    if (gs.sig.eps(a) < 0 && u < 0) u = a;
  }
  res.trace_T = (gs.gamma[t] * gs.gamma[u]).trace();
  return res;
}

PolySpinor random_spinor(const GammaSet& gs, int maxdeg, unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nterms(1, 5);
  std::uniform_int_distribution<int> deg(0, maxdeg);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  int d = gs.sig.dim();
  int N = gs.sig.spinor_dim();
  PolySpinor psi;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<int> exps(d, 0);
    int total = deg(rng);
    std::uniform_int_distribution<int> slot(0, d - 1);
    for (int i = 0; i < total; ++i) ++exps[slot(rng)];
    SpinorVec v(N);
    for (auto& z : v) {
      z.re = rat(num(rng), den(rng));
      if (coin(rng)) z.im = rat(num(rng), den(rng));
    }
    psi.add_term(exps, v);
  }
  return psi;
}

namespace {

unsigned long mix_seed(long seed, int a, int b) {
  unsigned long h = (unsigned long)seed;
  h = h * 0x9e3779b97f4a7c15ull + (unsigned long)(a + 1);
  h = h * 0x9e3779b97f4a7c15ull + (unsigned long)(b + 1);
  return h;
}

struct OpRelation {
  const char* id;
  AmbientOp a, b;
  int pa, pb;  // parities
  AmbientOp rhs;
  Scalar factor;
};

const std::vector<OpRelation>& flat_relations() {
  static const std::vector<OpRelation> rels = {
      {"[x,x] = 2Q", AmbientOp::X, AmbientOp::X, 1, 1, AmbientOp::Q, 2},
      {"[y,y] = 2Lap", AmbientOp::Y, AmbientOp::Y, 1, 1, AmbientOp::Lap, 2},
      {"[x,y] = 2h", AmbientOp::X, AmbientOp::Y, 1, 1, AmbientOp::H, 2},
      {"[Q,x] = 0", AmbientOp::Q, AmbientOp::X, 0, 1, AmbientOp::X, 0},
      {"[Q,y] = -2x", AmbientOp::Q, AmbientOp::Y, 0, 1, AmbientOp::X, -2},
      {"[Q,h] = -2Q", AmbientOp::Q, AmbientOp::H, 0, 0, AmbientOp::Q, -2},
      {"[Lap,x] = 2y", AmbientOp::Lap, AmbientOp::X, 0, 1, AmbientOp::Y, 2},
      {"[Lap,y] = 0", AmbientOp::Lap, AmbientOp::Y, 0, 1, AmbientOp::Y, 0},
      {"[Lap,h] = 2Lap", AmbientOp::Lap, AmbientOp::H, 0, 0, AmbientOp::Lap, 2},
      {"[Lap,Q] = 4h", AmbientOp::Lap, AmbientOp::Q, 0, 0, AmbientOp::H, 4},
      {"[x,h] = -x", AmbientOp::X, AmbientOp::H, 1, 0, AmbientOp::X, -1},
      {"[y,h] = y", AmbientOp::Y, AmbientOp::H, 1, 0, AmbientOp::Y, 1},
  };
  return rels;
}

}  // namespace

Report verify_flat_relations(Signature sig, int maxdeg, int trials, long seed, bool parallel) {
  Report r;
  r.suite = "flat relations (" + std::to_string(sig.r) + "," + std::to_string(sig.s) + ")";
  r.seed = seed;
  GammaSet gs = build_gammas(sig);

  // Constructor postcondition first: the full anticommutator table.
  {
    Case c;
    c.id = "gamma_a gamma_b + gamma_b gamma_a = 2 eps_a delta_ab";
    c.expected = "exact anticommutator table";
    bool ok = true;
    int N = sig.spinor_dim();
    for (int a = 0; a < sig.dim() && ok; ++a)
      for (int b = 0; b < sig.dim() && ok; ++b) {
        Matrix anti = gs.gamma[a] * gs.gamma[b] + gs.gamma[b] * gs.gamma[a];
        Matrix want = a == b ? Matrix::identity(N) * GaussianRational(Scalar(2 * sig.eps(a)))
                             : Matrix(N, N);
        ok = anti == want;
      }
    c.computed = ok ? "holds" : "violated";
    c.status = ok ? Status::Pass : Status::Fail;
    r.cases.push_back(c);
  }

  std::vector<CaseJob> jobs;
  for (size_t rel = 0; rel < flat_relations().size(); ++rel) {
    for (int t = 0; t < trials; ++t) {
      jobs.push_back([=, &gs]() {
        const OpRelation& R = flat_relations()[rel];
        PolySpinor psi = random_spinor(gs, maxdeg, mix_seed(seed, (int)rel, t));
        PolySpinor ab = apply_op(R.a, apply_op(R.b, psi, gs), gs);
        PolySpinor ba = apply_op(R.b, apply_op(R.a, psi, gs), gs);
        PolySpinor lhs = (R.pa && R.pb) ? ab + ba : ab - ba;
        PolySpinor rhs = apply_op(R.rhs, psi, gs) * GaussianRational(R.factor);
        Case c;
        c.id = std::string(R.id) + ", trial " + std::to_string(t);
        c.expected = "operator identity on random spinor";
        c.computed = lhs == rhs ? "holds" : "violated";
        c.status = lhs == rhs ? Status::Pass : Status::Fail;
        return c;
      });
    }
  }
  // x.x = Q and y.y = Lap.
  for (int t = 0; t < trials; ++t) {
    jobs.push_back([=, &gs]() {
      PolySpinor psi = random_spinor(gs, maxdeg, mix_seed(seed, 100, t));
      bool ok = apply_op(AmbientOp::X, apply_op(AmbientOp::X, psi, gs), gs) ==
                    apply_op(AmbientOp::Q, psi, gs) &&
                apply_op(AmbientOp::Y, apply_op(AmbientOp::Y, psi, gs), gs) ==
                    apply_op(AmbientOp::Lap, psi, gs);
      Case c;
      c.id = "x.x = Q and y.y = Lap, trial " + std::to_string(t);
      c.expected = "operator identity on random spinor";
      c.computed = ok ? "holds" : "violated";
      c.status = ok ? Status::Pass : Status::Fail;
      return c;
    });
  }
  auto results = run_cases(jobs, parallel);
  r.cases.insert(r.cases.end(), results.begin(), results.end());
  return r;
}

Report kernel_suite(int dmax, int random_vectors, long seed, bool parallel) {
  Report r;
  r.suite = "kernel/image lemma";
  r.seed = seed;
  std::vector<CaseJob> jobs;
  for (int d = 2; d <= dmax; ++d) {
    for (int rr = 1; rr < d; ++rr) {
      Signature sig{rr, d - rr};
      for (int t = -1; t < random_vectors; ++t) {
        jobs.push_back([=]() {
          GammaSet gs = build_gammas(sig);
          std::vector<Scalar> v(sig.dim(), Scalar(0));
          if (t < 0) {
            v[0] = 1;
            v[sig.r] = 1;  // e_t + e_u
          } else {
            std::mt19937_64 rng(mix_seed(seed, 16 * sig.r + sig.s, t));
            std::uniform_int_distribution<long> num(-9, 9);
            std::uniform_int_distribution<long> den(1, 4);
            Scalar rest = 0;
            for (int a = 0; a < sig.dim(); ++a) {
              if (a == 0 || a == sig.r) continue;
              v[a] = rat(num(rng), den(rng));
              rest += Scalar(sig.eps(a)) * v[a] * v[a];
            }
            Scalar alpha = 0;
            while (alpha == 0) alpha = rat(num(rng), den(rng));
            // v_t^2 - v_u^2 = -rest via v_t - v_u = alpha, v_t + v_u = -rest/alpha
            Scalar beta = -rest / alpha;
            v[0] = (alpha + beta) / 2;
            v[sig.r] = (beta - alpha) / 2;
          }
          NullKernelResult res = null_kernel_analysis(gs, v);
          int half = sig.spinor_dim() / 2;
          bool ok = res.rank == half && res.ker_equals_im && res.trace_T.is_zero();
          Case c;
          c.id = "sig (" + std::to_string(sig.r) + "," + std::to_string(sig.s) + "), " +
                 (t < 0 ? std::string("e_t+e_u") : "random null vector " + std::to_string(t));
          c.expected = "rank = " + std::to_string(half) + ", ker = im, trace T = 0";
          c.computed = "rank = " + std::to_string(res.rank) +
                       ", ker = im: " + (res.ker_equals_im ? "true" : "false") +
                       ", trace T = " + to_string(res.trace_T);
          c.status = ok ? Status::Pass : Status::Fail;
          return c;
        });
      }
    }
  }
  auto results = run_cases(jobs, parallel);
  r.cases.insert(r.cases.end(), results.begin(), results.end());
  return r;
}

Report cross_module_suite(Signature sig, int words, int maxlen, long seed, bool parallel) {
  Report r;
  r.suite = "cross-module oracle (" + std::to_string(sig.r) + "," + std::to_string(sig.s) + ")";
  r.seed = seed;
  GammaSet gs = build_gammas(sig);
  std::vector<CaseJob> jobs;
  for (int t = 0; t < words; ++t) {
    jobs.push_back([=, &gs]() {
      std::mt19937_64 rng(mix_seed(seed, 7, t));
      std::uniform_int_distribution<int> len(1, maxlen);
      std::uniform_int_distribution<int> pick(0, 2);
      Word w(len(rng));
      for (auto& g : w) g = (Gen)pick(rng);
      PolySpinor psi = random_spinor(gs, 2, mix_seed(seed, 11, t));
      // Direct application, rightmost letter first.
      PolySpinor direct = psi;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        AmbientOp op = *it == Gen::X   ? AmbientOp::X
                       : *it == Gen::Y ? AmbientOp::Y
                                       : AmbientOp::H;
        direct = apply_op(op, direct, gs);
      }
      AlgebraElement nf = AlgebraElement::one();
      for (Gen g : w) nf = multiply(nf, AlgebraElement::gen(g));
      PolySpinor via_nf = evaluate_element(nf, psi, gs);
      std::ostringstream os;
      for (Gen g : w) os << "xyh"[(int)g];
      Case c;
      c.id = "word " + os.str() + ", trial " + std::to_string(t);
      c.expected = "normal-form evaluation equals direct application";
      c.computed = direct == via_nf ? "equal" : "different";
      c.status = direct == via_nf ? Status::Pass : Status::Fail;
      return c;
    });
  }
  auto results = run_cases(jobs, parallel);
  r.cases.insert(r.cases.end(), results.begin(), results.end());
  return r;
}

}  // namespace diracops
