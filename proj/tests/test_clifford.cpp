#include <doctest.h>

#include "diracops/clifford.hpp"

using namespace diracops;

TEST_CASE("gamma matrices realize the quadratic form") {
  for (Signature sig : {Signature{1, 1}, Signature{2, 1}, Signature{2, 2}, Signature{3, 2}}) {
    GammaSet gs = build_gammas(sig);
    int N = sig.spinor_dim();
    REQUIRE((int)gs.gamma.size() == sig.dim());
    Matrix id = Matrix::identity(N);
    for (int a = 0; a < sig.dim(); ++a) {
      CHECK(gs.gamma[a] * gs.gamma[a] == id * GaussianRational(Scalar(sig.eps(a))));
      for (int b = a + 1; b < sig.dim(); ++b) {
        Matrix anti = gs.gamma[a] * gs.gamma[b] + gs.gamma[b] * gs.gamma[a];
        CHECK(anti == Matrix(N, N));
      }
    }
  }
}

TEST_CASE("signature (1,1) uses the standard pair") {
  GammaSet gs = build_gammas({1, 1});
  Matrix g0(2, 2), g1(2, 2);
  g0.at(0, 1) = GaussianRational(Scalar(1));
  g0.at(1, 0) = GaussianRational(Scalar(1));
  g1.at(0, 1) = GaussianRational(Scalar(1));
  g1.at(1, 0) = GaussianRational(Scalar(-1));
  CHECK(gs.gamma[0] == g0);
  CHECK(gs.gamma[1] == g1);
}

TEST_CASE("euler operator shifts homogeneous degree") {
  GammaSet gs = build_gammas({2, 2});
  PolySpinor psi = random_spinor(gs, 3, 99);
  // h = sum_a x^a d_a + d/2 acts on a degree-k part as k + d/2
  PolySpinor h1 = apply_op(AmbientOp::H, psi, gs);
  PolySpinor c = PolySpinor::constant(SpinorVec(gs.sig.spinor_dim(), GaussianRational(Scalar(3))),
                                      gs.sig.dim());
  CHECK(apply_op(AmbientOp::H, c, gs) == c * GaussianRational(rat(gs.sig.dim(), 2)));
  // yx + xy = 2h as concrete operators
  PolySpinor lhs = apply_op(AmbientOp::Y, apply_op(AmbientOp::X, psi, gs), gs) +
                   apply_op(AmbientOp::X, apply_op(AmbientOp::Y, psi, gs), gs);
  CHECK(lhs == h1 * GaussianRational(Scalar(2)));
}

TEST_CASE("quadratic form reduction is canonical") {
  GammaSet gs = build_gammas({2, 1});
  PolySpinor psi = random_spinor(gs, 4, 5);
  PolySpinor r = reduce_mod_Q(psi, gs);
  CHECK(reduce_mod_Q(r, gs) == r);
  for (const auto& [exps, v] : r.terms()) CHECK(exps[0] <= 1);
  PolySpinor q = apply_op(AmbientOp::Q, psi, gs);
  CHECK(reduce_mod_Q(q, gs).is_zero());
  CHECK(is_tangential(q, gs));
}

TEST_CASE("null vector kernel data") {
  GammaSet gs = build_gammas({2, 2});
  std::vector<Scalar> v(4, Scalar(0));
  v[0] = 1;
  v[2] = 1;  // e_t + e_u, null for (+,+,-,-)
  NullKernelResult res = null_kernel_analysis(gs, v);
  CHECK(res.rank == gs.sig.spinor_dim() / 2);
  CHECK(res.ker_equals_im);
  CHECK(res.trace_T == GaussianRational(Scalar(0)));
  std::vector<Scalar> bad(4, Scalar(0));
  bad[0] = 1;
  CHECK_THROWS_AS(null_kernel_analysis(gs, bad), NotNullError);
  CHECK_THROWS_AS(null_kernel_analysis(gs, std::vector<Scalar>(4, Scalar(0))), ZeroVectorError);
}
