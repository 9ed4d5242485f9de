#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "kornlab/matalg.hpp"
#include "kornlab/rng.hpp"

using namespace kornlab;
using matalg::Matrix;
using matalg::Subspace;
using matalg::Tensor3;

namespace {

Matrix random_matrix(int d, std::uint64_t seed) {
  Rng rng(seed);
  Matrix A(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) A(i, j) = rng.normal();
  return A;
}

double dot(const Matrix& A, const Matrix& B) { return (A.cwiseProduct(B)).sum(); }

}  // namespace

TEST_CASE("projections are idempotent and orthogonal", "[matalg]") {
  for (int d : {2, 3, 5}) {
    const Matrix A = random_matrix(d, 100 + static_cast<std::uint64_t>(d));
    const Matrix S = matalg::project(A, Subspace::Sym);
    const Matrix K = matalg::project(A, Subspace::Skew);
    const Matrix I = matalg::project(A, Subspace::SpanId);
    const Matrix S0 = matalg::project(A, Subspace::SymTraceFree);

    CHECK((matalg::project(S, Subspace::Sym) - S).norm() < 1e-14);
    CHECK((matalg::project(K, Subspace::Skew) - K).norm() < 1e-14);
    CHECK((matalg::project(S0, Subspace::SymTraceFree) - S0).norm() < 1e-14);
    CHECK((A - S - K).norm() < 1e-14);
    CHECK((S - S0 - I).norm() < 1e-14);
    CHECK(std::abs(dot(S0, I)) < 1e-13);
    CHECK(std::abs(dot(S0, K)) < 1e-13);
    CHECK(std::abs(dot(I, K)) < 1e-13);
    CHECK(std::abs(S0.trace()) < 1e-13);
    // Pythagoras across the three orthogonal pieces
    const double lhs = A.squaredNorm();
    const double rhs = S0.squaredNorm() + I.squaredNorm() + K.squaredNorm();
    CHECK(lhs == Catch::Approx(rhs).epsilon(1e-13));
  }
  CHECK(matalg::frob(Matrix::Identity(3, 3)) == Catch::Approx(std::sqrt(3.0)));
  CHECK_THROWS_AS(matalg::project(Matrix::Zero(2, 3), Subspace::Sym), std::invalid_argument);
}

TEST_CASE("skew defect ratio matches the closed form on simple tensors", "[matalg]") {
  // a_{ijk} = u_i v_j v_k with |v| = 1: ratio = 2 (1 - (u.v)^2/|u|^2)
  Rng rng(7);
  for (int d : {2, 3, 4}) {
    const auto uv = rng.sphere_point(d);
    const auto vv = rng.sphere_point(d);
    Tensor3 t = Tensor3::zero(d, true);
    double udotv = 0.0, unorm2 = 0.0;
    for (int i = 0; i < d; ++i) {
      udotv += uv[static_cast<std::size_t>(i)] * vv[static_cast<std::size_t>(i)];
      unorm2 += uv[static_cast<std::size_t>(i)] * uv[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          t.at(i, j, k) = uv[static_cast<std::size_t>(i)] * vv[static_cast<std::size_t>(j)] *
                          vv[static_cast<std::size_t>(k)];
    const double expected = 2.0 * (1.0 - udotv * udotv / unorm2);
    CHECK(matalg::skew_defect_ratio(t) == Catch::Approx(expected).margin(1e-12));
  }

  Tensor3 bad = Tensor3::zero(2, true);
  bad.at(0, 0, 1) = 1.0;  // not symmetric in the last two slots
  CHECK_THROWS_AS(matalg::skew_defect_ratio(bad), std::invalid_argument);
}

TEST_CASE("swap operator spectrum pins the defect constant at 3", "[matalg]") {
  for (int d = 2; d <= 6; ++d) {
    const auto op = matalg::skew_defect_operator(d);
    CHECK(op.identity_residual < 1e-12);
    CHECK(op.min_eigenvalue == Catch::Approx(-0.5).margin(1e-10));
    CHECK(op.sharp_constant == Catch::Approx(3.0).margin(1e-10));
    for (Eigen::Index i = 0; i < op.eigenvalues.size(); ++i) {
      const double lam = op.eigenvalues(i);
      const double dist = std::min(std::abs(lam - 1.0), std::abs(lam + 0.5));
      CHECK(dist < 1e-10);
    }
    // independent evaluation of the defect on the reported maximizer
    CHECK(matalg::skew_defect_ratio(op.maximizer) == Catch::Approx(3.0).margin(1e-8));
  }
}

TEST_CASE("trace-free defect constant is 4 in the plane and 3 above", "[matalg]") {
  const auto op2 = matalg::tracefree_defect_constant(2);
  CHECK(op2.constant == Catch::Approx(4.0).margin(1e-8));
  CHECK(op2.maximizer_ratio == Catch::Approx(op2.constant).margin(1e-8));
  for (int d = 3; d <= 6; ++d) {
    const auto op = matalg::tracefree_defect_constant(d);
    CHECK(op.constant == Catch::Approx(3.0).margin(1e-8));
    CHECK(op.maximizer_ratio == Catch::Approx(op.constant).margin(1e-8));
  }
}

TEST_CASE("sphere second moments agree with Id/d", "[matalg]") {
  using matalg::SphereRule;
  for (int d : {2, 3, 4, 6}) {
    const auto ex = matalg::sphere_moment(d, SphereRule::Exact);
    CHECK(ex.max_error_vs_exact == 0.0);
    CHECK(ex.trace == Catch::Approx(1.0));
  }
  CHECK(matalg::sphere_moment(2, SphereRule::Product).max_error_vs_exact < 1e-13);
  CHECK(matalg::sphere_moment(3, SphereRule::Product).max_error_vs_exact < 1e-13);
  const auto mc = matalg::sphere_moment(4, SphereRule::MonteCarlo, 200000, 5);
  CHECK(mc.max_error_vs_exact < 0.01);
  CHECK(mc.trace == Catch::Approx(1.0).margin(1e-12));  // unit vectors, trace is exact
  CHECK_THROWS_AS(matalg::sphere_moment(4, SphereRule::Product), std::invalid_argument);
}

TEST_CASE("directional average constant has exact small-d values", "[matalg]") {
  const double pi = 3.14159265358979323846;
  CHECK(matalg::directional_average_constant(2) == Catch::Approx(2.0 / pi).epsilon(1e-14));
  CHECK(matalg::directional_average_constant(3) == Catch::Approx(0.5).epsilon(1e-14));
  // c_d decreases, c_d * d increases past sqrt(2) from d = 3 on
  double prev = matalg::directional_average_constant(2);
  for (int d = 3; d <= 64; ++d) {
    const double c = matalg::directional_average_constant(d);
    CHECK(c < prev);
    prev = c;
    if (d >= 3) CHECK(c * d > std::sqrt(2.0));
  }
}

TEST_CASE("sphere average of |A theta| dominates c_d |A| with rank-one equality",
          "[matalg]") {
  Matrix R = Matrix::Zero(2, 2);
  R(0, 0) = 1.0;  // rank one, equality case; |cos| has kinks, so only O(h^2)
  const auto eq = matalg::directional_average_lower(R);
  CHECK(std::abs(eq.margin) < 1e-4);

  const auto full = matalg::directional_average_lower(Matrix::Identity(2, 2));
  CHECK(full.margin > 1e-3);
  CHECK(full.average == Catch::Approx(1.0).epsilon(1e-12));

  for (int d : {2, 3}) {
    const Matrix A = random_matrix(d, 40 + static_cast<std::uint64_t>(d));
    const auto da = matalg::directional_average_lower(A);
    CHECK(da.margin > -1e-10);
  }

  // Monte Carlo branch: margin nonnegative within noise, zero for rank one
  Matrix R4 = Matrix::Zero(4, 4);
  R4(1, 2) = 2.0;
  const auto mc = matalg::directional_average_lower(R4, 200000, 3);
  CHECK(std::abs(mc.margin) < 4.0 * mc.mc_stderr + 1e-12);
  const auto gen = matalg::directional_average_lower(random_matrix(4, 99), 200000, 4);
  CHECK(gen.margin > -4.0 * gen.mc_stderr);
}

TEST_CASE("rank-one skew-to-sym ratio maxes out at orthogonal pairs", "[matalg]") {
  // |skew(a x b)|^2 / |sym(a x b)|^2 = (1-t^2)/(1+t^2) <= 1 at t = a.b = 0
  for (int d : {2, 3, 4}) {
    const auto r = matalg::rank_one_ratio(Subspace::Sym, d);
    CHECK(r.ratio == Catch::Approx(1.0).margin(1e-6));
    CHECK(std::abs(r.inner) < 1e-3);
  }
  // trace-free split: the same supremum, attained at t = 0 for every d
  for (int d : {2, 3, 4}) {
    const auto r = matalg::rank_one_ratio(Subspace::SymTraceFree, d);
    CHECK(r.ratio == Catch::Approx(1.0).margin(1e-6));
  }
}
