#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "kornlab/rankone.hpp"
#include "kornlab/rng.hpp"

using namespace kornlab;
using rankone::IntegrandSpec;
using rankone::Variant;
using matalg::Matrix;

namespace {

Matrix random_matrix(int d, std::uint64_t seed) {
  Rng rng(seed);
  Matrix A(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) A(i, j) = rng.normal();
  return A;
}

}  // namespace

TEST_CASE("integrand values on symmetric, skew and generic matrices", "[rankone]") {
  const Matrix A = random_matrix(3, 1);
  const Matrix S = matalg::project(A, matalg::Subspace::Sym);
  const Matrix K = matalg::project(A, matalg::Subspace::Skew);

  const IntegrandSpec plain4{4.0, 3.0, Variant::plain};
  CHECK(rankone::eval_integrand(plain4, S) ==
        Catch::Approx(81.0 * std::pow(matalg::frob(S), 4.0)).epsilon(1e-12));
  CHECK(rankone::eval_integrand(plain4, K) ==
        Catch::Approx(-std::pow(matalg::frob(K), 4.0)).epsilon(1e-12));

  const IntegrandSpec quad{2.0, 1.0, Variant::plain};
  CHECK(rankone::eval_integrand(quad, A) ==
        Catch::Approx(S.squaredNorm() - K.squaredNorm()).margin(1e-12));

  const IntegrandSpec fg{4.0, 3.0, Variant::full_gradient};
  CHECK(rankone::eval_integrand(fg, A) ==
        Catch::Approx(81.0 * std::pow(matalg::frob(S), 4.0) -
                      std::pow(matalg::frob(A), 4.0)).epsilon(1e-12));

  // identity matrix: no trace-free symmetric part, the complement soaks it up
  const IntegrandSpec tf{3.0, 2.0, Variant::trace_free};
  CHECK(rankone::eval_integrand(tf, Matrix::Identity(3, 3)) ==
        Catch::Approx(-std::pow(3.0, 1.5)).epsilon(1e-12));

  CHECK_THROWS_AS(rankone::eval_integrand({1.0, 1.0, Variant::plain}, A),
                  std::invalid_argument);
  CHECK_THROWS_AS(rankone::eval_integrand({2.0, 0.0, Variant::plain}, A),
                  std::invalid_argument);
}

TEST_CASE("integrand is p-homogeneous", "[rankone]") {
  Rng rng(8);
  for (auto v : {Variant::plain, Variant::trace_free, Variant::full_gradient}) {
    const IntegrandSpec spec{3.0, 2.0, v};
    for (int i = 0; i < 50; ++i) {
      const Matrix A = random_matrix(3, 500 + static_cast<std::uint64_t>(i));
      const double t = rng.uniform(-2.0, 2.0);
      if (std::abs(t) < 1e-3) continue;
      const double lhs = rankone::eval_integrand(spec, t * A);
      const double rhs = std::pow(std::abs(t), spec.p) * rankone::eval_integrand(spec, A);
      CHECK(lhs == Catch::Approx(rhs).margin(1e-12 * std::max(1.0, std::abs(rhs))));
    }
  }
}

TEST_CASE("rank-one directions at the origin", "[rankone]") {
  // c = p* - 1: rank-one convex, so both the sign test and the probes pass
  const auto sharp = rankone::rank_one_test_at_zero({4.0, 3.0, Variant::plain}, 2, 400);
  CHECK(sharp.min_pure_direction >= -1e-12);
  CHECK(sharp.min_second_difference >= -1e-9);

  const auto sharp3 = rankone::rank_one_test_at_zero({4.0, 3.0, Variant::plain}, 3, 200);
  CHECK(sharp3.min_pure_direction >= -1e-12);
  CHECK(sharp3.min_second_difference >= -1e-9);

  // c below the threshold still passes on pure directions (c >= 1 suffices
  // there); the failure only shows up through deep laminates
  const auto low = rankone::rank_one_test_at_zero({4.0, 2.5, Variant::plain}, 2, 400);
  CHECK(low.min_pure_direction >= -1e-12);

  const auto quad = rankone::rank_one_test_at_zero({2.0, 1.0, Variant::plain}, 2, 400);
  CHECK(quad.min_second_difference >= -1e-10);
}

TEST_CASE("planar envelope is exact for the quadratic case", "[rankone]") {
  const auto env = rankone::planar_envelope(2.0, 1.0, 2.0, 65, 60);
  CHECK(env.monotone);
  double err = 0.0;
  for (std::size_t i = 0; i < env.env.size(); ++i)
    err = std::max(err, std::abs(env.env[i] - env.f[i]));
  CHECK(err <= 1e-13);
  CHECK_THROWS_AS(rankone::planar_envelope(2.0, 1.0, 2.0, 64, 10), std::invalid_argument);
  CHECK_THROWS_AS(rankone::planar_envelope(2.0, 0.5, 2.0, 65, 10), std::invalid_argument);
}

TEST_CASE("planar envelope matches the extremal function at p = 4", "[rankone]") {
  const auto env = rankone::planar_envelope(4.0, 3.0, 2.0, 129, 400);
  CHECK(env.monotone);
  const auto gap = rankone::envelope_vs_G(env, 0.25);
  CHECK(gap.sup_eq_zone_error <= 1e-10);   // equality on the f >= 0 zone
  CHECK(gap.inf_env_minus_G >= -1e-9);     // envelope dominates G
  CHECK(gap.rel_sup_gap <= 0.02);
  CHECK(gap.midpoint_convex);
}

TEST_CASE("scalar root machinery behind c(p)", "[rankone]") {
  // hand-checked value: u_{3/2}(2) = 0.5 sqrt[4]{5} - 3/2 + sqrt(3) - 1
  CHECK(rankone::u_p(1.5, 2.0) == Catch::Approx(-0.0202748).margin(1e-6));
  // cubic vanishing at the origin: u ~ p(p-1)(2-p)/6 t^3
  const double t = 1e-3;
  const double lead = 1.5 * 0.5 * 0.5 / 6.0 * t * t * t;
  CHECK(rankone::u_p(1.5, t) == Catch::Approx(lead).epsilon(0.05));

  const double pz = rankone::p0();
  CHECK(pz == Catch::Approx(1.638).margin(1e-3));

  for (double p : {1.7, 1.8, 1.9, 1.95}) {
    const double s = rankone::s0(p);
    CHECK(s > -1.0);
    CHECK(s < 1.0);
    CHECK(std::abs(rankone::u_p(p, (1.0 + s) / (1.0 - s))) < 1e-9);
  }
  CHECK_THROWS_AS(rankone::s0(2.5), std::invalid_argument);
}

TEST_CASE("c(p) takes the closed form outside (p0, 2) and glues", "[rankone]") {
  CHECK(rankone::c_of_p(2.0) == Catch::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(rankone::c_of_p(4.0) == Catch::Approx(std::sqrt(10.0)).epsilon(1e-14));
  CHECK(rankone::c_of_p(1.5) == Catch::Approx(std::sqrt(5.0)).epsilon(1e-14));
  CHECK(rankone::c_of_p(1.2) == Catch::Approx(std::sqrt(26.0)).epsilon(1e-14));

  const double pz = rankone::p0();
  CHECK(std::abs(rankone::c_of_p(pz + 1e-7) - rankone::c_of_p(pz - 1e-7)) < 1e-6);
  CHECK(std::abs(rankone::c_of_p(2.0 - 1e-8) - std::sqrt(2.0)) < 1e-6);
}

TEST_CASE("the improvement over the natural bound is tiny but positive", "[rankone]") {
  const double pz = rankone::p0();
  double sup = 0.0;
  for (int i = 1; i < 40; ++i) {
    const double p = pz + (2.0 - pz) * i / 40.0;
    const double imp = rankone::c_of_p(p) - rankone::natural_bound(p);
    CHECK(imp > 0.0);
    sup = std::max(sup, imp);
  }
  CHECK(sup <= 0.0005 + 1e-6);
  CHECK(sup > 1e-5);  // the curve genuinely lifts off the natural bound
  // vanishes toward both endpoints
  CHECK(rankone::c_of_p(pz + 1e-6) - rankone::natural_bound(pz + 1e-6) < 1e-5);
  CHECK(rankone::c_of_p(2.0 - 1e-6) - rankone::natural_bound(2.0 - 1e-6) < 1e-5);
}

TEST_CASE("full gradient bounds", "[rankone]") {
  const auto b2 = rankone::full_gradient_bounds(2.0);
  CHECK(b2.lower == Catch::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(b2.upper == Catch::Approx(2.0).epsilon(1e-14));
  const auto b4 = rankone::full_gradient_bounds(4.0);
  CHECK(b4.lower == Catch::Approx(std::sqrt(10.0)).epsilon(1e-14));
  CHECK(b4.upper == Catch::Approx(std::sqrt(28.0)).epsilon(1e-14));
  const auto b32 = rankone::full_gradient_bounds(1.5);
  CHECK(b32.lower == Catch::Approx(std::sqrt(5.0)).epsilon(1e-14));
  CHECK(b32.upper ==
        Catch::Approx(std::pow(std::pow(2.0 * std::sqrt(3.0), 1.5) + 1.0, 1.0 / 1.5))
            .epsilon(1e-14));
  for (int i = 1; i <= 200; ++i) {
    const double p = 1.0 + 15.0 * i / 200.0;
    const auto b = rankone::full_gradient_bounds(p);
    CHECK(b.lower <= b.upper + 1e-12);
  }
}
