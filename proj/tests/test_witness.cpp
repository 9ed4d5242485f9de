#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "kornlab/quadrature.hpp"
#include "kornlab/witness.hpp"

using namespace kornlab;
using witness::WitnessSpec;

namespace {

// Direct quadrature of the two disk norms, bypassing the Gamma reduction:
//   |E| density: (k t^{k-1}/sqrt2)^p e^{-2t},  |A|: (sqrt2 |t^k - (k/2) t^{k-1}|)^p e^{-2t}
// The raw integrands span many orders of magnitude, so each is rescaled by
// its peak before handing it an absolute tolerance.
template <typename LogF>
double log_integral(LogF&& lf, double lo, double hi, double kink = -1.0) {
  double lmax = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 4000; ++i) {
    const double t = lo + (hi - lo) * i / 4000.0;
    lmax = std::max(lmax, lf(t));
  }
  auto f = [&](double t) { return std::exp(lf(t) - lmax); };
  double I;
  if (kink > lo && kink < hi)
    I = quadrature::integrate(f, lo, kink, 1e-13).value +
        quadrature::integrate(f, kink, hi, 1e-13).value;
  else
    I = quadrature::integrate(f, lo, hi, 1e-13).value;
  return lmax + std::log(I);
}

double oracle_log_normE(const WitnessSpec& s) {
  const double p = s.p, k = s.k;
  auto lf = [&](double t) {
    return p * (std::log(k) + (k - 1.0) * std::log(t) - 0.5 * std::log(2.0)) - 2.0 * t;
  };
  const double logI = log_integral(lf, 1e-12, 40.0 + 10.0 * p * k);
  return (std::log(2.0 * M_PI) + logI) / p;
}

double oracle_log_normA(const WitnessSpec& s) {
  const double p = s.p, k = s.k;
  auto lf = [&](double t) {
    const double w = std::abs(std::pow(t, k) - 0.5 * k * std::pow(t, k - 1.0));
    return p * (0.5 * std::log(2.0) + std::log(w)) - 2.0 * t;
  };
  // the skew factor vanishes at t = k/2
  const double logI = log_integral(lf, 1e-12, 40.0 + 10.0 * p * k, 0.5 * k);
  return (std::log(2.0 * M_PI) + logI) / p;
}

}  // namespace

TEST_CASE("closed-form disk norms match direct quadrature", "[witness]") {
  for (int k : {2, 5})
    for (double p : {2.0, 4.0}) {
      const WitnessSpec s{k, p};
      const auto cf = witness::closed_form(s);
      CHECK(cf.log_normE == Catch::Approx(oracle_log_normE(s)).margin(1e-8));
      CHECK(cf.log_normA == Catch::Approx(oracle_log_normA(s)).margin(1e-8));
      CHECK(cf.ratio == Catch::Approx(std::exp(cf.log_normA - cf.log_normE)).epsilon(1e-9));
    }
}

TEST_CASE("witness ratio equals the Gamma central moment", "[witness]") {
  // p = 2 collapses to 1 for every k; p = 4 has rational fourth moments
  for (int k : {1, 2, 5, 10, 100})
    CHECK(witness::closed_form({k, 2.0}).ratio == Catch::Approx(1.0).epsilon(1e-9));
  CHECK(witness::closed_form({2, 4.0}).ratio == Catch::Approx(std::sqrt(6.0)).epsilon(1e-9));
  CHECK(witness::closed_form({3, 4.0}).ratio ==
        Catch::Approx(std::pow(49.0, 0.25)).epsilon(1e-9));
}

TEST_CASE("ratio sits between the Jensen bound and p - 1", "[witness]") {
  for (double p : {2.0, 3.0, 4.0, 8.0})
    for (int k : {1, 2, 3, 5, 10, 20, 50, 100}) {
      const auto cf = witness::closed_form({k, p});
      CHECK(cf.ratio >= cf.lower - 1e-10);
      CHECK(cf.ratio <= cf.upper + 1e-10);
    }
}

TEST_CASE("sampled vortex measures its closed-form ratio", "[witness]") {
  // Resolvable slice of the family: the strain mass of u_k sits at radii
  // ~ exp(-k), so double-digit k cannot be meshed; see the acceptance battery.
  GridSpec g{2, 256};
  for (int k : {2, 3}) {
    const WitnessSpec s{k, 2.0};
    const auto u = witness::vortex_field(s, g);
    const auto rep = spectral::korn_ratio(u, 2.0, spectral::Variant::plain);
    const auto cf = witness::closed_form(s);
    CHECK(rep.ratio == Catch::Approx(cf.ratio).epsilon(0.05));
    // measured strain norm against the rescaled disk norm
    const double expected = witness::expected_log_norm(s, cf.log_normE);
    CHECK(std::log(rep.normE) == Catch::Approx(expected).margin(0.1));
  }
}

TEST_CASE("refinement shrinks the gap to the closed form", "[witness]") {
  const WitnessSpec s{2, 2.0};
  const auto cf = witness::closed_form(s);
  double gap[2];
  int i = 0;
  for (int n : {128, 256}) {
    GridSpec g{2, n};
    const auto rep = spectral::korn_ratio(witness::vortex_field(s, g), 2.0,
                                          spectral::Variant::plain);
    gap[i++] = std::abs(rep.ratio - cf.ratio);
  }
  CHECK(gap[1] < gap[0]);
}

TEST_CASE("dimension lift bound increases in r toward the planar ratio", "[witness]") {
  const WitnessSpec s{2, 2.0};
  GridSpec g2{2, 128};
  double prev = -1.0;
  witness::LiftReport last;
  for (int r : {1, 2, 4, 16}) {
    const auto rep = witness::dimension_lift(s, g2, r);
    CHECK(rep.lower_bound > prev);
    CHECK(rep.lower_bound < rep.ratio2);
    prev = rep.lower_bound;
    last = rep;
  }
  // gap to the planar ratio decays like 1/r
  const auto r4 = witness::dimension_lift(s, g2, 4);
  CHECK(last.ratio2 - last.lower_bound < 0.35 * (r4.ratio2 - r4.lower_bound));
}

TEST_CASE("lifted field is measurable in 3d", "[witness]") {
  const WitnessSpec s{2, 2.0};
  GridSpec g3{3, 64};
  const auto u3 = witness::lifted_field(s, g3, 2);
  const auto rep = spectral::korn_ratio(u3, 2.0, spectral::Variant::plain);
  const auto lift = witness::dimension_lift(s, GridSpec{2, 64}, 2);
  CHECK(rep.ratio > 0.0);
  CHECK(rep.normE > 0.0);
  // continuum bound, generous mesh slack
  CHECK(rep.ratio > 0.8 * lift.lower_bound);
}

TEST_CASE("radial witness ratio in every even dimension", "[witness]") {
  double prev = std::numeric_limits<double>::infinity();
  for (int d : {4, 8, 16, 32}) {
    const auto rep = witness::l1_radial_ratio(d, d == 4 ? 200000 : 50000);
    CHECK(rep.ratio >= 1.0);
    CHECK(rep.ratio <= rep.bound);
    CHECK(rep.ratio < prev);  // decreasing in d
    prev = rep.ratio;
    CHECK(std::abs(rep.mc_ratio - rep.ratio) < 4.0 * rep.mc_stderr + 1e-3);
  }
  CHECK_THROWS_AS(witness::l1_radial_ratio(5), std::invalid_argument);
  CHECK_THROWS_AS(witness::l1_radial_ratio(0), std::invalid_argument);
}

TEST_CASE("spec validation", "[witness]") {
  CHECK_THROWS_AS(witness::closed_form({0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(witness::closed_form({2, 0.5}), std::invalid_argument);
  GridSpec g3{3, 16};
  CHECK_THROWS_AS(witness::vortex_field({2, 2.0}, g3), std::invalid_argument);
}
