#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "kornlab/matalg.hpp"
#include "kornlab/quadrature.hpp"
#include "kornlab/radial.hpp"
#include "kornlab/rng.hpp"
#include "kornlab/spectral.hpp"

namespace kornlab::witness {

using grid::GridSpec;
using grid::VectorField;

// Planar vortex family u_k(y) = (-log|y|)^k Q y on the unit disk, Q the
// rotation generator, extended by zero outside and at the origin.
struct WitnessSpec {
  int k = 2;
  double p = 2.0;
  void validate() const {
    if (k < 1) throw std::invalid_argument("WitnessSpec: k >= 1 required");
    if (!(p >= 1.0)) throw std::invalid_argument("WitnessSpec: p >= 1 required");
  }
  radial::GammaSpec gamma() const { return {p, static_cast<double>(k)}; }
};

// Exact disk norms. With t = -log r and alpha = p(k-1)+1:
//   ||E||_p^p = 2 pi k^p 2^{-p/2} Gamma(alpha) / 2^alpha
//   ||A||_p / ||E||_p = (E|X-1|^p)^{1/p},  X ~ Gamma(alpha, 1/k)
// Norms are carried in logs; they overflow double for large k otherwise.
struct ClosedForm {
  double log_normE = 0.0;
  double log_normA = 0.0;
  double ratio = 0.0;
  double lower = 0.0;  // (p-1)(k-1)/k, convexity of |x-1|^p at the mean
  double upper = 0.0;  // p-1, valid for p >= 2
};

inline ClosedForm closed_form(const WitnessSpec& s) {
  s.validate();
  const double p = s.p;
  const double k = s.k;
  const double alpha = p * (k - 1.0) + 1.0;
  ClosedForm c;
  c.log_normE =
      (std::log(2.0 * M_PI) - (0.5 * p + alpha) * std::log(2.0) + std::lgamma(alpha)) / p +
      std::log(k);
  c.ratio = radial::fk(p, k);
  c.log_normA = c.log_normE + std::log(c.ratio);
  c.lower = (p - 1.0) * (k - 1.0) / k;
  c.upper = (p >= 2.0) ? p - 1.0 : std::numeric_limits<double>::quiet_NaN();
  return c;
}

// Placement of the disk inside the periodic cell, plus the amplitude
// normalization s = (e/k)^k that caps |u| near R instead of (k/e)^k.
struct SampleLayout {
  double center = 0.5;
  double radius = 0.45;
};

inline double log_amplitude(const WitnessSpec& s) {
  return s.k * (1.0 - std::log(static_cast<double>(s.k)));
}

inline VectorField vortex_field(const WitnessSpec& s, const GridSpec& g,
                                const SampleLayout& lay = {}) {
  s.validate();
  if (g.d != 2) throw std::invalid_argument("vortex_field: 2d grid required");
  const double ls = log_amplitude(s);
  const double k = s.k;
  return spectral::sample_field(g, [&](const double* x, double* out) {
    const double y0 = (x[0] - lay.center) / lay.radius;
    const double y1 = (x[1] - lay.center) / lay.radius;
    const double r = std::sqrt(y0 * y0 + y1 * y1);
    out[0] = 0.0;
    out[1] = 0.0;
    if (r <= 0.0 || r >= 1.0) return;
    const double t = -std::log(r);
    // |u| = s t^k r, assembled in logs to survive k of a few hundred
    const double mag = std::exp(ls + k * std::log(t) - t);
    out[0] = mag * (-y1 / r);
    out[1] = mag * (y0 / r);
  });
}

// Lp norm over the cell of the scaled sample: s R^{2/p-1} times the disk norm.
inline double expected_log_norm(const WitnessSpec& s, double log_disk_norm,
                                const SampleLayout& lay = {}) {
  return log_amplitude(s) + (2.0 / s.p - 1.0) * std::log(lay.radius) + log_disk_norm;
}

// Lift of the planar field to the 3-torus: the cell is tiled r times in the
// plane and modulated by a bump in the third coordinate,
//   u3(x) = (G(x3) u2(r x1, r x2), 0),  G = (1-zeta^2)^3 on |zeta| < 1,
// normalized so ||G||_p = 1. Triangle inequality on the two blocks of grad u3
// gives the reported lower bound, increasing in r with limit normA2/normE2.
struct LiftReport {
  int r = 1;
  double ratio2 = 0.0;
  double normE2 = 0.0;
  double normA2 = 0.0;
  double normU2 = 0.0;
  double gprime_max = 0.0;  // sup |G'| after both normalizations
  double lower_bound = 0.0;
};

namespace detail {

// log of integral_{-1}^{1} (1-z^2)^m dz = sqrt(pi) Gamma(m+1) / Gamma(m+3/2)
inline double log_even_beta(double m) {
  return 0.5 * std::log(M_PI) + std::lgamma(m + 1.0) - std::lgamma(m + 1.5);
}

struct Bump {
  double center = 0.5;
  double radius = 0.45;
  double p = 2.0;
  double lognorm = 0.0;  // log ||(1-zeta^2)^3||_{L^p(dz)}
  Bump(double p_, const SampleLayout& lay) : center(lay.center), radius(lay.radius), p(p_) {
    lognorm = (std::log(radius) + log_even_beta(3.0 * p)) / p;
  }
  double operator()(double z) const {
    const double zeta = (z - center) / radius;
    if (std::abs(zeta) >= 1.0) return 0.0;
    const double w = 1.0 - zeta * zeta;
    return w * w * w * std::exp(-lognorm);
  }
  double sup_derivative() const {
    // max of |d/dzeta (1-zeta^2)^3| = 6 zeta (1-zeta^2)^2 at zeta = 1/sqrt(5)
    const double m = 6.0 / std::sqrt(5.0) * std::pow(0.8, 2.0);
    return m / radius * std::exp(-lognorm);
  }
};

}  // namespace detail

inline LiftReport dimension_lift(const WitnessSpec& s, const GridSpec& g2, int r,
                                 const SampleLayout& lay = {}) {
  s.validate();
  if (g2.d != 2) throw std::invalid_argument("dimension_lift: base grid must be 2d");
  if (r < 1) throw std::invalid_argument("dimension_lift: r >= 1 required");
  const VectorField u2 = vortex_field(s, g2, lay);
  const auto rep = spectral::korn_ratio(u2, s.p, spectral::Variant::plain);
  LiftReport out;
  out.r = r;
  out.ratio2 = rep.ratio;
  out.normE2 = rep.normE;
  out.normA2 = rep.normA;
  out.normU2 = spectral::lp_norm(u2, s.p);
  const detail::Bump bump(s.p, lay);
  out.gprime_max = bump.sup_derivative();
  const double c = out.gprime_max * out.normU2 / std::sqrt(2.0);
  out.lower_bound = std::max(0.0, (r * out.normA2 - c) / (r * out.normE2 + c));
  return out;
}

// The lifted field itself, sampled on a 3d grid for direct measurement.
inline VectorField lifted_field(const WitnessSpec& s, const GridSpec& g3, int r,
                                const SampleLayout& lay = {}) {
  s.validate();
  if (g3.d != 3) throw std::invalid_argument("lifted_field: 3d grid required");
  if (r < 1) throw std::invalid_argument("lifted_field: r >= 1 required");
  const double ls = log_amplitude(s);
  const double k = s.k;
  const detail::Bump bump(s.p, lay);
  return spectral::sample_field(g3, [&](const double* x, double* out) {
    out[0] = out[1] = out[2] = 0.0;
    const double gz = bump(x[2]);
    if (gz == 0.0) return;
    double xr[2];
    for (int i = 0; i < 2; ++i) {
      xr[i] = x[i] * r;
      xr[i] -= std::floor(xr[i]);
    }
    const double y0 = (xr[0] - lay.center) / lay.radius;
    const double y1 = (xr[1] - lay.center) / lay.radius;
    const double rr = std::sqrt(y0 * y0 + y1 * y1);
    if (rr <= 0.0 || rr >= 1.0) return;
    const double t = -std::log(rr);
    const double mag = gz * std::exp(ls + k * std::log(t) - t);
    out[0] = mag * (-y1 / rr);
    out[1] = mag * (y0 / rr);
  });
}

// L1 witness on the unit ball in even dimension: u = (1-|x|^2) J x with J the
// standard symplectic matrix. Both |E| and |A| are radial:
//   |E| = sqrt(2) r^2,  |A|^2 = d(1-r^2)^2 - 4r^2(1-r^2) + 2r^4,
// so the L1 ratio reduces to a 1d quadrature. The Monte Carlo path evaluates
// grad u directly and projects, exercising none of that reduction.
struct RadialWitnessReport {
  int d = 4;
  double ratio = 0.0;
  double mc_ratio = 0.0;
  double mc_stderr = 0.0;
  double bound = 0.0;  // 1 + 2 sqrt(2) / (c_d d - sqrt(2))
};

namespace detail {

inline double skew_magnitude2(int d, double r2) {
  const double w = 1.0 - r2;
  return d * w * w - 4.0 * r2 * w + 2.0 * r2 * r2;
}

inline Eigen::MatrixXd symplectic(int d) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(d, d);
  const int h = d / 2;
  for (int i = 0; i < h; ++i) {
    J(i, h + i) = 1.0;
    J(h + i, i) = -1.0;
  }
  return J;
}

}  // namespace detail

inline RadialWitnessReport l1_radial_ratio(int d, long n_samples = 200000,
                                           std::uint64_t seed = 1) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("l1_radial_ratio: even d >= 2 required");
  RadialWitnessReport out;
  out.d = d;
  auto numer = [&](double r) {
    return std::sqrt(detail::skew_magnitude2(d, r * r)) * std::pow(r, d - 1);
  };
  const double In = quadrature::integrate(numer, 0.0, 1.0).value;
  out.ratio = (d + 2.0) / std::sqrt(2.0) * In;
  const double cd = matalg::directional_average_constant(d);
  const double den = cd * d - std::sqrt(2.0);
  out.bound = den > 0.0 ? 1.0 + 2.0 * std::sqrt(2.0) / den
                        : std::numeric_limits<double>::infinity();

  if (n_samples > 0) {
    Rng rng(seed);
    const Eigen::MatrixXd J = detail::symplectic(d);
    double se = 0.0, sa = 0.0, se2 = 0.0, sa2 = 0.0;
    for (long i = 0; i < n_samples; ++i) {
      const auto dir = rng.sphere_point(d);
      const double r = std::pow(rng.uniform(), 1.0 / d);
      Eigen::VectorXd x(d);
      for (int j = 0; j < d; ++j) x(j) = r * dir[static_cast<std::size_t>(j)];
      const Eigen::VectorXd Jx = J * x;
      const Eigen::MatrixXd grad =
          (1.0 - r * r) * J - 2.0 * Jx * x.transpose();
      const double e = matalg::frob(matalg::project(grad, matalg::Subspace::Sym));
      const double a = matalg::frob(matalg::project(grad, matalg::Subspace::Skew));
      se += e;
      sa += a;
      se2 += e * e;
      sa2 += a * a;
    }
    const double n = static_cast<double>(n_samples);
    const double me = se / n, ma = sa / n;
    out.mc_ratio = ma / me;
    const double ve = (se2 / n - me * me) / n;
    const double va = (sa2 / n - ma * ma) / n;
    // first order error propagation for the ratio of means
    out.mc_stderr = out.mc_ratio * std::sqrt(ve / (me * me) + va / (ma * ma));
  }
  return out;
}

}  // namespace kornlab::witness
