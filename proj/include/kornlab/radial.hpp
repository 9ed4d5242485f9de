#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kornlab/quadrature.hpp"

namespace kornlab::radial {

// X ~ Gamma(shape alpha = p(k-1)+1, scale 1/k). This is the law of the decay
// variable t = -log r under the weight t^{p(k-1)} e^{-t} dt, rescaled by k.
struct GammaSpec {
  double p = 2.0;
  double k = 1.0;
  double shape() const { return p * (k - 1.0) + 1.0; }
  double scale() const { return 1.0 / k; }
  void validate() const {
    if (!(p >= 1.0) || !(k >= 1.0))
      throw std::invalid_argument("GammaSpec: p >= 1 and k >= 1 required");
  }
};

// E[X^s] = scale^s * Gamma(shape+s) / Gamma(shape), in log space.
inline double gamma_moment(const GammaSpec& g, double s) {
  g.validate();
  const double a = g.shape();
  if (a + s <= 0.0) throw std::invalid_argument("gamma_moment: shape + s must be positive");
  return std::exp(s * std::log(g.scale()) + std::lgamma(a + s) - std::lgamma(a));
}

// E[X^p] - p E[X^{p-1}] vanishes identically for this family; the residual is
// returned relative to E[X^p] as a numerical self-check.
inline double mean_identity_residual(const GammaSpec& g) {
  const double mp = gamma_moment(g, g.p);
  const double mp1 = gamma_moment(g, g.p - 1.0);
  return (mp - g.p * mp1) / mp;
}

// |E X - 1|^p; E X - 1 = (p-1)(k-1)/k >= 0.
inline double jensen_lower(const GammaSpec& g) {
  g.validate();
  return std::pow((g.p - 1.0) * (g.k - 1.0) / g.k, g.p);
}

// E |X-1|^p by adaptive quadrature against the Gamma density, evaluated in
// log space. Split at the kink x = 1; the window mean +- 60 sd carries all
// the mass at the stated tolerance (Gamma tails beyond it are < 1e-300).
inline double abs_central_moment(const GammaSpec& g, double abs_tol = 1e-11) {
  g.validate();
  const double a = g.shape();
  const double th = g.scale();
  const double lg = std::lgamma(a);
  auto weighted = [&](double x) {
    if (x <= 0.0) return 0.0;
    const double lpdf = (a - 1.0) * std::log(x) - x / th - lg - a * std::log(th);
    return std::pow(std::abs(x - 1.0), g.p) * std::exp(lpdf);
  };
  const double mean = a * th;
  const double sd = std::sqrt(a) * th;
  const double lo = std::max(0.0, mean - 60.0 * sd);
  const double hi = mean + 60.0 * sd + 10.0;
  const double tol = abs_tol * std::max(1.0, jensen_lower(g));
  double val = 0.0;
  if (lo < 1.0 && 1.0 < hi) {
    val += quadrature::integrate(weighted, lo, 1.0, 0.5 * tol).value;
    val += quadrature::integrate(weighted, 1.0, hi, 0.5 * tol).value;
  } else {
    val += quadrature::integrate(weighted, lo, hi, tol).value;
  }
  return val;
}

inline double fk(double p, double k, double abs_tol = 1e-11) {
  return std::pow(abs_central_moment(GammaSpec{p, k}, abs_tol), 1.0 / p);
}

// Pointwise majorant on x >= 0 for p >= 2:
//   |x-1|^p <= (p-1)^p + ((p-1)^{p-1} / p^{p-2}) (x^p - p x^{p-1}),
// with equality exactly at x = p. Taking Gamma expectations kills the bracket
// by the mean identity above, leaving E|X-1|^p <= (p-1)^p.
struct MajorantScan {
  double min_slack = 0.0;
  double argmin = 0.0;
  bool ok = false;
};

inline double majorant_slack(double p, double x) {
  const double rhs = std::pow(p - 1.0, p) +
                     std::pow(p - 1.0, p - 1.0) / std::pow(p, p - 2.0) *
                         (std::pow(x, p) - p * std::pow(x, p - 1.0));
  return rhs - std::pow(std::abs(x - 1.0), p);
}

inline MajorantScan pointwise_majorant_check(double p, double xmax = 50.0, int n = 20000) {
  if (!(p >= 2.0)) throw std::invalid_argument("pointwise_majorant_check: p >= 2 required");
  MajorantScan out;
  out.min_slack = majorant_slack(p, 0.0);
  out.argmin = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double x = xmax * i / n;
    const double s = majorant_slack(p, x);
    if (s < out.min_slack) {
      out.min_slack = s;
      out.argmin = x;
    }
  }
  // golden-section refine around the coarse argmin
  double lo = std::max(0.0, out.argmin - 2.0 * xmax / n);
  double hi = std::min(xmax, out.argmin + 2.0 * xmax / n);
  const double gr = 0.61803398874989484820;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = majorant_slack(p, x1), f2 = majorant_slack(p, x2);
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = majorant_slack(p, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = majorant_slack(p, x2);
    }
  }
  const double xm = 0.5 * (lo + hi);
  const double fm = majorant_slack(p, xm);
  if (fm < out.min_slack) {
    out.min_slack = fm;
    out.argmin = xm;
  }
  out.ok = out.min_slack >= -1e-12;
  return out;
}

// Gap (p-1) - f_k(p) fitted as const * k^{-beta} over integer k in [kmin,kmax].
struct RateFit {
  double beta = 0.0;
  double log_const = 0.0;
  double max_fk = 0.0;          // largest f_k encountered (must stay <= p-1)
  bool degenerate = false;      // gaps at roundoff level, no usable fit (p = 2)
};

inline RateFit fk_upper_and_rate(double p, int kmin = 10, int kmax = 200) {
  if (!(p >= 2.0)) throw std::invalid_argument("fk_upper_and_rate: p >= 2 required");
  if (kmin < 2 || kmax <= kmin) throw std::invalid_argument("fk_upper_and_rate: bad k range");
  std::vector<double> lx, ly;
  RateFit out;
  for (int k = kmin; k <= kmax; k += std::max(1, (kmax - kmin) / 40)) {
    const double f = fk(p, static_cast<double>(k));
    out.max_fk = std::max(out.max_fk, f);
    const double gap = (p - 1.0) - f;
    if (gap < 1e-12) {
      out.degenerate = true;
      continue;
    }
    lx.push_back(std::log(static_cast<double>(k)));
    ly.push_back(std::log(gap));
  }
  if (lx.size() < 4) {
    out.degenerate = true;
    return out;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<double>(lx.size());
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  out.beta = -slope;
  out.log_const = (sy - slope * sx) / n;
  return out;
}

}  // namespace kornlab::radial
