#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kornlab::quadrature {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;  // accumulated Kronrod error estimate
  int evals = 0;
  bool converged = true;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod nodes and weights (positive half)
inline constexpr double xgk[8] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
inline constexpr double wgk[8] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
inline constexpr double wg[4] = {
    0.12948496616886969327, 0.27970539148927666790,
    0.38183005050511894495, 0.41795918367346938776};

template <class F>
inline void kronrod_panel(F&& f, double a, double b, double& value, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * xgk[i]);
    fv[14 - i] = f(c + h * xgk[i]);
  }
  fv[7] = f(c);
  double resk = wgk[7] * fv[7];
  double resg = wg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    resk += wgk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) resg += wg[i / 2] * (fv[i] + fv[14 - i]);
  }
  value = resk * h;
  const double diff = std::abs(resk - resg) * std::abs(h);
  err = diff;
}

template <class F>
inline void adapt(F&& f, double a, double b, double tol, int depth, int max_depth,
                  QuadResult& out) {
  double v = 0.0, e = 0.0;
  kronrod_panel(f, a, b, v, e);
  out.evals += 15;
  if (e <= tol || depth >= max_depth) {
    out.value += v;
    out.abs_error += e;
    if (e > tol && depth >= max_depth) out.converged = false;
    return;
  }
  const double c = 0.5 * (a + b);
  adapt(f, a, c, 0.5 * tol, depth + 1, max_depth, out);
  adapt(f, c, b, 0.5 * tol, depth + 1, max_depth, out);
}

}  // namespace detail

// Adaptive Gauss-Kronrod on [a,b]. tol is treated as an absolute tolerance
// budget for the whole interval; panels split until the local estimate fits.
template <class F>
inline QuadResult integrate(F&& f, double a, double b, double abs_tol = 1e-11,
                            int max_depth = 48) {
  QuadResult out;
  if (a == b) return out;
  detail::adapt(f, a, b, abs_tol, 0, max_depth, out);
  return out;
}

// Integral over [a, inf) of f, for integrands with (super)exponential decay.
// Substitution t = a - log(1-s) maps the tail to s in [0,1); the Jacobian
// 1/(1-s) cancels the leading e^{-t} decay, leaving a mildly singular but
// integrable transformed integrand.
template <class F>
inline QuadResult integrate_exp_tail(F&& f, double a, double abs_tol = 1e-11,
                                     int max_depth = 48) {
  auto g = [&](double s) {
    if (s >= 1.0) return 0.0;
    const double t = a - std::log1p(-s);
    return f(t) / (1.0 - s);
  };
  return integrate(g, 0.0, 1.0, abs_tol, max_depth);
}

// Gauss-Legendre nodes/weights on [-1,1], Newton iteration on P_n.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[static_cast<std::size_t>(i)] = -z;
    x[static_cast<std::size_t>(n - 1 - i)] = z;
    w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[static_cast<std::size_t>(n - 1 - i)] = w[static_cast<std::size_t>(i)];
  }
}

}  // namespace kornlab::quadrature
