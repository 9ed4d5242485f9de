#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kornlab::orlicz {

// A Young function given by evaluators for phi and phi'. Factories cover the
// families used in the test suite plus tabulated input.
struct YoungFunction {
  std::string name;
  std::function<double(double)> phi;
  std::function<double(double)> dphi;

  static YoungFunction power(double p) {
    if (!(p >= 1.0) || std::isinf(p)) throw std::invalid_argument("power: p in [1, inf)");
    return {"t^" + std::to_string(p),
            [p](double t) { return std::pow(t, p); },
            [p](double t) { return p * std::pow(t, p - 1.0); }};
  }

  // (1 + lambda t)^(p-2) t^2; for p in (1, 2] this interpolates between growth
  // p at infinity and 2 near zero.
  static YoungFunction interpolation_family(double lambda, double p) {
    if (!(lambda > 0.0)) throw std::invalid_argument("interpolation_family: lambda > 0");
    if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument("interpolation_family: p in (1, inf)");
    return {"interp(lambda=" + std::to_string(lambda) + ",p=" + std::to_string(p) + ")",
            [lambda, p](double t) { return std::pow(1.0 + lambda * t, p - 2.0) * t * t; },
            [lambda, p](double t) {
              return std::pow(1.0 + lambda * t, p - 3.0) * t * (2.0 + p * lambda * t);
            }};
  }

  static YoungFunction log_type() {
    return {"t*log(1+t)",
            [](double t) { return t * std::log1p(t); },
            [](double t) { return std::log1p(t) + t / (1.0 + t); }};
  }

  // CSV rows "t,phi,dphi" with t strictly increasing and all entries positive.
  // Queries interpolate log-linearly and extrapolate the end segments, so the
  // tabulated range should cover the index grid of interest.
  static YoungFunction from_table(const std::string& csv_path);
};

namespace detail {

struct Table {
  std::vector<double> lt, lphi, ldphi;
  double eval(const std::vector<double>& ly, double t) const {
    const double x = std::log(t);
    const auto& xs = lt;
    std::size_t hi = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin();
    if (hi == 0) hi = 1;
    if (hi >= xs.size()) hi = xs.size() - 1;
    const std::size_t lo = hi - 1;
    const double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return std::exp(ly[lo] + w * (ly[hi] - ly[lo]));
  }
};

}  // namespace detail

inline YoungFunction YoungFunction::from_table(const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("from_table: cannot open " + csv_path);
  auto tab = std::make_shared<detail::Table>();
  std::string line;
  double prev_t = 0.0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double t, f, df;
    if (!(row >> t >> f >> df)) throw std::runtime_error("from_table: bad row: " + line);
    if (!(t > prev_t)) throw std::runtime_error("from_table: t not strictly increasing");
    if (!(f > 0.0) || !(df > 0.0))
      throw std::runtime_error("from_table: phi and dphi must be positive");
    tab->lt.push_back(std::log(t));
    tab->lphi.push_back(std::log(f));
    tab->ldphi.push_back(std::log(df));
    prev_t = t;
  }
  if (tab->lt.size() < 2) throw std::runtime_error("from_table: need at least two rows");
  return {"table:" + csv_path,
          [tab](double t) { return tab->eval(tab->lphi, t); },
          [tab](double t) { return tab->eval(tab->ldphi, t); }};
}

struct IndexGrid {
  double tmin = 1e-6;
  double tmax = 1e6;
  int n = 2001;
};

struct Indices {
  double i = 0.0;  // inf of t phi' / phi over the grid
  double s = 0.0;  // sup
  double arg_i = 0.0;
  double arg_s = 0.0;
  IndexGrid grid;
};

inline Indices simonenko_indices(const YoungFunction& Phi, IndexGrid grid = {}) {
  if (!(grid.tmin > 0.0) || !(grid.tmax > grid.tmin) || grid.n < 2)
    throw std::invalid_argument("simonenko_indices: bad grid");
  Indices out;
  out.grid = grid;
  out.i = std::numeric_limits<double>::infinity();
  out.s = -std::numeric_limits<double>::infinity();
  const double lmin = std::log(grid.tmin), lmax = std::log(grid.tmax);
  for (int j = 0; j < grid.n; ++j) {
    const double t = std::exp(lmin + (lmax - lmin) * j / (grid.n - 1));
    const double f = Phi.phi(t);
    if (!(f > 0.0) || !std::isfinite(f))
      throw std::domain_error("simonenko_indices: phi not positive and finite at t = " +
                              std::to_string(t));
    const double r = t * Phi.dphi(t) / f;
    if (!std::isfinite(r))
      throw std::domain_error("simonenko_indices: t phi'/phi not finite at t = " +
                              std::to_string(t));
    if (r < out.i) {
      out.i = r;
      out.arg_i = t;
    }
    if (r > out.s) {
      out.s = r;
      out.arg_s = t;
    }
  }
  return out;
}

inline double conjugate_exponent(double p) {
  if (!(p > 1.0)) throw std::invalid_argument("conjugate_exponent: p > 1 required");
  return p / (p - 1.0);
}

// 2^{1/(p q') + min(1/p, 1/q')} for 1 < p <= q < inf.
inline double interpolation_K(double p, double q) {
  if (!(p > 1.0) || !(q > 1.0) || std::isinf(p) || std::isinf(q))
    throw std::invalid_argument("interpolation_K: exponents in (1, inf) required");
  if (p > q) throw std::invalid_argument("interpolation_K: p <= q required");
  const double qp = conjugate_exponent(q);
  return std::pow(2.0, 1.0 / (p * qp) + std::min(1.0 / p, 1.0 / qp));
}

struct OrliczConstant {
  double value = 0.0;
  Indices idx;
  double K = 0.0;
  double simplified = 0.0;     // 2 sqrt(3) max(i*-1, s*-1)
  bool simplified_valid = false;  // valid when i, s <= 2 or i, s >= 2
};

// sqrt(3) K(i, s) max(i* - 1, s* - 1) from the Simonenko indices of phi.
// Degenerate growth (i = 1 or unbounded s) carries no bound of this shape.
inline OrliczConstant orlicz_korn_constant(const YoungFunction& Phi, IndexGrid grid = {}) {
  OrliczConstant out;
  out.idx = simonenko_indices(Phi, grid);
  const double i = out.idx.i, s = out.idx.s;
  if (!(i > 1.0 + 1e-12))
    throw std::domain_error("orlicz_korn_constant: lower index 1, bound degenerates");
  if (!(s < 1e12) || !std::isfinite(s))
    throw std::domain_error("orlicz_korn_constant: upper index unbounded");
  const double istar = std::max(i, i / (i - 1.0));
  const double sstar = std::max(s, s / (s - 1.0));
  const double m = std::max(istar - 1.0, sstar - 1.0);
  out.K = interpolation_K(i, s);
  out.value = std::sqrt(3.0) * out.K * m;
  out.simplified = 2.0 * std::sqrt(3.0) * m;
  out.simplified_valid = (i <= 2.0 && s <= 2.0) || (i >= 2.0 && s >= 2.0);
  return out;
}

}  // namespace kornlab::orlicz
