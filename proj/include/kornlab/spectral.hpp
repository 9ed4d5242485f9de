#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "kornlab/fft.hpp"
#include "kornlab/grid.hpp"
#include "kornlab/rng.hpp"

namespace kornlab::spectral {

using grid::GridSpec;
using grid::MatrixField;
using grid::VectorField;

enum class Variant { plain, trace_free, full_gradient };

inline constexpr double two_pi = 6.28318530717958647692;

namespace detail {

// decompose row-major point index into integer frequencies
inline void freqs_at(const GridSpec& g, long idx, int xi[3]) {
  const int n = g.n;
  if (g.d == 2) {
    xi[0] = fft::freq(static_cast<int>(idx / n), n);
    xi[1] = fft::freq(static_cast<int>(idx % n), n);
    xi[2] = 0;
  } else {
    xi[2] = fft::freq(static_cast<int>(idx % n), n);
    xi[1] = fft::freq(static_cast<int>((idx / n) % n), n);
    xi[0] = fft::freq(static_cast<int>(idx / (static_cast<long>(n) * n)), n);
  }
}

inline int band_index_max(const GridSpec& g, long idx) {
  int xi[3];
  freqs_at(g, idx, xi);
  int m = 0;
  for (int i = 0; i < g.d; ++i) m = std::max(m, std::abs(xi[i]));
  return m;
}

}  // namespace detail

// G_{il} = d_l u_i via the Fourier symbol 2*pi*i*xi_l. Frequencies live in
// [-n/2, n/2) with the Nyquist row treated as an ordinary frequency.
inline MatrixField gradient(const VectorField& u) {
  const GridSpec& g = u.g;
  MatrixField G = MatrixField::zero(g);
  const long N = g.npoints();
  for (int i = 0; i < g.d; ++i) {
    const auto hat = fft::forward(g, u.comp(i));
    for (int l = 0; l < g.d; ++l) {
      std::vector<std::complex<double>> s(static_cast<std::size_t>(N));
      for (long idx = 0; idx < N; ++idx) {
        int xi[3];
        detail::freqs_at(g, idx, xi);
        s[static_cast<std::size_t>(idx)] =
            hat[static_cast<std::size_t>(idx)] * std::complex<double>(0.0, two_pi * xi[l]);
      }
      fft::inverse_real(g, std::move(s), G.entry(i, l));
    }
  }
  return G;
}

inline std::vector<double> divergence(const VectorField& u) {
  const GridSpec& g = u.g;
  const long N = g.npoints();
  std::vector<std::complex<double>> acc(static_cast<std::size_t>(N), 0.0);
  for (int i = 0; i < g.d; ++i) {
    const auto hat = fft::forward(g, u.comp(i));
    for (long idx = 0; idx < N; ++idx) {
      int xi[3];
      detail::freqs_at(g, idx, xi);
      acc[static_cast<std::size_t>(idx)] +=
          hat[static_cast<std::size_t>(idx)] * std::complex<double>(0.0, two_pi * xi[i]);
    }
  }
  std::vector<double> out(static_cast<std::size_t>(N));
  fft::inverse_real(g, std::move(acc), out.data());
  return out;
}

// Pointwise split of G into (E, A). plain: symmetric/antisymmetric parts.
// trace_free: the trace of G is moved from E into A, so E + A = G either way.
inline void strain_parts(const MatrixField& G, Variant v, MatrixField& E, MatrixField& A) {
  if (v == Variant::full_gradient)
    throw std::invalid_argument("strain_parts: full_gradient has no E/A split");
  const GridSpec& g = G.g;
  E = MatrixField::zero(g);
  A = MatrixField::zero(g);
  const long N = g.npoints();
  const int d = g.d;
  for (long idx = 0; idx < N; ++idx) {
    double tr = 0.0;
    for (int i = 0; i < d; ++i) tr += G.entry(i, i)[idx];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const double gij = G.entry(i, j)[idx];
        const double gji = G.entry(j, i)[idx];
        double e = 0.5 * (gij + gji);
        double a = 0.5 * (gij - gji);
        if (v == Variant::trace_free && i == j) {
          e -= tr / d;
          a += tr / d;
        }
        E.entry(i, j)[idx] = e;
        A.entry(i, j)[idx] = a;
      }
  }
}

// Left action of the Riesz tensor: spectrum multiplied by -xi xi^T / |xi|^2,
// zero frequency annihilated. The input must be mean free.
inline MatrixField riesz_tensor(const MatrixField& F, double mean_tol = 1e-10,
                                bool force = false) {
  const GridSpec& g = F.g;
  const long N = g.npoints();
  const int d = g.d;
  std::array<std::vector<std::complex<double>>, 9> hat;
  double rms2 = 0.0;
  for (int i = 0; i < d; ++i)
    for (int l = 0; l < d; ++l) {
      hat[static_cast<std::size_t>(i * d + l)] = fft::forward(g, F.entry(i, l));
      for (long idx = 0; idx < N; ++idx) {
        const auto c = hat[static_cast<std::size_t>(i * d + l)][static_cast<std::size_t>(idx)];
        rms2 += std::norm(c);
      }
    }
  rms2 /= static_cast<double>(N) * static_cast<double>(N);
  double mean2 = 0.0;
  for (int e = 0; e < d * d; ++e)
    mean2 += std::norm(hat[static_cast<std::size_t>(e)][0] / static_cast<double>(N));
  if (!force && mean2 > mean_tol * mean_tol * std::max(rms2, 1e-300))
    throw std::invalid_argument("riesz_tensor: input has nonzero mean");

  std::array<std::vector<std::complex<double>>, 9> out;
  for (int e = 0; e < d * d; ++e)
    out[static_cast<std::size_t>(e)].assign(static_cast<std::size_t>(N), 0.0);
  for (long idx = 0; idx < N; ++idx) {
    int xi[3];
    detail::freqs_at(g, idx, xi);
    double q = 0.0;
    for (int i = 0; i < d; ++i) q += static_cast<double>(xi[i]) * xi[i];
    if (q == 0.0) continue;
    for (int l = 0; l < d; ++l) {
      std::complex<double> dotcol(0.0, 0.0);
      for (int j = 0; j < d; ++j)
        dotcol += static_cast<double>(xi[j]) *
                  hat[static_cast<std::size_t>(j * d + l)][static_cast<std::size_t>(idx)];
      for (int i = 0; i < d; ++i)
        out[static_cast<std::size_t>(i * d + l)][static_cast<std::size_t>(idx)] =
            -(static_cast<double>(xi[i]) / q) * dotcol;
    }
  }
  MatrixField R = MatrixField::zero(g);
  for (int i = 0; i < d; ++i)
    for (int l = 0; l < d; ++l)
      fft::inverse_real(g, std::move(out[static_cast<std::size_t>(i * d + l)]), R.entry(i, l));
  return R;
}

// Relative L2 residual of the multiplier identity tying A to the Riesz image
// of E. Evaluated entirely in the spectrum: per frequency, with
// Ghat = 2*pi*i*(uhat x xi), E = sym Ghat, A = skew Ghat (trace-adjusted for
// the trace_free variant), RE = -(xi xi^T/|xi|^2) E:
//   plain:       RE - RE^T             = A
//   trace_free:  (RE - RE^T) - tr(RE)/(d-1) Id = A0
inline double korn_identity_residual(const VectorField& u, Variant v) {
  if (v == Variant::full_gradient)
    throw std::invalid_argument("korn_identity_residual: variant must be plain or trace_free");
  const GridSpec& g = u.g;
  const long N = g.npoints();
  const int d = g.d;
  std::array<std::vector<std::complex<double>>, 3> uhat;
  for (int i = 0; i < d; ++i) uhat[static_cast<std::size_t>(i)] = fft::forward(g, u.comp(i));
  double num = 0.0, den = 0.0;
  using C = std::complex<double>;
  for (long idx = 0; idx < N; ++idx) {
    int xi[3];
    detail::freqs_at(g, idx, xi);
    double q = 0.0;
    for (int i = 0; i < d; ++i) q += static_cast<double>(xi[i]) * xi[i];
    if (q == 0.0) continue;
    C G[3][3], E[3][3], A[3][3], RE[3][3];
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l)
        G[i][l] = uhat[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx)] *
                  C(0.0, two_pi * xi[l]);
    C tr(0.0, 0.0);
    for (int i = 0; i < d; ++i) tr += G[i][i];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        E[i][j] = 0.5 * (G[i][j] + G[j][i]);
        A[i][j] = 0.5 * (G[i][j] - G[j][i]);
        if (v == Variant::trace_free && i == j) {
          E[i][j] -= tr / static_cast<double>(d);
          A[i][j] += tr / static_cast<double>(d);
        }
      }
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l) {
        C dotcol(0.0, 0.0);
        for (int j = 0; j < d; ++j) dotcol += static_cast<double>(xi[j]) * E[j][l];
        RE[i][l] = -(static_cast<double>(xi[i]) / q) * dotcol;
      }
    C trRE(0.0, 0.0);
    for (int i = 0; i < d; ++i) trRE += RE[i][i];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        C lhs = RE[i][j] - RE[j][i];
        if (v == Variant::trace_free && i == j) lhs -= trRE / static_cast<double>(d - 1);
        num += std::norm(lhs - A[i][j]);
        den += std::norm(A[i][j]);
      }
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::sqrt(num / den);
}

// Grid-average Lp norm of the pointwise Frobenius norm; p = inf gives the max.
inline double lp_norm(const MatrixField& F, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p >= 1 required");
  const long N = F.g.npoints();
  const int d = F.g.d;
  double acc = 0.0, mx = 0.0;
  for (long idx = 0; idx < N; ++idx) {
    double q = 0.0;
    for (int e = 0; e < d * d; ++e) {
      const double v = F.m[static_cast<std::size_t>(e) * static_cast<std::size_t>(N) +
                           static_cast<std::size_t>(idx)];
      q += v * v;
    }
    const double a = std::sqrt(q);
    if (std::isinf(p))
      mx = std::max(mx, a);
    else
      acc += std::pow(a, p);
  }
  if (std::isinf(p)) return mx;
  return std::pow(acc / static_cast<double>(N), 1.0 / p);
}

inline double lp_norm(const VectorField& u, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p >= 1 required");
  const long N = u.g.npoints();
  const int d = u.g.d;
  double acc = 0.0, mx = 0.0;
  for (long idx = 0; idx < N; ++idx) {
    double q = 0.0;
    for (int i = 0; i < d; ++i) {
      const double v = u.comp(i)[idx];
      q += v * v;
    }
    const double a = std::sqrt(q);
    if (std::isinf(p))
      mx = std::max(mx, a);
    else
      acc += std::pow(a, p);
  }
  if (std::isinf(p)) return mx;
  return std::pow(acc / static_cast<double>(N), 1.0 / p);
}

inline double lp_norm_scalar(const std::vector<double>& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p >= 1 required");
  double acc = 0.0, mx = 0.0;
  for (double v : f) {
    const double a = std::abs(v);
    if (std::isinf(p))
      mx = std::max(mx, a);
    else
      acc += std::pow(a, p);
  }
  if (std::isinf(p)) return mx;
  return std::pow(acc / static_cast<double>(f.size()), 1.0 / p);
}

struct RatioReport {
  double ratio = 0.0;
  double normE = 0.0;
  double normA = 0.0;
  double normG = 0.0;
  double div_norm = 0.0;
};

inline RatioReport korn_ratio(const VectorField& u, double p, Variant v) {
  const MatrixField G = gradient(u);
  MatrixField E, A;
  strain_parts(G, v == Variant::full_gradient ? Variant::plain : v, E, A);
  RatioReport r;
  r.normE = lp_norm(E, p);
  r.normA = lp_norm(A, p);
  r.normG = lp_norm(G, p);
  r.div_norm = lp_norm_scalar(divergence(u), p);
  const double num = (v == Variant::full_gradient) ? r.normG : r.normA;
  r.ratio = (r.normE > 0.0) ? num / r.normE : std::numeric_limits<double>::quiet_NaN();
  return r;
}

// Projection onto the ascent constraint set: zero mean and band limit
// |xi|_inf <= band_frac * n/2, applied per component in the spectrum.
inline VectorField project_constraints(const VectorField& u, double band_frac) {
  const GridSpec& g = u.g;
  const int kmax = std::max(1, static_cast<int>(band_frac * g.n / 2.0));
  VectorField out = VectorField::zero(g);
  const long N = g.npoints();
  for (int i = 0; i < g.d; ++i) {
    auto hat = fft::forward(g, u.comp(i));
    for (long idx = 0; idx < N; ++idx) {
      const int m = detail::band_index_max(g, idx);
      if (m == 0 || m > kmax) hat[static_cast<std::size_t>(idx)] = 0.0;
    }
    fft::inverse_real(g, std::move(hat), out.comp(i));
  }
  return out;
}

inline VectorField random_band_limited_field(const GridSpec& g, std::uint64_t seed,
                                             double band_frac = 0.25, double decay = 1.0) {
  g.validate();
  Rng rng(seed);
  VectorField u = VectorField::zero(g);
  const long N = g.npoints();
  const int kmax = std::max(1, static_cast<int>(band_frac * g.n / 2.0));
  for (int i = 0; i < g.d; ++i) {
    std::vector<double> noise(static_cast<std::size_t>(N));
    for (auto& x : noise) x = rng.normal();
    auto hat = fft::forward(g, noise.data());
    for (long idx = 0; idx < N; ++idx) {
      const int m = detail::band_index_max(g, idx);
      if (m == 0 || m > kmax) {
        hat[static_cast<std::size_t>(idx)] = 0.0;
      } else {
        hat[static_cast<std::size_t>(idx)] /= std::pow(1.0 + static_cast<double>(m) * m, decay);
      }
    }
    fft::inverse_real(g, std::move(hat), u.comp(i));
  }
  const double n2 = lp_norm(u, 2.0);
  if (n2 > 0.0)
    for (auto& x : u.v) x /= n2;
  return u;
}

struct AscentOptions {
  int steps = 150;
  double step0 = 0.1;
  double band_frac = 0.25;
  int max_backtracks = 28;
  double p_floor = 1e-9;  // relative clamp for the |A|^{p-2} weight when p < 2
};

struct AscentReport {
  double initial = 0.0;
  double terminal = 0.0;
  int steps_taken = 0;
  bool stalled = false;
  VectorField field;
};

namespace detail {

// -div of the row-wise matrix field, spectrally; adjoint of the gradient up
// to the sign, so <M, grad v> = <-div M, v> for mean-free fields.
inline VectorField neg_divergence_rows(const MatrixField& M) {
  const GridSpec& g = M.g;
  VectorField out = VectorField::zero(g);
  const long N = g.npoints();
  for (int i = 0; i < g.d; ++i) {
    std::vector<std::complex<double>> acc(static_cast<std::size_t>(N), 0.0);
    for (int l = 0; l < g.d; ++l) {
      const auto hat = fft::forward(g, M.entry(i, l));
      for (long idx = 0; idx < N; ++idx) {
        int xi[3];
        freqs_at(g, idx, xi);
        acc[static_cast<std::size_t>(idx)] -=
            hat[static_cast<std::size_t>(idx)] * std::complex<double>(0.0, two_pi * xi[l]);
      }
    }
    fft::inverse_real(g, std::move(acc), out.comp(i));
  }
  return out;
}

// pointwise |M|^{p-2} M with a relative floor on |M| for p < 2
inline MatrixField p_weight(const MatrixField& M, double p, double floor_rel) {
  const GridSpec& g = M.g;
  const long N = g.npoints();
  const int d = g.d;
  double mx = 0.0;
  for (long idx = 0; idx < N; ++idx) {
    double q = 0.0;
    for (int e = 0; e < d * d; ++e) {
      const double v = M.m[static_cast<std::size_t>(e) * static_cast<std::size_t>(N) +
                           static_cast<std::size_t>(idx)];
      q += v * v;
    }
    mx = std::max(mx, q);
  }
  const double floor2 = floor_rel * floor_rel * mx;
  MatrixField W = MatrixField::zero(g);
  for (long idx = 0; idx < N; ++idx) {
    double q = 0.0;
    for (int e = 0; e < d * d; ++e) {
      const double v = M.m[static_cast<std::size_t>(e) * static_cast<std::size_t>(N) +
                           static_cast<std::size_t>(idx)];
      q += v * v;
    }
    q = std::max(q, floor2);
    if (q <= 0.0) continue;
    const double w = std::pow(q, 0.5 * (p - 2.0));
    for (int e = 0; e < d * d; ++e)
      W.m[static_cast<std::size_t>(e) * static_cast<std::size_t>(N) +
          static_cast<std::size_t>(idx)] =
          w * M.m[static_cast<std::size_t>(e) * static_cast<std::size_t>(N) +
                  static_cast<std::size_t>(idx)];
  }
  return W;
}

// pointwise self-adjoint projection matching how the part was extracted from G
inline MatrixField part_projection(const MatrixField& W, Variant v, bool numerator) {
  const GridSpec& g = W.g;
  const long N = g.npoints();
  const int d = g.d;
  MatrixField P = MatrixField::zero(g);
  if (v == Variant::full_gradient && numerator) return W;
  for (long idx = 0; idx < N; ++idx) {
    double tr = 0.0;
    for (int i = 0; i < d; ++i) tr += W.entry(i, i)[idx];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const double wij = W.entry(i, j)[idx];
        const double wji = W.entry(j, i)[idx];
        double val = numerator ? 0.5 * (wij - wji) : 0.5 * (wij + wji);
        if (v == Variant::trace_free && i == j) val += numerator ? tr / d : -tr / d;
        P.entry(i, j)[idx] = val;
      }
  }
  return P;
}

}  // namespace detail

// Projected gradient ascent on the Lp ratio over mean-free band-limited
// fields. Maximizes log(num/den); the L2 gradient of each log-norm is
// -div(Pi(|M|^{p-2} M)) / avg|M|^p with Pi the projection that produced M.
inline AscentReport maximize_ratio(const VectorField& init, double p, Variant v,
                                   const AscentOptions& opt = {}) {
  if (!(p >= 1.0) || std::isinf(p))
    throw std::invalid_argument("maximize_ratio: finite p >= 1 required");
  VectorField u = project_constraints(init, opt.band_frac);
  {
    const double n2 = lp_norm(u, 2.0);
    if (n2 <= 0.0) throw std::invalid_argument("maximize_ratio: init vanishes after projection");
    for (auto& x : u.v) x /= n2;
  }
  const Variant parts_v = (v == Variant::full_gradient) ? Variant::plain : v;
  auto eval = [&](const VectorField& w) { return korn_ratio(w, p, v).ratio; };
  AscentReport rep;
  rep.initial = eval(u);
  double cur = rep.initial;
  double step = opt.step0;
  int taken = 0;
  for (int it = 0; it < opt.steps; ++it) {
    const MatrixField G = gradient(u);
    MatrixField E, A;
    strain_parts(G, parts_v, E, A);
    const MatrixField& num_field = (v == Variant::full_gradient) ? G : A;
    const double Np = std::pow(lp_norm(num_field, p), p);
    const double Dp = std::pow(lp_norm(E, p), p);
    if (Np <= 0.0 || Dp <= 0.0) break;
    MatrixField WN = detail::p_weight(num_field, p, p < 2.0 ? opt.p_floor : 0.0);
    MatrixField WD = detail::p_weight(E, p, p < 2.0 ? opt.p_floor : 0.0);
    VectorField gN = detail::neg_divergence_rows(detail::part_projection(WN, v, true));
    VectorField gD = detail::neg_divergence_rows(detail::part_projection(WD, v, false));
    VectorField dir = VectorField::zero(u.g);
    for (std::size_t e = 0; e < dir.v.size(); ++e)
      dir.v[e] = gN.v[e] / Np - gD.v[e] / Dp;
    dir = project_constraints(dir, opt.band_frac);
    const double gn = lp_norm(dir, 2.0);
    if (gn < 1e-15) break;
    bool improved = false;
    for (int bt = 0; bt < opt.max_backtracks; ++bt) {
      VectorField trial = u;
      const double scale = step / gn;
      for (std::size_t e = 0; e < trial.v.size(); ++e) trial.v[e] += scale * dir.v[e];
      const double tn = lp_norm(trial, 2.0);
      for (auto& x : trial.v) x /= tn;
      const double val = eval(trial);
      if (val > cur * (1.0 + 1e-14)) {
        u = std::move(trial);
        cur = val;
        step = std::min(step * 1.4, 2.0);
        improved = true;
        break;
      }
      step *= 0.5;
    }
    ++taken;
    if (!improved) {
      rep.stalled = true;
      break;
    }
  }
  rep.terminal = cur;
  rep.steps_taken = taken;
  rep.field = std::move(u);
  return rep;
}

// Samples a pointwise-defined map into a VectorField; x in [0,1)^d.
inline VectorField sample_field(const GridSpec& g,
                                const std::function<void(const double*, double*)>& f) {
  g.validate();
  VectorField u = VectorField::zero(g);
  const long N = g.npoints();
  const int n = g.n;
  double x[3] = {0, 0, 0};
  double val[3] = {0, 0, 0};
  for (long idx = 0; idx < N; ++idx) {
    if (g.d == 2) {
      x[0] = static_cast<double>(idx / n) / n;
      x[1] = static_cast<double>(idx % n) / n;
    } else {
      x[0] = static_cast<double>(idx / (static_cast<long>(n) * n)) / n;
      x[1] = static_cast<double>((idx / n) % n) / n;
      x[2] = static_cast<double>(idx % n) / n;
    }
    f(x, val);
    for (int i = 0; i < g.d; ++i) u.comp(i)[idx] = val[i];
  }
  return u;
}

}  // namespace kornlab::spectral
