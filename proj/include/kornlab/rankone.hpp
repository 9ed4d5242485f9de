#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "kornlab/burkholder.hpp"
#include "kornlab/matalg.hpp"
#include "kornlab/rng.hpp"

namespace kornlab::rankone {

enum class Variant { plain, trace_free, full_gradient };

struct IntegrandSpec {
  double p = 2.0;
  double c = 1.0;
  Variant variant = Variant::plain;
  void validate() const {
    if (!(p > 1.0) || std::isinf(p))
      throw std::invalid_argument("IntegrandSpec: p in (1, inf) required");
    if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("IntegrandSpec: c > 0 required");
  }
};

// c^p |P_E A|^p - |P_complement A|^p, with the split depending on the variant.
inline double eval_integrand(const IntegrandSpec& s, const matalg::Matrix& A) {
  s.validate();
  using matalg::Subspace;
  double e = 0.0, a = 0.0;
  switch (s.variant) {
    case Variant::plain:
      e = matalg::frob(matalg::project(A, Subspace::Sym));
      a = matalg::frob(matalg::project(A, Subspace::Skew));
      break;
    case Variant::trace_free: {
      e = matalg::frob(matalg::project(A, Subspace::SymTraceFree));
      const double sk = matalg::frob(matalg::project(A, Subspace::Skew));
      const double id = matalg::frob(matalg::project(A, Subspace::SpanId));
      a = std::sqrt(sk * sk + id * id);
      break;
    }
    case Variant::full_gradient:
      e = matalg::frob(matalg::project(A, Subspace::Sym));
      a = matalg::frob(A);
      break;
  }
  return std::pow(s.c, s.p) * std::pow(e, s.p) - std::pow(a, s.p);
}

struct DirectionReport {
  double min_second_difference = std::numeric_limits<double>::infinity();
  double min_pure_direction = std::numeric_limits<double>::infinity();  // min f(a x b)
  matalg::Vector worst_a, worst_b;
  matalg::Matrix worst_base;
  double worst_step = 0.0;
};

// Convexity probe along rank-one lines t -> S + t a x b near the origin. The
// integrand is p-homogeneous, so bases are normalized to |S| = 1 and the probe
// covers every line up to scale; S = 0 reduces to the sign test f(a x b) >= 0.
inline DirectionReport rank_one_test_at_zero(const IntegrandSpec& spec, int d,
                                             int n_directions = 200, std::uint64_t seed = 11) {
  spec.validate();
  if (d < 2) throw std::invalid_argument("rank_one_test_at_zero: d >= 2 required");
  if (n_directions < 1) throw std::invalid_argument("rank_one_test_at_zero: n_directions >= 1");
  Rng rng(seed);
  DirectionReport rep;
  const double steps[2] = {0.1, 0.25};
  for (int it = 0; it < n_directions; ++it) {
    const auto av = rng.sphere_point(d);
    const auto bv = rng.sphere_point(d);
    matalg::Vector a(d), b(d);
    for (int i = 0; i < d; ++i) {
      a(i) = av[static_cast<std::size_t>(i)];
      b(i) = bv[static_cast<std::size_t>(i)];
    }
    const matalg::Matrix R = a * b.transpose();
    const double pure = 2.0 * eval_integrand(spec, R);  // f(hR)+f(-hR)-2f(0) at h=1
    rep.min_pure_direction = std::min(rep.min_pure_direction, 0.5 * pure);
    if (pure < rep.min_second_difference) {
      rep.min_second_difference = pure;
      rep.worst_a = a;
      rep.worst_b = b;
      rep.worst_base = matalg::Matrix::Zero(d, d);
      rep.worst_step = 1.0;
    }
    for (int nb = 0; nb < 3; ++nb) {
      matalg::Matrix S(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) S(i, j) = rng.normal();
      const double nS = matalg::frob(S);
      if (nS <= 0.0) continue;
      S /= nS;
      const double f0 = eval_integrand(spec, S);
      for (double h : steps) {
        const double dd =
            eval_integrand(spec, S + h * R) + eval_integrand(spec, S - h * R) - 2.0 * f0;
        if (dd < rep.min_second_difference) {
          rep.min_second_difference = dd;
          rep.worst_a = a;
          rep.worst_b = b;
          rep.worst_base = S;
          rep.worst_step = h;
        }
      }
    }
  }
  return rep;
}

// Restriction of f_{p,c} to the plane A(a,b) = a/sqrt2 (e1 x e2 + e2 x e1) +
// b/sqrt2 (e1 x e2 - e2 x e1), where |P_Sym A| = |a| and |P_Skew A| = |b|.
// Midpoint min-updates along the two diagonal directions converge down to the
// two-direction convexification; the boundary ring is never updated, so
// comparisons trim a margin.
struct EnvelopeResult {
  int n = 0;             // nodes per side, odd
  double half_width = 0.0;
  double spacing = 0.0;
  int sweeps = 0;
  bool monotone = true;
  std::vector<double> env;  // row-major over (ia, ib)
  std::vector<double> f;
  double p = 2.0, c = 1.0;
};

inline EnvelopeResult planar_envelope(double p, double c, double half_width = 2.0,
                                      int n_per_side = 129, int sweeps = 400) {
  if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument("planar_envelope: p in (1, inf)");
  if (!(c >= 1.0) || !std::isfinite(c)) throw std::invalid_argument("planar_envelope: c >= 1 required");
  if (n_per_side < 5 || n_per_side % 2 == 0)
    throw std::invalid_argument("planar_envelope: odd n_per_side >= 5 required");
  EnvelopeResult out;
  out.n = n_per_side;
  out.half_width = half_width;
  out.spacing = 2.0 * half_width / (n_per_side - 1);
  out.p = p;
  out.c = c;
  const int n = n_per_side;
  out.f.resize(static_cast<std::size_t>(n) * n);
  for (int ia = 0; ia < n; ++ia)
    for (int ib = 0; ib < n; ++ib) {
      const double a = -half_width + out.spacing * ia;
      const double b = -half_width + out.spacing * ib;
      out.f[static_cast<std::size_t>(ia) * n + ib] =
          std::pow(c, p) * std::pow(std::abs(a), p) - std::pow(std::abs(b), p);
    }
  out.env = out.f;
  auto& E = out.env;
  // Pure midpoint sweeps relax diffusively along the directions where the
  // limit is affine, so each sweep also closes every lattice chord of both
  // diagonal families with its exact lower convex envelope. The chord closure
  // is the limit of composing midpoint updates along that chord (endpoints on
  // the boundary ring stay fixed), so the iteration still descends to the same
  // two-direction convexification, just without the diffusive tail.
  std::vector<double> chord, henv;
  std::vector<int> hull;
  auto convexify = [&](std::vector<double>& v) {
    const int m = static_cast<int>(v.size());
    hull.clear();
    for (int i = 0; i < m; ++i) {
      while (hull.size() >= 2) {
        const int a = hull[hull.size() - 2], b = hull[hull.size() - 1];
        if ((v[b] - v[a]) * (i - a) <= (v[i] - v[a]) * (b - a)) break;
        hull.pop_back();
      }
      hull.push_back(i);
    }
    henv.assign(v.size(), 0.0);
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
      const int a = hull[s], b = hull[s + 1];
      for (int i = a; i <= b; ++i)
        henv[i] = v[a] + (v[b] - v[a]) * static_cast<double>(i - a) / (b - a);
    }
    if (hull.size() == 1) henv[hull[0]] = v[hull[0]];
    v = henv;
  };
  const auto id = [n](int ia, int ib) { return static_cast<std::size_t>(ia) * n + ib; };
  auto chord_pass = [&](int dirb) {
    // chords along (1, dirb); anchor rows/columns are read but never written
    for (int s = -(n - 1); s <= n - 1; ++s) {
      chord.clear();
      for (int ia = 0; ia < n; ++ia) {
        const int ib = dirb > 0 ? ia - s : s - ia;
        if (ib >= 0 && ib < n) chord.push_back(E[id(ia, ib)]);
      }
      if (chord.size() < 3) continue;
      convexify(chord);
      std::size_t t = 0;
      for (int ia = 0; ia < n; ++ia) {
        const int ib = dirb > 0 ? ia - s : s - ia;
        if (ib < 0 || ib >= n) continue;
        if (ia > 0 && ia < n - 1 && ib > 0 && ib < n - 1)
          E[id(ia, ib)] = std::min(E[id(ia, ib)], chord[t]);
        ++t;
      }
    }
  };
  for (int sw = 0; sw < sweeps; ++sw) {
    for (int ia = 1; ia < n - 1; ++ia)
      for (int ib = 1; ib < n - 1; ++ib) {
        const double old = E[id(ia, ib)];
        const double c1 = 0.5 * (E[id(ia + 1, ib + 1)] + E[id(ia - 1, ib - 1)]);
        const double c2 = 0.5 * (E[id(ia + 1, ib - 1)] + E[id(ia - 1, ib + 1)]);
        const double v = std::min(old, std::min(c1, c2));
        if (v > old + 1e-14) out.monotone = false;
        E[id(ia, ib)] = v;
      }
    chord_pass(+1);
    chord_pass(-1);
  }
  out.sweeps = sweeps;
  return out;
}

struct EnvelopeGap {
  double sup_env_minus_G = -std::numeric_limits<double>::infinity();
  double inf_env_minus_G = std::numeric_limits<double>::infinity();
  double rel_sup_gap = 0.0;       // sup|env - G| / sup|G| on the trimmed region
  double sup_eq_zone_error = 0.0; // sup|env - f| where f >= 0
  double scale = 0.0;
  bool midpoint_convex = true;    // lattice midpoint convexity along both diagonals
};

inline EnvelopeGap envelope_vs_G(const EnvelopeResult& r, double margin_frac = 0.25) {
  EnvelopeGap g;
  const int n = r.n;
  const int m = std::max(1, static_cast<int>(margin_frac * (n - 1) / 2.0));
  double supG = 0.0, supgap = 0.0;
  for (int ia = m; ia < n - m; ++ia)
    for (int ib = m; ib < n - m; ++ib) {
      const double a = -r.half_width + r.spacing * ia;
      const double b = -r.half_width + r.spacing * ib;
      const double env = r.env[static_cast<std::size_t>(ia) * n + ib];
      const double G = burkholder::eval_G({r.p, std::abs(b), std::abs(a)});
      g.sup_env_minus_G = std::max(g.sup_env_minus_G, env - G);
      g.inf_env_minus_G = std::min(g.inf_env_minus_G, env - G);
      supG = std::max(supG, std::abs(G));
      supgap = std::max(supgap, std::abs(env - G));
      const double fv = r.f[static_cast<std::size_t>(ia) * n + ib];
      if (fv >= 0.0) g.sup_eq_zone_error = std::max(g.sup_eq_zone_error, std::abs(env - fv));
    }
  g.scale = supG;
  g.rel_sup_gap = supG > 0.0 ? supgap / supG : 0.0;
  for (int ia = 1; ia < n - 1 && g.midpoint_convex; ++ia)
    for (int ib = 1; ib < n - 1; ++ib) {
      const double e0 = r.env[static_cast<std::size_t>(ia) * n + ib];
      const double c1 = 0.5 * (r.env[static_cast<std::size_t>(ia + 1) * n + ib + 1] +
                               r.env[static_cast<std::size_t>(ia - 1) * n + ib - 1]);
      const double c2 = 0.5 * (r.env[static_cast<std::size_t>(ia + 1) * n + ib - 1] +
                               r.env[static_cast<std::size_t>(ia - 1) * n + ib + 1]);
      if (std::min(c1, c2) < e0 - 1e-11 * std::max(1.0, std::abs(e0))) {
        g.midpoint_convex = false;
        break;
      }
    }
  return g;
}

// Auxiliary scalar function behind the c(p) curve; vanishes to third order at
// t = 0 and has a single positive root for p strictly between p0 and 2.
inline double u_p(double p, double t) {
  return (p - 1.0) * std::pow(1.0 + t * t, 0.5 * (2.0 - p)) - p + std::pow(1.0 + t, 2.0 - p) +
         t * (p - 2.0);
}

namespace detail {

inline double map_to_t(double s) { return (1.0 + s) / (1.0 - s); }

}  // namespace detail

// Root s0 in (-1, 1) of s -> u_p((1+s)/(1-s)): scan for the +/- sign change
// (the function is positive just right of s = -1), then bisect.
inline double s0(double p) {
  if (!(p > 1.0 && p < 2.0)) throw std::invalid_argument("s0: p in (1, 2) required");
  const int n = 10000;
  double prev_s = 0.0, prev_u = 0.0;
  bool have_pos = false;
  for (int i = 0; i < n; ++i) {
    const double s = -1.0 + 2.0 * (i + 0.5) / n;
    const double u = u_p(p, detail::map_to_t(s));
    if (u > 0.0) {
      have_pos = true;
      prev_s = s;
      prev_u = u;
    } else if (have_pos && u < 0.0) {
      double lo = prev_s, hi = s;
      for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double um = u_p(p, detail::map_to_t(mid));
        if (um > 0.0)
          lo = mid;
        else
          hi = mid;
      }
      return 0.5 * (lo + hi);
    }
    (void)prev_u;
  }
  throw std::runtime_error("s0: no sign change of u_p on s in (-1, 1)");
}

// The case boundary p0: unique root of p -> u_p(1/(p-1)) between 1.5 and 1.8.
inline double p0() {
  double lo = 1.5, hi = 1.8;
  const double flo = u_p(lo, 1.0 / (lo - 1.0));
  const double fhi = u_p(hi, 1.0 / (hi - 1.0));
  if (!(flo < 0.0 && fhi > 0.0))
    throw std::runtime_error("p0: bracket [1.5, 1.8] lost the sign change");
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (u_p(mid, 1.0 / (mid - 1.0)) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

inline double natural_bound(double p) {
  const double ps = std::max(p, p / (p - 1.0));
  return std::sqrt(1.0 + (ps - 1.0) * (ps - 1.0));
}

inline double c_of_p(double p) {
  if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument("c_of_p: p in (1, inf) required");
  if (p >= 2.0) return natural_bound(p);
  static const double pzero = p0();
  if (p <= pzero) return natural_bound(p);
  const double s = s0(p);
  const double denom = (p - 1.0) * (1.0 - s) + (2.0 - p);
  const double inner = 1.0 - std::pow(2.0, 1.0 - p) * std::pow(1.0 - s, p - 1.0) / denom;
  return std::pow(inner, -1.0 / p);
}

struct GradientBounds {
  double lower = 0.0;
  double upper = 0.0;
};

inline GradientBounds full_gradient_bounds(double p) {
  if (!(p > 1.0) || std::isinf(p))
    throw std::invalid_argument("full_gradient_bounds: p in (1, inf) required");
  GradientBounds b;
  b.lower = c_of_p(p);
  if (p >= 2.0) {
    b.upper = std::sqrt(3.0 * (p - 1.0) * (p - 1.0) + 1.0);
  } else {
    const double ps = p / (p - 1.0);
    b.upper = std::pow(std::pow(std::sqrt(3.0) * (ps - 1.0), p) + 1.0, 1.0 / p);
  }
  return b;
}

}  // namespace kornlab::rankone
