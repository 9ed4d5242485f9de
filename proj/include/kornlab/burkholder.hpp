#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "kornlab/matalg.hpp"
#include "kornlab/rng.hpp"

namespace kornlab::burkholder {

inline double p_star(double p) {
  if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument("p_star: p in (1, inf) required");
  return std::max(p, p / (p - 1.0));
}

struct BurkholderState {
  double p = 2.0;
  double x = 0.0;
  double y = 0.0;
  void validate() const {
    if (!(p > 1.0) || std::isinf(p))
      throw std::invalid_argument("BurkholderState: p in (1, inf) required");
    if (!(x >= 0.0) || !(y >= 0.0) || !std::isfinite(x) || !std::isfinite(y))
      throw std::invalid_argument("BurkholderState: finite x, y >= 0 required");
  }
};

inline double eval_V(const BurkholderState& s) {
  s.validate();
  const double c = p_star(s.p) - 1.0;
  return std::pow(c, s.p) * std::pow(s.y, s.p) - std::pow(s.x, s.p);
}

// Two branches: V itself on the cone x <= (p*-1)y where V >= 0, and the
// product form elsewhere. Both vanish on the interface and the glue is C^1.
inline double eval_G(const BurkholderState& s) {
  s.validate();
  const double ps = p_star(s.p);
  const double c = ps - 1.0;
  if (s.x <= c * s.y) return eval_V(s);
  return s.p * std::pow(1.0 - 1.0 / ps, s.p - 1.0) * (c * s.y - s.x) *
         std::pow(s.x + s.y, s.p - 1.0);
}

struct ZigzagSample {
  double x = 0.0, y = 0.0;
  double h = 0.0, k = 0.0;
  double second_diff = 0.0;
};

struct ZigzagReport {
  double min_second_diff = 0.0;
  ZigzagSample argmin;
  double max_g_minus_v = -std::numeric_limits<double>::infinity();
  long n_violations = 0;
  double tol = 0.0;
  std::vector<ZigzagSample> violations;  // first few offenders, for diagnosis
};

// Centered second difference of t -> G(|x+th|, |y+tk|) at t = 0 over random
// states in [0,2]^2 and random directions |h| <= |k|. Negative values beyond
// tol are collected, not hidden: for p < 2 the pinned formula genuinely loses
// diagonal convexity near the y-axis, and this check is the instrument that
// shows it.
inline ZigzagReport zigzag_convexity_check(double p, long n_points = 10000,
                                           std::uint64_t seed = 1, double fd_step = 1e-2,
                                           double tol = 1e-8) {
  if (!(p > 1.0) || std::isinf(p))
    throw std::invalid_argument("zigzag_convexity_check: p in (1, inf) required");
  Rng rng(seed);
  ZigzagReport rep;
  rep.tol = tol;
  rep.min_second_diff = std::numeric_limits<double>::infinity();
  for (long i = 0; i < n_points; ++i) {
    ZigzagSample s;
    s.x = rng.uniform(0.0, 2.0);
    s.y = rng.uniform(0.0, 2.0);
    s.k = 1.0;
    s.h = rng.uniform(-1.0, 1.0);
    const double g0 = eval_G({p, s.x, s.y});
    const double gp = eval_G({p, std::abs(s.x + fd_step * s.h), std::abs(s.y + fd_step * s.k)});
    const double gm = eval_G({p, std::abs(s.x - fd_step * s.h), std::abs(s.y - fd_step * s.k)});
    s.second_diff = gp + gm - 2.0 * g0;
    if (s.second_diff < rep.min_second_diff) {
      rep.min_second_diff = s.second_diff;
      rep.argmin = s;
    }
    if (s.second_diff < -tol) {
      ++rep.n_violations;
      if (rep.violations.size() < 16) rep.violations.push_back(s);
    }
    rep.max_g_minus_v = std::max(rep.max_g_minus_v, g0 - eval_V({p, s.x, s.y}));
  }
  return rep;
}

// Dyadic pair: f branches by +-df at every node, g moves by eps*df with the
// same magnitude. eps and df are predictable: constant per level in the
// per_level encoding, or computed from the node's (f,g) state and a per-node
// RNG substream under a policy. Path-dependent signs are what Theorem-style
// transforms permit, and they are necessary: level-constant signs make g equal
// f in distribution from a (0,0) start, so no ratio above 1 is witnessable.
//
// The cone policy moves only while |g| >= (qa + qb/m)|f| with m moves left,
// taking anti-diagonal steps h = eta * m/(m+ms) * hypot(f,g) and freezing
// otherwise. Freezing inside the cone is what lets the transform's mass run
// ahead of the source's: states below the threshold stop contributing growth
// to |f| while near-axis states keep amplifying |g|.
struct DyadicPair {
  enum class Policy { per_level, zigzag, random, cone };

  int depth = 8;
  double x0 = 0.0;  // transform start
  double y0 = 0.0;  // source start
  Policy policy = Policy::per_level;
  std::vector<double> df;  // per_level: one magnitude per level
  std::vector<int> eps;    // per_level: one sign per level
  std::uint64_t seed = 0;
  double a = 0.0;         // zigzag: weight of |f| in the step size
  double b = 0.0;         // zigzag: weight of |g|
  double cstep = 1.0;     // additive step floor
  double flip_prob = 0.0; // zigzag, cone: chance of flipping the steering sign
  double jitter = 0.0;    // relative step-size noise
  double qa = 1.0;        // cone: threshold intercept
  double qb = 0.0;        // cone: threshold endgame growth
  double eta = 0.5;       // cone: step fraction of the state radius
  double ms = 0.0;        // cone: step damping timescale in remaining moves

  void validate() const {
    if (depth < 1 || depth > 20) throw std::invalid_argument("DyadicPair: depth in [1,20]");
    if (policy == Policy::per_level) {
      if (df.size() != static_cast<std::size_t>(depth) ||
          eps.size() != static_cast<std::size_t>(depth))
        throw std::invalid_argument("DyadicPair: per-level arrays must match depth");
      for (double v : df)
        if (!(v >= 0.0) || !std::isfinite(v))
          throw std::invalid_argument("DyadicPair: df must be finite and >= 0");
      for (int e : eps)
        if (e != 1 && e != -1) throw std::invalid_argument("DyadicPair: eps must be +-1");
    } else {
      if (!(cstep > 0.0) || !(a >= 0.0) || !(b >= 0.0))
        throw std::invalid_argument("DyadicPair: policy needs cstep > 0, a, b >= 0");
      if (!(flip_prob >= 0.0 && flip_prob <= 1.0) || !(jitter >= 0.0 && jitter <= 1.0))
        throw std::invalid_argument("DyadicPair: flip_prob, jitter in [0,1]");
      if (policy == Policy::cone &&
          (!(qa >= 0.0) || !(qb >= 0.0) || !(eta > 0.0) || !(ms >= 0.0) ||
           !std::isfinite(qa + qb + eta + ms)))
        throw std::invalid_argument("DyadicPair: cone needs qa, qb, ms >= 0 and eta > 0");
    }
  }
};

struct PairStats {
  double norm_f = 0.0;
  double norm_g = 0.0;
  double ratio = 0.0;
};

namespace detail {

struct NodeStep {
  double df = 0.0;
  int eps = 1;
};

inline NodeStep step_at(const DyadicPair& pr, int level, std::uint64_t node, double f, double g) {
  NodeStep st;
  if (pr.policy == DyadicPair::Policy::per_level) {
    st.df = pr.df[static_cast<std::size_t>(level)];
    st.eps = pr.eps[static_cast<std::size_t>(level)];
    return st;
  }
  Rng r = Rng(pr.seed).fork(node);
  double h = pr.cstep;
  if (pr.policy == DyadicPair::Policy::zigzag) h += pr.a * std::abs(f) + pr.b * std::abs(g);
  if (pr.policy == DyadicPair::Policy::cone) {
    const double af = std::abs(f), ag = std::abs(g);
    const int m = pr.depth - level;  // moves remaining, >= 1
    if (af == 0.0 && ag == 0.0)
      h = pr.cstep;
    else if (ag >= (pr.qa + pr.qb / m) * af)
      h = pr.eta * (m / (m + pr.ms)) * std::hypot(af, ag);
    else
      h = 0.0;  // frozen inside the cone
  }
  if (pr.jitter > 0.0) h *= 1.0 + pr.jitter * (r.uniform() - 0.5);
  st.df = h;
  if (pr.policy == DyadicPair::Policy::random) {
    st.eps = r.sign();
  } else {
    const double fg = f * g;
    st.eps = fg > 0.0 ? -1 : 1;
    if (pr.flip_prob > 0.0 && r.uniform() < pr.flip_prob) st.eps = -st.eps;
  }
  return st;
}

template <typename Leaf, typename Node>
inline void walk(const DyadicPair& pr, int level, std::uint64_t node, double g, double f,
                 const Leaf& on_leaf, const Node& on_node) {
  if (level == pr.depth) {
    on_leaf(g, f);
    return;
  }
  const NodeStep st = step_at(pr, level, node, f, g);
  on_node(st.df, static_cast<double>(st.eps) * st.df);
  walk(pr, level + 1, 2 * node, g + st.eps * st.df, f + st.df, on_leaf, on_node);
  walk(pr, level + 1, 2 * node + 1, g - st.eps * st.df, f - st.df, on_leaf, on_node);
}

// sum of w * v^p over leaves, accumulated smallest-first for determinism
inline double sorted_power_mean(std::vector<double>& pows, int depth) {
  std::sort(pows.begin(), pows.end());
  double s = 0.0;
  for (double v : pows) s += v;
  return std::ldexp(s, -depth);
}

}  // namespace detail

inline PairStats simulate_subordinate_pair(const DyadicPair& pr, double p) {
  pr.validate();
  if (!(p > 1.0) || std::isinf(p))
    throw std::invalid_argument("simulate_subordinate_pair: p in (1, inf) required");
  if (std::abs(pr.x0) > (p_star(p) - 1.0) * std::abs(pr.y0) + 0.0)
    throw std::invalid_argument("simulate_subordinate_pair: start needs |x0| <= (p*-1)|y0|");
  std::vector<double> fp, gp;
  fp.reserve(1u << pr.depth);
  gp.reserve(1u << pr.depth);
  detail::walk(
      pr, 0, 1, pr.x0, pr.y0,
      [&](double g, double f) {
        fp.push_back(std::pow(std::abs(f), p));
        gp.push_back(std::pow(std::abs(g), p));
      },
      [](double, double) {});
  PairStats st;
  st.norm_f = std::pow(detail::sorted_power_mean(fp, pr.depth), 1.0 / p);
  st.norm_g = std::pow(detail::sorted_power_mean(gp, pr.depth), 1.0 / p);
  st.ratio = st.norm_f > 0.0 ? st.norm_g / st.norm_f
                             : (st.norm_g > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
  return st;
}

struct SearchResult {
  DyadicPair best;
  PairStats stats;
  int trials = 0;
};

// Random search over policy space. zero_start pins (x0,y0) = (0,0) as the
// laminate construction requires; otherwise starts are sampled inside the
// admissible cone.
inline SearchResult random_pair_search(double p, int n_trials, int depth, std::uint64_t seed,
                                       bool zero_start = true) {
  if (depth < 1 || depth > 20) throw std::invalid_argument("random_pair_search: depth in [1,20]");
  Rng rng(seed);
  SearchResult out;
  out.trials = n_trials;
  double best = -1.0;
  for (int t = 0; t < n_trials; ++t) {
    DyadicPair pr;
    pr.depth = depth;
    pr.seed = rng.next_u64();
    const double u = rng.uniform();
    if (u < 0.40) {
      pr.policy = DyadicPair::Policy::cone;
      pr.qa = rng.uniform(0.6, 1.6);
      pr.qb = rng.uniform(0.0, 6.0);
      pr.eta = rng.uniform(0.3, 0.9);
      pr.ms = rng.uniform(0.0, 5.0);
      pr.jitter = rng.uniform(0.0, 0.25);
    } else if (u < 0.70) {
      pr.policy = DyadicPair::Policy::zigzag;
      pr.a = rng.uniform(0.0, 1.2);
      pr.b = rng.uniform(0.0, 1.2);
      pr.cstep = rng.uniform(0.05, 1.0);
      pr.flip_prob = rng.uniform(0.0, 0.3);
      pr.jitter = rng.uniform(0.0, 0.5);
    } else if (u < 0.78) {
      // steepest zigzag ladder, no noise
      pr.policy = DyadicPair::Policy::zigzag;
      pr.a = rng.uniform(0.5, 1.2);
      pr.b = 0.0;
      pr.cstep = rng.uniform(0.05, 1.0);
    } else {
      pr.policy = DyadicPair::Policy::random;
      pr.cstep = rng.uniform(0.05, 1.0);
      pr.jitter = rng.uniform(0.0, 1.0);
    }
    if (!zero_start) {
      pr.y0 = rng.uniform(0.0, 1.0);
      pr.x0 = rng.uniform(0.0, (p_star(p) - 1.0) * pr.y0);
    }
    const PairStats st = simulate_subordinate_pair(pr, p);
    if (st.ratio > best && std::isfinite(st.ratio)) {
      best = st.ratio;
      out.best = pr;
      out.stats = st;
    }
  }
  return out;
}

struct LaminateResult {
  double witnessed_c = 0.0;
  bool rank_check = true;
  double norm_f = 0.0;  // Lp norm of |sym part| at the leaves
  double norm_g = 0.0;  // Lp norm of |skew part|
  double max_rank_defect = 0.0;
};

// Embeds the scalar pair as M = f (e1 x ed + ed x e1) + g (e1 x ed - ed x e1).
// Each increment is (dF+dG) e1 x ed + (dF-dG) ed x e1 with dG = +-dF, so one
// coefficient vanishes exactly and the increment has rank <= 1; the product
// |(dF+dG)(dF-dG)| is the certified defect. Leaf norms go through the actual
// d x d matrices and the symmetric/antisymmetric projections.
inline LaminateResult laminate_lower_bound(double p, int d, const DyadicPair& pr) {
  pr.validate();
  if (d < 2) throw std::invalid_argument("laminate_lower_bound: d >= 2 required");
  if (!(p > 1.0) || std::isinf(p))
    throw std::invalid_argument("laminate_lower_bound: p in (1, inf) required");
  matalg::Matrix Dplus = matalg::Matrix::Zero(d, d);
  matalg::Matrix Dminus = matalg::Matrix::Zero(d, d);
  Dplus(0, d - 1) = 1.0;
  Dplus(d - 1, 0) = 1.0;
  Dminus(0, d - 1) = 1.0;
  Dminus(d - 1, 0) = -1.0;
  LaminateResult out;
  std::vector<double> fp, gp;
  fp.reserve(1u << pr.depth);
  gp.reserve(1u << pr.depth);
  detail::walk(
      pr, 0, 1, pr.x0, pr.y0,
      [&](double g, double f) {
        const matalg::Matrix M = f * Dplus + g * Dminus;
        fp.push_back(std::pow(matalg::frob(matalg::project(M, matalg::Subspace::Sym)), p));
        gp.push_back(std::pow(matalg::frob(matalg::project(M, matalg::Subspace::Skew)), p));
      },
      [&](double dF, double dG) {
        const double defect = std::abs((dF + dG) * (dF - dG));
        out.max_rank_defect = std::max(out.max_rank_defect, defect);
        if (defect > 1e-14 * std::max(1.0, dF * dF)) out.rank_check = false;
      });
  out.norm_f = std::pow(detail::sorted_power_mean(fp, pr.depth), 1.0 / p);
  out.norm_g = std::pow(detail::sorted_power_mean(gp, pr.depth), 1.0 / p);
  out.witnessed_c = out.norm_f > 0.0 ? out.norm_g / out.norm_f : 0.0;
  return out;
}

struct BellmanResult {
  int n_cells = 0;
  double span = 0.0;
  int sweeps = 0;
  bool monotone = true;
  double max_gap = 0.0;        // max over nodes of B - G
  double min_gap = 0.0;        // min over nodes of B - G
  double fixed_point_drift = 0.0;  // max |B - V| when V is already the value (p=2)
  std::vector<double> table;   // row-major, (n_cells+1)^2 nodes, index ix*(n+1)+iy
};

// Value iteration for the dyadic-move value function on [0,span]^2.
// B0 = V; a sweep takes min over the current value and the averaged
// two-point moves (x +- eps h, y +- h), h running over the dyadic ladder
// {span 2^-j} (ladder_levels >= 0 truncates the ladder). Moves land on the
// lattice, so interior updates involve no interpolation at all, which keeps
// the p = 2 quadratic an exact fixed point. Negative coordinates reflect.
// Queries past the far edge rescale onto the boundary by p-homogeneity and
// interpolate quadratically along the face (exact for quadratics).
//
// Updates run in place, so a refinement can cross the lattice within one
// sweep, and each sweep closes with two cheap exact steps that the plain
// pointwise update only reproduces asymptotically: a lower-convex-envelope
// pass along every diagonal and anti-diagonal lattice chord (the closure of
// composed in-box pair moves; the limit function is chord-convex, so the
// envelope of a majorant still majorizes it), and repeated local passes over
// the wedge below the cone x = (p*-1)y, where the limit is pinned only
// through the axis and the far face and pointwise descent is slowest.
// Min-updates keep monotonicity structural. A decrease is accepted only past
// a rounding floor: the lam^p fold factor exceeds 1, so ulp-level noise on
// the far face would otherwise re-enter the min and compound across sweeps.
inline BellmanResult bellman_iterate(double p, int n_cells = 256, int iters = 200,
                                     double span = 1.0, int ladder_levels = -1) {
  if (!(p > 1.0) || std::isinf(p))
    throw std::invalid_argument("bellman_iterate: p in (1, inf) required");
  if (n_cells < 2 || (n_cells & (n_cells - 1)) != 0)
    throw std::invalid_argument("bellman_iterate: n_cells must be a power of two >= 2");
  if (!(span > 0.0)) throw std::invalid_argument("bellman_iterate: span > 0 required");
  int log2n = 0;
  while ((1 << log2n) < n_cells) ++log2n;
  if (ladder_levels < 0) ladder_levels = log2n;
  if (ladder_levels > log2n)
    throw std::invalid_argument("bellman_iterate: ladder exceeds lattice resolution");
  std::vector<int> moves;
  for (int j = 0; j <= ladder_levels; ++j) moves.push_back(n_cells >> j);

  const int n = n_cells;
  const int N = n + 1;
  const double delta = span / n;
  auto node_xy = [&](int i) { return delta * i; };
  std::vector<double> B(static_cast<std::size_t>(N) * N);
  for (int ix = 0; ix < N; ++ix)
    for (int iy = 0; iy < N; ++iy)
      B[static_cast<std::size_t>(ix) * N + iy] = eval_V({p, node_xy(ix), node_xy(iy)});

  // value at integer lattice point (ix, iy) with ix, iy possibly outside [0,n]
  auto value_at = [&](const std::vector<double>& T, int ix, int iy) -> double {
    if (ix < 0) ix = -ix;
    if (iy < 0) iy = -iy;
    if (ix <= n && iy <= n) return T[static_cast<std::size_t>(ix) * N + iy];
    // homogeneity: B(z) = lam^p B(z/lam), lam chosen to land on the far face
    const int big = std::max(ix, iy);
    const double lam = static_cast<double>(big) / n;
    const double sx = static_cast<double>(ix) * n / big;  // in [0, n]
    const double sy = static_cast<double>(iy) * n / big;
    double face[3];
    double ss;
    int j0;
    const bool x_face = ix >= iy;
    ss = x_face ? sy : sx;
    j0 = std::clamp(static_cast<int>(std::lround(ss)), 1, n - 1);
    for (int t = -1; t <= 1; ++t) {
      const int jj = j0 + t;
      face[t + 1] = x_face ? T[static_cast<std::size_t>(n) * N + jj]
                           : T[static_cast<std::size_t>(jj) * N + n];
    }
    const double u = ss - j0;
    const double w0 = 0.5 * u * (u - 1.0);
    const double w1 = (1.0 - u) * (1.0 + u);
    const double w2 = 0.5 * u * (u + 1.0);
    return std::pow(lam, p) * (w0 * face[0] + w1 * face[1] + w2 * face[2]);
  };

  double scale = 0.0;
  for (const double b : B) scale = std::max(scale, std::abs(b));
  const double floor_tol = 1e-13 * std::max(scale, 1.0);

  auto update_node = [&](int ix, int iy) {
    const double cur = B[static_cast<std::size_t>(ix) * N + iy];
    double v = cur;
    for (const int m : moves) {
      const double up = value_at(B, ix + m, iy + m);
      const double dn = value_at(B, ix - m, iy - m);
      v = std::min(v, 0.5 * (up + dn));
      const double up2 = value_at(B, ix - m, iy + m);
      const double dn2 = value_at(B, ix + m, iy - m);
      v = std::min(v, 0.5 * (up2 + dn2));
    }
    if (v < cur - floor_tol) B[static_cast<std::size_t>(ix) * N + iy] = v;
  };

  // exact lower convex envelope of v over consecutive integer abscissae
  std::vector<double> env;
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
    env.assign(m, 0.0);
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
      const int a = hull[s], b = hull[s + 1];
      for (int i = a; i <= b; ++i)
        env[i] = v[a] + (v[b] - v[a]) * static_cast<double>(i - a) / (b - a);
    }
    if (hull.size() == 1) env[hull[0]] = v[hull[0]];
    v = env;
  };

  std::vector<double> chord;
  auto chord_pass = [&]() {
    for (int c = 2; c <= 2 * n - 2; ++c) {  // anti-diagonals ix + iy = c
      const int lo = std::max(0, c - n), hi = std::min(n, c);
      if (hi - lo < 2) continue;
      chord.clear();
      for (int ix = lo; ix <= hi; ++ix) chord.push_back(B[static_cast<std::size_t>(ix) * N + (c - ix)]);
      convexify(chord);
      for (int ix = lo; ix <= hi; ++ix) {
        double& b = B[static_cast<std::size_t>(ix) * N + (c - ix)];
        if (chord[ix - lo] < b - floor_tol) b = chord[ix - lo];
      }
    }
    for (int c = -n + 2; c <= n - 2; ++c) {  // diagonals iy - ix = c
      const int lo = std::max(0, -c), hi = std::min(n, n - c);
      if (hi - lo < 2) continue;
      chord.clear();
      for (int ix = lo; ix <= hi; ++ix) chord.push_back(B[static_cast<std::size_t>(ix) * N + (c + ix)]);
      convexify(chord);
      for (int ix = lo; ix <= hi; ++ix) {
        double& b = B[static_cast<std::size_t>(ix) * N + (c + ix)];
        if (chord[ix - lo] < b - floor_tol) b = chord[ix - lo];
      }
    }
  };

  const double cone_slope = p_star(p) - 1.0;
  constexpr int kWedgeRefinements = 16;

  BellmanResult out;
  out.n_cells = n;
  out.span = span;
  for (int sweep = 0; sweep < iters; ++sweep) {
    const bool fwd = (sweep & 1) == 0;
    for (int sx = 0; sx < N; ++sx)
      for (int sy = 0; sy < N; ++sy) update_node(fwd ? sx : n - sx, fwd ? sy : n - sy);
    chord_pass();
    for (int r = 0; r < kWedgeRefinements; ++r) {
      for (int iy = n; iy >= 0; --iy)
        for (int ix = static_cast<int>(cone_slope * iy); ix <= n; ++ix) update_node(ix, iy);
      chord_pass();
    }
  }
  out.sweeps = iters;
  out.max_gap = -std::numeric_limits<double>::infinity();
  out.min_gap = std::numeric_limits<double>::infinity();
  out.fixed_point_drift = 0.0;
  for (int ix = 0; ix < N; ++ix)
    for (int iy = 0; iy < N; ++iy) {
      const double b = B[static_cast<std::size_t>(ix) * N + iy];
      const double g = eval_G({p, node_xy(ix), node_xy(iy)});
      out.max_gap = std::max(out.max_gap, b - g);
      out.min_gap = std::min(out.min_gap, b - g);
      out.fixed_point_drift =
          std::max(out.fixed_point_drift, std::abs(b - eval_V({p, node_xy(ix), node_xy(iy)})));
    }
  out.table = std::move(B);
  return out;
}

}  // namespace kornlab::burkholder
