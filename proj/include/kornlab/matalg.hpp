#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kornlab/quadrature.hpp"
#include "kornlab/rng.hpp"

namespace kornlab::matalg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class Subspace { Sym, Skew, SpanId, SymTraceFree };

inline void require_square(const Matrix& A) {
  if (A.rows() != A.cols() || A.rows() < 2)
    throw std::invalid_argument("square matrix with dim >= 2 required");
}

// Orthogonal projections of M_d(R) under the Frobenius inner product.
// M_d = Sym0 + span(Id) + Skew, pairwise orthogonal.
inline Matrix project(const Matrix& A, Subspace which) {
  require_square(A);
  const auto d = A.rows();
  switch (which) {
    case Subspace::Sym:
      return 0.5 * (A + A.transpose());
    case Subspace::Skew:
      return 0.5 * (A - A.transpose());
    case Subspace::SpanId:
      return (A.trace() / static_cast<double>(d)) * Matrix::Identity(d, d);
    case Subspace::SymTraceFree:
      return 0.5 * (A + A.transpose()) -
             (A.trace() / static_cast<double>(d)) * Matrix::Identity(d, d);
  }
  throw std::logic_error("unreachable");
}

inline double frob(const Matrix& A) { return A.norm(); }

// ---------------------------------------------------------------------------
// Third order tensors a_{ijk} on R^d, dense storage.

struct Tensor3 {
  int d = 0;
  std::vector<double> a;  // a[(i*d + j)*d + k]
  bool sym_last_two = false;

  static Tensor3 zero(int d, bool sym = false) {
    if (d < 2) throw std::invalid_argument("Tensor3: d >= 2 required");
    Tensor3 t;
    t.d = d;
    t.a.assign(static_cast<std::size_t>(d) * d * d, 0.0);
    t.sym_last_two = sym;
    return t;
  }

  double& at(int i, int j, int k) { return a[static_cast<std::size_t>((i * d + j) * d + k)]; }
  double at(int i, int j, int k) const {
    return a[static_cast<std::size_t>((i * d + j) * d + k)];
  }

  double norm2() const {
    double s = 0.0;
    for (double v : a) s += v * v;
    return s;
  }

  double max_sym_defect() const {  // max |a_{ijk} - a_{ikj}|
    double m = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k)
          m = std::max(m, std::abs(at(i, j, k) - at(i, k, j)));
    return m;
  }
};

// sum_{ijk} (a_{ijk} - a_{jik})^2 / |a|^2, for tensors symmetric in the last
// two slots. Bounded by 3 for every d >= 2; the bound is attained on the
// bottom eigenspace of the swap operator below.
inline double skew_defect_ratio(const Tensor3& t) {
  if (!t.sym_last_two || t.max_sym_defect() > 1e-10)
    throw std::invalid_argument("skew_defect_ratio: tensor must be symmetric in last two slots");
  const double n2 = t.norm2();
  if (n2 <= 0.0) throw std::invalid_argument("skew_defect_ratio: zero tensor");
  double s = 0.0;
  for (int i = 0; i < t.d; ++i)
    for (int j = 0; j < t.d; ++j)
      for (int k = 0; k < t.d; ++k) {
        const double b = t.at(i, j, k) - t.at(j, i, k);
        s += b * b;
      }
  return s / n2;
}

namespace detail {

// Orthonormal basis of Sym(d): E_jj = e_j x e_j, E_jk = (e_j x e_k + e_k x e_j)/sqrt2.
// Trace-free variant replaces the d diagonal elements by d-1 Helmert-type
// diagonal matrices orthogonal to the identity.
inline std::vector<Matrix> sym_basis(int d, bool trace_free) {
  std::vector<Matrix> out;
  if (trace_free) {
    for (int m = 1; m < d; ++m) {
      Matrix D = Matrix::Zero(d, d);
      const double nrm = std::sqrt(static_cast<double>(m) * (m + 1));
      for (int j = 0; j < m; ++j) D(j, j) = 1.0 / nrm;
      D(m, m) = -static_cast<double>(m) / nrm;
      out.push_back(D);
    }
  } else {
    for (int j = 0; j < d; ++j) {
      Matrix D = Matrix::Zero(d, d);
      D(j, j) = 1.0;
      out.push_back(D);
    }
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      Matrix S = Matrix::Zero(d, d);
      S(j, k) = inv_sqrt2;
      S(k, j) = inv_sqrt2;
      out.push_back(S);
    }
  return out;
}

// Orthonormal basis e_i x S of R^d x Sym(d) (or the trace-free version).
inline std::vector<Tensor3> tensor_basis(int d, bool trace_free) {
  const auto sym = sym_basis(d, trace_free);
  std::vector<Tensor3> out;
  out.reserve(static_cast<std::size_t>(d) * sym.size());
  for (int i = 0; i < d; ++i)
    for (const auto& S : sym) {
      Tensor3 t = Tensor3::zero(d, true);
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) t.at(i, j, k) = S(j, k);
      out.push_back(std::move(t));
    }
  return out;
}

inline double dot(const Tensor3& x, const Tensor3& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i) s += x.a[i] * y.a[i];
  return s;
}

inline Tensor3 swap_first_two(const Tensor3& t) {
  Tensor3 s = Tensor3::zero(t.d);
  for (int i = 0; i < t.d; ++i)
    for (int j = 0; j < t.d; ++j)
      for (int k = 0; k < t.d; ++k) s.at(i, j, k) = t.at(j, i, k);
  return s;
}

inline Tensor3 from_coords(const std::vector<Tensor3>& basis, const Vector& c) {
  Tensor3 t = Tensor3::zero(basis.front().d, true);
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t e = 0; e < t.a.size(); ++e) t.a[e] += c(static_cast<Eigen::Index>(b)) * basis[b].a[e];
  return t;
}

}  // namespace detail

// T = pi o sigma o pi on W = R^d x Sym(d), where sigma swaps the first two
// slots and pi symmetrizes the last two. On W it satisfies T^2 = I/2 + T/2,
// so spec(T) is contained in {1, -1/2}; the defect ratio above equals
// 2 - 2<Ta,a> on unit a in W, hence its sharp bound is 2 - 2*lambda_min = 3.
struct SwapOperator {
  int d = 0;
  Matrix T;                 // matrix of T in the orthonormal basis of W
  Vector eigenvalues;       // ascending
  double min_eigenvalue = 0.0;
  double sharp_constant = 0.0;
  double identity_residual = 0.0;  // ||T^2 - I/2 - T/2||_F
  Tensor3 maximizer;        // unit tensor attaining the defect bound
};

inline SwapOperator skew_defect_operator(int d) {
  if (d < 2 || d > 8) throw std::invalid_argument("skew_defect_operator: d in [2,8]");
  const auto basis = detail::tensor_basis(d, /*trace_free=*/false);
  const auto m = static_cast<Eigen::Index>(basis.size());
  Matrix T(m, m);
  for (Eigen::Index b = 0; b < m; ++b) {
    // <T B_b, B_a> = <sigma B_b, B_a>: pi drops against B_a in W
    const Tensor3 sb = detail::swap_first_two(basis[static_cast<std::size_t>(b)]);
    for (Eigen::Index a = 0; a < m; ++a)
      T(a, b) = detail::dot(sb, basis[static_cast<std::size_t>(a)]);
  }
  SwapOperator out;
  out.d = d;
  out.T = 0.5 * (T + T.transpose());  // symmetric up to roundoff
  Eigen::SelfAdjointEigenSolver<Matrix> es(out.T);
  out.eigenvalues = es.eigenvalues();
  out.min_eigenvalue = out.eigenvalues(0);
  out.sharp_constant = 2.0 - 2.0 * out.min_eigenvalue;
  out.identity_residual =
      (out.T * out.T - 0.5 * Matrix::Identity(m, m) - 0.5 * out.T).norm();
  out.maximizer = detail::from_coords(basis, es.eigenvectors().col(0));
  out.maximizer.sym_last_two = true;
  return out;
}

// Largest constant C_d with |b|^2 + d/(d-1)^2 |c|^2 <= C_d |a|^2 on
// a in R^d x Sym0(d), where b_{ijk} = a_{ijk} - a_{jik} and c_k = sum_i a_{iik}.
// Realized as the top eigenvalue of the associated quadratic form; equals 4
// for d = 2 and 3 for every d > 2.
struct TraceFreeDefect {
  int d = 0;
  double constant = 0.0;
  Vector eigenvalues;  // ascending
  Tensor3 maximizer;
  double maximizer_ratio = 0.0;  // quadratic form evaluated on the maximizer
};

namespace detail {

inline double tracefree_form(const Tensor3& x, const Tensor3& y) {
  const int d = x.d;
  double s = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        s += (x.at(i, j, k) - x.at(j, i, k)) * (y.at(i, j, k) - y.at(j, i, k));
  const double w = static_cast<double>(d) / ((d - 1.0) * (d - 1.0));
  for (int k = 0; k < d; ++k) {
    double cx = 0.0, cy = 0.0;
    for (int i = 0; i < d; ++i) {
      cx += x.at(i, i, k);
      cy += y.at(i, i, k);
    }
    s += w * cx * cy;
  }
  return s;
}

}  // namespace detail

inline TraceFreeDefect tracefree_defect_constant(int d) {
  if (d < 2 || d > 8) throw std::invalid_argument("tracefree_defect_constant: d in [2,8]");
  const auto basis = detail::tensor_basis(d, /*trace_free=*/true);
  const auto m = static_cast<Eigen::Index>(basis.size());
  Matrix Q(m, m);
  for (Eigen::Index b = 0; b < m; ++b)
    for (Eigen::Index a = b; a < m; ++a) {
      const double v = detail::tracefree_form(basis[static_cast<std::size_t>(a)],
                                              basis[static_cast<std::size_t>(b)]);
      Q(a, b) = v;
      Q(b, a) = v;
    }
  Eigen::SelfAdjointEigenSolver<Matrix> es(Q);
  TraceFreeDefect out;
  out.d = d;
  out.eigenvalues = es.eigenvalues();
  out.constant = out.eigenvalues(m - 1);
  out.maximizer = detail::from_coords(basis, es.eigenvectors().col(m - 1));
  out.maximizer.sym_last_two = true;
  out.maximizer_ratio =
      detail::tracefree_form(out.maximizer, out.maximizer) / out.maximizer.norm2();
  return out;
}

// ---------------------------------------------------------------------------
// Sphere averages.

enum class SphereRule { MonteCarlo, Product, Exact };

struct SphereMoment {
  Matrix moment;        // average of theta x theta over S^{d-1}
  double max_offdiag = 0.0;
  double trace = 0.0;
  double max_error_vs_exact = 0.0;  // entrywise distance to Id/d
};

inline SphereMoment sphere_moment(int d, SphereRule rule, long n_samples = 0,
                                  std::uint64_t seed = 0) {
  if (d < 2) throw std::invalid_argument("sphere_moment: d >= 2 required");
  Matrix M = Matrix::Zero(d, d);
  switch (rule) {
    case SphereRule::Exact:
      // odd reflections kill off-diagonal terms; diagonal by trace symmetry
      M = Matrix::Identity(d, d) / static_cast<double>(d);
      break;
    case SphereRule::Product: {
      if (d != 2 && d != 3)
        throw std::invalid_argument("sphere_moment: product rule needs d in {2,3}");
      const int nt = 64;
      std::vector<double> gx, gw;
      quadrature::gauss_legendre(nt, gx, gw);
      if (d == 2) {
        // theta = (cos s, sin s) with s = pi*(x+1)/2 on a quarter turn; the
        // moment is invariant under the dihedral symmetries, integrate one
        // period directly with the periodic trapezoid instead.
        const int m = 256;
        for (int j = 0; j < m; ++j) {
          const double s = 6.28318530717958647692 * j / m;
          const double c = std::cos(s), sn = std::sin(s);
          M(0, 0) += c * c;
          M(0, 1) += c * sn;
          M(1, 0) += sn * c;
          M(1, 1) += sn * sn;
        }
        M /= static_cast<double>(m);
      } else {
        const int m = 128;
        double wsum = 0.0;
        for (int iq = 0; iq < nt; ++iq) {
          const double ct = gx[static_cast<std::size_t>(iq)];
          const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
          for (int j = 0; j < m; ++j) {
            const double s = 6.28318530717958647692 * j / m;
            const double th[3] = {st * std::cos(s), st * std::sin(s), ct};
            const double w = gw[static_cast<std::size_t>(iq)];
            wsum += w;
            for (int r = 0; r < 3; ++r)
              for (int c = 0; c < 3; ++c) M(r, c) += w * th[r] * th[c];
          }
        }
        M /= wsum;
      }
      break;
    }
    case SphereRule::MonteCarlo: {
      if (n_samples <= 0) throw std::invalid_argument("sphere_moment: n_samples > 0 required");
      Rng rng(seed);
      for (long s = 0; s < n_samples; ++s) {
        const auto th = rng.sphere_point(d);
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) M(r, c) += th[static_cast<std::size_t>(r)] * th[static_cast<std::size_t>(c)];
      }
      M /= static_cast<double>(n_samples);
      break;
    }
  }
  SphereMoment out;
  out.moment = M;
  out.trace = M.trace();
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if (r != c) out.max_offdiag = std::max(out.max_offdiag, std::abs(M(r, c)));
  out.max_error_vs_exact =
      (M - Matrix::Identity(d, d) / static_cast<double>(d)).cwiseAbs().maxCoeff();
  return out;
}

// c_d = Gamma(d/2) / (sqrt(pi) Gamma((d+1)/2)), the sphere average of |theta_1|.
inline double directional_average_constant(int d) {
  if (d < 2) throw std::invalid_argument("directional_average_constant: d >= 2");
  return std::exp(std::lgamma(0.5 * d) - 0.5 * std::log(3.14159265358979323846) -
                  std::lgamma(0.5 * (d + 1)));
}

struct DirectionalAverage {
  double average = 0.0;   // sphere average of |A theta|
  double bound = 0.0;     // c_d * |A|_F
  double margin = 0.0;    // average - bound
  double mc_stderr = 0.0; // 0 for deterministic rules
};

// Sphere average of |A theta| >= c_d |A|_F, equality iff A has rank one.
// Deterministic product rule for d in {2,3} (on the singular values), Monte
// Carlo otherwise.
inline DirectionalAverage directional_average_lower(const Matrix& A, long n_samples = 0,
                                                    std::uint64_t seed = 0) {
  require_square(A);
  const int d = static_cast<int>(A.rows());
  DirectionalAverage out;
  out.bound = directional_average_constant(d) * A.norm();
  Eigen::JacobiSVD<Matrix> svd(A);
  const Vector s = svd.singularValues();
  if (d == 2) {
    const int m = 512;
    double acc = 0.0;
    for (int j = 0; j < m; ++j) {
      const double t = 6.28318530717958647692 * j / m;
      const double c = std::cos(t), sn = std::sin(t);
      acc += std::sqrt(s(0) * s(0) * c * c + s(1) * s(1) * sn * sn);
    }
    out.average = acc / m;
  } else if (d == 3) {
    const int nt = 96, m = 192;
    std::vector<double> gx, gw;
    quadrature::gauss_legendre(nt, gx, gw);
    double acc = 0.0, wsum = 0.0;
    for (int iq = 0; iq < nt; ++iq) {
      const double ct = gx[static_cast<std::size_t>(iq)];
      const double st2 = std::max(0.0, 1.0 - ct * ct);
      for (int j = 0; j < m; ++j) {
        const double t = 6.28318530717958647692 * j / m;
        const double c = std::cos(t), sn = std::sin(t);
        const double w = gw[static_cast<std::size_t>(iq)];
        acc += w * std::sqrt(s(0) * s(0) * st2 * c * c + s(1) * s(1) * st2 * sn * sn +
                             s(2) * s(2) * ct * ct);
        wsum += w;
      }
    }
    out.average = acc / wsum;
  } else {
    if (n_samples <= 0) n_samples = 400000;
    Rng rng(seed);
    double acc = 0.0, acc2 = 0.0;
    for (long k = 0; k < n_samples; ++k) {
      const auto th = rng.sphere_point(d);
      double q = 0.0;
      for (int i = 0; i < d; ++i) q += s(i) * s(i) * th[static_cast<std::size_t>(i)] * th[static_cast<std::size_t>(i)];
      const double v = std::sqrt(q);
      acc += v;
      acc2 += v * v;
    }
    out.average = acc / static_cast<double>(n_samples);
    const double var =
        std::max(0.0, acc2 / static_cast<double>(n_samples) - out.average * out.average);
    out.mc_stderr = std::sqrt(var / static_cast<double>(n_samples));
  }
  out.margin = out.average - out.bound;
  return out;
}

// ---------------------------------------------------------------------------
// sup over rank-one R = a x b of |P_{X^perp} R| / |P_X R|, X in {Sym, Sym0}.
// Multi-start projected gradient ascent on the product of unit spheres.

struct RankOneRatio {
  double ratio = 0.0;
  Vector a, b;
  double inner = 0.0;  // <a,b> at the reported maximizer
  int best_start = -1;
};

inline RankOneRatio rank_one_ratio(Subspace X, int d, int n_starts = 32,
                                   std::uint64_t seed = 7) {
  if (X != Subspace::Sym && X != Subspace::SymTraceFree)
    throw std::invalid_argument("rank_one_ratio: X must be Sym or SymTraceFree");
  if (d < 2) throw std::invalid_argument("rank_one_ratio: d >= 2");
  Rng root(seed);
  RankOneRatio best;
  for (int s = 0; s < n_starts; ++s) {
    Rng rng = root.fork(static_cast<std::uint64_t>(s));
    Vector a(d), b(d);
    for (int i = 0; i < d; ++i) {
      a(i) = rng.normal();
      b(i) = rng.normal();
    }
    a.normalize();
    b.normalize();
    double step = 0.25;
    auto value = [&](const Vector& va, const Vector& vb, Matrix* num_proj, Matrix* den_proj) {
      const Matrix R = va * vb.transpose();
      const Matrix Q = project(R, X);
      const Matrix P = R - Q;  // complement projection
      if (num_proj) *num_proj = P;
      if (den_proj) *den_proj = Q;
      return std::pair<double, double>(P.squaredNorm(), Q.squaredNorm());
    };
    auto ratio2 = [&](const Vector& va, const Vector& vb) {
      const auto [N, D] = value(va, vb, nullptr, nullptr);
      return N / D;
    };
    double cur = ratio2(a, b);
    for (int it = 0; it < 400; ++it) {
      Matrix P, Q;
      const auto [N, D] = value(a, b, &P, &Q);
      // grad_a of N = 2 P b, of D = 2 Q b (P,Q are the projected matrices)
      Vector ga = 2.0 * (P * b) / D - (N / (D * D)) * 2.0 * (Q * b);
      Vector gb = 2.0 * (P.transpose() * a) / D - (N / (D * D)) * 2.0 * (Q.transpose() * a);
      ga -= ga.dot(a) * a;  // tangent projection
      gb -= gb.dot(b) * b;
      const double gn = std::sqrt(ga.squaredNorm() + gb.squaredNorm());
      if (gn < 1e-14) break;
      bool improved = false;
      for (int bt = 0; bt < 30; ++bt) {
        Vector a2 = (a + step * ga / gn).normalized();
        Vector b2 = (b + step * gb / gn).normalized();
        const double v2 = ratio2(a2, b2);
        if (v2 > cur + 1e-16) {
          a = a2;
          b = b2;
          cur = v2;
          step = std::min(step * 1.5, 0.5);
          improved = true;
          break;
        }
        step *= 0.5;
      }
      if (!improved) break;
    }
    if (cur > best.ratio * best.ratio || best.best_start < 0) {
      best.ratio = std::sqrt(cur);
      best.a = a;
      best.b = b;
      best.inner = a.dot(b);
      best.best_start = s;
    }
  }
  return best;
}

}  // namespace kornlab::matalg
