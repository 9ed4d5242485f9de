#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace kornlab::grid {

// Uniform periodic grid on [0,1)^d, n points per axis, row-major point index
// (ix*n + iy for d = 2, (ix*n + iy)*n + iz for d = 3).
struct GridSpec {
  int d = 2;
  int n = 32;
  long max_points = 1L << 25;

  void validate() const {
    if (d != 2 && d != 3) throw std::invalid_argument("GridSpec: d must be 2 or 3");
    if (n < 8 || (n & (n - 1)) != 0)
      throw std::invalid_argument("GridSpec: n must be a power of two, n >= 8");
    if (npoints() > max_points) throw std::invalid_argument("GridSpec: grid exceeds memory cap");
  }
  long npoints() const {
    long m = 1;
    for (int i = 0; i < d; ++i) m *= n;
    return m;
  }
  double spacing() const { return 1.0 / n; }
};

inline bool same(const GridSpec& a, const GridSpec& b) { return a.d == b.d && a.n == b.n; }

struct VectorField {
  GridSpec g;
  std::vector<double> v;  // v[comp * N + idx]

  static VectorField zero(const GridSpec& g) {
    g.validate();
    VectorField f;
    f.g = g;
    f.v.assign(static_cast<std::size_t>(g.d) * static_cast<std::size_t>(g.npoints()), 0.0);
    return f;
  }
  double* comp(int i) { return v.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(g.npoints()); }
  const double* comp(int i) const {
    return v.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(g.npoints());
  }
};

struct MatrixField {
  GridSpec g;
  std::vector<double> m;  // m[(i*d + j) * N + idx]

  static MatrixField zero(const GridSpec& g) {
    g.validate();
    MatrixField f;
    f.g = g;
    f.m.assign(static_cast<std::size_t>(g.d) * g.d * static_cast<std::size_t>(g.npoints()), 0.0);
    return f;
  }
  double* entry(int i, int j) {
    return m.data() + static_cast<std::size_t>(i * g.d + j) * static_cast<std::size_t>(g.npoints());
  }
  const double* entry(int i, int j) const {
    return m.data() + static_cast<std::size_t>(i * g.d + j) * static_cast<std::size_t>(g.npoints());
  }
};

// Flat binary snapshot: three little-endian u64 (d, n, value count), then the
// values as little-endian IEEE doubles in storage order.
inline void write_binary(const std::string& path, const GridSpec& g,
                         const std::vector<double>& values) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw std::runtime_error("write_binary: cannot open " + path);
  const std::uint64_t hdr[3] = {static_cast<std::uint64_t>(g.d), static_cast<std::uint64_t>(g.n),
                                static_cast<std::uint64_t>(values.size())};
  std::fwrite(hdr, sizeof(std::uint64_t), 3, fp);
  std::fwrite(values.data(), sizeof(double), values.size(), fp);
  std::fclose(fp);
}

struct BinarySnapshot {
  std::uint64_t d = 0, n = 0;
  std::vector<double> values;
};

inline BinarySnapshot read_binary(const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) throw std::runtime_error("read_binary: cannot open " + path);
  BinarySnapshot snap;
  std::uint64_t hdr[3] = {0, 0, 0};
  if (std::fread(hdr, sizeof(std::uint64_t), 3, fp) != 3) {
    std::fclose(fp);
    throw std::runtime_error("read_binary: truncated header");
  }
  snap.d = hdr[0];
  snap.n = hdr[1];
  snap.values.resize(hdr[2]);
  const std::size_t got = std::fread(snap.values.data(), sizeof(double), snap.values.size(), fp);
  std::fclose(fp);
  if (got != snap.values.size()) throw std::runtime_error("read_binary: truncated payload");
  return snap;
}

}  // namespace kornlab::grid

namespace kornlab {
using grid::GridSpec;
using grid::MatrixField;
using grid::VectorField;
}  // namespace kornlab
