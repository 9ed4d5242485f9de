#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace kornlab {

// splitmix64 stream. Chosen over std::mt19937 so that draws are identical
// across standard libraries and so substreams can be forked cheaply; every
// randomized routine in the library takes an explicit seed.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0,1), 53-bit resolution
  double uniform() { return std::ldexp(static_cast<double>(next_u64() >> 11), -53); }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double sign() { return (next_u64() & 1u) ? 1.0 : -1.0; }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do { u1 = uniform(); } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.28318530717958647692 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // independent substream; forking does not advance this stream
  Rng fork(std::uint64_t tag) const {
    Rng r(state_ ^ (0x632be59bd9b4e019ull + 0x9e3779b97f4a7c15ull * (tag + 1)));
    r.next_u64();
    return r;
  }

  // uniform direction on the unit sphere in R^d (Gaussian normalization)
  std::vector<double> sphere_point(int d) {
    std::vector<double> x(static_cast<std::size_t>(d));
    double n2 = 0.0;
    do {
      n2 = 0.0;
      for (auto& xi : x) {
        xi = normal();
        n2 += xi * xi;
      }
    } while (n2 < 1e-24);
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& xi : x) xi *= inv;
    return x;
  }

private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace kornlab
