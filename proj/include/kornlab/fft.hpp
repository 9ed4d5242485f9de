#pragma once

#include <fftw3.h>

#include <complex>
#include <map>
#include <mutex>
#include <vector>

#include "kornlab/grid.hpp"

namespace kornlab::fft {

// Thin FFTW wrapper: cached UNALIGNED/ESTIMATE plans per (d, n, sign), so a
// plan is built once and then executed on caller buffers via
// fftw_execute_dft, which is thread safe. Forward is unnormalized; inverse
// divides by the point count.

namespace detail {

class PlanCache {
public:
  static PlanCache& instance() {
    static PlanCache c;
    return c;
  }

  fftw_plan get(int d, int n, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    const auto key = std::make_tuple(d, n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    long npts = 1;
    for (int i = 0; i < d; ++i) npts *= n;
    std::vector<std::complex<double>> scratch(static_cast<std::size_t>(npts));
    int dims[3] = {n, n, n};
    fftw_plan p = fftw_plan_dft(d, dims, reinterpret_cast<fftw_complex*>(scratch.data()),
                                reinterpret_cast<fftw_complex*>(scratch.data()), sign,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, p);
    return p;
  }

private:
  PlanCache() = default;
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

}  // namespace detail

inline void transform(const grid::GridSpec& g, std::complex<double>* data, int sign) {
  fftw_plan p = detail::PlanCache::instance().get(g.d, g.n, sign);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data),
                   reinterpret_cast<fftw_complex*>(data));
  if (sign == FFTW_BACKWARD) {
    const double inv = 1.0 / static_cast<double>(g.npoints());
    const long npts = g.npoints();
    for (long i = 0; i < npts; ++i) data[i] *= inv;
  }
}

inline std::vector<std::complex<double>> forward(const grid::GridSpec& g, const double* real_data) {
  const long npts = g.npoints();
  std::vector<std::complex<double>> out(static_cast<std::size_t>(npts));
  for (long i = 0; i < npts; ++i) out[static_cast<std::size_t>(i)] = real_data[i];
  transform(g, out.data(), FFTW_FORWARD);
  return out;
}

inline void inverse_real(const grid::GridSpec& g, std::vector<std::complex<double>> spectrum,
                         double* real_out) {
  transform(g, spectrum.data(), FFTW_BACKWARD);
  const long npts = g.npoints();
  for (long i = 0; i < npts; ++i) real_out[i] = spectrum[static_cast<std::size_t>(i)].real();
}

// integer frequency of index j on an n-point axis, in [-n/2, n/2)
inline int freq(int j, int n) { return j < n / 2 ? j : j - n; }

}  // namespace kornlab::fft
