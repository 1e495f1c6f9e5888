#include "assr/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace assr {
namespace fft {

namespace {

// The FFTW planner is not thread-safe; plan lookup/creation is serialized.
// fftw_execute_dft on distinct buffers is safe concurrently. Plans use
// FFTW_ESTIMATE so the transform is deterministic for a given build, and
// FFTW_UNALIGNED so cached plans run on any caller buffer.
std::mutex planner_mutex;

fftw_plan get_plan(size_t n, int sign) {
  static std::map<std::pair<size_t, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(planner_mutex);
  auto key = std::make_pair(n, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::complex<double>> tmp(n);
  fftw_plan p = fftw_plan_dft_1d(
      static_cast<int>(n), reinterpret_cast<fftw_complex*>(tmp.data()),
      reinterpret_cast<fftw_complex*>(tmp.data()), sign,
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache.emplace(key, p);
  return p;
}

}  // namespace

void forward(std::vector<std::complex<double>>& x) {
  if (x.empty()) return;
  fftw_plan p = get_plan(x.size(), FFTW_FORWARD);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(x.data()),
                   reinterpret_cast<fftw_complex*>(x.data()));
}

void inverse(std::vector<std::complex<double>>& x) {
  if (x.empty()) return;
  fftw_plan p = get_plan(x.size(), FFTW_BACKWARD);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(x.data()),
                   reinterpret_cast<fftw_complex*>(x.data()));
  const double scale = 1.0 / static_cast<double>(x.size());
  for (auto& v : x) v *= scale;
}

std::vector<std::complex<double>> spectrum(const std::vector<double>& x) {
  std::vector<std::complex<double>> c(x.begin(), x.end());
  forward(c);
  return c;
}

size_t next_pow2(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace fft
}  // namespace assr
