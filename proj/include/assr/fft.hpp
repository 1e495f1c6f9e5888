#pragma once

#include <complex>
#include <vector>

namespace assr {
namespace fft {

/// In-place complex DFT/IDFT of arbitrary length (FFTW backend).
/// The inverse is normalized by 1/N. Plans are cached internally;
/// both calls are safe from multiple threads.
void forward(std::vector<std::complex<double>>& x);
void inverse(std::vector<std::complex<double>>& x);

/// Complex spectrum of a real series (length-N complex DFT).
std::vector<std::complex<double>> spectrum(const std::vector<double>& x);

/// Smallest power of two >= n.
size_t next_pow2(size_t n);

}  // namespace fft
}  // namespace assr
