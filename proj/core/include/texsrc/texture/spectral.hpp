#pragma once

#include "texsrc/image.hpp"

#include <complex>
#include <vector>

namespace texsrc::texture {

/// The `block x block` lowest-frequency coefficients of the 2-D DFT with the
/// 1/(MN) normalization, evaluated exactly by separable partial sums.
/// F(k,l) = (1/MN) sum_{m,n} f(m,n) exp(-j 2 pi (mk/M + nl/N)).
std::vector<std::complex<double>> dft_lowfreq(const GrayImage& img, int block = 8);

/// Magnitudes of dft_lowfreq, row-major over (k,l).
std::vector<double> dft_features(const GrayImage& img, int block = 8);

/// The `block x block` lowest-frequency coefficients of the orthonormal
/// DCT-II (signed). Orthonormal scaling is used for all (k,l), including the
/// mixed k=0/l>=1 cases.
std::vector<double> dct_features(const GrayImage& img, int block = 8);

} // namespace texsrc::texture
