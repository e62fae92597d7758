#include "texsrc/texture/spectral.hpp"
#include "texsrc/errors.hpp"

#include <cmath>
#include <numbers>

namespace texsrc::texture {

std::vector<std::complex<double>> dft_lowfreq(const GrayImage& img, int block) {
    if (img.width < block || img.height < block) {
        throw ConfigError("dft: image must be at least " + std::to_string(block) + "x" +
                          std::to_string(block));
    }
    const int M = img.height, N = img.width;

    // Column pass: partial(l, m) = sum_n f(m,n) e^{-j2pi nl/N}
    std::vector<std::complex<double>> partial(static_cast<std::size_t>(block) * M);
    for (int l = 0; l < block; ++l) {
        const double wl = -2.0 * std::numbers::pi * l / N;
        for (int m = 0; m < M; ++m) {
            std::complex<double> acc{0.0, 0.0};
            for (int n = 0; n < N; ++n) {
                acc += img.at(m, n) * std::polar(1.0, wl * n);
            }
            partial[static_cast<std::size_t>(l) * M + m] = acc;
        }
    }

    std::vector<std::complex<double>> out(static_cast<std::size_t>(block) * block);
    const double norm = 1.0 / (static_cast<double>(M) * N);
    for (int k = 0; k < block; ++k) {
        const double wk = -2.0 * std::numbers::pi * k / M;
        for (int l = 0; l < block; ++l) {
            std::complex<double> acc{0.0, 0.0};
            for (int m = 0; m < M; ++m) {
                acc += partial[static_cast<std::size_t>(l) * M + m] * std::polar(1.0, wk * m);
            }
            out[static_cast<std::size_t>(k) * block + l] = acc * norm;
        }
    }
    return out;
}

std::vector<double> dft_features(const GrayImage& img, int block) {
    const auto coeffs = dft_lowfreq(img, block);
    std::vector<double> mags(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) mags[i] = std::abs(coeffs[i]);
    return mags;
}

std::vector<double> dct_features(const GrayImage& img, int block) {
    if (img.width < block || img.height < block) {
        throw ConfigError("dct: image must be at least " + std::to_string(block) + "x" +
                          std::to_string(block));
    }
    const int M = img.height, N = img.width;

    // Column pass: partial(l, m) = sum_n f(m,n) cos(pi (2n+1) l / 2N)
    std::vector<double> partial(static_cast<std::size_t>(block) * M, 0.0);
    for (int l = 0; l < block; ++l) {
        for (int m = 0; m < M; ++m) {
            double acc = 0.0;
            for (int n = 0; n < N; ++n) {
                acc += img.at(m, n) * std::cos(std::numbers::pi * (2 * n + 1) * l / (2.0 * N));
            }
            partial[static_cast<std::size_t>(l) * M + m] = acc;
        }
    }

    std::vector<double> out(static_cast<std::size_t>(block) * block, 0.0);
    for (int k = 0; k < block; ++k) {
        const double ak = k == 0 ? std::sqrt(1.0 / M) : std::sqrt(2.0 / M);
        for (int l = 0; l < block; ++l) {
            const double al = l == 0 ? std::sqrt(1.0 / N) : std::sqrt(2.0 / N);
            double acc = 0.0;
            for (int m = 0; m < M; ++m) {
                acc += partial[static_cast<std::size_t>(l) * M + m] *
                       std::cos(std::numbers::pi * (2 * m + 1) * k / (2.0 * M));
            }
            out[static_cast<std::size_t>(k) * block + l] = ak * al * acc;
        }
    }
    return out;
}

} // namespace texsrc::texture
