#include "texsrc/texture/edge.hpp"
#include "texsrc/errors.hpp"

#include <cmath>

namespace texsrc::texture {

std::vector<double> edge_histogram(const GrayImage& img, int bins) {
    if (bins < 2) throw ConfigError("edge_histogram: need at least 2 bins");
    if (img.width < 3 || img.height < 3) {
        throw ConfigError("edge_histogram: image must be at least 3x3");
    }

    std::vector<double> magnitudes;
    magnitudes.reserve(static_cast<std::size_t>(img.width - 2) * (img.height - 2));
    double max_mag = 0.0;
    for (int r = 1; r + 1 < img.height; ++r) {
        for (int c = 1; c + 1 < img.width; ++c) {
            const double gx = 0.5 * (img.at(r, c + 1) - img.at(r, c - 1));
            const double gy = 0.5 * (img.at(r + 1, c) - img.at(r - 1, c));
            const double mag = std::hypot(gx, gy);
            magnitudes.push_back(mag);
            max_mag = std::max(max_mag, mag);
        }
    }

    std::vector<double> hist(static_cast<std::size_t>(bins), 0.0);
    if (max_mag == 0.0) {
        hist[0] = 1.0;
        return hist;
    }
    for (double m : magnitudes) {
        int bin = static_cast<int>(m / max_mag * bins);
        if (bin >= bins) bin = bins - 1;
        ++hist[static_cast<std::size_t>(bin)];
    }
    const double n = static_cast<double>(magnitudes.size());
    for (double& h : hist) h /= n;
    return hist;
}

} // namespace texsrc::texture
