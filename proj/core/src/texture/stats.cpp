#include "texsrc/texture/stats.hpp"
#include "texsrc/errors.hpp"

#include <algorithm>
#include <cmath>

namespace texsrc::texture {

SubbandStats subband_stats(std::span<const double> values) {
    if (values.empty()) throw ConfigError("subband_stats: empty input");
    const double n = static_cast<double>(values.size());

    SubbandStats s;
    double lo = values[0], hi = values[0];
    for (double v : values) {
        s.mean += v;
        s.energy += v * v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    s.mean /= n;

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : values) {
        const double d = v - s.mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    s.variance = m2;

    if (m2 > 0.0) {
        s.skewness = m3 / std::pow(m2, 1.5);
        s.kurtosis = m4 / (m2 * m2);
    } else {
        s.degenerate = true; // constant input: standardized moments undefined
    }

    // Histogram entropy over the value range; a degenerate range puts all
    // mass in one bin and yields entropy 0.
    if (hi > lo) {
        std::vector<std::size_t> counts(kEntropyBins, 0);
        const double scale = kEntropyBins / (hi - lo);
        for (double v : values) {
            int bin = static_cast<int>((v - lo) * scale);
            if (bin >= kEntropyBins) bin = kEntropyBins - 1;
            ++counts[static_cast<std::size_t>(bin)];
        }
        double h = 0.0;
        for (std::size_t c : counts) {
            if (c == 0) continue;
            const double p = static_cast<double>(c) / n;
            h -= p * std::log(p);
        }
        s.entropy = h;
    }
    return s;
}

} // namespace texsrc::texture
