#pragma once

#include <span>
#include <vector>

namespace texsrc::texture {

/// Distribution signatures of a subband or filter response.
/// Moments are population moments; entropy is -sum p ln p over a 64-bin
/// equal-width histogram spanning [min, max] of the values. Zero-variance
/// input reports skewness and kurtosis as 0 with the degenerate flag set.
struct SubbandStats {
    double mean = 0.0;
    double energy = 0.0;   // sum of squared elements
    double variance = 0.0;
    double entropy = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
    bool degenerate = false;
};

inline constexpr int kEntropyBins = 64;

SubbandStats subband_stats(std::span<const double> values);

} // namespace texsrc::texture
