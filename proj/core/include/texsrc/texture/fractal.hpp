#pragma once

#include "texsrc/image.hpp"

#include <cstdint>
#include <vector>

namespace texsrc::texture {

/// Binary occupancy raster used for box counting.
struct BinarySet {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> mask; // row-major, nonzero = occupied

    BinarySet() = default;
    BinarySet(int w, int h) : width(w), height(h), mask(static_cast<std::size_t>(w) * h, 0) {}
    bool at(int row, int col) const { return mask[static_cast<std::size_t>(row) * width + col] != 0; }
    void set(int row, int col, bool v = true) { mask[static_cast<std::size_t>(row) * width + col] = v ? 1 : 0; }
    std::size_t occupied() const;
};

struct BoxCountResult {
    double dimension = 0.0;
    double fit_residual = 0.0; // RMS residual of the log-log regression
    std::vector<int> box_sizes;
    std::vector<std::size_t> box_counts;
};

/// Least-squares slope of log N(eps) against -log eps over the dyadic ladder
/// {1, 2, 4, ..., min(W,H)/2}. Requires >= 2 occupied cells and >= 3 ladder
/// points, otherwise throws.
BoxCountResult box_count_dimension(const BinarySet& points);

struct MultiOtsuResult {
    std::vector<double> thresholds;   // ascending, size = sets-1 when non-degenerate
    std::vector<BinarySet> sets;      // intensity bands, dark to bright
    bool degenerate = false;          // fewer distinct values than requested sets
};

/// Splits the intensity histogram into `sets` bands by maximizing
/// between-class variance: exhaustive search for up to 3 thresholds,
/// Lloyd-style iterative refinement above that.
MultiOtsuResult multi_otsu(const GrayImage& img, int sets = 8);

struct FractalFeatures {
    // Per multi-Otsu set: box-count dimension, occupied fraction, mean source
    // intensity over the set. Degenerate sets carry zeros and a flag.
    std::vector<double> dimension;
    std::vector<double> area;
    std::vector<double> mean_intensity;
    std::vector<bool> set_degenerate;
    bool degenerate = false;
};

FractalFeatures fractal_features(const GrayImage& img, int sets = 8);

} // namespace texsrc::texture
