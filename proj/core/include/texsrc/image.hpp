#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace texsrc {

/// Real-valued 2-D raster without a range constraint (filter responses,
/// gradient maps, wavelet subbands). Row-major storage.
struct Grid {
    int width = 0;
    int height = 0;
    std::vector<double> values;

    Grid() = default;
    Grid(int w, int h, double fill = 0.0)
        : width(w), height(h), values(static_cast<std::size_t>(w) * h, fill) {}

    double at(int row, int col) const { return values[static_cast<std::size_t>(row) * width + col]; }
    double& at(int row, int col) { return values[static_cast<std::size_t>(row) * width + col]; }
    std::size_t size() const { return values.size(); }
};

/// Grayscale image with intensities normalized to [0,1]. Row-major storage:
/// pixel (row i, col j) lives at index i*width + j.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, double fill = 0.0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

    double at(int row, int col) const { return pixels[static_cast<std::size_t>(row) * width + col]; }
    double& at(int row, int col) { return pixels[static_cast<std::size_t>(row) * width + col]; }
    std::size_t size() const { return pixels.size(); }
};

/// Non-overlapping block decomposition of a source image. Blocks are
/// enumerated row-major over the grid of block origins; trailing pixels not
/// covered by a full block are discarded.
struct BlockGrid {
    int block_width = 0;
    int block_height = 0;
    int blocks_per_row = 0;
    int blocks_per_col = 0;
    std::vector<GrayImage> blocks;

    int nb() const { return static_cast<int>(blocks.size()); }
};

/// Loads an 8- or 16-bit grayscale PGM (P2/P5) or PNG. Intensities are
/// divided by the format's max value so the result lies in [0,1].
/// Color or paletted inputs are rejected, never silently converted.
GrayImage load_image(const std::string& path);

/// Writers used by the synthetic generator and tests.
void save_pgm(const GrayImage& img, const std::string& path, int max_value = 255);
void save_png(const GrayImage& img, const std::string& path, int bit_depth = 8);

/// Lexicographic (row-major) vectorization.
std::vector<double> to_vector(const GrayImage& img);

/// Inverse of to_vector: reshape a length w*h vector into an image.
GrayImage reshape(const std::vector<double>& v, int width, int height);

BlockGrid block_decompose(const GrayImage& img, int block_width, int block_height);

/// Block-averages the vectorized image over contiguous runs of length
/// round(1/keep_fraction); output length is round(pixel_count * keep_fraction).
/// keep_fraction = 1 returns to_vector(img) unchanged.
std::vector<double> downsample(const GrayImage& img, double keep_fraction);

/// Parses "1/20", "0.05" or "1" into a keep fraction.
double parse_fraction(const std::string& text);

} // namespace texsrc
