#include "texsrc/texture/laws.hpp"
#include "texsrc/errors.hpp"

#include <array>
#include <cmath>

namespace texsrc::texture {
namespace {

constexpr std::array<std::array<double, 5>, 5> kVectors = {{
    {1, 4, 6, 4, 1},    // L5 level
    {-1, -2, 0, 2, 1},  // E5 edge
    {-1, 0, 2, 0, -1},  // S5 spot
    {-1, 2, 0, -2, 1},  // W5 wave
    {1, -4, 6, -4, 1},  // R5 ripple
}};
constexpr std::array<const char*, 5> kNames = {"L5", "E5", "S5", "W5", "R5"};

int reflect(int i, int n) {
    while (i < 0 || i >= n) {
        if (i < 0) i = -i - 1;
        if (i >= n) i = 2 * n - 1 - i;
    }
    return i;
}

// Separable 5x5 convolution: vertical vector over rows, horizontal over cols.
Grid convolve_separable(const Grid& in, const std::array<double, 5>& vert,
                        const std::array<double, 5>& horz) {
    Grid tmp(in.width, in.height);
    for (int r = 0; r < in.height; ++r) {
        for (int c = 0; c < in.width; ++c) {
            double acc = 0.0;
            for (int t = -2; t <= 2; ++t) {
                acc += horz[static_cast<std::size_t>(t + 2)] * in.at(r, reflect(c + t, in.width));
            }
            tmp.at(r, c) = acc;
        }
    }
    Grid out(in.width, in.height);
    for (int r = 0; r < in.height; ++r) {
        for (int c = 0; c < in.width; ++c) {
            double acc = 0.0;
            for (int t = -2; t <= 2; ++t) {
                acc += vert[static_cast<std::size_t>(t + 2)] * tmp.at(reflect(r + t, in.height), c);
            }
            out.at(r, c) = acc;
        }
    }
    return out;
}

} // namespace

std::vector<LawsComponent> laws_features(const GrayImage& img) {
    if (img.width < 5 || img.height < 5) {
        throw ConfigError("laws_features: image must be at least 5x5");
    }

    Grid source(img.width, img.height);
    source.values = img.pixels;

    // Windowed intensity level: L5L5 response / 256 (the mask's weight sum
    // squared) approximates the local mean. Floored to avoid division blowup
    // in black regions.
    const Grid level = convolve_separable(source, kVectors[0], kVectors[0]);
    Grid normalized(img.width, img.height);
    constexpr double kLevelFloor = 1e-6;
    for (std::size_t i = 0; i < source.values.size(); ++i) {
        const double local_mean = level.values[i] / 256.0;
        normalized.values[i] = source.values[i] / std::max(local_mean, kLevelFloor);
    }

    std::vector<LawsComponent> components;
    components.reserve(24);
    for (int v = 0; v < 5; ++v) {
        for (int h = 0; h < 5; ++h) {
            if (v == 0 && h == 0) continue; // L5L5 is the normalization mask
            const Grid response = convolve_separable(normalized, kVectors[static_cast<std::size_t>(v)],
                                                     kVectors[static_cast<std::size_t>(h)]);
            LawsComponent comp;
            comp.name = std::string(kNames[static_cast<std::size_t>(v)]) + kNames[static_cast<std::size_t>(h)];
            comp.stats = subband_stats(response.values);
            components.push_back(std::move(comp));
        }
    }
    return components;
}

} // namespace texsrc::texture
