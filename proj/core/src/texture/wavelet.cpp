#include "texsrc/texture/wavelet.hpp"
#include "texsrc/errors.hpp"

namespace texsrc::texture {
namespace {

int wrap_index(int i, int n, Boundary boundary) {
    if (boundary == Boundary::Periodic) {
        i %= n;
        return i < 0 ? i + n : i;
    }
    // half-sample symmetric reflection
    while (i < 0 || i >= n) {
        if (i < 0) i = -i - 1;
        if (i >= n) i = 2 * n - 1 - i;
    }
    return i;
}

// Two-tap Haar pair at spacing `step`: low = (a+b)/2, high = (a-b)/2 with
// b taken `step` samples back.
void filter_rows(const Grid& in, Grid& low, Grid& high, int step, Boundary boundary) {
    for (int r = 0; r < in.height; ++r) {
        for (int c = 0; c < in.width; ++c) {
            const double a = in.at(r, c);
            const double b = in.at(r, wrap_index(c - step, in.width, boundary));
            low.at(r, c) = 0.5 * (a + b);
            high.at(r, c) = 0.5 * (a - b);
        }
    }
}

void filter_cols(const Grid& in, Grid& low, Grid& high, int step, Boundary boundary) {
    for (int r = 0; r < in.height; ++r) {
        const int rb = wrap_index(r - step, in.height, boundary);
        for (int c = 0; c < in.width; ++c) {
            const double a = in.at(r, c);
            const double b = in.at(rb, c);
            low.at(r, c) = 0.5 * (a + b);
            high.at(r, c) = 0.5 * (a - b);
        }
    }
}

} // namespace

WaveletFrames wavelet_frames(const GrayImage& img, const WaveletConfig& cfg) {
    if (cfg.maxlevel < 1) throw ConfigError("wavelet_frames: maxlevel must be >= 1");
    const int kernel = 1 << cfg.maxlevel;
    if (kernel > img.width || kernel > img.height) {
        throw ConfigError("wavelet_frames: maxlevel " + std::to_string(cfg.maxlevel) +
                          " needs an image of at least " + std::to_string(kernel) + "x" +
                          std::to_string(kernel));
    }

    Grid current(img.width, img.height);
    current.values = img.pixels;

    WaveletFrames frames;
    frames.levels.reserve(static_cast<std::size_t>(cfg.maxlevel));

    for (int level = 1; level <= cfg.maxlevel; ++level) {
        const int step = 1 << (level - 1);
        Grid lx(img.width, img.height), hx(img.width, img.height);
        filter_rows(current, lx, hx, step, cfg.boundary);

        WaveletLevel bands{Grid(img.width, img.height), Grid(img.width, img.height),
                           Grid(img.width, img.height), Grid(img.width, img.height)};
        filter_cols(lx, bands.hh, bands.hg, step, cfg.boundary); // H_x H_y, H_x G_y
        filter_cols(hx, bands.gh, bands.gg, step, cfg.boundary); // G_x H_y, G_x G_y

        current = bands.hh;
        frames.levels.push_back(std::move(bands));
    }
    return frames;
}

} // namespace texsrc::texture
