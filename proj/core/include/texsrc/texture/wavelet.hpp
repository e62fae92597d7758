#pragma once

#include "texsrc/image.hpp"

#include <vector>

namespace texsrc::texture {

enum class Boundary { Symmetric, Periodic };

struct WaveletConfig {
    int maxlevel = 3;
    Boundary boundary = Boundary::Symmetric;
};

/// One level of the undecimated (a-trous) Haar frame decomposition.
/// Naming: first letter is the filter along x (columns), second along y,
/// so GH is the x high-pass / y low-pass band.
struct WaveletLevel {
    Grid hh, hg, gh, gg;
};

struct WaveletFrames {
    std::vector<WaveletLevel> levels;
    const Grid& final_lowpass() const { return levels.back().hh; }
};

/// Undecimated Haar frame decomposition with h=(1/2,1/2), g=(1/2,-1/2),
/// filters upsampled by 2^(level-1) at each level. Every subband keeps the
/// input size; level L+1 is computed from level L's HH band.
WaveletFrames wavelet_frames(const GrayImage& img, const WaveletConfig& cfg);

} // namespace texsrc::texture
