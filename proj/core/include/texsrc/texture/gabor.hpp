#pragma once

#include "texsrc/image.hpp"

#include <vector>

namespace texsrc::texture {

/// Gabor filter bank configuration. Wavelengths are given per scale;
/// the Gaussian envelope is sigma_factor * wavelength. Kernels are made
/// zero-mean so constant regions produce zero response.
struct GaborConfig {
    int scales = 4;
    int orientations = 6;
    std::vector<double> wavelengths;  // size = scales; defaults filled if empty
    double sigma_factor = 0.56;
    double aspect_gamma = 0.5;
    double phase_psi = 0.0;
    double truncate_radius = 2.5;     // kernel half-width in envelope sigmas

    std::vector<double> resolved_wavelengths() const;
    double sigma(int scale) const;
    double theta(int orientation) const;
};

struct GaborResponse {
    int scale = 0;
    int orientation = 0;
    Grid magnitude;
};

/// Complex Gabor responses (magnitude maps), scales x orientations filters.
/// Boundary handling is symmetric reflection. Throws if the largest kernel
/// does not fit inside the image.
std::vector<GaborResponse> gabor_bank(const GrayImage& img, const GaborConfig& cfg);

} // namespace texsrc::texture
