#pragma once

#include "texsrc/image.hpp"

#include <vector>

namespace texsrc::texture {

/// L-bin normalized histogram of the central-difference gradient magnitude
/// over interior pixels, bins spanning [0, max magnitude]. Sums to 1.
/// A zero-gradient image puts all mass in bin 0.
std::vector<double> edge_histogram(const GrayImage& img, int bins);

} // namespace texsrc::texture
