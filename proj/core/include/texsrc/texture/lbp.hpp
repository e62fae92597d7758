#pragma once

#include "texsrc/image.hpp"

#include <array>

namespace texsrc::texture {

/// 256-bin local binary pattern histogram, normalized to sum 1.
/// Bits b1..b8 walk the 8-neighborhood clockwise from the top-left corner,
/// b1 most significant. With inverted=false a bit is 0 when the center is
/// >= the neighbor (so a constant image maps entirely to bin 0); the
/// inverted switch selects the conventional opposite encoding.
std::array<double, 256> lbp_histogram(const GrayImage& img, bool inverted = false);

} // namespace texsrc::texture
