#pragma once

#include "texsrc/image.hpp"
#include "texsrc/texture/stats.hpp"

#include <string>
#include <vector>

namespace texsrc::texture {

/// One of the 24 non-level Laws 5x5 mask responses, summarized.
struct LawsComponent {
    std::string name; // e.g. "E5L5" (vertical kernel x horizontal kernel)
    SubbandStats stats;
};

/// Laws texture energy: the image is first normalized by the windowed L5L5
/// intensity level, then filtered with the remaining 24 separable 5x5 masks.
std::vector<LawsComponent> laws_features(const GrayImage& img);

} // namespace texsrc::texture
