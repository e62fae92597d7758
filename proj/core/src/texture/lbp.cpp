#include "texsrc/texture/lbp.hpp"
#include "texsrc/errors.hpp"

namespace texsrc::texture {

std::array<double, 256> lbp_histogram(const GrayImage& img, bool inverted) {
    if (img.width < 3 || img.height < 3) {
        throw ConfigError("lbp_histogram: image must be at least 3x3");
    }

    // Clockwise from top-left; b1 ends up as the most significant bit.
    static constexpr int dr[8] = {-1, -1, -1, 0, 1, 1, 1, 0};
    static constexpr int dc[8] = {-1, 0, 1, 1, 1, 0, -1, -1};

    std::array<double, 256> hist{};
    std::size_t total = 0;
    for (int r = 1; r + 1 < img.height; ++r) {
        for (int c = 1; c + 1 < img.width; ++c) {
            const double center = img.at(r, c);
            unsigned code = 0;
            for (int i = 0; i < 8; ++i) {
                const bool bit_zero = center >= img.at(r + dr[i], c + dc[i]);
                const unsigned bit = (bit_zero != inverted) ? 0u : 1u;
                code = (code << 1) | bit;
            }
            ++hist[code];
            ++total;
        }
    }
    for (double& h : hist) h /= static_cast<double>(total);
    return hist;
}

} // namespace texsrc::texture
