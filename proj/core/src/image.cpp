#include "texsrc/image.hpp"
#include "texsrc/errors.hpp"

#include <cmath>
#include <sstream>

namespace texsrc {

std::vector<double> to_vector(const GrayImage& img) {
    return img.pixels;
}

GrayImage reshape(const std::vector<double>& v, int width, int height) {
    if (width <= 0 || height <= 0 ||
        v.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw ConfigError("reshape: vector length does not match " + std::to_string(width) + "x" +
                          std::to_string(height));
    }
    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels = v;
    return img;
}

BlockGrid block_decompose(const GrayImage& img, int block_width, int block_height) {
    if (block_width <= 0 || block_height <= 0) {
        throw ConfigError("block_decompose: block size must be positive");
    }
    if (block_width > img.width || block_height > img.height) {
        throw ConfigError("block_decompose: block " + std::to_string(block_width) + "x" +
                          std::to_string(block_height) + " exceeds image " +
                          std::to_string(img.width) + "x" + std::to_string(img.height));
    }
    BlockGrid grid;
    grid.block_width = block_width;
    grid.block_height = block_height;
    grid.blocks_per_row = img.width / block_width;
    grid.blocks_per_col = img.height / block_height;
    grid.blocks.reserve(static_cast<std::size_t>(grid.blocks_per_row) * grid.blocks_per_col);

    for (int by = 0; by < grid.blocks_per_col; ++by) {
        for (int bx = 0; bx < grid.blocks_per_row; ++bx) {
            GrayImage block(block_width, block_height);
            for (int r = 0; r < block_height; ++r) {
                for (int c = 0; c < block_width; ++c) {
                    block.at(r, c) = img.at(by * block_height + r, bx * block_width + c);
                }
            }
            grid.blocks.push_back(std::move(block));
        }
    }
    return grid;
}

std::vector<double> downsample(const GrayImage& img, double keep_fraction) {
    if (!(keep_fraction > 0.0) || keep_fraction > 1.0) {
        throw ConfigError("downsample: keep_fraction must lie in (0,1], got " +
                          std::to_string(keep_fraction));
    }
    if (keep_fraction == 1.0) return to_vector(img);

    const std::size_t l = img.size();
    const std::size_t run = static_cast<std::size_t>(std::llround(1.0 / keep_fraction));
    std::size_t out_len = static_cast<std::size_t>(std::llround(static_cast<double>(l) * keep_fraction));
    if (out_len == 0) out_len = 1;

    std::vector<double> out(out_len, 0.0);
    for (std::size_t i = 0; i < out_len; ++i) {
        const std::size_t begin = i * run;
        std::size_t end = begin + run;
        if (end > l) end = l;
        if (begin >= end) { // ragged tail beyond the source: repeat last mean
            out[i] = out[i - 1];
            continue;
        }
        double sum = 0.0;
        for (std::size_t j = begin; j < end; ++j) sum += img.pixels[j];
        out[i] = sum / static_cast<double>(end - begin);
    }
    return out;
}

double parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            const double num = std::stod(text.substr(0, slash));
            const double den = std::stod(text.substr(slash + 1));
            if (den == 0.0) throw ConfigError("fraction with zero denominator: " + text);
            return num / den;
        }
        return std::stod(text);
    } catch (const std::invalid_argument&) {
        throw ConfigError("cannot parse fraction: '" + text + "'");
    }
}

} // namespace texsrc
