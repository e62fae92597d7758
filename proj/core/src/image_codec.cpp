#include "texsrc/image.hpp"
#include "texsrc/errors.hpp"

#include <zlib.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace texsrc {
namespace {

constexpr std::array<unsigned char, 8> kPngSignature = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};

std::vector<unsigned char> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open image file: " + path);
    std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (data.empty()) throw DataError("empty image file: " + path);
    return data;
}

// ---------------------------------------------------------------------------
// PGM
// ---------------------------------------------------------------------------

// Reads the next header token, skipping whitespace and '#' comments.
std::string pgm_token(const std::vector<unsigned char>& d, std::size_t& pos, const std::string& path) {
    while (pos < d.size()) {
        if (std::isspace(d[pos])) {
            ++pos;
        } else if (d[pos] == '#') {
            while (pos < d.size() && d[pos] != '\n') ++pos;
        } else {
            break;
        }
    }
    std::size_t start = pos;
    while (pos < d.size() && !std::isspace(d[pos]) && d[pos] != '#') ++pos;
    if (start == pos) throw DataError("truncated PGM header: " + path);
    return std::string(d.begin() + start, d.begin() + pos);
}

GrayImage load_pgm(const std::vector<unsigned char>& d, const std::string& path) {
    std::size_t pos = 0;
    const std::string magic = pgm_token(d, pos, path);
    const bool binary = magic == "P5";
    if (!binary && magic != "P2") {
        if (magic == "P3" || magic == "P6") {
            throw DataError("color PPM not supported (grayscale input required): " + path);
        }
        throw DataError("unsupported netpbm format '" + magic + "': " + path);
    }

    long width = 0, height = 0, maxval = 0;
    try {
        width = std::stol(pgm_token(d, pos, path));
        height = std::stol(pgm_token(d, pos, path));
        maxval = std::stol(pgm_token(d, pos, path));
    } catch (const std::exception&) {
        throw DataError("malformed PGM header: " + path);
    }
    if (width <= 0 || height <= 0) throw DataError("invalid PGM dimensions: " + path);
    if (maxval <= 0 || maxval > 65535) {
        throw DataError("unsupported PGM max value " + std::to_string(maxval) + ": " + path);
    }

    GrayImage img(static_cast<int>(width), static_cast<int>(height));
    const std::size_t n = img.size();
    const double scale = 1.0 / static_cast<double>(maxval);

    if (binary) {
        ++pos; // single whitespace after maxval
        const int bytes = maxval > 255 ? 2 : 1;
        if (d.size() - pos < n * bytes) throw DataError("truncated PGM pixel data: " + path);
        for (std::size_t i = 0; i < n; ++i) {
            unsigned v = d[pos + i * bytes];
            if (bytes == 2) v = (v << 8) | d[pos + i * bytes + 1]; // big-endian per spec
            if (v > static_cast<unsigned>(maxval)) throw DataError("PGM sample exceeds max value: " + path);
            img.pixels[i] = v * scale;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            long v = 0;
            try {
                v = std::stol(pgm_token(d, pos, path));
            } catch (const std::exception&) {
                throw DataError("truncated PGM pixel data: " + path);
            }
            if (v < 0 || v > maxval) throw DataError("PGM sample out of range: " + path);
            img.pixels[i] = v * scale;
        }
    }
    return img;
}

// ---------------------------------------------------------------------------
// PNG (grayscale, non-interlaced, bit depth 8 or 16)
// ---------------------------------------------------------------------------

uint32_t be32(const unsigned char* p) {
    return (uint32_t(p[0]) << 24) | (uint32_t(p[1]) << 16) | (uint32_t(p[2]) << 8) | uint32_t(p[3]);
}

std::vector<unsigned char> zlib_inflate(const std::vector<unsigned char>& in, std::size_t expected,
                                        const std::string& path) {
    std::vector<unsigned char> out(expected);
    z_stream zs{};
    if (inflateInit(&zs) != Z_OK) throw DataError("zlib init failed: " + path);
    zs.next_in = const_cast<Bytef*>(in.data());
    zs.avail_in = static_cast<uInt>(in.size());
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    const int rc = inflate(&zs, Z_FINISH);
    inflateEnd(&zs);
    if (rc != Z_STREAM_END || zs.total_out != expected) {
        throw DataError("corrupt PNG pixel stream: " + path);
    }
    return out;
}

int paeth(int a, int b, int c) {
    const int p = a + b - c;
    const int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    if (pb <= pc) return b;
    return c;
}

GrayImage load_png(const std::vector<unsigned char>& d, const std::string& path) {
    if (d.size() < 8 + 25) throw DataError("truncated PNG: " + path);

    std::size_t pos = 8;
    uint32_t width = 0, height = 0;
    int depth = 0, color_type = -1, interlace = 0;
    std::vector<unsigned char> idat;
    bool saw_ihdr = false, saw_iend = false;

    while (pos + 8 <= d.size() && !saw_iend) {
        const uint32_t len = be32(&d[pos]);
        if (pos + 12 + len > d.size()) throw DataError("truncated PNG chunk: " + path);
        const std::string type(reinterpret_cast<const char*>(&d[pos + 4]), 4);
        const unsigned char* payload = &d[pos + 8];

        const uint32_t crc_stored = be32(&d[pos + 8 + len]);
        uint32_t crc = crc32(0L, Z_NULL, 0);
        crc = crc32(crc, &d[pos + 4], len + 4);
        if (crc != crc_stored) throw DataError("corrupt PNG chunk (" + type + "): " + path);

        if (type == "IHDR") {
            if (len != 13) throw DataError("malformed IHDR: " + path);
            width = be32(payload);
            height = be32(payload + 4);
            depth = payload[8];
            color_type = payload[9];
            interlace = payload[12];
            saw_ihdr = true;
        } else if (type == "IDAT") {
            idat.insert(idat.end(), payload, payload + len);
        } else if (type == "IEND") {
            saw_iend = true;
        }
        pos += 12 + len;
    }

    if (!saw_ihdr || width == 0 || height == 0) throw DataError("malformed PNG header: " + path);
    if (color_type == 2 || color_type == 3 || color_type == 6) {
        throw DataError("color PNG not supported (grayscale input required): " + path);
    }
    if (color_type == 4) throw DataError("grayscale+alpha PNG not supported: " + path);
    if (color_type != 0) throw DataError("unsupported PNG color type: " + path);
    if (depth != 8 && depth != 16) {
        throw DataError("unsupported PNG bit depth " + std::to_string(depth) + " (need 8 or 16): " + path);
    }
    if (interlace != 0) throw DataError("interlaced PNG not supported: " + path);
    if (idat.empty()) throw DataError("PNG has no pixel data: " + path);

    const std::size_t bpp = depth / 8;
    const std::size_t stride = static_cast<std::size_t>(width) * bpp;
    const std::size_t raw_size = (stride + 1) * height;
    std::vector<unsigned char> raw = zlib_inflate(idat, raw_size, path);

    GrayImage img(static_cast<int>(width), static_cast<int>(height));
    const double scale = depth == 8 ? 1.0 / 255.0 : 1.0 / 65535.0;
    std::vector<unsigned char> prev(stride, 0);

    for (uint32_t row = 0; row < height; ++row) {
        unsigned char* line = &raw[row * (stride + 1)];
        const int filter = line[0];
        unsigned char* cur = line + 1;
        switch (filter) {
            case 0:
                break;
            case 1: // Sub
                for (std::size_t i = bpp; i < stride; ++i) cur[i] = static_cast<unsigned char>(cur[i] + cur[i - bpp]);
                break;
            case 2: // Up
                for (std::size_t i = 0; i < stride; ++i) cur[i] = static_cast<unsigned char>(cur[i] + prev[i]);
                break;
            case 3: // Average
                for (std::size_t i = 0; i < stride; ++i) {
                    const int left = i >= bpp ? cur[i - bpp] : 0;
                    cur[i] = static_cast<unsigned char>(cur[i] + ((left + prev[i]) >> 1));
                }
                break;
            case 4: // Paeth
                for (std::size_t i = 0; i < stride; ++i) {
                    const int left = i >= bpp ? cur[i - bpp] : 0;
                    const int upleft = i >= bpp ? prev[i - bpp] : 0;
                    cur[i] = static_cast<unsigned char>(cur[i] + paeth(left, prev[i], upleft));
                }
                break;
            default:
                throw DataError("invalid PNG filter type: " + path);
        }
        std::memcpy(prev.data(), cur, stride);

        for (uint32_t col = 0; col < width; ++col) {
            unsigned v = cur[col * bpp];
            if (bpp == 2) v = (v << 8) | cur[col * bpp + 1]; // network byte order
            img.at(static_cast<int>(row), static_cast<int>(col)) = v * scale;
        }
    }
    return img;
}

void put_be32(std::vector<unsigned char>& out, uint32_t v) {
    out.push_back(static_cast<unsigned char>(v >> 24));
    out.push_back(static_cast<unsigned char>(v >> 16));
    out.push_back(static_cast<unsigned char>(v >> 8));
    out.push_back(static_cast<unsigned char>(v));
}

void write_chunk(std::ofstream& out, const char type[4], const std::vector<unsigned char>& payload) {
    std::vector<unsigned char> bytes;
    put_be32(bytes, static_cast<uint32_t>(payload.size()));
    bytes.insert(bytes.end(), type, type + 4);
    bytes.insert(bytes.end(), payload.begin(), payload.end());
    uint32_t crc = crc32(0L, Z_NULL, 0);
    crc = crc32(crc, bytes.data() + 4, static_cast<uInt>(bytes.size() - 4));
    put_be32(bytes, crc);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

} // namespace

GrayImage load_image(const std::string& path) {
    const auto data = read_file(path);
    if (data.size() >= kPngSignature.size() &&
        std::equal(kPngSignature.begin(), kPngSignature.end(), data.begin())) {
        return load_png(data, path);
    }
    if (data.size() >= 2 && data[0] == 'P') {
        return load_pgm(data, path);
    }
    throw DataError("unrecognized image format (need PGM or PNG): " + path);
}

void save_pgm(const GrayImage& img, const std::string& path, int max_value) {
    if (max_value != 255 && max_value != 65535) {
        throw ConfigError("save_pgm: max value must be 255 or 65535");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write image file: " + path);
    out << "P5\n" << img.width << " " << img.height << "\n" << max_value << "\n";
    for (double p : img.pixels) {
        const double clamped = p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
        const unsigned v = static_cast<unsigned>(std::lround(clamped * max_value));
        if (max_value > 255) out.put(static_cast<char>(v >> 8));
        out.put(static_cast<char>(v & 0xff));
    }
    if (!out) throw DataError("write failed: " + path);
}

void save_png(const GrayImage& img, const std::string& path, int bit_depth) {
    if (bit_depth != 8 && bit_depth != 16) throw ConfigError("save_png: bit depth must be 8 or 16");
    const std::size_t bpp = bit_depth / 8;
    const std::size_t stride = static_cast<std::size_t>(img.width) * bpp;
    const unsigned maxv = bit_depth == 8 ? 255u : 65535u;

    std::vector<unsigned char> raw;
    raw.reserve((stride + 1) * img.height);
    for (int r = 0; r < img.height; ++r) {
        raw.push_back(0); // filter: none
        for (int c = 0; c < img.width; ++c) {
            const double p = img.at(r, c);
            const double clamped = p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
            const unsigned v = static_cast<unsigned>(std::lround(clamped * maxv));
            if (bpp == 2) raw.push_back(static_cast<unsigned char>(v >> 8));
            raw.push_back(static_cast<unsigned char>(v & 0xff));
        }
    }

    uLongf bound = compressBound(static_cast<uLong>(raw.size()));
    std::vector<unsigned char> compressed(bound);
    if (compress2(compressed.data(), &bound, raw.data(), static_cast<uLong>(raw.size()),
                  Z_DEFAULT_COMPRESSION) != Z_OK) {
        throw DataError("zlib compression failed: " + path);
    }
    compressed.resize(bound);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write image file: " + path);
    out.write(reinterpret_cast<const char*>(kPngSignature.data()), kPngSignature.size());

    std::vector<unsigned char> ihdr;
    put_be32(ihdr, static_cast<uint32_t>(img.width));
    put_be32(ihdr, static_cast<uint32_t>(img.height));
    ihdr.push_back(static_cast<unsigned char>(bit_depth));
    ihdr.push_back(0); // grayscale
    ihdr.push_back(0); // compression
    ihdr.push_back(0); // filter
    ihdr.push_back(0); // no interlace
    write_chunk(out, "IHDR", ihdr);
    write_chunk(out, "IDAT", compressed);
    write_chunk(out, "IEND", {});
    if (!out) throw DataError("write failed: " + path);
}

} // namespace texsrc
