#include "texsrc/texture/gabor.hpp"
#include "texsrc/errors.hpp"

#include <cmath>
#include <numbers>

namespace texsrc::texture {

std::vector<double> GaborConfig::resolved_wavelengths() const {
    if (!wavelengths.empty()) {
        if (static_cast<int>(wavelengths.size()) != scales) {
            throw ConfigError("gabor: wavelengths list must have one entry per scale");
        }
        return wavelengths;
    }
    // Half-octave ladder starting at 4 px.
    std::vector<double> w(static_cast<std::size_t>(scales));
    for (int s = 0; s < scales; ++s) w[static_cast<std::size_t>(s)] = 4.0 * std::pow(std::numbers::sqrt2, s);
    return w;
}

double GaborConfig::sigma(int scale) const {
    return sigma_factor * resolved_wavelengths()[static_cast<std::size_t>(scale)];
}

double GaborConfig::theta(int orientation) const {
    return std::numbers::pi * orientation / orientations;
}

namespace {

struct Kernel {
    int radius = 0;
    std::vector<double> real_part;
    std::vector<double> imag_part;
};

int reflect(int i, int n) {
    while (i < 0 || i >= n) {
        if (i < 0) i = -i - 1;
        if (i >= n) i = 2 * n - 1 - i;
    }
    return i;
}

Kernel make_kernel(double lambda, double theta, double psi, double sigma, double gamma, double truncate) {
    // Envelope extent is sigma along w and sigma/gamma along v.
    const double extent = sigma / std::min(1.0, gamma);
    Kernel k;
    k.radius = std::max(1, static_cast<int>(std::ceil(truncate * extent)));
    const int n = 2 * k.radius + 1;
    k.real_part.assign(static_cast<std::size_t>(n) * n, 0.0);
    k.imag_part.assign(static_cast<std::size_t>(n) * n, 0.0);

    const double ct = std::cos(theta), st = std::sin(theta);
    double real_sum = 0.0, imag_sum = 0.0;
    for (int y = -k.radius; y <= k.radius; ++y) {
        for (int x = -k.radius; x <= k.radius; ++x) {
            const double w = x * ct + y * st;
            const double v = -x * st + y * ct;
            const double envelope = std::exp(-(w * w + gamma * gamma * v * v) / (2.0 * sigma * sigma));
            const double phase = 2.0 * std::numbers::pi * w / lambda + psi;
            const std::size_t idx =
                static_cast<std::size_t>(y + k.radius) * n + static_cast<std::size_t>(x + k.radius);
            k.real_part[idx] = envelope * std::cos(phase);
            k.imag_part[idx] = envelope * std::sin(phase);
            real_sum += k.real_part[idx];
            imag_sum += k.imag_part[idx];
        }
    }
    // Remove the DC component so constant input maps to zero response.
    const double cells = static_cast<double>(n) * n;
    const double real_dc = real_sum / cells;
    const double imag_dc = imag_sum / cells;
    for (std::size_t i = 0; i < k.real_part.size(); ++i) {
        k.real_part[i] -= real_dc;
        k.imag_part[i] -= imag_dc;
    }
    return k;
}

Grid convolve_magnitude(const GrayImage& img, const Kernel& k) {
    Grid out(img.width, img.height);
    const int n = 2 * k.radius + 1;
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            double re = 0.0, im = 0.0;
            for (int dy = -k.radius; dy <= k.radius; ++dy) {
                const int rr = reflect(r + dy, img.height);
                const std::size_t krow = static_cast<std::size_t>(dy + k.radius) * n;
                for (int dx = -k.radius; dx <= k.radius; ++dx) {
                    const int cc = reflect(c + dx, img.width);
                    const double p = img.at(rr, cc);
                    re += p * k.real_part[krow + static_cast<std::size_t>(dx + k.radius)];
                    im += p * k.imag_part[krow + static_cast<std::size_t>(dx + k.radius)];
                }
            }
            out.at(r, c) = std::hypot(re, im);
        }
    }
    return out;
}

} // namespace

std::vector<GaborResponse> gabor_bank(const GrayImage& img, const GaborConfig& cfg) {
    if (cfg.scales < 1 || cfg.orientations < 1) {
        throw ConfigError("gabor: scales and orientations must be >= 1");
    }
    if (!(cfg.sigma_factor > 0.0) || !(cfg.aspect_gamma > 0.0)) {
        throw ConfigError("gabor: sigma and gamma must be positive");
    }

    const auto lambdas = cfg.resolved_wavelengths();
    std::vector<GaborResponse> responses;
    responses.reserve(static_cast<std::size_t>(cfg.scales) * cfg.orientations);

    for (int s = 0; s < cfg.scales; ++s) {
        const double sigma = cfg.sigma_factor * lambdas[static_cast<std::size_t>(s)];
        for (int o = 0; o < cfg.orientations; ++o) {
            const Kernel k = make_kernel(lambdas[static_cast<std::size_t>(s)], cfg.theta(o),
                                         cfg.phase_psi, sigma, cfg.aspect_gamma, cfg.truncate_radius);
            if (2 * k.radius + 1 > img.width || 2 * k.radius + 1 > img.height) {
                throw ConfigError("gabor: kernel of scale " + std::to_string(s) +
                                  " (size " + std::to_string(2 * k.radius + 1) +
                                  ") exceeds the image");
            }
            GaborResponse resp;
            resp.scale = s;
            resp.orientation = o;
            resp.magnitude = convolve_magnitude(img, k);
            responses.push_back(std::move(resp));
        }
    }
    return responses;
}

} // namespace texsrc::texture
