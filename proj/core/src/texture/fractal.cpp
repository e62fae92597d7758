#include "texsrc/texture/fractal.hpp"
#include "texsrc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace texsrc::texture {

std::size_t BinarySet::occupied() const {
    std::size_t n = 0;
    for (auto v : mask) n += v != 0;
    return n;
}

BoxCountResult box_count_dimension(const BinarySet& points) {
    if (points.occupied() < 2) throw DataError("box_count_dimension: fewer than 2 occupied cells");

    const int limit = std::min(points.width, points.height) / 2;
    std::vector<int> ladder;
    for (int eps = 1; eps <= limit; eps *= 2) ladder.push_back(eps);
    if (ladder.size() < 3) {
        throw DataError("box_count_dimension: only " + std::to_string(ladder.size()) +
                        " ladder points (need >= 3)");
    }

    BoxCountResult result;
    result.box_sizes = ladder;
    for (int eps : ladder) {
        const int cols = (points.width + eps - 1) / eps;
        const int rows = (points.height + eps - 1) / eps;
        std::vector<std::uint8_t> hit(static_cast<std::size_t>(cols) * rows, 0);
        for (int r = 0; r < points.height; ++r) {
            for (int c = 0; c < points.width; ++c) {
                if (points.at(r, c)) hit[static_cast<std::size_t>(r / eps) * cols + c / eps] = 1;
            }
        }
        std::size_t n = 0;
        for (auto v : hit) n += v;
        result.box_counts.push_back(n);
    }

    // Slope of log N vs -log eps.
    const std::size_t k = ladder.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const double x = -std::log(static_cast<double>(ladder[i]));
        const double y = std::log(static_cast<double>(result.box_counts[i]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(k);
    const double denom = n * sxx - sx * sx;
    result.dimension = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - result.dimension * sx) / n;

    double rss = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const double x = -std::log(static_cast<double>(ladder[i]));
        const double y = std::log(static_cast<double>(result.box_counts[i]));
        const double e = y - (intercept + result.dimension * x);
        rss += e * e;
    }
    result.fit_residual = std::sqrt(rss / n);
    return result;
}

namespace {

constexpr int kHistBins = 256;

std::vector<double> intensity_histogram(const GrayImage& img) {
    std::vector<double> h(kHistBins, 0.0);
    for (double p : img.pixels) {
        int bin = static_cast<int>(p * kHistBins);
        if (bin >= kHistBins) bin = kHistBins - 1;
        if (bin < 0) bin = 0;
        ++h[static_cast<std::size_t>(bin)];
    }
    const double n = static_cast<double>(img.size());
    for (double& v : h) v /= n;
    return h;
}

struct HistPrefix {
    std::vector<double> w;  // cumulative probability
    std::vector<double> wm; // cumulative probability * bin value

    explicit HistPrefix(const std::vector<double>& h) : w(h.size() + 1, 0.0), wm(h.size() + 1, 0.0) {
        for (std::size_t i = 0; i < h.size(); ++i) {
            const double value = (static_cast<double>(i) + 0.5) / kHistBins;
            w[i + 1] = w[i] + h[i];
            wm[i + 1] = wm[i] + h[i] * value;
        }
    }
    // Between-class variance contribution of histogram band [lo, hi).
    double band_score(int lo, int hi) const {
        const double weight = w[hi] - w[lo];
        if (weight <= 0.0) return 0.0;
        const double mass = wm[hi] - wm[lo];
        return mass * mass / weight;
    }
};

// Exhaustive maximization of between-class variance for <= 3 thresholds.
std::vector<int> otsu_exhaustive(const HistPrefix& pre, int nthresh) {
    std::vector<int> best(nthresh, 0);
    double best_score = -1.0;
    std::vector<int> cut(nthresh, 0);

    auto evaluate = [&]() {
        double score = pre.band_score(0, cut[0]);
        for (int i = 1; i < nthresh; ++i) score += pre.band_score(cut[i - 1], cut[i]);
        score += pre.band_score(cut[nthresh - 1], kHistBins);
        if (score > best_score) {
            best_score = score;
            best = cut;
        }
    };

    if (nthresh == 1) {
        for (cut[0] = 1; cut[0] < kHistBins; ++cut[0]) evaluate();
    } else if (nthresh == 2) {
        for (cut[0] = 1; cut[0] < kHistBins - 1; ++cut[0])
            for (cut[1] = cut[0] + 1; cut[1] < kHistBins; ++cut[1]) evaluate();
    } else {
        for (cut[0] = 1; cut[0] < kHistBins - 2; ++cut[0])
            for (cut[1] = cut[0] + 1; cut[1] < kHistBins - 1; ++cut[1])
                for (cut[2] = cut[1] + 1; cut[2] < kHistBins; ++cut[2]) evaluate();
    }
    return best;
}

// Lloyd-style refinement: alternate band means and midpoints until the cut
// positions stop moving. Initialized at equal-frequency quantiles.
std::vector<int> otsu_lloyd(const HistPrefix& pre, int nthresh) {
    std::vector<int> cut(nthresh);
    const double total = pre.w[kHistBins];
    int c = 0;
    for (int i = 0; i < nthresh; ++i) {
        const double target = total * (i + 1) / (nthresh + 1);
        while (c < kHistBins && pre.w[c + 1] < target) ++c;
        cut[static_cast<std::size_t>(i)] = std::min(c + 1, kHistBins - 1);
    }
    // Force strictly increasing cuts.
    for (int i = 1; i < nthresh; ++i) {
        if (cut[i] <= cut[i - 1]) cut[i] = cut[i - 1] + 1;
    }

    for (int iter = 0; iter < 200; ++iter) {
        std::vector<int> next(cut);
        std::vector<double> mean(nthresh + 1, 0.0);
        int lo = 0;
        for (int b = 0; b <= nthresh; ++b) {
            const int hi = b < nthresh ? cut[b] : kHistBins;
            const double weight = pre.w[hi] - pre.w[lo];
            const double mass = pre.wm[hi] - pre.wm[lo];
            mean[b] = weight > 0 ? mass / weight : (lo + hi) * 0.5 / kHistBins;
            lo = hi;
        }
        for (int i = 0; i < nthresh; ++i) {
            const double mid = 0.5 * (mean[i] + mean[i + 1]);
            int pos = static_cast<int>(mid * kHistBins);
            pos = std::clamp(pos, i + 1, kHistBins - (nthresh - i));
            next[i] = pos;
        }
        for (int i = 1; i < nthresh; ++i) {
            if (next[i] <= next[i - 1]) next[i] = next[i - 1] + 1;
        }
        if (next == cut) break;
        cut = next;
    }
    return cut;
}

} // namespace

MultiOtsuResult multi_otsu(const GrayImage& img, int sets) {
    if (sets < 1) throw ConfigError("multi_otsu: sets must be >= 1");

    std::set<double> distinct;
    for (double p : img.pixels) {
        distinct.insert(p);
        if (static_cast<int>(distinct.size()) >= sets) break;
    }

    MultiOtsuResult result;
    if (static_cast<int>(distinct.size()) < sets) {
        result.degenerate = true;
        sets = std::max(1, static_cast<int>(distinct.size()));
    }

    if (sets == 1) {
        BinarySet all(img.width, img.height);
        std::fill(all.mask.begin(), all.mask.end(), std::uint8_t{1});
        result.sets.push_back(std::move(all));
        return result;
    }

    const auto hist = intensity_histogram(img);
    const HistPrefix pre(hist);
    const int nthresh = sets - 1;
    const std::vector<int> cut =
        nthresh <= 3 ? otsu_exhaustive(pre, nthresh) : otsu_lloyd(pre, nthresh);

    result.thresholds.reserve(static_cast<std::size_t>(nthresh));
    for (int c : cut) result.thresholds.push_back(static_cast<double>(c) / kHistBins);

    result.sets.assign(static_cast<std::size_t>(sets), BinarySet(img.width, img.height));
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            const double p = img.at(r, c);
            int band = 0;
            while (band < nthresh && p >= result.thresholds[static_cast<std::size_t>(band)]) ++band;
            result.sets[static_cast<std::size_t>(band)].set(r, c);
        }
    }
    return result;
}

FractalFeatures fractal_features(const GrayImage& img, int sets) {
    const MultiOtsuResult bands = multi_otsu(img, sets);

    FractalFeatures f;
    f.degenerate = bands.degenerate;
    f.dimension.assign(static_cast<std::size_t>(sets), 0.0);
    f.area.assign(static_cast<std::size_t>(sets), 0.0);
    f.mean_intensity.assign(static_cast<std::size_t>(sets), 0.0);
    f.set_degenerate.assign(static_cast<std::size_t>(sets), true);

    // A constant image produces a single trivial band: no thresholding took
    // place, so every slot stays zeroed and flagged.
    if (bands.degenerate && bands.sets.size() == 1) return f;

    const double npix = static_cast<double>(img.size());
    for (std::size_t b = 0; b < bands.sets.size(); ++b) {
        const BinarySet& set = bands.sets[b];
        const std::size_t occ = set.occupied();
        if (occ == 0) continue;

        f.area[b] = static_cast<double>(occ) / npix;
        double sum = 0.0;
        for (int r = 0; r < img.height; ++r) {
            for (int c = 0; c < img.width; ++c) {
                if (set.at(r, c)) sum += img.at(r, c);
            }
        }
        f.mean_intensity[b] = sum / static_cast<double>(occ);

        try {
            f.dimension[b] = box_count_dimension(set).dimension;
            f.set_degenerate[b] = false;
        } catch (const DataError&) {
            // too few occupied cells or ladder points: leave zeros, flagged
        }
    }
    if (bands.sets.size() < static_cast<std::size_t>(sets)) f.degenerate = true;
    return f;
}

} // namespace texsrc::texture
