#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "inr/common.hpp"
#include "inr/matrix.hpp"

namespace inr {

inline double mse(const RealMatrix& a, const RealMatrix& b) {
    detail::check_same_shape(a, b, "mse");
    if (a.data.empty()) throw ShapeError("mse: empty input");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        double d = a.data[i] - b.data[i];
        acc += d * d;
    }
    return acc / static_cast<double>(a.data.size());
}

inline double rmse(const RealMatrix& a, const RealMatrix& b) { return std::sqrt(mse(a, b)); }

/// 10*log10(peak^2 / mse), in dB. Identical inputs give +infinity.
inline double psnr(const RealMatrix& pred, const RealMatrix& target, double peak) {
    if (!(peak > 0)) throw ConfigError("psnr: peak must be > 0");
    double m = mse(pred, target);
    if (m == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(peak * peak / m);
}

namespace detail {

// 11-tap Gaussian, sigma 1.5, normalized to sum 1.
inline const std::vector<double>& ssim_window() {
    static const std::vector<double> w = [] {
        std::vector<double> v(11);
        double sum = 0.0;
        for (int i = 0; i < 11; ++i) {
            double d = i - 5;
            v[i] = std::exp(-d * d / (2.0 * 1.5 * 1.5));
            sum += v[i];
        }
        for (auto& x : v) x /= sum;
        return v;
    }();
    return w;
}

// Separable valid-mode filter: (H x W) -> (H-10 x W-10).
inline std::vector<double> ssim_filter(const std::vector<double>& img, std::size_t h, std::size_t w) {
    const auto& win = ssim_window();
    const std::size_t wo = w - 10;
    std::vector<double> tmp(h * wo), out((h - 10) * wo);
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < wo; ++c) {
            double acc = 0.0;
            for (std::size_t t = 0; t < 11; ++t) acc += win[t] * img[r * w + c + t];
            tmp[r * wo + c] = acc;
        }
    for (std::size_t r = 0; r < h - 10; ++r)
        for (std::size_t c = 0; c < wo; ++c) {
            double acc = 0.0;
            for (std::size_t t = 0; t < 11; ++t) acc += win[t] * tmp[(r + t) * wo + c];
            out[r * wo + c] = acc;
        }
    return out;
}

}  // namespace detail

/// Mean local SSIM with an 11x11 Gaussian window (sigma 1.5),
/// C1=(0.01*peak)^2, C2=(0.03*peak)^2, computed per channel then averaged.
/// Inputs are (H*W) x C matrices in row-major pixel order.
inline double ssim(const RealMatrix& pred, const RealMatrix& target, std::size_t height, std::size_t width,
                   double peak) {
    detail::check_same_shape(pred, target, "ssim");
    if (height * width != pred.rows) throw ShapeError("ssim: rows must equal height*width");
    if (height < 11 || width < 11) throw ShapeError("ssim: image smaller than the 11x11 window");
    if (!(peak > 0)) throw ConfigError("ssim: peak must be > 0");
    const double c1 = (0.01 * peak) * (0.01 * peak);
    const double c2 = (0.03 * peak) * (0.03 * peak);
    const std::size_t channels = pred.cols;

    double total = 0.0;
    std::vector<double> a(height * width), b(height * width), aa(height * width), bb(height * width),
        ab(height * width);
    for (std::size_t ch = 0; ch < channels; ++ch) {
        for (std::size_t i = 0; i < height * width; ++i) {
            a[i] = pred.data[i * channels + ch];
            b[i] = target.data[i * channels + ch];
            aa[i] = a[i] * a[i];
            bb[i] = b[i] * b[i];
            ab[i] = a[i] * b[i];
        }
        auto mu_a = detail::ssim_filter(a, height, width);
        auto mu_b = detail::ssim_filter(b, height, width);
        auto e_aa = detail::ssim_filter(aa, height, width);
        auto e_bb = detail::ssim_filter(bb, height, width);
        auto e_ab = detail::ssim_filter(ab, height, width);
        double acc = 0.0;
        for (std::size_t i = 0; i < mu_a.size(); ++i) {
            double va = e_aa[i] - mu_a[i] * mu_a[i];
            double vb = e_bb[i] - mu_b[i] * mu_b[i];
            double cov = e_ab[i] - mu_a[i] * mu_b[i];
            acc += (2.0 * mu_a[i] * mu_b[i] + c1) * (2.0 * cov + c2) /
                   ((mu_a[i] * mu_a[i] + mu_b[i] * mu_b[i] + c1) * (va + vb + c2));
        }
        total += acc / static_cast<double>(mu_a.size());
    }
    return total / static_cast<double>(channels);
}

/// Per-iteration training loss plus optional periodic eval records.
struct EvalRecord {
    std::size_t iteration = 0;
    double mse = 0.0;
    double psnr = 0.0;
    double ssim = std::numeric_limits<double>::quiet_NaN();  // NaN when not an image task
};

struct MetricsLog {
    std::vector<double> train_loss;  // entry i is the loss at iteration i+1
    std::vector<EvalRecord> evals;   // strictly increasing iteration indices
    double train_seconds = 0.0;
};

namespace detail {

inline std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

/// CSV: iteration,loss,psnr,ssim (eval columns empty on train-only rows).
inline std::string metrics_to_csv(const MetricsLog& log) {
    for (std::size_t i = 1; i < log.evals.size(); ++i)
        if (log.evals[i].iteration <= log.evals[i - 1].iteration)
            throw ConfigError("metrics_to_csv: eval iterations must be strictly increasing");
    std::string out = "iteration,loss,psnr,ssim\n";
    std::size_t e = 0;
    for (std::size_t i = 0; i < log.train_loss.size(); ++i) {
        const std::size_t iter = i + 1;
        out += std::to_string(iter);
        out += ',';
        out += detail::format_double(log.train_loss[i]);
        if (e < log.evals.size() && log.evals[e].iteration == iter) {
            out += ',';
            out += detail::format_double(log.evals[e].psnr);
            out += ',';
            out += detail::format_double(log.evals[e].ssim);
            ++e;
        } else {
            out += ",,";
        }
        out += '\n';
    }
    return out;
}

}  // namespace inr
