#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "inr/common.hpp"
#include "inr/image_io.hpp"
#include "inr/matrix.hpp"

namespace inr {

/// Coordinate grid over [-1,1]^d: every axis maps its extent to equidistant
/// values with exact endpoints (-1 first, +1 last; extent-1 axes map to 0).
/// Rows are ordered row-major over the extents.
struct Grid {
    std::vector<std::size_t> dims;
    RealMatrix coords;  // (prod dims) x dims.size()
};

inline double grid_axis_value(std::size_t index, std::size_t extent) {
    if (extent == 1) return 0.0;
    return -1.0 + 2.0 * static_cast<double>(index) / static_cast<double>(extent - 1);
}

inline Grid build_grid(const std::vector<std::size_t>& dims) {
    if (dims.empty()) throw ConfigError("build_grid: dims must be nonempty");
    std::size_t total = 1;
    for (std::size_t e : dims) {
        if (e < 1) throw ConfigError("build_grid: every extent must be >= 1");
        total *= e;
    }
    Grid g;
    g.dims = dims;
    g.coords = RealMatrix(total, dims.size());
    std::vector<std::size_t> idx(dims.size(), 0);
    for (std::size_t r = 0; r < total; ++r) {
        for (std::size_t d = 0; d < dims.size(); ++d) g.coords(r, d) = grid_axis_value(idx[d], dims[d]);
        for (std::size_t d = dims.size(); d-- > 0;) {
            if (++idx[d] < dims[d]) break;
            idx[d] = 0;
        }
    }
    return g;
}

/// Affine map from [lo_src, hi_src] to [-1, 1].
inline double normalize_value(double v, double lo_src, double hi_src) {
    if (!(hi_src > lo_src)) throw ConfigError("normalize: hi_src must be > lo_src");
    return 2.0 * (v - lo_src) / (hi_src - lo_src) - 1.0;
}

inline double denormalize_value(double v, double lo_src, double hi_src) {
    if (!(hi_src > lo_src)) throw ConfigError("denormalize: hi_src must be > lo_src");
    return lo_src + (v + 1.0) * 0.5 * (hi_src - lo_src);
}

inline RealMatrix normalize(const RealMatrix& values, double lo_src, double hi_src) {
    RealMatrix out(values.rows, values.cols);
    for (std::size_t i = 0; i < values.data.size(); ++i) out.data[i] = normalize_value(values.data[i], lo_src, hi_src);
    return out;
}

inline RealMatrix denormalize(const RealMatrix& values, double lo_src, double hi_src) {
    RealMatrix out(values.rows, values.cols);
    for (std::size_t i = 0; i < values.data.size(); ++i)
        out.data[i] = denormalize_value(values.data[i], lo_src, hi_src);
    return out;
}

/// Coordinates in [-1,1]^d paired with targets normalized to [-1,1].
/// source_lo/source_hi record the affine map used, so predictions can be
/// taken back to source units.
struct Dataset {
    RealMatrix coords;   // N x d
    RealMatrix targets;  // N x c, in [-1, 1]
    double source_lo = -1.0;
    double source_hi = 1.0;
    std::vector<std::size_t> dims;  // grid extents the rows were built from
};

inline Dataset image_to_dataset(const ImageTensor& img) {
    Grid g = build_grid({img.height, img.width});
    Dataset ds;
    ds.coords = std::move(g.coords);
    ds.dims = {img.height, img.width};
    ds.source_lo = 0.0;
    ds.source_hi = 255.0;
    ds.targets = RealMatrix(img.height * img.width, img.channels);
    for (std::size_t i = 0; i < img.pixels.size(); ++i)
        ds.targets.data[i] = normalize_value(static_cast<double>(img.pixels[i]), 0.0, 255.0);
    return ds;
}

/// Frames stack to a (T, H, W) grid; targets are the per-frame pixels.
inline Dataset frames_to_dataset(const std::vector<ImageTensor>& frames) {
    if (frames.empty()) throw ConfigError("frames_to_dataset: no frames");
    const std::size_t h = frames[0].height, w = frames[0].width, c = frames[0].channels;
    for (const auto& f : frames)
        if (f.height != h || f.width != w || f.channels != c)
            throw ShapeError("frames_to_dataset: inconsistent frame shapes");
    Grid g = build_grid({frames.size(), h, w});
    Dataset ds;
    ds.coords = std::move(g.coords);
    ds.dims = {frames.size(), h, w};
    ds.source_lo = 0.0;
    ds.source_hi = 255.0;
    ds.targets = RealMatrix(frames.size() * h * w, c);
    std::size_t i = 0;
    for (const auto& f : frames)
        for (std::uint8_t p : f.pixels) ds.targets.data[i++] = normalize_value(static_cast<double>(p), 0.0, 255.0);
    return ds;
}

/// Keeps pixels at even indices along both spatial axes.
inline ImageTensor subsample_stride2(const ImageTensor& img) {
    if (img.height < 2 || img.width < 2) throw ShapeError("subsample_stride2: image must be at least 2x2");
    ImageTensor out((img.height + 1) / 2, (img.width + 1) / 2, img.channels);
    for (std::size_t r = 0; r < out.height; ++r)
        for (std::size_t c = 0; c < out.width; ++c)
            for (std::size_t ch = 0; ch < img.channels; ++ch) out.at(r, c, ch) = img.at(2 * r, 2 * c, ch);
    return out;
}

inline std::vector<ImageTensor> subsample_stride2(const std::vector<ImageTensor>& frames) {
    std::vector<ImageTensor> out;
    out.reserve(frames.size());
    for (const auto& f : frames) out.push_back(subsample_stride2(f));
    return out;
}

/// Central crop to (h, w).
inline ImageTensor crop_center(const ImageTensor& img, std::size_t h, std::size_t w) {
    if (h > img.height || w > img.width) throw ShapeError("crop_center: crop larger than image");
    ImageTensor out(h, w, img.channels);
    const std::size_t r0 = (img.height - h) / 2, c0 = (img.width - w) / 2;
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < w; ++c)
            for (std::size_t ch = 0; ch < img.channels; ++ch) out.at(r, c, ch) = img.at(r0 + r, c0 + c, ch);
    return out;
}

/// Debug CSV: coordinate columns then target columns, one row per sample.
inline void dataset_to_csv(const Dataset& ds, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("dataset_to_csv: cannot open " + path);
    for (std::size_t d = 0; d < ds.coords.cols; ++d) f << "x" << d << ",";
    for (std::size_t c = 0; c < ds.targets.cols; ++c) f << "y" << c << (c + 1 < ds.targets.cols ? "," : "");
    f << "\n";
    char buf[40];
    for (std::size_t r = 0; r < ds.coords.rows; ++r) {
        for (std::size_t d = 0; d < ds.coords.cols; ++d) {
            std::snprintf(buf, sizeof(buf), "%.17g,", ds.coords(r, d));
            f << buf;
        }
        for (std::size_t c = 0; c < ds.targets.cols; ++c) {
            std::snprintf(buf, sizeof(buf), "%.17g", ds.targets(r, c));
            f << buf << (c + 1 < ds.targets.cols ? "," : "");
        }
        f << "\n";
    }
    if (!f.good()) throw IoError("dataset_to_csv: write failed for " + path);
}

/// Renders a prediction matrix ((H*W) x C in [-1,1] normalized units) back to
/// an 8-bit image, clamping out-of-range values.
inline ImageTensor predictions_to_image(const RealMatrix& pred, std::size_t height, std::size_t width,
                                        double source_lo, double source_hi) {
    if (pred.rows != height * width) throw ShapeError("predictions_to_image: rows must equal height*width");
    ImageTensor img(height, width, pred.cols);
    for (std::size_t i = 0; i < pred.data.size(); ++i) {
        double v = denormalize_value(pred.data[i], source_lo, source_hi);
        v = v < 0.0 ? 0.0 : (v > 255.0 ? 255.0 : v);
        img.pixels[i] = static_cast<std::uint8_t>(v + 0.5);
    }
    return img;
}

}  // namespace inr
