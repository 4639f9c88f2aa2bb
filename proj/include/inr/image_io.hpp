#pragma once

#include <png.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "inr/common.hpp"

namespace inr {

/// 8-bit image, interleaved row-major (H x W x C), C in {1, 3}.
struct ImageTensor {
    std::size_t height = 0;
    std::size_t width = 0;
    std::size_t channels = 0;
    std::vector<std::uint8_t> pixels;

    ImageTensor() = default;
    ImageTensor(std::size_t h, std::size_t w, std::size_t c) : height(h), width(w), channels(c), pixels(h * w * c, 0) {
        if (c != 1 && c != 3) throw ConfigError("ImageTensor: channels must be 1 or 3");
    }

    std::uint8_t& at(std::size_t r, std::size_t c, std::size_t ch) {
        return pixels[(r * width + c) * channels + ch];
    }
    std::uint8_t at(std::size_t r, std::size_t c, std::size_t ch) const {
        return pixels[(r * width + c) * channels + ch];
    }
};

namespace detail {
struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;
}  // namespace detail

/// Reads an 8-bit PNG. Palette images are expanded to RGB and alpha is
/// stripped; 16-bit files are rejected.
inline ImageTensor load_png(const std::string& path) {
    detail::FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("load_png: cannot open " + path);

    png_byte header[8];
    if (std::fread(header, 1, 8, fp.get()) != 8 || png_sig_cmp(header, 0, 8))
        throw IoError("load_png: not a PNG file: " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("load_png: png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("load_png: png_create_info_struct failed");
    }
    std::vector<png_bytep> row_ptrs;
    ImageTensor img;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("load_png: decode error in " + path);
    }
    png_init_io(png, fp.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    if (png_get_bit_depth(png, info) > 8) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("load_png: only 8-bit PNGs are supported: " + path);
    }
    png_byte color = png_get_color_type(png, info);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY && png_get_bit_depth(png, info) < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const std::size_t h = png_get_image_height(png, info);
    const std::size_t w = png_get_image_width(png, info);
    const std::size_t c = png_get_channels(png, info);
    if (c != 1 && c != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("load_png: unsupported channel count " + std::to_string(c) + " in " + path);
    }
    img = ImageTensor(h, w, c);
    row_ptrs.resize(h);
    for (std::size_t r = 0; r < h; ++r) row_ptrs[r] = img.pixels.data() + r * w * c;
    png_read_image(png, row_ptrs.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

inline void save_png(const std::string& path, const ImageTensor& img) {
    if (img.channels != 1 && img.channels != 3) throw ConfigError("save_png: channels must be 1 or 3");
    if (img.pixels.size() != img.height * img.width * img.channels) throw ShapeError("save_png: pixel buffer size");
    detail::FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw IoError("save_png: cannot open " + path + " for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("save_png: png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("save_png: png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("save_png: encode error for " + path);
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width), static_cast<png_uint_32>(img.height), 8,
                 img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_bytep> row_ptrs(img.height);
    for (std::size_t r = 0; r < img.height; ++r)
        row_ptrs[r] = const_cast<png_bytep>(img.pixels.data() + r * img.width * img.channels);
    png_write_image(png, row_ptrs.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

/// Loads frame_00000.png, frame_00001.png, ... from a directory, in index
/// order, stopping at the first missing index.
inline std::vector<ImageTensor> load_frame_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw IoError("load_frame_dir: not a directory: " + dir);
    std::vector<ImageTensor> frames;
    for (std::size_t i = 0;; ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "frame_%05zu.png", i);
        fs::path p = fs::path(dir) / name;
        if (!fs::exists(p)) break;
        frames.push_back(load_png(p.string()));
    }
    if (frames.empty()) throw IoError("load_frame_dir: no frame_%05d.png files in " + dir);
    return frames;
}

}  // namespace inr
