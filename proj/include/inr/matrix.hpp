#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "inr/common.hpp"
#include "inr/rng.hpp"

namespace inr {

/// Dense row-major matrix of 64-bit floats.
struct RealMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;  // row-major, rows*cols entries

    RealMatrix() = default;
    RealMatrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    static RealMatrix from_rows(std::initializer_list<std::initializer_list<double>> lists) {
        RealMatrix m(lists.size(), lists.size() ? lists.begin()->size() : 0);
        std::size_t i = 0;
        for (const auto& row : lists) {
            if (row.size() != m.cols) throw ShapeError("from_rows: ragged rows");
            for (double v : row) m.data[i++] = v;
        }
        return m;
    }

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::size_t size() const { return data.size(); }
    bool empty() const { return data.empty(); }

    bool all_finite() const {
        for (double v : data)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

/// Dense row-major matrix of complex<double> ((re, im) pairs).
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::complex<double>> data;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    std::complex<double>& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const std::complex<double>& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::size_t size() const { return data.size(); }

    RealMatrix real() const {
        RealMatrix m(rows, cols);
        for (std::size_t i = 0; i < data.size(); ++i) m.data[i] = data[i].real();
        return m;
    }
    RealMatrix imag() const {
        RealMatrix m(rows, cols);
        for (std::size_t i = 0; i < data.size(); ++i) m.data[i] = data[i].imag();
        return m;
    }
    static ComplexMatrix from_planes(const RealMatrix& re, const RealMatrix& im) {
        if (re.rows != im.rows || re.cols != im.cols) throw ShapeError("from_planes: plane shapes differ");
        ComplexMatrix m(re.rows, re.cols);
        for (std::size_t i = 0; i < m.data.size(); ++i) m.data[i] = {re.data[i], im.data[i]};
        return m;
    }
};

namespace detail {

using EigenRowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapRM = Eigen::Map<EigenRowMajor>;
using MapCRM = Eigen::Map<const EigenRowMajor>;

// Row-block size for the deterministic parallel product. Fixed regardless of
// worker count so the partition (and thus every rounding decision) is
// identical whether 1 or N workers run the blocks.
inline constexpr std::size_t kGemmBlockRows = 1024;

inline void check_same_shape(const RealMatrix& a, const RealMatrix& b, const char* op) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw ShapeError(std::string(op) + ": shapes " + std::to_string(a.rows) + "x" + std::to_string(a.cols) +
                         " vs " + std::to_string(b.rows) + "x" + std::to_string(b.cols));
}

}  // namespace detail

/// a (n×k) * b (k×m) -> n×m.
inline RealMatrix matmul(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols != b.rows)
        throw ShapeError("matmul: inner dimensions " + std::to_string(a.cols) + " vs " + std::to_string(b.rows));
    RealMatrix out(a.rows, b.cols);
    detail::MapCRM mb(b.data.data(), b.rows, b.cols);
    par::for_blocks(a.rows, detail::kGemmBlockRows, [&](std::size_t r0, std::size_t r1) {
        detail::MapCRM ma(a.data.data() + r0 * a.cols, r1 - r0, a.cols);
        detail::MapRM mo(out.data.data() + r0 * out.cols, r1 - r0, out.cols);
        mo.noalias() = ma * mb;
    });
    return out;
}

/// a (n×k) * b^T (m×k) -> n×m.
inline RealMatrix matmul_nt(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols != b.cols)
        throw ShapeError("matmul_nt: inner dimensions " + std::to_string(a.cols) + " vs " + std::to_string(b.cols));
    RealMatrix out(a.rows, b.rows);
    detail::MapCRM mb(b.data.data(), b.rows, b.cols);
    par::for_blocks(a.rows, detail::kGemmBlockRows, [&](std::size_t r0, std::size_t r1) {
        detail::MapCRM ma(a.data.data() + r0 * a.cols, r1 - r0, a.cols);
        detail::MapRM mo(out.data.data() + r0 * out.cols, r1 - r0, out.cols);
        mo.noalias() = ma * mb.transpose();
    });
    return out;
}

/// a^T (a is n×k) * b (n×m) -> k×m.
inline RealMatrix matmul_tn(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows != b.rows)
        throw ShapeError("matmul_tn: inner dimensions " + std::to_string(a.rows) + " vs " + std::to_string(b.rows));
    RealMatrix out(a.cols, b.cols);
    detail::MapCRM ma(a.data.data(), a.rows, a.cols);
    detail::MapCRM mb(b.data.data(), b.rows, b.cols);
    par::for_blocks(a.cols, detail::kGemmBlockRows, [&](std::size_t c0, std::size_t c1) {
        detail::MapRM mo(out.data.data() + c0 * out.cols, c1 - c0, out.cols);
        mo.noalias() = ma.middleCols(c0, c1 - c0).transpose() * mb;
    });
    return out;
}

/// Complex product via plane arithmetic: (A+iB)(C+iD) = (AC-BD) + i(AD+BC).
inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols != b.rows)
        throw ShapeError("matmul(complex): inner dimensions " + std::to_string(a.cols) + " vs " +
                         std::to_string(b.rows));
    RealMatrix ar = a.real(), ai = a.imag(), br = b.real(), bi = b.imag();
    RealMatrix re = matmul(ar, br);
    RealMatrix re2 = matmul(ai, bi);
    RealMatrix im = matmul(ar, bi);
    RealMatrix im2 = matmul(ai, br);
    for (std::size_t i = 0; i < re.data.size(); ++i) {
        re.data[i] -= re2.data[i];
        im.data[i] += im2.data[i];
    }
    return ComplexMatrix::from_planes(re, im);
}

inline RealMatrix transpose(const RealMatrix& a) {
    RealMatrix out(a.cols, a.rows);
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t c = 0; c < a.cols; ++c) out(c, r) = a(r, c);
    return out;
}

/// x (n×m) + broadcast row b (1×m), in place.
inline void add_row_vector(RealMatrix& x, const RealMatrix& b) {
    if (b.rows != 1 || b.cols != x.cols) throw ShapeError("add_row_vector: bias must be 1x" + std::to_string(x.cols));
    for (std::size_t r = 0; r < x.rows; ++r) {
        double* row = x.data.data() + r * x.cols;
        for (std::size_t c = 0; c < x.cols; ++c) row[c] += b.data[c];
    }
}

/// Column sums -> 1×m.
inline RealMatrix col_sums(const RealMatrix& a) {
    RealMatrix out(1, a.cols, 0.0);
    for (std::size_t r = 0; r < a.rows; ++r) {
        const double* row = a.data.data() + r * a.cols;
        for (std::size_t c = 0; c < a.cols; ++c) out.data[c] += row[c];
    }
    return out;
}

inline void hadamard_inplace(RealMatrix& a, const RealMatrix& b) {
    detail::check_same_shape(a, b, "hadamard");
    for (std::size_t i = 0; i < a.data.size(); ++i) a.data[i] *= b.data[i];
}

/// Matrix with every entry drawn uniformly from [lo, hi); row-major draw order.
inline RealMatrix uniform_fill(SeededRng& rng, std::size_t rows, std::size_t cols, double lo, double hi) {
    if (!(lo < hi)) throw ConfigError("uniform_fill: lo must be < hi");
    RealMatrix m(rows, cols);
    for (auto& v : m.data) v = rng.uniform(lo, hi);
    return m;
}

}  // namespace inr
