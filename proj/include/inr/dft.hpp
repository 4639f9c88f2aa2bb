#pragma once

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "inr/common.hpp"

namespace inr {

namespace detail {

// FFTW plan creation is not thread-safe; execution via the new-array API is.
// Plans are cached per length and created with FFTW_UNALIGNED so they can run
// on any caller buffer.
class DftPlanCache {
public:
    static DftPlanCache& instance() {
        static DftPlanCache cache;
        return cache;
    }

    fftw_plan get(std::size_t n) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = plans_.find(n);
        if (it != plans_.end()) return it->second;
        std::vector<double> in(n);
        std::vector<fftw_complex> out(n / 2 + 1);
        fftw_plan p = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(), out.data(),
                                           FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw Error("dft: fftw plan creation failed");
        plans_.emplace(n, p);
        return p;
    }

private:
    DftPlanCache() = default;
    ~DftPlanCache() {
        for (auto& [n, p] : plans_) fftw_destroy_plan(p);
    }
    std::mutex mutex_;
    std::map<std::size_t, fftw_plan> plans_;
};

}  // namespace detail

/// Magnitudes |X_k| of the discrete Fourier transform of a real signal,
/// at bins k = 0..N/2 (N/2+1 values).
inline std::vector<double> dft_magnitude(std::span<const double> signal) {
    const std::size_t n = signal.size();
    if (n < 2) throw ShapeError("dft_magnitude: signal length must be >= 2");
    std::vector<double> in(signal.begin(), signal.end());
    std::vector<fftw_complex> out(n / 2 + 1);
    fftw_plan p = detail::DftPlanCache::instance().get(n);
    fftw_execute_dft_r2c(p, in.data(), out.data());
    std::vector<double> mags(n / 2 + 1);
    for (std::size_t k = 0; k < mags.size(); ++k) mags[k] = std::hypot(out[k][0], out[k][1]);
    return mags;
}

}  // namespace inr
