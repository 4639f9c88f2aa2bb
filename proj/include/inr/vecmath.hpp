#pragma once

#include <cmath>
#include <cstddef>

#if defined(INR_HAVE_LIBMVEC) && (defined(__AVX512F__) || defined(__AVX2__))
#define INR_VECMATH_SIMD 1
#include <immintrin.h>
#endif

// Elementwise transcendental kernels over contiguous buffers. Backed by
// glibc's libmvec where available (a few ulp from libm, deterministic for a
// given binary); scalar libm otherwise. Lane grouping starts at offset 0 of
// each buffer passed in, so callers that split work must split at fixed
// offsets to keep results independent of the split.

#ifdef INR_VECMATH_SIMD
extern "C" {
#ifdef __AVX512F__
__m512d _ZGVeN8v_sin(__m512d);
__m512d _ZGVeN8v_cos(__m512d);
__m512d _ZGVeN8v_sinh(__m512d);
__m512d _ZGVeN8v_cosh(__m512d);
#else
__m256d _ZGVdN4v_sin(__m256d);
__m256d _ZGVdN4v_cos(__m256d);
__m256d _ZGVdN4v_sinh(__m256d);
__m256d _ZGVdN4v_cosh(__m256d);
#endif
}
#endif

namespace inr::vecmath {

#ifdef INR_VECMATH_SIMD
namespace detail {
#ifdef __AVX512F__
inline constexpr std::size_t kLanes = 8;
template <typename VecFn>
inline void map_simd(const double* x, double* out, std::size_t n, VecFn vfn, double (*sfn)(double)) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) _mm512_storeu_pd(out + i, vfn(_mm512_loadu_pd(x + i)));
    for (; i < n; ++i) out[i] = sfn(x[i]);
}
#else
inline constexpr std::size_t kLanes = 4;
template <typename VecFn>
inline void map_simd(const double* x, double* out, std::size_t n, VecFn vfn, double (*sfn)(double)) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) _mm256_storeu_pd(out + i, vfn(_mm256_loadu_pd(x + i)));
    for (; i < n; ++i) out[i] = sfn(x[i]);
}
#endif
}  // namespace detail

inline void vsin(const double* x, double* out, std::size_t n) {
#ifdef __AVX512F__
    detail::map_simd(x, out, n, _ZGVeN8v_sin, [](double v) { return std::sin(v); });
#else
    detail::map_simd(x, out, n, _ZGVdN4v_sin, [](double v) { return std::sin(v); });
#endif
}
inline void vcos(const double* x, double* out, std::size_t n) {
#ifdef __AVX512F__
    detail::map_simd(x, out, n, _ZGVeN8v_cos, [](double v) { return std::cos(v); });
#else
    detail::map_simd(x, out, n, _ZGVdN4v_cos, [](double v) { return std::cos(v); });
#endif
}
inline void vsinh(const double* x, double* out, std::size_t n) {
#ifdef __AVX512F__
    detail::map_simd(x, out, n, _ZGVeN8v_sinh, [](double v) { return std::sinh(v); });
#else
    detail::map_simd(x, out, n, _ZGVdN4v_sinh, [](double v) { return std::sinh(v); });
#endif
}
inline void vcosh(const double* x, double* out, std::size_t n) {
#ifdef __AVX512F__
    detail::map_simd(x, out, n, _ZGVeN8v_cosh, [](double v) { return std::cosh(v); });
#else
    detail::map_simd(x, out, n, _ZGVdN4v_cosh, [](double v) { return std::cosh(v); });
#endif
}

#else  // scalar fallback

inline void vsin(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::sin(x[i]);
}
inline void vcos(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::cos(x[i]);
}
inline void vsinh(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::sinh(x[i]);
}
inline void vcosh(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::cosh(x[i]);
}

#endif

}  // namespace inr::vecmath
