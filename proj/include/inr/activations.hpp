#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>

#include "inr/common.hpp"
#include "inr/matrix.hpp"
#include "inr/vecmath.hpp"

namespace inr {

enum class ActivationKind { Sine, Finer, HSirenFirst, WireGabor, Relu, Identity };

inline const char* to_string(ActivationKind k) {
    switch (k) {
        case ActivationKind::Sine: return "sine";
        case ActivationKind::Finer: return "finer";
        case ActivationKind::HSirenFirst: return "hsiren_first";
        case ActivationKind::WireGabor: return "wire_gabor";
        case ActivationKind::Relu: return "relu";
        case ActivationKind::Identity: return "identity";
    }
    return "?";
}

/// Which nonlinearity a layer applies, with its parameters.
///   Sine:         sin(omega0 * x)
///   Finer:        sin(omega0 * x * (1 + |x|))
///   HSirenFirst:  sin(omega0 * sinh(r * x))
///   WireGabor:    exp(i*omega0*z) * exp(-|s0*z|^2)   (via apply_complex)
struct ActivationSpec {
    ActivationKind kind = ActivationKind::Sine;
    double omega0 = 30.0;  // frequency scale
    double r = 2.0;        // hyperbolic growth rate (HSirenFirst)
    double k = 0.0;        // bias init half-range (Finer)
    double s0 = 10.0;      // Gaussian spread (WireGabor)

    static ActivationSpec sine(double w0 = 30.0) { return {ActivationKind::Sine, w0, 2.0, 0.0, 10.0}; }
    static ActivationSpec finer(double w0, double k_bias) { return {ActivationKind::Finer, w0, 2.0, k_bias, 10.0}; }
    static ActivationSpec hsiren_first(double w0 = 30.0, double r = 2.0) {
        return {ActivationKind::HSirenFirst, w0, r, 0.0, 10.0};
    }
    static ActivationSpec wire_gabor(double w0 = 20.0, double s0 = 10.0) {
        return {ActivationKind::WireGabor, w0, 2.0, 0.0, s0};
    }
    static ActivationSpec relu() { return {ActivationKind::Relu, 30.0, 2.0, 0.0, 10.0}; }
    static ActivationSpec identity() { return {ActivationKind::Identity, 30.0, 2.0, 0.0, 10.0}; }

    void validate() const {
        const bool periodic = kind == ActivationKind::Sine || kind == ActivationKind::Finer ||
                              kind == ActivationKind::HSirenFirst || kind == ActivationKind::WireGabor;
        if (periodic && !(omega0 > 0)) throw ConfigError("activation: omega0 must be > 0");
        if (kind == ActivationKind::HSirenFirst && !(r > 0)) throw ConfigError("activation: r must be > 0");
        if (kind == ActivationKind::Finer && !(k > 0)) throw ConfigError("activation: k must be > 0");
        if (kind == ActivationKind::WireGabor && !(s0 > 0)) throw ConfigError("activation: s0 must be > 0");
    }
};

inline double apply(const ActivationSpec& spec, double x) {
    switch (spec.kind) {
        case ActivationKind::Sine: return std::sin(spec.omega0 * x);
        case ActivationKind::Finer: return std::sin(spec.omega0 * x * (1.0 + std::abs(x)));
        case ActivationKind::HSirenFirst: return std::sin(spec.omega0 * std::sinh(spec.r * x));
        case ActivationKind::Relu: return x > 0.0 ? x : 0.0;
        case ActivationKind::Identity: return x;
        case ActivationKind::WireGabor: throw ConfigError("apply: WireGabor is complex-valued, use apply_complex");
    }
    return 0.0;
}

inline double derivative(const ActivationSpec& spec, double x) {
    switch (spec.kind) {
        case ActivationKind::Sine: return spec.omega0 * std::cos(spec.omega0 * x);
        case ActivationKind::Finer: {
            double ax = std::abs(x);
            return spec.omega0 * (1.0 + 2.0 * ax) * std::cos(spec.omega0 * x * (1.0 + ax));
        }
        case ActivationKind::HSirenFirst: {
            double rx = spec.r * x;
            return spec.omega0 * spec.r * std::cosh(rx) * std::cos(spec.omega0 * std::sinh(rx));
        }
        case ActivationKind::Relu: return x > 0.0 ? 1.0 : 0.0;  // subgradient 0 at the kink
        case ActivationKind::Identity: return 1.0;
        case ActivationKind::WireGabor: throw ConfigError("derivative: WireGabor is complex-valued");
    }
    return 0.0;
}

/// psi(z) = exp(i*omega0*z) * exp(-|s0*z|^2).
inline std::complex<double> apply_complex(const ActivationSpec& spec, std::complex<double> z) {
    if (spec.kind != ActivationKind::WireGabor) throw ConfigError("apply_complex: kind must be WireGabor");
    double u = z.real(), v = z.imag();
    double radius = std::exp(-spec.omega0 * v - spec.s0 * spec.s0 * (u * u + v * v));
    return {radius * std::cos(spec.omega0 * u), radius * std::sin(spec.omega0 * u)};
}

/// Closed form of the signed geometric series x + sgn(x)x^2 + x^3 + ...
/// for |x| < 1: x / (1 - |x|). Singular at x = +-1.
inline double softsign_inverse(double x) {
    if (!(std::abs(x) < 1.0)) throw ConfigError("softsign_inverse: |x| must be < 1");
    return x / (1.0 - std::abs(x));
}

namespace detail {

inline constexpr std::size_t kElementChunk = 8192;  // multiple of any SIMD lane width

template <typename Kernel>
RealMatrix map_matrix(const RealMatrix& x, Kernel&& kernel) {
    RealMatrix out(x.rows, x.cols);
    par::for_blocks(x.data.size(), kElementChunk,
                    [&](std::size_t b, std::size_t e) { kernel(x.data.data() + b, out.data.data() + b, e - b); });
    return out;
}

}  // namespace detail

/// Elementwise apply over a matrix. Uses vectorized kernels; agrees with the
/// scalar apply() to a few ulp and is bit-stable for a fixed binary.
inline RealMatrix apply_matrix(const ActivationSpec& spec, const RealMatrix& x) {
    const double w0 = spec.omega0;
    switch (spec.kind) {
        case ActivationKind::Sine:
            return detail::map_matrix(x, [w0](const double* in, double* out, std::size_t n) {
                for (std::size_t i = 0; i < n; ++i) out[i] = w0 * in[i];
                vecmath::vsin(out, out, n);
            });
        case ActivationKind::Finer:
            return detail::map_matrix(x, [w0](const double* in, double* out, std::size_t n) {
                for (std::size_t i = 0; i < n; ++i) out[i] = w0 * in[i] * (1.0 + std::abs(in[i]));
                vecmath::vsin(out, out, n);
            });
        case ActivationKind::HSirenFirst: {
            const double r = spec.r;
            return detail::map_matrix(x, [w0, r](const double* in, double* out, std::size_t n) {
                for (std::size_t i = 0; i < n; ++i) out[i] = r * in[i];
                vecmath::vsinh(out, out, n);
                for (std::size_t i = 0; i < n; ++i) out[i] *= w0;
                vecmath::vsin(out, out, n);
            });
        }
        case ActivationKind::Relu:
            return detail::map_matrix(x, [](const double* in, double* out, std::size_t n) {
                for (std::size_t i = 0; i < n; ++i) out[i] = in[i] > 0.0 ? in[i] : 0.0;
            });
        case ActivationKind::Identity:
            return x;
        case ActivationKind::WireGabor:
            throw ConfigError("apply_matrix: WireGabor is complex-valued");
    }
    return {};
}

/// Elementwise derivative over a matrix (same kernel policy as apply_matrix).
inline RealMatrix derivative_matrix(const ActivationSpec& spec, const RealMatrix& x) {
    const double w0 = spec.omega0;
    switch (spec.kind) {
        case ActivationKind::Sine:
            return detail::map_matrix(x, [w0](const double* in, double* out, std::size_t n) {
                for (std::size_t i = 0; i < n; ++i) out[i] = w0 * in[i];
                vecmath::vcos(out, out, n);
                for (std::size_t i = 0; i < n; ++i) out[i] *= w0;
            });
        case ActivationKind::Finer:
            return detail::map_matrix(x, [w0](const double* in, double* out, std::size_t n) {
                for (std::size_t i = 0; i < n; ++i) out[i] = w0 * in[i] * (1.0 + std::abs(in[i]));
                vecmath::vcos(out, out, n);
                for (std::size_t i = 0; i < n; ++i) out[i] *= w0 * (1.0 + 2.0 * std::abs(in[i]));
            });
        case ActivationKind::HSirenFirst: {
            const double r = spec.r;
            return detail::map_matrix(x, [w0, r](const double* in, double* out, std::size_t n) {
                double buf[detail::kElementChunk];
                for (std::size_t i = 0; i < n; ++i) buf[i] = r * in[i];
                vecmath::vsinh(buf, out, n);
                for (std::size_t i = 0; i < n; ++i) out[i] *= w0;
                vecmath::vcos(out, out, n);
                vecmath::vcosh(buf, buf, n);
                for (std::size_t i = 0; i < n; ++i) out[i] *= w0 * r * buf[i];
            });
        }
        case ActivationKind::Relu:
            return detail::map_matrix(x, [](const double* in, double* out, std::size_t n) {
                for (std::size_t i = 0; i < n; ++i) out[i] = in[i] > 0.0 ? 1.0 : 0.0;
            });
        case ActivationKind::Identity: {
            RealMatrix out(x.rows, x.cols, 1.0);
            return out;
        }
        case ActivationKind::WireGabor:
            throw ConfigError("derivative_matrix: WireGabor is complex-valued");
    }
    return {};
}

/// Symmetric initialization intervals for a layer's weights and biases.
struct InitBounds {
    double weight_lo = 0.0, weight_hi = 0.0;
    double bias_lo = 0.0, bias_hi = 0.0;
};

/// Per-activation, per-layer init scheme. layer_index is 1-based; fan_in is
/// the layer's input feature count.
///   Sine/HSirenFirst/Finer weights: +-1/n at layer 1, +-sqrt(6/n)/omega0 after;
///   Finer biases +-k, sine-family biases +-sqrt(1/n).
///   WireGabor weights +-sqrt(6/n)/omega0 at every layer.
///   Relu/Identity weights +-sqrt(6/n).
inline InitBounds init_bounds(const ActivationSpec& spec, std::size_t layer_index, std::size_t fan_in) {
    if (fan_in < 1) throw ConfigError("init_bounds: fan_in must be >= 1");
    if (layer_index < 1) throw ConfigError("init_bounds: layer_index is 1-based");
    spec.validate();
    const double n = static_cast<double>(fan_in);
    double w = 0.0, b = std::sqrt(1.0 / n);
    switch (spec.kind) {
        case ActivationKind::Sine:
        case ActivationKind::HSirenFirst:
        case ActivationKind::Finer:
            w = layer_index == 1 ? 1.0 / n : std::sqrt(6.0 / n) / spec.omega0;
            if (spec.kind == ActivationKind::Finer) b = spec.k;
            break;
        case ActivationKind::WireGabor:
            w = std::sqrt(6.0 / n) / spec.omega0;
            break;
        case ActivationKind::Relu:
        case ActivationKind::Identity:
            w = std::sqrt(6.0 / n);
            break;
    }
    return {-w, w, -b, b};
}

}  // namespace inr
