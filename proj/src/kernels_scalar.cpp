// Scalar reference kernels.  These define the semantics; the vector variants
// must agree with them to floating-point roundoff.

#include <cmath>
#include <cstddef>

#include "rotlab/geom.hpp"
#include "rotlab/kernels.hpp"

namespace rotlab::kernels {
namespace {

constexpr double kPi = 3.14159265358979323846;

void sin_batch_s(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::sin(x[i]);
}

void cos_batch_s(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::cos(x[i]);
}

void sincos_batch_s(const double* x, double* s, double* c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = std::sin(x[i]);
        c[i] = std::cos(x[i]);
    }
}

inline double pinch_step(double u, double c) {
    return u + c * 0.5 * (1.0 - std::cos(two_pi * u));
}

// Inverse of pinch_step in v: Newton from v = u, safeguarded by the bracket
// [u - c, u] (the increment lies in [0, c]).  Falls back to bisection if the
// iteration stalls; f'(v) = 1 + c*pi*sin(2*pi*v) >= 1 - c*pi > 0.
inline double pinch_step_inv(double u, double c) {
    double lo = u - c, hi = u;
    double v = u;
    for (int it = 0; it < 60; ++it) {
        double f = pinch_step(v, c) - u;
        if (f == 0.0) return v;
        if (f > 0.0) hi = v; else lo = v;
        double d = 1.0 + c * kPi * std::sin(two_pi * v);
        double vn = v - f / d;
        if (!(vn > lo) || !(vn < hi)) vn = 0.5 * (lo + hi);
        if (std::fabs(vn - v) < 1e-15) return vn;
        v = vn;
    }
    for (int it = 0; it < 80; ++it) {  // deterministic fallback, never hot
        double m = 0.5 * (lo + hi);
        if (pinch_step(m, c) - u > 0.0) hi = m; else lo = m;
    }
    return 0.5 * (lo + hi);
}

void pinch_chain_forward_s(double* u, const double* c, const long* steps, std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
        double v = u[j];
        for (long s = 0; s < steps[j]; ++s) v = pinch_step(v, c[j]);
        u[j] = v;
    }
}

void pinch_chain_backward_s(double* u, const double* c, const long* steps, std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
        double v = u[j];
        for (long s = 0; s < steps[j]; ++s) v = pinch_step_inv(v, c[j]);
        u[j] = v;
    }
}

const Dispatch scalar_table = {
    "scalar",        sin_batch_s,           cos_batch_s,
    sincos_batch_s,  pinch_chain_forward_s, pinch_chain_backward_s,
};

}  // namespace

const Dispatch& scalar() { return scalar_table; }

}  // namespace rotlab::kernels
