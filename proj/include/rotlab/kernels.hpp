#pragma once
// Batched numeric kernels with a scalar reference implementation and an AVX2
// variant selected at runtime.  Every entry point computes the same values as
// the scalar reference (equivalence-tested); callers may force a variant via
// the ROTLAB_KERNEL environment variable ("scalar" or "avx2").

#include <cstddef>

namespace rotlab::kernels {

struct Dispatch {
    const char* name;

    // out[i] = sin(x[i]), cos(x[i]).  Valid for |x| <= 1e6.
    void (*sin_batch)(const double* x, double* out, std::size_t n);
    void (*cos_batch)(const double* x, double* out, std::size_t n);
    void (*sincos_batch)(const double* x, double* s, double* c, std::size_t n);

    // Advance k independent pinch-map chains in lockstep.  Chain j starts at
    // u[j] and applies  u <- u + c[j] * (1 - cos(2*pi*u)) / 2  for steps[j]
    // steps (steps[j] >= 0).  The map is a degree-one circle map lift with a
    // parabolic fixed point at every integer; 0 <= c[j] < 1/pi keeps the
    // derivative positive, so it is a homeomorphism lift.
    void (*pinch_chain_forward)(double* u, const double* c, const long* steps, std::size_t k);

    // Same chains run with the inverse map: each step replaces u by the
    // unique v with v + c[j] * (1 - cos(2*pi*v)) / 2 = u, solved by Newton
    // iteration safeguarded by the bracket [u - c[j], u].  Same c range.
    void (*pinch_chain_backward)(double* u, const double* c, const long* steps, std::size_t k);
};

// Variant chosen once per process: ROTLAB_KERNEL if set, else AVX2 when the
// CPU supports it, else scalar.
const Dispatch& active();

// Scalar reference (always available).
const Dispatch& scalar();

// Lookup by name; returns nullptr if the variant is unknown or unsupported
// on this CPU.
const Dispatch* by_name(const char* name);

}  // namespace rotlab::kernels
