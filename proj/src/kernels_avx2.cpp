// AVX2 kernels: 4-lane sin/cos via Cody-Waite reduction plus the fdlibm
// minimax polynomials, and lockstep pinch-map chains built on them.
// Built only when the compiler targets AVX2; runtime CPU detection lives in
// kernels.cpp.

#include "kernels_detail.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

namespace rotlab::kernels {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.14159265358979323846;

// fdlibm kernel coefficients for sin/cos on [-pi/4, pi/4].
const __m256d S1 = _mm256_set1_pd(-1.66666666666666324348e-01);
const __m256d S2 = _mm256_set1_pd(8.33333333332248946124e-03);
const __m256d S3 = _mm256_set1_pd(-1.98412698298579493134e-04);
const __m256d S4 = _mm256_set1_pd(2.75573137070700676789e-06);
const __m256d S5 = _mm256_set1_pd(-2.50507602534068634195e-08);
const __m256d S6 = _mm256_set1_pd(1.58969099521155010221e-10);

const __m256d C1 = _mm256_set1_pd(4.16666666666666019037e-02);
const __m256d C2 = _mm256_set1_pd(-1.38888888888741095749e-03);
const __m256d C3 = _mm256_set1_pd(2.48015872894767294178e-05);
const __m256d C4 = _mm256_set1_pd(-2.75573143513906633035e-07);
const __m256d C5 = _mm256_set1_pd(2.08757232129817482790e-09);
const __m256d C6 = _mm256_set1_pd(-1.13596475577881948265e-11);

// pi/2 split into a 33-bit head (exact when multiplied by |n| < 2^20) and a
// tail; two-term reduction is accurate to ~1e-15 absolute for |x| <= 1e6.
const __m256d kTwoOverPi = _mm256_set1_pd(6.36619772367581382433e-01);
const __m256d kPio2Head = _mm256_set1_pd(1.57079632673412561417e+00);
const __m256d kPio2Tail = _mm256_set1_pd(6.07710050650619224932e-11);

// sin and cos of all four lanes.
inline void sincos4(__m256d x, __m256d* sr, __m256d* cr) {
    __m256d fn = _mm256_round_pd(_mm256_mul_pd(x, kTwoOverPi),
                                 _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(fn, kPio2Head, x);
    r = _mm256_fnmadd_pd(fn, kPio2Tail, r);

    __m256d z = _mm256_mul_pd(r, r);

    __m256d ps = _mm256_fmadd_pd(z, S6, S5);
    ps = _mm256_fmadd_pd(z, ps, S4);
    ps = _mm256_fmadd_pd(z, ps, S3);
    ps = _mm256_fmadd_pd(z, ps, S2);
    ps = _mm256_fmadd_pd(z, ps, S1);
    __m256d s = _mm256_fmadd_pd(_mm256_mul_pd(r, z), ps, r);

    __m256d pc = _mm256_fmadd_pd(z, C6, C5);
    pc = _mm256_fmadd_pd(z, pc, C4);
    pc = _mm256_fmadd_pd(z, pc, C3);
    pc = _mm256_fmadd_pd(z, pc, C2);
    pc = _mm256_fmadd_pd(z, pc, C1);
    __m256d c = _mm256_fmadd_pd(_mm256_mul_pd(z, z), pc,
                                _mm256_fnmadd_pd(z, _mm256_set1_pd(0.5), _mm256_set1_pd(1.0)));

    // Quadrant fixup: q = n mod 4 decides the swap and the signs.
    __m128i q = _mm256_cvtpd_epi32(fn);
    __m128i q1 = _mm_and_si128(q, _mm_set1_epi32(1));
    __m128i q2 = _mm_and_si128(q, _mm_set1_epi32(2));
    __m128i q2c = _mm_and_si128(_mm_add_epi32(q, _mm_set1_epi32(1)), _mm_set1_epi32(2));

    __m256d swap = _mm256_castsi256_pd(
        _mm256_cvtepi32_epi64(_mm_cmpeq_epi32(q1, _mm_set1_epi32(1))));
    __m256i sgn_s = _mm256_slli_epi64(_mm256_cvtepi32_epi64(q2), 62);
    __m256i sgn_c = _mm256_slli_epi64(_mm256_cvtepi32_epi64(q2c), 62);

    __m256d ssel = _mm256_blendv_pd(s, c, swap);
    __m256d csel = _mm256_blendv_pd(c, s, swap);
    *sr = _mm256_xor_pd(ssel, _mm256_castsi256_pd(sgn_s));
    *cr = _mm256_xor_pd(csel, _mm256_castsi256_pd(sgn_c));
}

void sincos_batch_v(const double* x, double* s, double* c, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d sv, cv;
        sincos4(_mm256_loadu_pd(x + i), &sv, &cv);
        _mm256_storeu_pd(s + i, sv);
        _mm256_storeu_pd(c + i, cv);
    }
    for (; i < n; ++i) {
        double xs[4] = {x[i], 0, 0, 0};
        __m256d sv, cv;
        sincos4(_mm256_loadu_pd(xs), &sv, &cv);
        double so[4], co[4];
        _mm256_storeu_pd(so, sv);
        _mm256_storeu_pd(co, cv);
        s[i] = so[0];
        c[i] = co[0];
    }
}

void sin_batch_v(const double* x, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d sv, cv;
        sincos4(_mm256_loadu_pd(x + i), &sv, &cv);
        _mm256_storeu_pd(out + i, sv);
    }
    for (; i < n; ++i) {
        double s1, c1;
        sincos_batch_v(x + i, &s1, &c1, 1);
        out[i] = s1;
    }
}

void cos_batch_v(const double* x, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d sv, cv;
        sincos4(_mm256_loadu_pd(x + i), &sv, &cv);
        _mm256_storeu_pd(out + i, cv);
    }
    for (; i < n; ++i) {
        double s1, c1;
        sincos_batch_v(x + i, &s1, &c1, 1);
        out[i] = c1;
    }
}

// One forward pinch step on four lanes: u + c*(1 - cos(2*pi*u))/2.
inline __m256d pinch_step4(__m256d u, __m256d c) {
    __m256d sv, cv;
    sincos4(_mm256_mul_pd(u, _mm256_set1_pd(kTwoPi)), &sv, &cv);
    __m256d incr = _mm256_mul_pd(c, _mm256_mul_pd(_mm256_set1_pd(0.5),
                                                  _mm256_sub_pd(_mm256_set1_pd(1.0), cv)));
    return _mm256_add_pd(u, incr);
}

void pinch_chain_forward_v(double* u, const double* c, const long* steps, std::size_t k) {
    std::size_t j = 0;
    for (; j + 4 <= k; j += 4) {
        __m256d uv = _mm256_loadu_pd(u + j);
        __m256d cv = _mm256_loadu_pd(c + j);
        __m256i sv = _mm256_set_epi64x(steps[j + 3], steps[j + 2], steps[j + 1], steps[j]);
        long smax = steps[j];
        for (int t = 1; t < 4; ++t) smax = steps[j + t] > smax ? steps[j + t] : smax;
        for (long s = 0; s < smax; ++s) {
            __m256d active = _mm256_castsi256_pd(
                _mm256_cmpgt_epi64(sv, _mm256_set1_epi64x(s)));
            __m256d un = pinch_step4(uv, cv);
            uv = _mm256_blendv_pd(uv, un, active);
        }
        _mm256_storeu_pd(u + j, uv);
    }
    if (j < k) scalar().pinch_chain_forward(u + j, c + j, steps + j, k - j);
}

// One inverse pinch step on four lanes via safeguarded Newton.
inline __m256d pinch_step_inv4(__m256d u, __m256d c) {
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d lo = _mm256_sub_pd(u, c);
    __m256d hi = u;
    __m256d v = u;
    for (int it = 0; it < 60; ++it) {
        __m256d sv, cv;
        sincos4(_mm256_mul_pd(v, _mm256_set1_pd(kTwoPi)), &sv, &cv);
        __m256d f = _mm256_add_pd(
            _mm256_sub_pd(v, u),
            _mm256_mul_pd(c, _mm256_mul_pd(half, _mm256_sub_pd(one, cv))));
        __m256d fpos = _mm256_cmp_pd(f, _mm256_setzero_pd(), _CMP_GT_OQ);
        hi = _mm256_blendv_pd(hi, v, fpos);
        lo = _mm256_blendv_pd(v, lo, fpos);
        __m256d d = _mm256_fmadd_pd(_mm256_mul_pd(c, _mm256_set1_pd(kPi)), sv, one);
        __m256d vn = _mm256_sub_pd(v, _mm256_div_pd(f, d));
        __m256d inb = _mm256_and_pd(_mm256_cmp_pd(vn, lo, _CMP_GT_OQ),
                                    _mm256_cmp_pd(vn, hi, _CMP_LT_OQ));
        vn = _mm256_blendv_pd(_mm256_mul_pd(half, _mm256_add_pd(lo, hi)), vn, inb);
        __m256d dv = _mm256_andnot_pd(_mm256_set1_pd(-0.0), _mm256_sub_pd(vn, v));
        v = vn;
        if (_mm256_movemask_pd(_mm256_cmp_pd(dv, _mm256_set1_pd(1e-15), _CMP_GE_OQ)) == 0)
            break;
    }
    return v;
}

void pinch_chain_backward_v(double* u, const double* c, const long* steps, std::size_t k) {
    std::size_t j = 0;
    for (; j + 4 <= k; j += 4) {
        __m256d uv = _mm256_loadu_pd(u + j);
        __m256d cv = _mm256_loadu_pd(c + j);
        __m256i sv = _mm256_set_epi64x(steps[j + 3], steps[j + 2], steps[j + 1], steps[j]);
        long smax = steps[j];
        for (int t = 1; t < 4; ++t) smax = steps[j + t] > smax ? steps[j + t] : smax;
        for (long s = 0; s < smax; ++s) {
            __m256d active = _mm256_castsi256_pd(
                _mm256_cmpgt_epi64(sv, _mm256_set1_epi64x(s)));
            __m256d un = pinch_step_inv4(uv, cv);
            uv = _mm256_blendv_pd(uv, un, active);
        }
        _mm256_storeu_pd(u + j, uv);
    }
    if (j < k) scalar().pinch_chain_backward(u + j, c + j, steps + j, k - j);
}

const Dispatch avx2_table = {
    "avx2",          sin_batch_v,           cos_batch_v,
    sincos_batch_v,  pinch_chain_forward_v, pinch_chain_backward_v,
};

}  // namespace
}  // namespace rotlab::kernels

namespace rotlab::kernels::detail {
const Dispatch* avx2_dispatch() { return &avx2_table; }
}  // namespace rotlab::kernels::detail

#else  // no AVX2 at build time

namespace rotlab::kernels::detail {
const Dispatch* avx2_dispatch() { return nullptr; }
}  // namespace rotlab::kernels::detail

#endif
