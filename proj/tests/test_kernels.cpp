#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "rotlab/kernels.hpp"

using namespace rotlab;

namespace {

std::vector<double> random_angles(std::mt19937_64& rng, std::size_t n, double span) {
    std::vector<double> x(n);
    for (auto& v : x)
        v = span * (static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0);
    return x;
}

}  // namespace

TEST_CASE("kernel dispatch exposes the scalar reference") {
    CHECK(kernels::by_name("scalar") == &kernels::scalar());
    CHECK(kernels::by_name("definitely-not-a-kernel") == nullptr);
    const kernels::Dispatch& active = kernels::active();
    CHECK((std::string(active.name) == "scalar" || std::string(active.name) == "avx2"));
}

TEST_CASE("scalar trig batches match libm exactly") {
    std::mt19937_64 rng(7);
    auto x = random_angles(rng, 257, 1000.0);
    std::vector<double> s(x.size()), c(x.size());
    kernels::scalar().sincos_batch(x.data(), s.data(), c.data(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(s[i] == std::sin(x[i]));
        CHECK(c[i] == std::cos(x[i]));
    }
}

TEST_CASE("vector trig kernels agree with the scalar reference") {
    const kernels::Dispatch* avx2 = kernels::by_name("avx2");
    if (avx2 == nullptr) return;  // host without AVX2: nothing to compare

    std::mt19937_64 rng(11);
    for (double span : {1.0, 50.0, 1.0e4, 1.0e6}) {
        auto x = random_angles(rng, 1001, span);  // odd length exercises the tail
        std::vector<double> s0(x.size()), c0(x.size()), s1(x.size()), c1(x.size());
        kernels::scalar().sincos_batch(x.data(), s0.data(), c0.data(), x.size());
        avx2->sincos_batch(x.data(), s1.data(), c1.data(), x.size());
        double worst = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            worst = std::max(worst, std::fabs(s0[i] - s1[i]));
            worst = std::max(worst, std::fabs(c0[i] - c1[i]));
        }
        CAPTURE(span);
        CHECK(worst <= 5e-16);  // a couple of ulps of values in [-1, 1]

        std::vector<double> a(x.size()), b(x.size());
        avx2->sin_batch(x.data(), a.data(), x.size());
        avx2->cos_batch(x.data(), b.data(), x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            CHECK(a[i] == s1[i]);
            CHECK(b[i] == c1[i]);
        }
    }
}

TEST_CASE("pinch chains advance degree-one lifts and invert exactly enough") {
    std::mt19937_64 rng(23);
    const std::size_t k = 37;
    std::vector<double> u0(k), c(k);
    std::vector<long> steps(k);
    for (std::size_t j = 0; j < k; ++j) {
        u0[j] = 0.55 + 0.4 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        c[j] = 0.05 + 0.25 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        steps[j] = static_cast<long>(rng() % 1000);
    }

    std::vector<double> fwd = u0;
    kernels::scalar().pinch_chain_forward(fwd.data(), c.data(), steps.data(), k);
    for (std::size_t j = 0; j < k; ++j) {
        CHECK(fwd[j] >= u0[j]);  // increment (c/2)(1 - cos) is nonnegative
        CHECK(fwd[j] <= 1.0 + 1e-12);  // orbits from (0,1) stay below the fixed point 1
    }

    std::vector<double> back = fwd;
    kernels::scalar().pinch_chain_backward(back.data(), c.data(), steps.data(), k);
    for (std::size_t j = 0; j < k; ++j) {
        CAPTURE(j);
        CHECK(std::fabs(back[j] - u0[j]) <= 1e-8);
    }
}

TEST_CASE("vector pinch chains agree with the scalar reference") {
    const kernels::Dispatch* avx2 = kernels::by_name("avx2");
    if (avx2 == nullptr) return;

    std::mt19937_64 rng(31);
    const std::size_t k = 41;
    std::vector<double> u0(k), c(k);
    std::vector<long> steps(k);
    for (std::size_t j = 0; j < k; ++j) {
        u0[j] = 0.55 + 0.4 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        c[j] = 0.05 + 0.25 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        steps[j] = static_cast<long>(rng() % 1000);
    }

    std::vector<double> a = u0, b = u0;
    kernels::scalar().pinch_chain_forward(a.data(), c.data(), steps.data(), k);
    avx2->pinch_chain_forward(b.data(), c.data(), steps.data(), k);
    for (std::size_t j = 0; j < k; ++j) {
        CAPTURE(j);
        CHECK(std::fabs(a[j] - b[j]) <= 5e-11);
    }

    // Backward chains invert two slightly different forward maps (libm vs the
    // vector polynomial); each end-step discrepancy is amplified by the
    // product of inverse derivatives, up to ~1/(1 - c*pi) per step near the
    // pinch, so roundoff-level inputs legitimately spread to ~1e-7 over a
    // thousand steps.
    std::vector<double> ia = a, ib = a;
    kernels::scalar().pinch_chain_backward(ia.data(), c.data(), steps.data(), k);
    avx2->pinch_chain_backward(ib.data(), c.data(), steps.data(), k);
    for (std::size_t j = 0; j < k; ++j) {
        CAPTURE(j);
        CHECK(std::fabs(ia[j] - ib[j]) <= 5e-7);
    }
}
