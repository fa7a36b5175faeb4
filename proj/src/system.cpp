#include "rotlab/system.hpp"

#include <cmath>
#include <random>

namespace rotlab {

void FullMap::displacement_batch(const double* x1, const double* r, double* u,
                                 std::size_t n) const {
    for (std::size_t i = 0; i < n; ++i) {
        LiftPoint p(x1[i], r[i]);
        u[i] = map(p).x1 - p.x1;
    }
}

std::vector<LiftPoint> StringSystem::range(const std::string& seed, long n_last) const {
    long count = std::labs(n_last);
    long step = n_last >= 0 ? 1 : -1;
    std::vector<LiftPoint> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    for (long i = 0; i <= count; ++i) out.push_back(at(seed, i * step));
    return out;
}

double displacement(const OrbitSource& src, const LiftPoint& p) {
    const auto* fm = dynamic_cast<const FullMap*>(&src);
    if (!fm)
        throw precondition_error("displacement: source '" + src.name() +
                                 "' does not provide a pointwise map");
    return fm->map(p).x1 - p.x1;
}

DisplacementBound displacement_bound(const OrbitSource& src, double r_min, double r_max,
                                     int density) {
    const auto* fm = dynamic_cast<const FullMap*>(&src);
    if (!fm)
        throw precondition_error("displacement_bound: source '" + src.name() +
                                 "' does not provide a pointwise map");
    if (!(r_min < r_max) || !(r_max <= 0.0))
        throw precondition_error("displacement_bound: need r_min < r_max <= 0");
    if (density < 2) throw precondition_error("displacement_bound: density must be >= 2");

    std::size_t d = static_cast<std::size_t>(density);
    std::vector<double> xs(d), rs(d), us(d);
    double sup = 0.0;
    for (std::size_t j = 0; j < d; ++j) xs[j] = static_cast<double>(j) / static_cast<double>(d);
    for (std::size_t i = 0; i < d; ++i) {
        double r = r_min + (static_cast<double>(i) + 0.5) * (r_max - r_min) / static_cast<double>(d);
        for (std::size_t j = 0; j < d; ++j) rs[j] = r;
        fm->displacement_batch(xs.data(), rs.data(), us.data(), d);
        for (std::size_t j = 0; j < d; ++j) sup = std::max(sup, std::fabs(us[j]));
    }

    DisplacementBound b;
    b.grid_sup = sup;
    b.value = 1.1 * sup;
    b.r_min = r_min;
    b.r_max = r_max;
    b.density = density;
    return b;
}

CommutationReport check_deck_commutation(const OrbitSource& src, int samples, double tol,
                                         std::uint64_t rng_seed) {
    const auto* fm = dynamic_cast<const FullMap*>(&src);
    if (!fm)
        throw precondition_error("check_deck_commutation: source '" + src.name() +
                                 "' does not provide a pointwise map");
    if (samples <= 0) throw precondition_error("check_deck_commutation: samples must be > 0");

    auto [r_lo, r_hi] = src.sample_band();
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> ux(-5.0, 5.0);
    std::uniform_real_distribution<double> ur(r_lo, r_hi);
    std::uniform_int_distribution<long> uk(-3, 3);

    CommutationReport rep;
    rep.samples = samples;
    for (int i = 0; i < samples; ++i) {
        LiftPoint p(ux(rng), std::min(ur(rng), 0.0));
        long k = uk(rng);
        double e_fwd = dist(fm->map(deck(p, k)), deck(fm->map(p), k));
        double e_inv = dist(fm->inverse(deck(p, k)), deck(fm->inverse(p), k));
        rep.max_error = std::max(rep.max_error, std::max(e_fwd, e_inv));
    }
    rep.pass = rep.max_error <= tol;
    return rep;
}

}  // namespace rotlab
