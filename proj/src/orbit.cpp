#include "rotlab/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace rotlab {

OrbitSeries iterate_orbit(const OrbitSource& src, const OrbitSeed& seed, long n_steps,
                          Direction dir) {
    if (n_steps < 0) throw precondition_error("iterate_orbit: n_steps must be >= 0");

    OrbitSeries s;
    s.direction = dir;
    long step = dir == Direction::forward ? 1 : -1;

    if (src.kind() == SourceKind::full_map) {
        if (!seed.pt)
            throw precondition_error("iterate_orbit: full-map source needs a point seed");
        const auto& fm = static_cast<const FullMap&>(src);
        s.n.reserve(n_steps + 1);
        s.p.reserve(n_steps + 1);
        LiftPoint q = *seed.pt;
        s.n.push_back(0);
        s.p.push_back(q);
        for (long i = 1; i <= n_steps; ++i) {
            q = dir == Direction::forward ? fm.map(q) : fm.inverse(q);
            s.n.push_back(i * step);
            s.p.push_back(q);
        }
    } else {
        const auto& ss = static_cast<const StringSystem&>(src);
        if (seed.name.empty())
            throw precondition_error("iterate_orbit: string system needs a named seed");
        if (dir == Direction::backward && !ss.has_backward(seed.name))
            throw precondition_error("iterate_orbit: seed '" + seed.name +
                                     "' has no backward orbit");
        s.p = ss.range(seed.name, n_steps * step);
        s.n.resize(s.p.size());
        for (std::size_t i = 0; i < s.n.size(); ++i)
            s.n[i] = static_cast<long>(i) * step;
    }

    s.min_r = s.p.front().r;
    for (const auto& q : s.p) s.min_r = std::min(s.min_r, q.r);
    s.escaped = s.min_r < src.compactness_cutoff();
    return s;
}

RotationEstimate rotation_estimate(const OrbitSeries& series) {
    std::size_t m = series.n.size();
    if (m < 2) throw precondition_error("rotation_estimate: need at least 2 points");

    RotationEstimate re;
    long n_last = series.n.back();
    re.estimate = (series.p.back().x1 - series.p.front().x1) / static_cast<double>(n_last);

    // Least squares x1 ~ slope * n + b over the final half of the series.
    std::size_t lo = m / 2;
    double sn = 0, sx = 0, snn = 0, snx = 0;
    double cnt = static_cast<double>(m - lo);
    for (std::size_t i = lo; i < m; ++i) {
        double ni = static_cast<double>(series.n[i]);
        double xi = series.p[i].x1;
        sn += ni;
        sx += xi;
        snn += ni * ni;
        snx += ni * xi;
    }
    double det = cnt * snn - sn * sn;
    if (det == 0.0) throw precondition_error("rotation_estimate: degenerate tail fit");
    double slope = (cnt * snx - sn * sx) / det;
    re.tail_slope = slope;
    re.residual = std::abs(re.estimate - slope);
    return re;
}

DriftSeries drift_series(const OrbitSeries& series, double rho) {
    DriftSeries d;
    d.rho = rho;
    d.n = series.n;
    d.values.resize(series.n.size());
    double x0 = series.p.front().x1;
    for (std::size_t i = 0; i < series.n.size(); ++i)
        d.values[i] = series.p[i].x1 - x0 - static_cast<double>(series.n[i]) * rho;
    d.max = d.min = 0.0;
    d.argmax = d.argmin = series.n.front();
    for (std::size_t i = 0; i < d.values.size(); ++i) {
        if (d.values[i] > d.max) { d.max = d.values[i]; d.argmax = d.n[i]; }
        if (d.values[i] < d.min) { d.min = d.values[i]; d.argmin = d.n[i]; }
    }
    return d;
}

const char* to_string(DriftKind k) {
    switch (k) {
        case DriftKind::bounded: return "Bounded";
        case DriftKind::unbounded_above: return "UnboundedAbove";
        case DriftKind::unbounded_below: return "UnboundedBelow";
        case DriftKind::oscillating: return "Oscillating";
        case DriftKind::inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

DriftClass classify_drift(const DriftSeries& drift) {
    long max_abs_n = 0;
    for (long n : drift.n) max_abs_n = std::max(max_abs_n, std::labs(n));
    if (max_abs_n < 256)
        throw precondition_error("classify_drift: series must reach |n| >= 256");

    int J = 0;
    while ((2L << J) <= max_abs_n) ++J;  // J = floor(log2(max_abs_n))

    DriftClass c;
    c.window_max.assign(J + 1, -1e300);
    c.window_min.assign(J + 1, 1e300);
    for (std::size_t i = 0; i < drift.n.size(); ++i) {
        long a = std::labs(drift.n[i]);
        if (a < 1) continue;
        int j = 0;
        while ((2L << j) <= a) ++j;
        c.window_max[j] = std::max(c.window_max[j], drift.values[i]);
        c.window_min[j] = std::min(c.window_min[j], drift.values[i]);
    }
    for (int j = 0; j <= J; ++j)
        if (c.window_max[j] == -1e300)
            throw precondition_error("classify_drift: series has gaps in |n|");

    auto strictly_up = [&](const std::vector<double>& w) {
        for (int j = J - 3; j < J; ++j)
            if (!(w[j + 1] > w[j])) return false;
        return true;
    };
    auto strictly_down = [&](const std::vector<double>& w) {
        for (int j = J - 3; j < J; ++j)
            if (!(w[j + 1] < w[j])) return false;
        return true;
    };

    bool up_trend = strictly_up(c.window_max);
    bool down_trend = strictly_down(c.window_min);
    // Growth below the noise floor is indistinguishable from accumulated
    // rounding (a rigid rotation's drift is pure float noise ~1e-13 that can
    // still show dyadic "trends"), so unbounded verdicts also require the
    // final window extremum to clear an absolute threshold.
    constexpr double noise_floor = 1e-9;
    c.grew_up = up_trend && c.window_max[J] > 3.0 * c.window_max[0] &&
                c.window_max[J] > noise_floor;
    c.grew_down = down_trend && c.window_min[J] < 3.0 * c.window_min[0] &&
                  c.window_min[J] < -noise_floor;

    if (c.grew_up && c.grew_down) {
        c.kind = DriftKind::oscillating;
    } else if (c.grew_up) {
        c.kind = DriftKind::unbounded_above;
    } else if (c.grew_down) {
        c.kind = DriftKind::unbounded_below;
    } else if (!up_trend && !down_trend) {
        c.kind = DriftKind::bounded;
        for (double v : drift.values) c.bound = std::max(c.bound, std::fabs(v));
    } else {
        c.kind = DriftKind::inconclusive;
    }
    return c;
}

GapReport subsampled_drift_gap(const OrbitSource& src, const OrbitSeed& seed, long b,
                               long k, double rho, long n_max) {
    if (b < 1) throw precondition_error("subsampled_drift_gap: b must be >= 1");
    if (k < 0 || k >= b)
        throw precondition_error("subsampled_drift_gap: need 0 <= k < b");
    if (src.kind() != SourceKind::full_map)
        throw precondition_error(
            "subsampled_drift_gap: displacement bound needs a full-map source");

    OrbitSeries s = iterate_orbit(src, seed, n_max, Direction::forward);
    DriftSeries d = drift_series(s, rho);

    double r_lo = s.min_r, r_hi = s.p.front().r;
    for (const auto& q : s.p) r_hi = std::max(r_hi, q.r);
    r_lo -= 0.05;
    r_hi = std::min(r_hi + 0.05, 0.0);
    DisplacementBound D = displacement_bound(src, r_lo, r_hi, 256);

    GapReport rep;
    rep.d_sup = D.value;
    rep.bound = static_cast<double>(b) * D.value +
                static_cast<double>(b + std::labs(k)) * std::fabs(rho);
    for (long n = 0; b * n + k <= n_max; ++n) {
        long i0 = b * n + k;
        long last = std::min(b * (n + 1) + k - 1, n_max);
        for (long m = i0; m <= last; ++m)
            rep.max_gap = std::max(rep.max_gap, std::fabs(d.values[i0] - d.values[m]));
    }
    rep.pass = rep.max_gap <= rep.bound;
    return rep;
}

H1Report h1_check(const OrbitSeries& series, long a, long b) {
    if (b < 1) throw precondition_error("h1_check: b must be >= 1");
    double rho = static_cast<double>(a) / static_cast<double>(b);

    H1Report rep;
    DriftClass c = classify_drift(drift_series(series, rho));
    rep.drift_kind = c.kind;
    rep.holds_limsup =
        c.kind == DriftKind::unbounded_above || c.kind == DriftKind::oscillating;
    rep.fit = rotation_estimate(series);
    rep.holds_linear = rep.fit.tail_slope > rho + 3.0 * rep.fit.residual;
    return rep;
}

std::optional<H2Witness> h2_witness_search(const OrbitSource& src, const OrbitSeed& seed,
                                           long a, long b, long k, long horizon,
                                           double eps, double delta) {
    if (b < 1 || k < 0 || k >= b)
        throw precondition_error("h2_witness_search: need b >= 1 and 0 <= k < b");
    if (horizon < 2) throw precondition_error("h2_witness_search: horizon must be >= 2");
    if (!(eps > 0.0) || !(delta > 0.0))
        throw precondition_error("h2_witness_search: eps and delta must be positive");

    OrbitSeries s = iterate_orbit(src, seed, b * horizon + k + b, Direction::forward);

    struct Visit {
        long n;
        double xn, r;
    };
    double r0 = 0.0;
    for (const auto& q : s.p) r0 = std::min(r0, q.r);

    std::map<std::pair<long, long>, Visit> cells;
    for (long n = 1; n <= horizon; ++n) {
        long i = b * n + k;
        double x = s.p[i].x1 - static_cast<double>(a) * static_cast<double>(n);
        double xn = x - std::floor(x);
        double r = s.p[i].r;
        std::pair<long, long> key{static_cast<long>(std::floor(xn / eps)),
                                  static_cast<long>(std::floor((r - r0) / eps))};
        auto [it, inserted] = cells.try_emplace(key, Visit{n, xn, r});
        if (inserted) continue;

        const Visit& first = it->second;
        long j = b * first.n + k;
        double dx = s.p[j + b].x1 - s.p[j].x1 - static_cast<double>(a);
        double dr = s.p[j + b].r - s.p[j].r;
        double move = std::hypot(dx, dr);
        if (move > delta) {
            H2Witness w;
            w.q0 = LiftPoint(first.xn, std::min(first.r, 0.0));
            w.n_first = first.n;
            w.n_second = n;
            w.move_dist = move;
            w.cluster_diameter = std::hypot(xn - first.xn, r - first.r);
            return w;
        }
    }
    return std::nullopt;
}

MeasureRotation empirical_measure_rotation(const OrbitSource& src, const LiftPoint& seed,
                                           long n) {
    if (n < 1) throw precondition_error("empirical_measure_rotation: n must be >= 1");
    const auto* fm = dynamic_cast<const FullMap*>(&src);
    if (!fm)
        throw precondition_error(
            "empirical_measure_rotation: source does not provide a pointwise map");

    double sum = 0.0;
    LiftPoint q = seed;
    for (long i = 0; i < n; ++i) {
        LiftPoint next = fm->map(q);
        sum += next.x1 - q.x1;
        q = next;
    }
    MeasureRotation mr;
    mr.value = sum / static_cast<double>(n);
    mr.telescoping_error = std::fabs(sum - (q.x1 - seed.x1));
    return mr;
}

}  // namespace rotlab
