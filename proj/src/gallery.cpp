#include "rotlab/gallery.hpp"

#include <cmath>
#include <numeric>

#include "rotlab/horseshoe.hpp"
#include "rotlab/kernels.hpp"
#include "rotlab/solve.hpp"

namespace rotlab {
namespace {

// ---------------------------------------------------------------------------
// Rigid rotation by a/b with b vertical strings.

class PeriodicMap final : public FullMap {
public:
    PeriodicMap(long a, long b)
        : a_(a), b_(b), alpha_(static_cast<double>(a) / static_cast<double>(b)) {}

    std::string name() const override {
        return "periodic:" + std::to_string(a_) + "/" + std::to_string(b_);
    }

    LiftPoint map(const LiftPoint& p) const override {
        return LiftPoint(p.x1 + alpha_, p.r);
    }
    LiftPoint inverse(const LiftPoint& p) const override {
        return LiftPoint(p.x1 - alpha_, p.r);
    }
    void displacement_batch(const double*, const double*, double* u,
                            std::size_t n) const override {
        for (std::size_t i = 0; i < n; ++i) u[i] = alpha_;
    }

    double alpha() const { return alpha_; }
    long b() const { return b_; }

private:
    long a_, b_;
    double alpha_;
};

// ---------------------------------------------------------------------------
// Compressed twist band with a radial transverse kick.
//
// The original radial coordinate r <= 0 is compressed to s = psi(r) in
// (-2, -1]; outside that band the map is the identity.  Inside, a point is
// untwisted by the angle r*sin(2*pi*r), kicked radially by
// delta(r)*cos(2*pi*angle), and retwisted at the new radius.

double psi(double r) { return 1.0 / (r * r + 1.0) - 2.0; }
double psi_inv(double s) { return -std::sqrt(1.0 / (s + 2.0) - 1.0); }
double kick_amp(double r) {
    double r2 = r * r;
    return 0.2 * r2 / (1.0 + r2 * r2);
}
double kick_amp_deriv(double r) {
    double r2 = r * r, r4 = r2 * r2;
    return 0.4 * r * (1.0 - r4) / ((1.0 + r4) * (1.0 + r4));
}

class TransverseMap final : public FullMap {
public:
    std::string name() const override { return "transverse"; }
    double compactness_cutoff() const override { return -2.5; }
    std::pair<double, double> sample_band() const override { return {-2.4, -0.6}; }

    LiftPoint map(const LiftPoint& p) const override {
        double s = p.r;
        if (s <= -2.0 || s > -1.0) return p;
        double r = psi_inv(s);
        double y = p.x1 - r * std::sin(two_pi * r);
        double rh = r - kick_amp(r) * std::cos(two_pi * y);
        return LiftPoint(y + rh * std::sin(two_pi * rh), psi(rh));
    }

    LiftPoint inverse(const LiftPoint& p) const override {
        double s = p.r;
        if (s <= -2.0 || s > -1.0) return p;
        double rh = psi_inv(s);
        double y = p.x1 - rh * std::sin(two_pi * rh);
        double cy = std::cos(two_pi * y);
        // Radius before the kick: r - kick_amp(r)*cos(2*pi*y) = rh, strictly
        // increasing in r because |kick_amp'| <= 0.17.
        double r = solve_increasing([&](double t) { return t - kick_amp(t) * cy; },
                                    [&](double t) { return 1.0 - kick_amp_deriv(t) * cy; },
                                    rh, rh - 0.11, std::min(rh + 0.11, 0.0), 1e-15);
        return LiftPoint(y + r * std::sin(two_pi * r), psi(r));
    }

    void displacement_batch(const double* x1, const double* r, double* u,
                            std::size_t n) const override {
        const auto& K = kernels::active();
        std::vector<double> rr(n), ang(n), s1(n), c1(n), y(n), c2(n), rh(n), s3(n);
        for (std::size_t i = 0; i < n; ++i) {
            bool inside = r[i] > -2.0 && r[i] <= -1.0;
            rr[i] = inside ? psi_inv(r[i]) : 0.0;
            ang[i] = two_pi * rr[i];
        }
        K.sincos_batch(ang.data(), s1.data(), c1.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = x1[i] - rr[i] * s1[i];
            ang[i] = two_pi * y[i];
        }
        K.cos_batch(ang.data(), c2.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            rh[i] = rr[i] - kick_amp(rr[i]) * c2[i];
            ang[i] = two_pi * rh[i];
        }
        K.sin_batch(ang.data(), s3.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            bool inside = r[i] > -2.0 && r[i] <= -1.0;
            u[i] = inside ? y[i] + rh[i] * s3[i] - x1[i] : 0.0;
        }
    }
};

// ---------------------------------------------------------------------------
// Twisted strings indexed by the integers, seeded at angle 1/2 on the radius
// r = -1 circle; radii spread according to r_{n+1} = r_n + r_n/(n(r_n^2+1))
// and angles follow per-radius pinch-map chains.

double chain_c(double r) { return 0.3 / (1.0 + r * r); }

class BoomerangSource final : public StringSystem {
public:
    static constexpr long horizon_cap = 20000;

    std::string name() const override { return "boomerang"; }
    std::vector<std::string> seeds() const override { return {"q"}; }
    bool has_backward(const std::string& seed) const override {
        require_seed(seed);
        return true;
    }
    double compactness_cutoff() const override { return -2.5; }
    std::pair<double, double> sample_band() const override { return {-2.0, -1.0}; }

    LiftPoint at(const std::string& seed, long n) const override {
        require_seed(seed);
        long count = std::labs(n);
        check_cap(count);
        std::vector<double> r = radii(n >= 0 ? +1 : -1, count);
        double u = 0.5;
        double c = chain_c(r[count]);
        long steps = count;
        if (n >= 0)
            kernels::active().pinch_chain_forward(&u, &c, &steps, 1);
        else
            kernels::active().pinch_chain_backward(&u, &c, &steps, 1);
        return LiftPoint(u - r[count], psi(r[count]));
    }

    std::vector<LiftPoint> range(const std::string& seed, long n_last) const override {
        require_seed(seed);
        long count = std::labs(n_last);
        check_cap(count);
        std::vector<double> r = radii(n_last >= 0 ? +1 : -1, count);
        std::vector<double> u(count + 1, 0.5), c(count + 1);
        std::vector<long> steps(count + 1);
        for (long j = 0; j <= count; ++j) {
            c[j] = chain_c(r[j]);
            steps[j] = j;
        }
        if (n_last >= 0)
            kernels::active().pinch_chain_forward(u.data(), c.data(), steps.data(), u.size());
        else
            kernels::active().pinch_chain_backward(u.data(), c.data(), steps.data(), u.size());
        std::vector<LiftPoint> out;
        out.reserve(u.size());
        for (long j = 0; j <= count; ++j) out.emplace_back(u[j] - r[j], psi(r[j]));
        return out;
    }

    // Angle of string n at radius rad (used by the membership predicate).
    static double string_angle(long n, double rad) {
        double u = 0.5;
        double c = chain_c(rad);
        long steps = std::labs(n);
        if (n >= 0)
            kernels::scalar().pinch_chain_forward(&u, &c, &steps, 1);
        else
            kernels::scalar().pinch_chain_backward(&u, &c, &steps, 1);
        return u;
    }

private:
    static void require_seed(const std::string& seed) {
        if (seed != "q")
            throw precondition_error("boomerang: unknown seed '" + seed + "'");
    }
    static void check_cap(long count) {
        if (count > horizon_cap)
            throw precondition_error("boomerang: horizon exceeds the closed-form cap " +
                                     std::to_string(horizon_cap));
    }

    // r[0..count] along the requested direction (sign = +1 forward).
    static std::vector<double> radii(int sign, long count) {
        std::vector<double> r(static_cast<std::size_t>(count) + 1);
        r[0] = -1.0;
        if (sign > 0) {
            if (count >= 1) r[1] = r[0];
            for (long n = 1; n < count; ++n)
                r[n + 1] = r[n] + r[n] / (static_cast<double>(n) * (r[n] * r[n] + 1.0));
        } else {
            for (long k = 0; k < count; ++k) {
                double target = r[k];
                double kk = static_cast<double>(k + 1);
                auto f = [kk](double z) { return z - z / (kk * (z * z + 1.0)); };
                auto df = [kk](double z) {
                    double w = z * z + 1.0;
                    return 1.0 - (1.0 - z * z) / (kk * w * w);
                };
                r[k + 1] = solve_increasing(f, df, target, target - 1.0, target, 1e-14);
            }
        }
        return r;
    }
};

// ---------------------------------------------------------------------------

const MarkedPoint* find_marked(const std::vector<MarkedPoint>& v, const std::string& n) {
    for (const auto& m : v)
        if (m.name == n) return &m;
    return nullptr;
}

}  // namespace

const MarkedPoint& MarkedSystem::marked_by_name(const std::string& n) const {
    if (const MarkedPoint* m = find_marked(marked, n)) return *m;
    throw precondition_error("system '" + name + "' has no marked point '" + n + "'");
}

MarkedSystem build_periodic_strings(long a, long b) {
    if (b < 1) throw precondition_error("periodic strings: b must be >= 1");
    if (std::gcd(std::labs(a), b) != 1)
        throw precondition_error("periodic strings: a/b must be in lowest terms");

    auto src = std::make_shared<PeriodicMap>(a, b);
    MarkedSystem sys;
    sys.name = src->name();
    sys.source = src;
    sys.marked = {{"m", OrbitSeed::point(LiftPoint(0.0, -1.0)), true,
                   "string base point; rotation a/b exactly"}};
    sys.rho_hat = src->alpha();

    double bd = static_cast<double>(b);
    sys.member = [bd](const LiftPoint& p, double tol) {
        if (p.r <= -2.0) return true;
        if (p.r > -1.0) return false;
        return frac_dist(bd * p.x1) / bd <= tol;
    };
    sys.sample_member = [bd](std::mt19937_64& rng) {
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        std::uniform_int_distribution<long> deck_k(-2, 2);
        if (u01(rng) < 0.5) {
            long j = std::uniform_int_distribution<long>(0, static_cast<long>(bd) - 1)(rng);
            double r = -1.0 - 1.2 * u01(rng);
            return LiftPoint(static_cast<double>(j) / bd + static_cast<double>(deck_k(rng)), r);
        }
        return LiftPoint(6.0 * u01(rng) - 3.0, -2.0 - 2.0 * u01(rng));
    };

    double alpha = src->alpha();
    sys.proxy_lift = [alpha](double x) { return x + alpha; };
    sys.proxy_note = "boundary circle rotates rigidly by a/b";
    return sys;
}

MarkedSystem build_transverse_example() {
    auto src = std::make_shared<TransverseMap>();
    MarkedSystem sys;
    sys.name = src->name();
    sys.source = src;
    sys.marked = {
        {"q", OrbitSeed::point(LiftPoint(0.0, -1.5)), true,
         "rides the angle-0 string; forward drift oscillates unboundedly"},
        {"p", OrbitSeed::point(LiftPoint(0.5, -1.5)), true,
         "rides the angle-1/2 string; backward drift oscillates unboundedly"},
    };
    sys.rho_hat = 0.0;

    sys.member = [](const LiftPoint& p, double tol) {
        if (p.r <= -2.0) return true;
        if (p.r > -1.0) return false;
        double r = psi_inv(p.r);
        double twist = r * std::sin(two_pi * r);
        return frac_dist(p.x1 - twist) <= tol || frac_dist(p.x1 - 0.5 - twist) <= tol;
    };
    sys.sample_member = [](std::mt19937_64& rng) {
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        std::uniform_int_distribution<long> deck_k(-2, 2);
        if (u01(rng) < 0.6) {
            double theta = u01(rng) < 0.5 ? 0.0 : 0.5;
            double r = -3.0 * u01(rng);
            double x = theta + r * std::sin(two_pi * r) + static_cast<double>(deck_k(rng));
            return LiftPoint(x, psi(r));
        }
        return LiftPoint(6.0 * u01(rng) - 3.0, -2.0 - 2.0 * u01(rng));
    };

    sys.proxy_lift = [](double x) { return x; };
    sys.proxy_note = "boundary circle is fixed pointwise";
    return sys;
}

MarkedSystem build_boomerang_example() {
    auto src = std::make_shared<BoomerangSource>();
    MarkedSystem sys;
    sys.name = src->name();
    sys.source = src;
    sys.marked = {{"q", OrbitSeed::named("q"), true,
                   "seed (1/2 - r, psi(r)) at r = -1; drifts grow both ways while the "
                   "rotation estimate tends to 0"}};
    sys.rho_hat = 0.0;

    sys.member = [](const LiftPoint& p, double tol) {
        if (p.r <= -2.0) return true;
        if (p.r > -1.0) return false;
        double r = psi_inv(p.r);
        if (frac_dist(p.x1 + r) <= tol) return true;  // limit curves of the strings
        for (long n = -64; n <= 64; ++n) {
            double theta = BoomerangSource::string_angle(n, r);
            if (frac_dist(p.x1 - (theta - r)) <= tol) return true;
        }
        return false;
    };
    sys.sample_member = [](std::mt19937_64& rng) {
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        std::uniform_int_distribution<long> deck_k(-2, 2);
        std::uniform_int_distribution<long> string_n(-6, 6);
        if (u01(rng) < 0.6) {
            double r = -3.0 * u01(rng);
            double theta = BoomerangSource::string_angle(string_n(rng), r);
            return LiftPoint(theta - r + static_cast<double>(deck_k(rng)), psi(r));
        }
        return LiftPoint(6.0 * u01(rng) - 3.0, -2.0 - 2.0 * u01(rng));
    };

    sys.proxy_lift = [](double x) { return x + 0.3 * (1.0 - std::cos(two_pi * x)) / 2.0; };
    sys.proxy_note = "boundary dynamics is the pinch map with c = 0.3; rotation number 0";
    return sys;
}

MarkedSystem build_horseshoe_system() {
    MarkedSystem sys;
    sys.name = "horseshoe";
    sys.source = make_horseshoe_source();
    sys.marked = {{"periodic:10", OrbitSeed::named("periodic:10"), false,
                   "coded orbit of symbol density 1/2; any code literal works as a seed"}};
    sys.rho_hat = std::nullopt;
    sys.proxy_note = "no designated boundary dynamics; rotation read off symbol densities";
    return sys;
}

std::vector<std::string> gallery_names() {
    return {"periodic:0/1", "periodic:1/2", "periodic:1/3", "periodic:2/5",
            "transverse",   "boomerang",    "horseshoe"};
}

MarkedSystem system_by_name(const std::string& name) {
    if (name == "transverse") return build_transverse_example();
    if (name == "boomerang") return build_boomerang_example();
    if (name == "horseshoe") return build_horseshoe_system();
    if (name.rfind("periodic:", 0) == 0) {
        std::string body = name.substr(9);
        auto slash = body.find('/');
        if (slash == std::string::npos)
            throw precondition_error("system_by_name: expected 'periodic:a/b', got '" + name +
                                     "'");
        long a, b;
        try {
            a = std::stol(body.substr(0, slash));
            b = std::stol(body.substr(slash + 1));
        } catch (const std::exception&) {
            throw precondition_error("system_by_name: bad fraction in '" + name + "'");
        }
        return build_periodic_strings(a, b);
    }
    throw precondition_error("system_by_name: unknown system '" + name + "'");
}

InvarianceReport verify_invariance(const MarkedSystem& sys, int samples, double tol,
                                   std::uint64_t rng_seed) {
    const auto* fm = dynamic_cast<const FullMap*>(sys.source.get());
    if (!fm)
        throw precondition_error("verify_invariance: system '" + sys.name +
                                 "' does not provide a pointwise map");
    if (!sys.member || !sys.sample_member)
        throw precondition_error("verify_invariance: system '" + sys.name +
                                 "' has no membership data");
    if (samples < 1) throw precondition_error("verify_invariance: samples must be >= 1");

    std::mt19937_64 rng(rng_seed);
    InvarianceReport rep;
    rep.samples = samples;
    for (int i = 0; i < samples; ++i) {
        LiftPoint p = sys.sample_member(rng);
        if (!sys.member(p, tol))
            throw precondition_error("verify_invariance: sampler produced a non-member");
        if (sys.member(fm->map(p), tol)) ++rep.kept;
    }
    rep.fraction = static_cast<double>(rep.kept) / static_cast<double>(samples);
    return rep;
}

double proxy_prime_end_rotation(const MarkedSystem& sys, long n) {
    if (!sys.proxy_lift)
        throw precondition_error("proxy_prime_end_rotation: system '" + sys.name +
                                 "' has no designated boundary dynamics");
    if (n < 1) throw precondition_error("proxy_prime_end_rotation: n must be >= 1");
    double x = 0.5;
    for (long i = 0; i < n; ++i) x = sys.proxy_lift(x);
    return (x - 0.5) / static_cast<double>(n);
}

}  // namespace rotlab
