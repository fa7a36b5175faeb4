#include "rotlab/horseshoe.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace rotlab {
namespace {

void check_symbols(const std::vector<int>& w) {
    if (w.empty()) throw precondition_error("symbol code: empty word");
    for (int s : w)
        if (s != 0 && s != 1) throw precondition_error("symbol code: symbols must be 0 or 1");
}

}  // namespace

SymbolCode SymbolCode::periodic(std::vector<int> word) {
    check_symbols(word);
    SymbolCode c;
    c.kind_ = Kind::periodic;
    c.word_ = std::move(word);
    return c;
}

SymbolCode SymbolCode::finite(std::vector<int> symbols) {
    check_symbols(symbols);
    SymbolCode c;
    c.kind_ = Kind::finite;
    c.word_ = std::move(symbols);
    return c;
}

SymbolCode SymbolCode::blocks(std::vector<std::pair<int, long>> schedule, bool continued) {
    if (schedule.empty()) throw precondition_error("symbol code: empty block schedule");
    for (auto& [sym, len] : schedule) {
        if (sym != 0 && sym != 1)
            throw precondition_error("symbol code: block symbols must be 0 or 1");
        if (len < 1) throw precondition_error("symbol code: block lengths must be >= 1");
    }
    if (continued && schedule.size() < 2)
        throw precondition_error("symbol code: continued blocks need at least 2 explicit blocks");
    SymbolCode c;
    c.kind_ = Kind::blocks;
    c.schedule_ = std::move(schedule);
    c.continued_ = continued;
    return c;
}

int SymbolCode::base_at(long i) const {
    switch (kind_) {
        case Kind::periodic:
            return word_[static_cast<std::size_t>(i % static_cast<long>(word_.size()))];
        case Kind::finite:
            if (i >= static_cast<long>(word_.size()))
                throw precondition_error("symbol code: position past the end of a finite code");
            return word_[static_cast<std::size_t>(i)];
        case Kind::blocks: {
            long rem = i;
            for (const auto& [sym, len] : schedule_) {
                if (rem < len) return sym;
                rem -= len;
            }
            if (!continued_)
                throw precondition_error("symbol code: position past the end of the blocks");
            long prev = schedule_[schedule_.size() - 2].second;
            long last = schedule_.back().second;
            long factor = std::max(1L, (last + prev / 2) / prev);
            long len = last;
            int sym = schedule_.back().first;
            for (;;) {
                len *= factor;
                sym = 1 - sym;
                if (len > (1L << 60))
                    throw precondition_error("symbol code: position too deep for block growth");
                if (rem < len) return sym;
                rem -= len;
            }
        }
    }
    throw precondition_error("symbol code: corrupt kind");
}

long SymbolCode::base_ones(long n) const {
    switch (kind_) {
        case Kind::periodic: {
            long q = static_cast<long>(word_.size());
            long wsum = std::accumulate(word_.begin(), word_.end(), 0L);
            long acc = (n / q) * wsum;
            for (long i = 0; i < n % q; ++i) acc += word_[static_cast<std::size_t>(i)];
            return acc;
        }
        case Kind::finite: {
            if (n > static_cast<long>(word_.size()))
                throw precondition_error("symbol code: sum past the end of a finite code");
            long acc = 0;
            for (long i = 0; i < n; ++i) acc += word_[static_cast<std::size_t>(i)];
            return acc;
        }
        case Kind::blocks: {
            long rem = n, acc = 0;
            for (const auto& [sym, len] : schedule_) {
                long take = std::min(rem, len);
                if (sym == 1) acc += take;
                rem -= take;
                if (rem == 0) return acc;
            }
            if (!continued_)
                throw precondition_error("symbol code: sum past the end of the blocks");
            long prev = schedule_[schedule_.size() - 2].second;
            long last = schedule_.back().second;
            long factor = std::max(1L, (last + prev / 2) / prev);
            long len = last;
            int sym = schedule_.back().first;
            while (rem > 0) {
                len *= factor;
                sym = 1 - sym;
                if (len > (1L << 60))
                    throw precondition_error("symbol code: sum too deep for block growth");
                long take = std::min(rem, len);
                if (sym == 1) acc += take;
                rem -= take;
            }
            return acc;
        }
    }
    throw precondition_error("symbol code: corrupt kind");
}

int SymbolCode::at(long i) const {
    if (i < 0) throw precondition_error("symbol code: negative position");
    return base_at(i + offset_);
}

long SymbolCode::ones_before(long n) const {
    if (n < 0) throw precondition_error("symbol code: negative prefix length");
    return base_ones(offset_ + n) - base_ones(offset_);
}

SymbolCode SymbolCode::shifted(long k) const {
    if (k < 0) throw precondition_error("symbol code: negative shift");
    SymbolCode c = *this;
    c.offset_ += k;
    return c;
}

long SymbolCode::size() const {
    long total;
    switch (kind_) {
        case Kind::periodic:
            return -1;
        case Kind::finite:
            total = static_cast<long>(word_.size());
            break;
        case Kind::blocks:
            if (continued_) return -1;
            total = 0;
            for (const auto& [sym, len] : schedule_) total += len;
            break;
        default:
            return -1;
    }
    return std::max(0L, total - offset_);
}

std::string SymbolCode::literal() const {
    std::ostringstream os;
    if (offset_ > 0) os << "shift" << offset_ << ":";
    switch (kind_) {
        case Kind::periodic:
            os << "periodic:";
            for (int s : word_) os << s;
            break;
        case Kind::finite:
            os << "list:";
            for (int s : word_) os << s;
            break;
        case Kind::blocks:
            os << "blocks:";
            for (std::size_t i = 0; i < schedule_.size(); ++i) {
                if (i) os << ",";
                os << schedule_[i].first << "*" << schedule_[i].second;
            }
            if (continued_) os << ",...";
            break;
    }
    return os.str();
}

SymbolCode parse_code(const std::string& literal) {
    auto colon = literal.find(':');
    if (colon == std::string::npos)
        throw precondition_error("parse_code: expected '<kind>:<body>' in '" + literal + "'");
    std::string head = literal.substr(0, colon);
    std::string body = literal.substr(colon + 1);

    auto parse_word = [&](const std::string& s) {
        std::vector<int> w;
        for (char ch : s) {
            if (ch != '0' && ch != '1')
                throw precondition_error("parse_code: symbols must be 0/1 in '" + literal + "'");
            w.push_back(ch - '0');
        }
        return w;
    };

    if (head == "periodic") return SymbolCode::periodic(parse_word(body));
    if (head == "list") return SymbolCode::finite(parse_word(body));
    if (head == "blocks") {
        std::vector<std::pair<int, long>> schedule;
        bool continued = false;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok == "...") {
                continued = true;
                break;
            }
            auto star = tok.find('*');
            if (star == std::string::npos || star == 0)
                throw precondition_error("parse_code: block token '" + tok +
                                         "' is not '<sym>*<len>'");
            int sym;
            long len;
            try {
                sym = std::stoi(tok.substr(0, star));
                len = std::stol(tok.substr(star + 1));
            } catch (const std::exception&) {
                throw precondition_error("parse_code: bad block token '" + tok + "'");
            }
            schedule.emplace_back(sym, len);
        }
        return SymbolCode::blocks(std::move(schedule), continued);
    }
    throw precondition_error("parse_code: unknown code kind '" + head + "'");
}

double cantor_x(const SymbolCode& code, int depth) {
    if (depth < 0) throw precondition_error("cantor_x: negative depth");
    double x = 0.5;  // strip midpoint seed: base-5 digits 2222...
    for (int i = depth - 1; i >= 0; --i)
        x = (x + 3.0 * static_cast<double>(code.at(i))) / 5.0;
    return x;
}

LiftPoint code_point(const SymbolCode& code, long k, int depth) {
    if (k < 0) throw precondition_error("code_point: negative time");
    long sz = code.size();
    int d = depth;
    if (sz >= 0) {
        if (k > sz) throw precondition_error("code_point: finite code exhausted");
        d = static_cast<int>(std::min<long>(depth, sz - k));
    }
    double x = static_cast<double>(code.ones_before(k)) + cantor_x(code.shifted(k), d);
    return LiftPoint(x, -1.5);
}

LiftPoint horseshoe_step(const LiftPoint& p, int symbol) {
    if (symbol != 0 && symbol != 1)
        throw precondition_error("horseshoe_step: symbol must be 0 or 1");
    if (!(p.r >= hs_r_lo && p.r <= hs_r_hi))
        throw precondition_error("horseshoe_step: point outside the r-band of D");
    double m = std::floor(p.x1);
    double xf = p.x1 - m;
    if (symbol == 0) {
        if (!(xf >= hs_strip0_lo && xf <= hs_strip0_hi))
            throw precondition_error("horseshoe_step: point not in strip 0");
        return LiftPoint(m + 5.0 * xf, -2.0 + (p.r + 2.0) / 5.0);
    }
    if (!(xf >= hs_strip1_lo && xf <= hs_strip1_hi))
        throw precondition_error("horseshoe_step: point not in strip 1");
    return LiftPoint(m + 5.0 * xf - 2.0, -1.2 + (p.r + 2.0) / 5.0);
}

ShiftBoundReport verify_shift_bound(const SymbolCode& code, long n) {
    if (n < 1) throw precondition_error("verify_shift_bound: n must be >= 1");
    ShiftBoundReport rep;
    double x0 = code_point(code, 0).x1;
    for (long k = 0; k <= n; ++k) {
        double dev = std::fabs(code_point(code, k).x1 - x0 -
                               static_cast<double>(code.ones_before(k)));
        if (dev > rep.max_dev) {
            rep.max_dev = dev;
            rep.arg_k = k;
        }
    }
    rep.pass = rep.max_dev <= 1.0;
    return rep;
}

RotationBounds rotation_bounds_from_code(const SymbolCode& code, long n) {
    if (n < 2) throw precondition_error("rotation_bounds_from_code: n must be >= 2");
    RotationBounds rb;
    rb.lo = 1.0;
    rb.hi = 0.0;
    long lo_k = std::max(1L, n / 2);
    long ones = code.ones_before(lo_k);
    for (long k = lo_k; k <= n; ++k) {
        double v = static_cast<double>(ones) / static_cast<double>(k);
        rb.lo = std::min(rb.lo, v);
        rb.hi = std::max(rb.hi, v);
        if (k < n) ones += code.at(k);
    }
    rb.estimate = static_cast<double>(code.ones_before(n)) / static_cast<double>(n);
    return rb;
}

bool itinerary_shift_check(const SymbolCode& code, long n, int depth) {
    if (n < 1 || depth <= n)
        throw precondition_error("itinerary_shift_check: need n >= 1 and depth > n");

    // Base-5 digit string of the depth-truncated itinerary point: digit i is
    // 3*a(i) for i < depth, then the seed's digits (all 2s) forever.
    auto digit = [&](const SymbolCode& c, int trunc, long i) -> int {
        return i < trunc ? 3 * c.at(i) : 2;
    };

    for (long k = 0; k <= n; ++k) {
        SymbolCode sk = code.shifted(k);

        // Exact comparison: dropping k digits of the depth-digit expansion
        // must agree with the fresh depth-digit expansion of shift^k through
        // position depth - n; the first differing digit bounds the gap by
        // 5^-(first difference).
        long first_diff = -1;
        for (long i = 0; i < depth + 4; ++i) {
            int stepped = digit(code, static_cast<int>(depth), k + i);
            int fresh = digit(sk, static_cast<int>(depth), i);
            if (stepped != fresh) {
                first_diff = i;
                break;
            }
        }
        if (first_diff >= 0 && first_diff < depth - n) return false;

        // Double-precision path: the fresh point sits inside its strip, and
        // one application of the branch map lands on the next fresh point.
        double x = cantor_x(sk, depth);
        int sym = code.at(k);
        bool in_strip = sym == 0 ? (x >= hs_strip0_lo && x <= hs_strip0_hi)
                                 : (x >= hs_strip1_lo && x <= hs_strip1_hi);
        if (!in_strip) return false;

        if (k < n) {
            LiftPoint stepped = horseshoe_step(LiftPoint(x, -1.5), sym);
            if (!(stepped.r >= hs_r_lo && stepped.r <= hs_r_hi)) return false;
            double fresh_next = static_cast<double>(sym) + cantor_x(code.shifted(k + 1), depth);
            double tol = 2.0 * std::pow(5.0, -static_cast<double>(depth - k - 1)) + 1e-12;
            if (std::fabs(stepped.x1 - fresh_next) > tol) return false;
        }
    }
    return true;
}

namespace {

// Coded horseshoe orbits as a forward-only string system.
class CodeOrbitSource final : public StringSystem {
public:
    std::string name() const override { return "horseshoe"; }
    std::vector<std::string> seeds() const override { return {"periodic:10"}; }
    bool has_backward(const std::string&) const override { return false; }

    double compactness_cutoff() const override { return -2.5; }
    std::pair<double, double> sample_band() const override { return {-2.0, -1.0}; }

    LiftPoint at(const std::string& seed, long n) const override {
        if (n < 0)
            throw precondition_error("horseshoe: coded orbits are forward-only");
        return code_point(cached(seed), n);
    }

    std::vector<LiftPoint> range(const std::string& seed, long n_last) const override {
        if (n_last < 0)
            throw precondition_error("horseshoe: coded orbits are forward-only");
        const SymbolCode& code = cached(seed);
        std::vector<LiftPoint> out;
        out.reserve(static_cast<std::size_t>(n_last) + 1);
        for (long k = 0; k <= n_last; ++k) out.push_back(code_point(code, k));
        return out;
    }

private:
    const SymbolCode& cached(const std::string& seed) const {
        auto it = cache_.find(seed);
        if (it == cache_.end()) it = cache_.emplace(seed, parse_code(seed)).first;
        return it->second;
    }
    mutable std::map<std::string, SymbolCode> cache_;
};

}  // namespace

std::shared_ptr<StringSystem> make_horseshoe_source() {
    return std::make_shared<CodeOrbitSource>();
}

}  // namespace rotlab
