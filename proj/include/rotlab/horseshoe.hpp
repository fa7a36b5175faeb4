#pragma once
// A model horseshoe on D = [0,1] x [-2,-1] inside the annulus.  Two vertical
// strips S0 = [0,1/5] x [-2,-1] and S1 = [3/5,4/5] x [-2,-1] are stretched
// across D; the S1 branch also advances one deck unit.  Symbolic codes over
// {0,1} drive explicit orbits: x1(k) = s_k + cantor(shift^k a) with s_k the
// number of 1s consumed so far, so the average symbol density controls the
// rotation of the coded orbit.

#include <memory>
#include <string>
#include <vector>

#include "rotlab/geom.hpp"
#include "rotlab/system.hpp"

namespace rotlab {

// Strip and branch constants.  Branch 0: x -> 5x, r -> -2 + (r+2)/5.
// Branch 1: x -> 5x - 2 (one deck unit gained), r -> -1.2 + (r+2)/5.
inline constexpr double hs_strip0_lo = 0.0, hs_strip0_hi = 0.2;
inline constexpr double hs_strip1_lo = 0.6, hs_strip1_hi = 0.8;
inline constexpr double hs_r_lo = -2.0, hs_r_hi = -1.0;

// One-sided infinite (or finite) symbol sequence over {0,1}.
//
// Literal forms accepted by parse_code:
//   "periodic:100"          repeat the word 100 forever
//   "list:0110"             finite sequence
//   "blocks:0*4,1*16,0*64"  explicit constant blocks (finite)
//   "blocks:0*4,1*16,..."   blocks continued forever: lengths keep growing by
//                           the ratio of the last two given blocks, symbols
//                           keep alternating
class SymbolCode {
public:
    static SymbolCode periodic(std::vector<int> word);
    static SymbolCode finite(std::vector<int> symbols);
    static SymbolCode blocks(std::vector<std::pair<int, long>> schedule, bool continued);

    // Symbol at position i >= 0; throws past the end of a finite code.
    int at(long i) const;

    // Number of 1s among positions 0..n-1.
    long ones_before(long n) const;

    // shift^k of the code (k >= 0).
    SymbolCode shifted(long k) const;

    // Number of symbols remaining, or -1 when infinite.
    long size() const;

    std::string literal() const;  // canonical literal form

private:
    enum class Kind { periodic, finite, blocks };
    Kind kind_ = Kind::finite;
    std::vector<int> word_;                         // periodic / finite
    std::vector<std::pair<int, long>> schedule_;    // blocks
    bool continued_ = false;
    long offset_ = 0;

    int base_at(long i) const;
    long base_ones(long n) const;
};

SymbolCode parse_code(const std::string& literal);

// x-coordinate of the point of the invariant Cantor set whose itinerary
// starts with the first `depth` symbols of the code (seeded at the strip
// midpoint beyond that): composes the branch contractions right to left.
double cantor_x(const SymbolCode& code, int depth);

// Coded orbit point at time k: (ones_before(k) + cantor_x(shift^k code), -1.5).
LiftPoint code_point(const SymbolCode& code, long k, int depth = 24);

// One application of the explicit branch map.  The point (reduced mod deck)
// must lie in the strip of the given symbol and in the r-band of D.
LiftPoint horseshoe_step(const LiftPoint& p, int symbol);

struct ShiftBoundReport {
    double max_dev = 0.0;  // max_k |x1(k) - x1(0) - ones_before(k)|
    long arg_k = 0;
    bool pass = false;     // max_dev <= 1 (both Cantor offsets lie in [0,1))
};

// Checks that the coded orbit advances exactly with the running count of 1s,
// up to the sub-deck Cantor offset.
ShiftBoundReport verify_shift_bound(const SymbolCode& code, long n);

struct RotationBounds {
    double lo = 0.0;        // min of ones_before(k)/k over k in [n/2, n]
    double hi = 0.0;        // max over the same window
    double estimate = 0.0;  // ones_before(n)/n
};

RotationBounds rotation_bounds_from_code(const SymbolCode& code, long n);

// Cross-checks the coded orbit against the branch map using exact base-5
// digit strings: stepping the depth-digit representation k times must agree
// with the freshly coded shift^k point through digit depth - n, and every
// double-precision Cantor point must lie inside its strip.  Requires
// depth > n.  Returns true when every k <= n passes.
bool itinerary_shift_check(const SymbolCode& code, long n, int depth);

// The coded orbits exposed as a string system: any code literal is a valid
// seed name; orbits are forward-only.
std::shared_ptr<StringSystem> make_horseshoe_source();

}  // namespace rotlab
