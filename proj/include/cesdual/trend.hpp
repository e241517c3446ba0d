// Finite-budget trend classification for asymptotic quantities.
//
// Every "sup_i ... < infinity" / "lim_i ... = 0" style condition is decided
// by sampling its quantity on dyadic blocks [2^k, 2^{k+1}) up to I_max and
// classifying the sequence of block maxima with a fixed deterministic rule.
// The verdict is numerical evidence at a finite budget, never a proof.

#ifndef CESDUAL_TREND_HPP
#define CESDUAL_TREND_HPP

#include <functional>
#include <string>
#include <vector>

namespace cesdual::trend {

enum class TrendClass {
    ConvergesToZero,
    ConvergesTo,
    BoundedAbove,
    Diverges,
    Inconclusive,
};

const char* to_string(TrendClass c);

// Quantities are carried in log-space throughout; they are exponentiated
// only for display.  Scale tells detect_trend how to read the sampler.
enum class Scale {
    Linear, // sampler returns the quantity itself
    Log,    // sampler returns log(quantity)
};

struct TrendReport {
    struct Block {
        long upper;       // largest index examined in the block
        double log_value; // log of the block maximum (-inf for max == 0)
    };
    std::vector<Block> block_maxima;
    TrendClass classification = TrendClass::Inconclusive;
    // log of the estimated limit (ConvergesTo) or of the observed bound
    // (BoundedAbove); unused otherwise.
    double log_limit_or_bound = 0.0;
};

// Decision rule (eps = 0.05, tau_zero = 1e-8, on log block maxima y_k):
//  - Diverges       : any of the last 3 blocks is +inf, or the last 3 ratios
//                     each exceed 1+eps, or the last-half maxima rise
//                     monotonically by a total factor > exp(0.15) without the
//                     per-block increments shrinking.
//  - ConvergesToZero: maxima decreasing and either the last one is below
//                     tau_zero or the last 3 ratios are each below 0.8.
//  - ConvergesTo(L) : increments shrink geometrically (Aitken ratio <= 0.8
//                     over the last blocks); L is the extrapolated limit.
//  - BoundedAbove(B): last-half maxima within factor 1+eps of the first-half
//                     maxima and drift over the last half below 1+eps, or a
//                     monotone rise whose increments shrink by factor < 0.4.
//  - Inconclusive   : anything else (including a slow, unstabilized fall).
//
// Samples evaluating to NaN (an inf-inf cancellation in log-space) are
// skipped; blocks with no valid sample are dropped.  Fewer than 5 usable
// blocks yields Inconclusive.
//
// Requires I_max >= 64 and a power of two.
TrendReport detect_trend(const std::function<double(long)>& sampler, long i_max,
                         Scale scale = Scale::Linear);

} // namespace cesdual::trend

#endif
