#include "cesdual/trend.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cesdual::trend {

namespace {

constexpr double kTheta = 0.04879016416943205; // log(1 + 0.05)
constexpr double kLogTauZero = -18.420680743952367; // log(1e-8)
constexpr double kLogGeoDecay = -0.2231435513142097; // log(0.8)
constexpr double kAitkenMax = 0.7;
constexpr double kThetaDiverge = 0.15; // total log-rise over the last half
constexpr double kDiffShrink = 0.4;

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_finite(double y) { return std::isfinite(y); }

} // namespace

const char* to_string(TrendClass c) {
    switch (c) {
        case TrendClass::ConvergesToZero: return "ConvergesToZero";
        case TrendClass::ConvergesTo: return "ConvergesTo";
        case TrendClass::BoundedAbove: return "BoundedAbove";
        case TrendClass::Diverges: return "Diverges";
        case TrendClass::Inconclusive: return "Inconclusive";
    }
    return "?";
}

TrendReport detect_trend(const std::function<double(long)>& sampler, long i_max,
                         Scale scale) {
    if (i_max < 64 || (i_max & (i_max - 1)) != 0)
        throw std::invalid_argument("detect_trend: I_max must be a power of two >= 64");

    TrendReport rep;
    for (long lo = 1; lo < i_max; lo *= 2) {
        long hi = std::min(2 * lo - 1, i_max - 1);
        double best = -kInf;
        bool seen = false;
        for (long i = lo; i <= hi; ++i) {
            double s;
            try {
                s = sampler(i);
            } catch (const std::exception& e) {
                throw std::runtime_error("sampler failed at i = " + std::to_string(i) +
                                         ": " + e.what());
            }
            if (std::isnan(s)) continue; // inf - inf cancellation: skip
            double y;
            if (scale == Scale::Log) {
                y = s;
            } else {
                if (s <= 0) y = -kInf; // only the positive part can dominate a sup
                else y = std::log(s);
            }
            best = std::max(best, y);
            seen = true;
        }
        if (seen) rep.block_maxima.push_back({hi, best});
    }

    // Leading blocks whose maximum is 0 (log = -inf) carry no information
    // about growth; classify the sequence that starts at the first nonzero
    // block.  The full block list stays in the report.
    std::vector<double> y;
    for (const auto& b : rep.block_maxima)
        if (!y.empty() || b.log_value != -kInf) y.push_back(b.log_value);
    const std::size_t K = y.size();
    if (K == 0 && !rep.block_maxima.empty()) {
        // identically zero at every examined index
        rep.classification = TrendClass::ConvergesToZero;
        return rep;
    }
    if (K < 5) {
        rep.classification = TrendClass::Inconclusive;
        return rep;
    }

    // +inf at the tail: the quantity overflowed while still growing.
    if (y[K - 1] == kInf || y[K - 2] == kInf || y[K - 3] == kInf) {
        rep.classification = TrendClass::Diverges;
        return rep;
    }

    auto diff = [&](std::size_t k) { return y[k + 1] - y[k]; }; // log-ratio

    // 1. Strict divergence: last three ratios each above 1 + eps.
    if (diff(K - 2) > kTheta && diff(K - 3) > kTheta && diff(K - 4) > kTheta) {
        rep.classification = TrendClass::Diverges;
        return rep;
    }

    bool nonincreasing_tail = true, strictly_rising_tail = true;
    for (std::size_t k = K / 2; k + 1 < K; ++k) {
        if (diff(k) > 0) nonincreasing_tail = false;
        if (!(diff(k) > 0)) strictly_rising_tail = false;
    }
    // An ending run of positive, nondecreasing increments is how creeping
    // divergence (log i against powers of log log i) looks at any feasible
    // budget; a true plateau approaches its bound with shrinking increments.
    bool accelerating_rise = diff(K - 2) > 0 && diff(K - 3) > 0 &&
                             diff(K - 4) > 0 && diff(K - 2) >= diff(K - 3) &&
                             diff(K - 3) >= diff(K - 4);

    // 2. Convergence to zero: decreasing with either the last maximum below
    //    tau_zero or sustained geometric decay.
    if (nonincreasing_tail && y[K - 1] <= y[0]) {
        bool below_tau = y[K - 1] < kLogTauZero;
        bool geometric = diff(K - 2) < kLogGeoDecay && diff(K - 3) < kLogGeoDecay &&
                         diff(K - 4) < kLogGeoDecay;
        if (below_tau || geometric) {
            rep.classification = TrendClass::ConvergesToZero;
            return rep;
        }
    }

    // 3. Convergence to a finite positive limit: increments of y shrink
    //    geometrically (Aitken ratios bounded by kAitkenMax).  Needs finite
    //    values over the tail.
    {
        bool finite_tail = is_finite(y[K - 1]) && is_finite(y[K - 2]) &&
                           is_finite(y[K - 3]) && is_finite(y[K - 4]);
        if (finite_tail) {
            double d1 = diff(K - 4), d2 = diff(K - 3), d3 = diff(K - 2);
            if (d1 != 0 && d2 != 0 &&
                std::abs(d3) > 0 && // still moving: a frozen sequence is Bounded below
                std::abs(d2 / d1) <= kAitkenMax && std::abs(d3 / d2) <= kAitkenMax) {
                double r = d3 / d2;
                double log_limit = y[K - 1] + d3 * r / (1.0 - r);
                if (log_limit >= kLogTauZero) {
                    rep.classification = TrendClass::ConvergesTo;
                    rep.log_limit_or_bound = log_limit;
                    return rep;
                }
                rep.classification = TrendClass::ConvergesToZero;
                return rep;
            }
        }
    }

    // 4. Stabilized bound: the last-half maxima stay within factor 1+eps of
    //    the first-half maxima and the drift over the last half is below
    //    1+eps.  A tail that rises at every block is excluded, however small
    //    the rise: creeping growth (log i vs (log log i)^n) otherwise passes
    //    as a plateau at any feasible budget.
    {
        double first_half = -kInf, last_half = -kInf;
        for (std::size_t k = 0; k < K / 2; ++k) first_half = std::max(first_half, y[k]);
        for (std::size_t k = K / 2; k < K; ++k) last_half = std::max(last_half, y[k]);
        bool spec_rule = last_half <= first_half + kTheta;
        double drift = y[K - 1] - y[K / 2];
        if (spec_rule && std::abs(drift) <= kTheta && !strictly_rising_tail &&
            !accelerating_rise) {
            rep.classification = TrendClass::BoundedAbove;
            rep.log_limit_or_bound = std::max(first_half, last_half);
            return rep;
        }
    }

    // 4b. Globally nonincreasing: the sup is attained at the first block, so
    //     the quantity is bounded even when the fall never stabilizes.  A
    //     sequence that rose at any earlier block does not qualify.
    {
        bool nonincreasing_all = true;
        for (std::size_t k = 0; k + 1 < K; ++k)
            if (diff(k) > 0) nonincreasing_all = false;
        if (nonincreasing_all && is_finite(y[0])) {
            rep.classification = TrendClass::BoundedAbove;
            rep.log_limit_or_bound = y[0];
            return rep;
        }
    }

    // 5. Fit and compare on the last-half tail.
    {
        std::size_t lo = K / 2;
        bool rising = true, falling = true;
        for (std::size_t k = lo; k + 1 < K; ++k) {
            if (diff(k) < 0) rising = false;
            if (diff(k) > 0) falling = false;
        }
        if (rising && is_finite(y[K - 1]) && is_finite(y[lo])) {
            double total = y[K - 1] - y[lo];
            if (total > kThetaDiverge) {
                rep.classification = TrendClass::Diverges;
                return rep;
            }
            double d_first = diff(lo), d_last = diff(K - 2);
            if (d_first > 0 && d_last <= kDiffShrink * d_first) {
                rep.classification = TrendClass::BoundedAbove;
                rep.log_limit_or_bound = y[K - 1] + d_last / (1.0 - kDiffShrink);
                return rep;
            }
            rep.classification = TrendClass::Inconclusive;
            return rep;
        }
        if (!rising && !falling && is_finite(y[K - 1])) {
            // Oscillating tail: bounded if the swing stays within 2*theta.
            double tmin = kInf, tmax = -kInf;
            for (std::size_t k = lo; k < K; ++k) {
                tmin = std::min(tmin, y[k]);
                tmax = std::max(tmax, y[k]);
            }
            if (tmax - tmin <= 2 * kTheta && !accelerating_rise) {
                rep.classification = TrendClass::BoundedAbove;
                rep.log_limit_or_bound = tmax;
                return rep;
            }
        }
    }

    rep.classification = TrendClass::Inconclusive;
    return rep;
}

} // namespace cesdual::trend
