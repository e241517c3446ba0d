// Iteration experiments on truncated Cesàro sections: power boundedness of
// C in the weighted sup-norms q_n, convergence of the Cesàro means T_[k] to
// the mean-ergodic projection x -> x_1 * ones, and the exact closed-range
// inverse on the {x : x_1 = 0} subspace.

#ifndef CESDUAL_DYNAMICS_HPP
#define CESDUAL_DYNAMICS_HPP

#include <complex>
#include <string>
#include <vector>

#include "cesdual/rational.hpp"
#include "cesdual/weights.hpp"

namespace cesdual::dynamics {

using Complex = std::complex<double>;

struct ErgodicReport {
    std::vector<long> k_schedule;     // iterate counts examined
    std::vector<double> distances;    // q_n(T_[k]x - x_1*ones), aligned with k_schedule
    std::vector<double> norm_ratios;  // q_n(C^k x)/q_n(x), aligned with k_schedule
    long bound_violations = 0;        // q_n(C^k x) > q_n(x)*(1 + 1e-12) events
    bool decreasing_ok = false;       // distances eventually nonincreasing
    bool halving_ok = false;          // d_last <= d_first / 2
    std::string note;
};

// Verifies q_n(C^k x) <= q_n(x)*(1 + 1e-12) for k = 1..k_max (k_max <= 2^11)
// and counts violations.  Since C is lower triangular, (C^k x)_i depends only
// on x_1..x_i, so the iteration itself is exact at every truncation; the
// guard v_n(N)*max|x| < guard_tol * q_n(x) controls how faithfully q_n of the
// truncation represents q_n of an infinite vector continuing at the same
// magnitude.  For finitely supported test vectors (the truncation IS the
// vector) callers may relax guard_tol; slowly decaying weight families cannot
// meet 1e-15 at any feasible N.  Throws std::runtime_error on guard
// violation, std::invalid_argument on bad arguments.  The caller is expected
// to have checked (Ginf1) numerically; the q_n-contraction is only a theorem
// under it.
ErgodicReport power_bound_check(const weights::WeightFamily& family, long n,
                                const std::vector<Complex>& x, long k_max,
                                double guard_tol = 1e-15);

// Computes T_[k]x = (1/k) sum_{j<=k} C^j x incrementally at each k of the
// schedule and d_k = q_n(T_[k]x - x_1*ones); fills distances, norm_ratios and
// the qualitative flags (eventually decreasing; d_last <= d_first/2).  The
// schedule must be strictly increasing with max <= 2^11.  Same guard as
// power_bound_check.
ErgodicReport cesaro_means(const weights::WeightFamily& family, long n,
                           const std::vector<Complex>& x,
                           const std::vector<long>& k_schedule,
                           double guard_tol = 1e-15);

// CSV rows "k,distance,norm_ratio" with header.
std::string to_csv(const ErgodicReport& report);

struct RangeInverseReport {
    long N = 0;
    bool tb_identity = false;       // T*B = I exactly
    bool bt_identity = false;       // B*T = I exactly
    double row_sum_ratio_max = 0.0; // max_i (sum_j |b_ij|) / (3 + log i)
};

// On the x_1 = 0 subspace in shifted coordinates, I - C acts as the
// lower-triangular T with i/(i+1) on the diagonal and -1/(i+1) below; its
// inverse B has (i+1)/i on the diagonal and 1/j at (i, j), j < i.  Verifies
// T*B = B*T = I_N exactly in rationals and reports the B row-sum ratio
// against the 3 + log i envelope (<= 1 for all i >= 1).
RangeInverseReport range_inverse_check(long N);

// C * ones = ones exactly (rational kind) at truncation N.
bool ones_fixed_point(long N);

} // namespace cesdual::dynamics

#endif
