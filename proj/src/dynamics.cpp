#include "cesdual/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "cesdual/kernels.hpp"
#include "cesdual/sections.hpp"

namespace cesdual::dynamics {

namespace {

constexpr long kMaxIterates = 1L << 11;
constexpr double kNormSlack = 1e-12;

double check_guard(const weights::WeightFamily& family, long n,
                   const std::vector<Complex>& x, double guard_tol) {
    if (x.empty()) throw std::invalid_argument("dynamics: empty vector");
    if (n < 1) throw std::invalid_argument("dynamics: need n >= 1");
    const long N = static_cast<long>(x.size());
    double max_abs = 0.0;
    for (const auto& z : x) max_abs = std::max(max_abs, std::abs(z));
    double q0 = weights::q_norm(family, n, x);
    if (max_abs == 0.0) return q0; // zero vector: nothing to truncate
    // log-space comparison: tiny tail weights underflow linear products
    double lhs = family.logV(n, N) + std::log(max_abs);
    double rhs = std::log(guard_tol) + std::log(q0);
    if (!(lhs < rhs)) {
        std::ostringstream os;
        os << "dynamics: truncation guard violated for " << family.name()
           << " at n=" << n << ", N=" << N << ": v_n(N)*max|x| = "
           << std::exp(lhs) << " >= " << guard_tol << " * q_n(x) = "
           << std::exp(rhs);
        throw std::runtime_error(os.str());
    }
    return q0;
}

} // namespace

ErgodicReport power_bound_check(const weights::WeightFamily& family, long n,
                                const std::vector<Complex>& x, long k_max,
                                double guard_tol) {
    if (k_max < 1 || k_max > kMaxIterates)
        throw std::invalid_argument("dynamics: need 1 <= k_max <= 2^11");
    const double q0 = check_guard(family, n, x, guard_tol);
    ErgodicReport r;
    std::vector<Complex> y = x;
    for (long k = 1; k <= k_max; ++k) {
        kernels::cesaro_apply(y);
        double qk = weights::q_norm(family, n, y);
        r.k_schedule.push_back(k);
        r.norm_ratios.push_back(q0 > 0 ? qk / q0 : 0.0);
        if (qk > q0 * (1.0 + kNormSlack)) ++r.bound_violations;
    }
    std::ostringstream os;
    os << "numerically observed " << r.bound_violations
       << " norm-bound violations over " << k_max << " iterates";
    r.note = os.str();
    return r;
}

ErgodicReport cesaro_means(const weights::WeightFamily& family, long n,
                           const std::vector<Complex>& x,
                           const std::vector<long>& k_schedule,
                           double guard_tol) {
    if (k_schedule.empty() || k_schedule.front() < 1 ||
        std::adjacent_find(k_schedule.begin(), k_schedule.end(),
                           std::greater_equal<long>()) != k_schedule.end() ||
        k_schedule.back() > kMaxIterates)
        throw std::invalid_argument(
            "dynamics: schedule must be strictly increasing with max <= 2^11");
    const double q0 = check_guard(family, n, x, guard_tol);
    const std::size_t N = x.size();

    ErgodicReport r;
    std::vector<Complex> y = x;               // C^k x
    std::vector<Complex> accum(N, Complex(0)); // sum_{j<=k} C^j x
    std::vector<Complex> diff(N);
    const Complex x1 = x[0];
    std::size_t next = 0;
    for (long k = 1; k <= k_schedule.back(); ++k) {
        kernels::cesaro_apply(y);
        for (std::size_t i = 0; i < N; ++i) accum[i] += y[i];
        if (k == k_schedule[next]) {
            for (std::size_t i = 0; i < N; ++i)
                diff[i] = accum[i] / static_cast<double>(k) - x1;
            r.k_schedule.push_back(k);
            r.distances.push_back(weights::q_norm(family, n, diff));
            double qk = weights::q_norm(family, n, y);
            r.norm_ratios.push_back(q0 > 0 ? qk / q0 : 0.0);
            if (qk > q0 * (1.0 + kNormSlack)) ++r.bound_violations;
            ++next;
        }
    }

    // eventually nonincreasing: some suffix of the schedule is monotone
    std::size_t tail_start = r.distances.size();
    while (tail_start > 1 &&
           r.distances[tail_start - 2] >= r.distances[tail_start - 1])
        --tail_start;
    r.decreasing_ok = tail_start <= (r.distances.size() + 1) / 2;
    r.halving_ok = r.distances.back() <= r.distances.front() / 2.0 ||
                   r.distances.front() == 0.0;
    std::ostringstream os;
    os << "numerically: distances "
       << (r.decreasing_ok ? "eventually decreasing" : "not settled")
       << ", d_last/d_first = "
       << (r.distances.front() > 0
               ? r.distances.back() / r.distances.front()
               : 0.0);
    r.note = os.str();
    return r;
}

std::string to_csv(const ErgodicReport& report) {
    std::ostringstream os;
    os.precision(17);
    os << "k,distance,norm_ratio\n";
    for (std::size_t i = 0; i < report.k_schedule.size(); ++i) {
        double d = i < report.distances.size() ? report.distances[i]
                                               : std::nan("");
        os << report.k_schedule[i] << "," << d << "," << report.norm_ratios[i]
           << "\n";
    }
    return os.str();
}

RangeInverseReport range_inverse_check(long N) {
    if (N < 2) throw std::invalid_argument("range_inverse_check: need N >= 2");
    using sections::TriMatrix;
    TriMatrix<Rational> t(N, "I-C-shifted"), b(N, "inverse");
    for (long i = 1; i <= N; ++i) {
        for (long j = 1; j < i; ++j) {
            t.at(i, j) = Rational(-1, i + 1);
            b.at(i, j) = Rational(1, j);
        }
        t.at(i, i) = Rational(i, i + 1);
        b.at(i, i) = Rational(i + 1, i);
    }
    auto is_identity = [N](const TriMatrix<Rational>& m) {
        for (long i = 1; i <= N; ++i)
            for (long j = 1; j <= i; ++j)
                if (m.at(i, j) != Rational(i == j ? 1 : 0)) return false;
        return true;
    };
    RangeInverseReport r;
    r.N = N;
    r.tb_identity = is_identity(sections::multiply(t, b));
    r.bt_identity = is_identity(sections::multiply(b, t));
    for (long i = 1; i <= N; ++i) {
        Rational row_sum = 0;
        for (long j = 1; j <= i; ++j) row_sum += b.at(i, j);
        double ratio =
            rational_to_double(row_sum) / (3.0 + std::log(static_cast<double>(i)));
        r.row_sum_ratio_max = std::max(r.row_sum_ratio_max, ratio);
    }
    return r;
}

bool ones_fixed_point(long N) {
    auto c = sections::cesaro<Rational>(N);
    std::vector<Rational> ones(static_cast<std::size_t>(N), Rational(1));
    return c.apply(ones) == ones;
}

} // namespace cesdual::dynamics
