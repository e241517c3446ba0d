// Streaming log-sum-exp accumulator: value() = log(sum of exp(x) over added
// terms), kept stable by tracking the running maximum.  NaN terms (inf - inf
// cancellations upstream) are skipped; -inf terms contribute nothing.

#ifndef CESDUAL_LOGSUMEXP_HPP
#define CESDUAL_LOGSUMEXP_HPP

#include <cmath>
#include <limits>

namespace cesdual {

class LogSumExp {
public:
    void add(double x) {
        if (std::isnan(x)) return;
        if (x == -std::numeric_limits<double>::infinity()) return;
        if (x == std::numeric_limits<double>::infinity()) { max_ = x; sum_ = 1; return; }
        if (max_ == std::numeric_limits<double>::infinity()) return;
        if (x <= max_) {
            sum_ += std::exp(x - max_);
        } else {
            sum_ = sum_ * std::exp(max_ - x) + 1.0;
            max_ = x;
        }
    }

    double value() const {
        if (sum_ == 0) return -std::numeric_limits<double>::infinity();
        if (max_ == std::numeric_limits<double>::infinity()) return max_;
        return max_ + std::log(sum_);
    }

private:
    double max_ = -std::numeric_limits<double>::infinity();
    double sum_ = 0.0;
};

} // namespace cesdual

#endif
