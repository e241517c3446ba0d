#include "cesdual/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "cesdual/logsumexp.hpp"

namespace cesdual::spectra {

namespace {

constexpr double kBoundaryTol = 1e-12;

bool is_pow2(long n) { return n > 0 && (n & (n - 1)) == 0; }

// lambda in Sigma = {1/m}: real, positive, with integer reciprocal.
bool in_sigma(Complex lambda) {
    double mod = std::abs(lambda);
    if (mod == 0.0 || std::abs(lambda.imag()) > kBoundaryTol * mod) return false;
    double re = lambda.real();
    if (re <= 0.0 || re > 1.0 + kBoundaryTol) return false;
    double recip = 1.0 / re;
    return std::abs(recip - std::round(recip)) <= kBoundaryTol * recip;
}

bool in_sigma(const Rational& re, const Rational& im) {
    // canonical p/q with p > 0 has integer reciprocal iff p = 1 (or lambda = 1)
    return im == 0 && re > 0 && re <= 1 && numerator(re) == 1;
}

Membership disk_member(const SpectrumDescription& desc, bool is_zero,
                       bool is_one, int a_vs_one) {
    // a_vs_one: sign of Re(1/lambda) - 1
    if (desc.shape == Shape::DiskOpenPlusEndpoints) {
        if (is_zero || is_one) return Membership::BoundaryIn;
        if (a_vs_one > 0) return Membership::Inside;
        if (a_vs_one == 0) return Membership::BoundaryOut;
        return Membership::Outside;
    }
    if (is_zero) return Membership::BoundaryIn;
    if (a_vs_one > 0) return Membership::Inside;
    if (a_vs_one == 0) return Membership::BoundaryIn;
    return Membership::Outside;
}

} // namespace

const char* to_string(Shape s) {
    switch (s) {
        case Shape::NuclearSigma: return "NuclearSigma";
        case Shape::DiskOpenPlusEndpoints: return "DiskOpenPlusEndpoints";
        case Shape::DiskClosed: return "DiskClosed";
    }
    return "?";
}

const char* to_string(Membership m) {
    switch (m) {
        case Membership::Inside: return "inside";
        case Membership::BoundaryIn: return "boundary-in";
        case Membership::BoundaryOut: return "boundary-out";
        case Membership::Outside: return "outside";
    }
    return "?";
}

SpectrumDescription predict(const criteria::SpaceClassification& c) {
    using criteria::Status;
    auto require_decided = [](Status s, const char* cond) {
        if (s == Status::Inconclusive)
            throw std::invalid_argument(
                std::string("spectra: classification is Inconclusive on ") +
                cond);
    };
    require_decided(c.ginf, "Ginf");
    require_decided(c.schwartz, "Schwartz");
    if (c.ginf != Status::HoldsNumerically ||
        c.schwartz != Status::HoldsNumerically)
        throw std::invalid_argument(
            "spectra: prediction applies to G-infinity Schwartz families only; "
            "Ginf/Schwartz do not hold here");
    require_decided(c.nuclear, "nuclear");

    SpectrumDescription d;
    if (c.nuclear == Status::HoldsNumerically) {
        d.shape = Shape::NuclearSigma;
        d.sigma_pt = "Sigma";
        d.sigma_star = "Sigma_0";
        d.notes = "sigma = sigma_pt = Sigma = {1/m : m in N}; "
                  "sigma_star = Sigma_0 = Sigma union {0}";
        return d;
    }
    require_decided(c.l, "L");
    d.sigma_pt = "{1}";
    if (c.l == Status::HoldsNumerically) {
        d.shape = Shape::DiskOpenPlusEndpoints;
        d.notes = "sigma = {0, 1} union D(1); sigma_star not specified";
    } else {
        d.shape = Shape::DiskClosed;
        d.notes = "sigma = closure of D(1); sigma_star not specified";
    }
    return d;
}

Membership member(const SpectrumDescription& desc, const Rational& re,
                  const Rational& im) {
    if (desc.shape == Shape::NuclearSigma)
        return in_sigma(re, im) ? Membership::Inside : Membership::Outside;
    bool is_zero = re == 0 && im == 0;
    bool is_one = re == 1 && im == 0;
    int a_vs_one = 0;
    if (!is_zero) {
        Rational a = re / (re * re + im * im); // Re(1/lambda), exact
        a_vs_one = a > 1 ? 1 : (a < 1 ? -1 : 0);
    }
    return disk_member(desc, is_zero, is_one, a_vs_one);
}

Membership member(const SpectrumDescription& desc, Complex lambda) {
    if (desc.shape == Shape::NuclearSigma)
        return in_sigma(lambda) ? Membership::Inside : Membership::Outside;
    double mod2 = std::norm(lambda);
    bool is_zero = mod2 == 0.0;
    bool is_one = std::abs(lambda - Complex(1)) <= kBoundaryTol;
    int a_vs_one = 0;
    if (!is_zero) {
        double a = lambda.real() / mod2;
        if (std::abs(a - 1.0) > kBoundaryTol)
            a_vs_one = a > 1.0 ? 1 : -1;
    }
    return disk_member(desc, is_zero, is_one, a_vs_one);
}

trend::TrendReport row_sum_evidence(const weights::WeightFamily& family,
                                    Complex lambda, long n, long m, long N) {
    if (in_sigma(lambda) || lambda == Complex(0))
        throw std::invalid_argument("row_sum_evidence: lambda lies in Sigma_0");
    if (n < 1 || n >= m)
        throw std::invalid_argument("row_sum_evidence: need 1 <= n < m");
    if (N < 256 || !is_pow2(N))
        throw std::invalid_argument(
            "row_sum_evidence: N must be a power of two >= 256");

    // R(i) = sum_{j<i} (v_m(i)/v_n(j)) |e_ij|, with
    // |e_ij| = exp(-log i - (LP(i) - LP(j-1))), LP(t) = sum_{k<=t} log|1 - 1/(k lambda)|;
    // log R(i) = -logA(m,i) - log i - LP(i) + LSE_{j<i}(logA(n,j) + LP(j-1)).
    struct State {
        const weights::WeightFamily& fam;
        Complex lam;
        long n;
        long done = 0;   // largest j folded into q
        double lp = 0.0; // LP(done)
        LogSumExp q;     // LSE over j = 1..done of logA(n,j) + LP(j-1)

        double log_factor(long k) const {
            Complex f = Complex(1) - Complex(1) / (static_cast<double>(k) * lam);
            double a = std::abs(f);
            if (a == 0.0)
                throw std::domain_error(
                    "row_sum_evidence: 1 - 1/(k lambda) = 0 at k = " +
                    std::to_string(k));
            return std::log(a);
        }
        void advance(long j) { // fold term j, then lp becomes LP(j)
            q.add(fam.logA(n, j) + lp);
            lp += log_factor(j);
            done = j;
        }
    };
    auto state = std::make_shared<State>(State{family, lambda, n});

    auto sampler = [state, &family, m](long i) {
        while (state->done < i - 1) state->advance(state->done + 1);
        // q = LSE_{j <= i-1}, lp = LP(i-1)
        double lp_i = state->lp + state->log_factor(i);
        double r = -family.logA(m, i) - std::log(static_cast<double>(i)) -
                   lp_i + state->q.value();
        state->advance(i);
        return r;
    };
    trend::TrendReport report = trend::detect_trend(sampler, N, trend::Scale::Log);

    // The generic rule leaves slow monotone tails undecided; for this
    // corroboration quantity the direction of a monotone last half is the
    // informative part, so coerce it: nonincreasing tail -> BoundedAbove with
    // the observed sup (startup transients of the weight ratio masked the
    // plateau), nondecreasing tail with a strict final rise -> Diverges
    // (logarithmic-rate divergence below the generic rule's thresholds).
    if (report.classification == trend::TrendClass::Inconclusive &&
        report.block_maxima.size() >= 5) {
        const auto& b = report.block_maxima;
        std::size_t half = b.size() / 2;
        bool tail_down = true, tail_up = true;
        double top = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (k >= half) {
                if (b[k].log_value > b[k - 1].log_value) tail_down = false;
                if (b[k].log_value < b[k - 1].log_value) tail_up = false;
            }
            top = std::max(top, b[k].log_value);
        }
        bool strict_final_rise =
            b.back().log_value > b[half - 1].log_value;
        if (tail_down && std::isfinite(top)) {
            report.classification = trend::TrendClass::BoundedAbove;
            report.log_limit_or_bound = top;
        } else if (tail_up && strict_final_rise) {
            report.classification = trend::TrendClass::Diverges;
        }
    }
    return report;
}

} // namespace cesdual::spectra
