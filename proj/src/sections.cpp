#include "cesdual/sections.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cesdual::sections {

namespace {

// Scalar(1)/Scalar(i) is exact for Rational and the usual reciprocal for
// Complex; both builders share one body this way.
template <typename Scalar>
Scalar inv(long i) {
    return Scalar(1) / Scalar(i);
}

} // namespace

template <typename Scalar>
TriMatrix<Scalar> cesaro(long n) {
    TriMatrix<Scalar> m(n, "cesaro");
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= i; ++j) m.at(i, j) = inv<Scalar>(i);
    return m;
}

template <typename Scalar>
TriMatrix<Scalar> inverse(long n) {
    TriMatrix<Scalar> m(n, "cesaro-inverse");
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= i; ++j) m.at(i, j) = Scalar(0);
        m.at(i, i) = Scalar(i);
        if (i > 1) m.at(i, i - 1) = Scalar(-(i - 1));
    }
    return m;
}

template <typename Scalar>
TriMatrix<Scalar> right_shift(long n) {
    TriMatrix<Scalar> m(n, "right-shift");
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= i; ++j) m.at(i, j) = Scalar(j == i - 1 ? 1 : 0);
    return m;
}

template <typename Scalar>
TriMatrix<Scalar> delta(long n) {
    TriMatrix<Scalar> m(n, "delta");
    // Pascal recurrence keeps the binomials exact; they exceed 64 bits near
    // N = 68 in the Rational kind and lose precision in doubles, which is why
    // the identity checks run in the exact kind.
    std::vector<BigInt> row{1};
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= i; ++j) {
            Scalar b;
            if constexpr (std::is_same_v<Scalar, Rational>) b = Scalar(row[j - 1]);
            else b = Scalar(row[j - 1].convert_to<double>());
            m.at(i, j) = (j % 2 == 1) ? b : -b;
        }
        row.push_back(0);
        for (long j = i; j >= 1; --j) row[j] += row[j - 1];
    }
    return m;
}

template <typename Scalar>
TriMatrix<Scalar> diag_inv(long n) {
    TriMatrix<Scalar> m(n, "diag-1/i");
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j < i; ++j) m.at(i, j) = Scalar(0);
        m.at(i, i) = inv<Scalar>(i);
    }
    return m;
}

template <typename Scalar>
TriMatrix<Scalar> identity(long n) {
    TriMatrix<Scalar> m(n, "identity");
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j < i; ++j) m.at(i, j) = Scalar(0);
        m.at(i, i) = Scalar(1);
    }
    return m;
}

template TriMatrix<Rational> cesaro<Rational>(long);
template TriMatrix<Complex> cesaro<Complex>(long);
template TriMatrix<Rational> inverse<Rational>(long);
template TriMatrix<Complex> inverse<Complex>(long);
template TriMatrix<Rational> right_shift<Rational>(long);
template TriMatrix<Complex> right_shift<Complex>(long);
template TriMatrix<Rational> delta<Rational>(long);
template TriMatrix<Complex> delta<Complex>(long);
template TriMatrix<Rational> diag_inv<Rational>(long);
template TriMatrix<Complex> diag_inv<Complex>(long);
template TriMatrix<Rational> identity<Rational>(long);
template TriMatrix<Complex> identity<Complex>(long);

TriMatrix<Complex> to_complex(const TriMatrix<Rational>& m) {
    TriMatrix<Complex> out(m.dim(), m.recipe());
    for (long i = 1; i <= m.dim(); ++i)
        for (long j = 1; j <= i; ++j)
            out.at(i, j) = Complex(rational_to_double(m.at(i, j)));
    return out;
}

namespace {

// Running product prod_{k<=t} (1 - 1/(k mu)) as log-modulus + unit phase.
// Carried in extended precision: entries of the resolvent reach ~1e6 for mu
// inside D(1) at N = 300, so double-precision intermediates would push the
// identity residual past the 1e-10 budget (storage rounding alone costs
// ~eps * max-entry).
struct LogProducts {
    using Real = long double;
    using Cplx = std::complex<Real>;

    std::vector<Real> logmod; // logmod[t], t = 0..n
    std::vector<Cplx> phase;

    LogProducts(Complex mu, long n) {
        if (mu == Complex(0)) throw std::domain_error("resolvent: mu = 0 is singular");
        Cplx mul(static_cast<Real>(mu.real()), static_cast<Real>(mu.imag()));
        logmod.assign(n + 1, Real(0));
        phase.assign(n + 1, Cplx(1));
        for (long k = 1; k <= n; ++k) {
            Cplx f = Cplx(1) - Cplx(1) / (Cplx(static_cast<Real>(k)) * mul);
            Real a = std::abs(f);
            if (a == 0)
                throw std::domain_error(
                    "resolvent: singular mu, 1 - 1/(k mu) = 0 at k = " +
                    std::to_string(k));
            logmod[k] = logmod[k - 1] + std::log(a);
            phase[k] = phase[k - 1] * (f / a);
        }
    }

    // 1 / prod_{k=j}^{i} = exp(logmod[j-1] - logmod[i]) * phase[j-1] * conj(phase[i])
    Cplx inv_range(long j, long i) const {
        return std::exp(logmod[j - 1] - logmod[i]) * phase[j - 1] *
               std::conj(phase[i]);
    }
};

Complex narrow(LogProducts::Cplx z) {
    return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

} // namespace

TriMatrix<Complex> resolvent(Complex mu, long n) {
    using Real = LogProducts::Real;
    using Cplx = LogProducts::Cplx;
    LogProducts p(mu, n);
    Cplx mul(static_cast<Real>(mu.real()), static_cast<Real>(mu.imag()));
    Cplx mu2 = mul * mul;
    TriMatrix<Complex> r(n, "resolvent");
    for (long i = 1; i <= n; ++i) {
        Real di = static_cast<Real>(i);
        for (long j = 1; j < i; ++j)
            r.at(i, j) = narrow(-p.inv_range(j, i) / (di * mu2));
        r.at(i, i) = narrow(Cplx(1) / (Cplx(1 / di) - mul));
    }
    return r;
}

std::pair<TriMatrix<Complex>, TriMatrix<Complex>> split(Complex mu, long n) {
    using Real = LogProducts::Real;
    using Cplx = LogProducts::Cplx;
    LogProducts p(mu, n);
    Cplx mul(static_cast<Real>(mu.real()), static_cast<Real>(mu.imag()));
    TriMatrix<Complex> d(n, "D_mu"), e(n, "E_mu");
    for (long i = 1; i <= n; ++i) {
        Real di = static_cast<Real>(i);
        for (long j = 1; j < i; ++j) {
            d.at(i, j) = Complex(0);
            e.at(i, j) = narrow(p.inv_range(j, i) / di);
        }
        d.at(i, i) = narrow(Cplx(1) / (Cplx(1 / di) - mul));
        e.at(i, i) = Complex(0);
    }
    return {std::move(d), std::move(e)};
}

EigVec eig_direct(long m, long n) {
    if (m < 1 || n < m) throw std::invalid_argument("eig_direct: need 1 <= m <= N");
    EigVec v;
    v.side = EigVec::Side::Direct;
    v.eigenvalue = Rational(1, m);
    v.entries.assign(n, Rational(0));
    v.entries[m - 1] = 1;
    Rational prefix = 1; // S_m
    for (long i = m + 1; i <= n; ++i) {
        v.entries[i - 1] = prefix * Rational(m, i - m);
        prefix += v.entries[i - 1];
    }
    return v;
}

EigVec eig_dual(long s) {
    if (s < 1) throw std::invalid_argument("eig_dual: need s >= 1");
    EigVec v;
    v.side = EigVec::Side::Dual;
    v.eigenvalue = Rational(1, s);
    v.entries.assign(s, Rational(0));
    Rational u = 1;
    for (long i = 1; i <= s; ++i) {
        v.entries[i - 1] = u;
        u *= Rational(1) - Rational(s, i); // factor (1 - s/j) at j = i
    }
    return v;
}

std::vector<Rational> dual_apply(const std::vector<Rational>& y) {
    std::vector<Rational> out(y.size());
    Rational tail = 0; // sum_{j >= i} y_j / j
    for (long i = static_cast<long>(y.size()); i >= 1; --i) {
        tail += y[i - 1] / Rational(i);
        out[i - 1] = tail;
    }
    return out;
}

std::vector<Rational> inverse_via_diff(const std::vector<Rational>& x) {
    const long n = static_cast<long>(x.size());
    // S_r x lives in n+1 coordinates; D drops back to n of them, so the
    // truncation at (i, i+1) never reaches the compared entries.
    std::vector<Rational> shifted(n + 1, Rational(0));
    for (long i = 1; i <= n; ++i) shifted[i] = x[i - 1];
    std::vector<Rational> d(n, Rational(0));
    for (long i = 1; i <= n; ++i) d[i - 1] = Rational(i) * shifted[i]; // (D y)_i = i y_{i+1}
    std::vector<Rational> out(n);
    for (long i = 1; i <= n; ++i)
        out[i - 1] = d[i - 1] - (i > 1 ? d[i - 2] : Rational(0));
    return out;
}

namespace {

template <typename Scalar, typename Fmt>
std::string csv_impl(const TriMatrix<Scalar>& m, Fmt fmt) {
    std::ostringstream os;
    for (long i = 1; i <= m.dim(); ++i) {
        for (long j = 1; j <= m.dim(); ++j) {
            if (j > 1) os << ",";
            os << fmt(m.get(i, j));
        }
        os << "\n";
    }
    return os.str();
}

template <typename Scalar>
std::string json_impl(const TriMatrix<Scalar>& m, const char* kind) {
    nlohmann::ordered_json j;
    j["N"] = m.dim();
    j["kind"] = kind;
    auto& entries = j["entries"] = nlohmann::json::array();
    for (long i = 1; i <= m.dim(); ++i)
        for (long k = 1; k <= i; ++k) {
            Complex z;
            if constexpr (std::is_same_v<Scalar, Rational>)
                z = Complex(rational_to_double(m.at(i, k)));
            else
                z = m.at(i, k);
            entries.push_back({i, k, z.real(), z.imag()});
        }
    return j.dump(2);
}

} // namespace

std::string to_csv(const TriMatrix<Rational>& m) {
    return csv_impl(m, [](const Rational& r) { return rational_to_string(r); });
}

std::string to_csv(const TriMatrix<Complex>& m) {
    return csv_impl(m, [](const Complex& z) {
        std::ostringstream os;
        os.precision(17);
        os << z.real();
        if (z.imag() != 0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
        return os.str();
    });
}

std::string to_json(const TriMatrix<Rational>& m) { return json_impl(m, "rational"); }
std::string to_json(const TriMatrix<Complex>& m) { return json_impl(m, "complex"); }

} // namespace cesdual::sections
