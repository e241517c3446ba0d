#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "cesdual/kernels.hpp"
#include "cesdual/sections.hpp"

using namespace cesdual;
using sections::Complex;
using sections::TriMatrix;

namespace {

bool is_identity(const TriMatrix<Rational>& m) {
    for (long i = 1; i <= m.dim(); ++i)
        for (long j = 1; j <= i; ++j)
            if (m.at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

} // namespace

TEST_CASE("rational helpers") {
    CHECK(rational_to_string(parse_rational("4/6")) == "2/3");
    CHECK(rational_to_string(parse_rational("-7")) == "-7");
    CHECK(rational_to_double(parse_rational("1/4")) == 0.25);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x/2"), std::invalid_argument);
}

TEST_CASE("inverse * cesaro = identity, exactly") {
    for (long n : {2L, 17L, 500L}) {
        CAPTURE(n);
        auto p = sections::multiply(sections::inverse<Rational>(n),
                                    sections::cesaro<Rational>(n));
        CHECK(is_identity(p));
    }
}

TEST_CASE("the alternating-binomial matrix is an involution") {
    for (long n = 2; n <= 25; ++n) {
        CAPTURE(n);
        auto d = sections::delta<Rational>(n);
        CHECK(is_identity(sections::multiply(d, d)));
    }
}

TEST_CASE("delta conjugates diag(1/i) to the averaging matrix") {
    const long n = 20;
    auto d = sections::delta<Rational>(n);
    auto conj = sections::multiply(
        sections::multiply(d, sections::diag_inv<Rational>(n)), d);
    auto c = sections::cesaro<Rational>(n);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= i; ++j) CHECK(conj.at(i, j) == c.at(i, j));
}

TEST_CASE("resolvent section at mu = 2, N = 2 (hand computation)") {
    auto r = sections::resolvent(Complex(2), 2);
    CHECK(r.at(1, 1).real() == doctest::Approx(-1.0));
    CHECK(r.at(2, 1).real() == doctest::Approx(-1.0 / 3.0));
    CHECK(r.at(2, 2).real() == doctest::Approx(-2.0 / 3.0));
    CHECK(r.at(2, 1).imag() == doctest::Approx(0.0));
}

TEST_CASE("resolvent identity residual stays under 1e-10 at N = 300") {
    const long n = 300;
    auto c = sections::cesaro<Complex>(n);
    for (Complex mu :
         {Complex(2), Complex(-1), Complex(0.4, 0.3), Complex(0.25, 0.1)}) {
        CAPTURE(mu.real());
        CAPTURE(mu.imag());
        auto r = sections::resolvent(mu, n);
        TriMatrix<Complex> a(n, "C-mu");
        for (long i = 1; i <= n; ++i) {
            for (long j = 1; j < i; ++j) a.at(i, j) = c.at(i, j);
            a.at(i, i) = c.at(i, i) - mu;
        }
        CHECK(kernels::identity_residual_serial(a, r) <= 1e-10);
    }
}

TEST_CASE("resolvent rejects singular parameters by name") {
    CHECK_THROWS_AS(sections::resolvent(Complex(0), 8), std::domain_error);
    try {
        sections::resolvent(Complex(0.5), 8); // 1 - 1/(2 mu) = 0 exactly
        FAIL("expected domain_error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("k = 2") != std::string::npos);
    }
}

TEST_CASE("split reconstructs the resolvent entrywise") {
    const Complex mu(0.4, 0.3);
    const long n = 120;
    auto [d, e] = sections::split(mu, n);
    auto r = sections::resolvent(mu, n);
    const Complex inv_mu2 = Complex(1) / (mu * mu);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= i; ++j) {
            Complex rec = d.at(i, j) - inv_mu2 * e.at(i, j);
            CHECK(std::abs(rec - r.at(i, j)) <= 1e-12);
        }
    // hand value: e_21(mu = 2) = 1/(2 (1-1/2)(1-1/4)) = 4/3
    auto [d2, e2] = sections::split(Complex(2), 2);
    CHECK(e2.at(2, 1).real() == doctest::Approx(4.0 / 3.0));
    CHECK(d2.at(2, 1) == Complex(0));
}

TEST_CASE("direct eigenvectors, exactly") {
    auto v = sections::eig_direct(2, 6);
    CHECK(v.eigenvalue == Rational(1, 2));
    std::vector<Rational> want{0, 1, 2, 3, 4, 5};
    CHECK(v.entries == want);

    auto c = sections::cesaro<Rational>(64);
    for (long m = 1; m <= 8; ++m) {
        CAPTURE(m);
        auto ev = sections::eig_direct(m, 64);
        auto y = c.apply(ev.entries);
        for (long i = 0; i < 64; ++i)
            CHECK(y[i] == ev.entries[i] * Rational(1, m));
    }
    CHECK_THROWS_AS(sections::eig_direct(9, 4), std::invalid_argument);
}

TEST_CASE("dual eigenvectors have finite support and exact eigenvalue") {
    auto u2 = sections::eig_dual(2);
    std::vector<Rational> want{1, -1};
    CHECK(u2.entries == want);
    for (long s = 1; s <= 12; ++s) {
        CAPTURE(s);
        auto u = sections::eig_dual(s);
        CHECK(u.entries.size() == static_cast<std::size_t>(s));
        auto y = sections::dual_apply(u.entries);
        for (std::size_t i = 0; i < u.entries.size(); ++i)
            CHECK(y[i] == u.entries[i] * Rational(1, s));
    }
}

TEST_CASE("difference-of-shifts composition equals the inverse matrix") {
    const long n = 10;
    auto inv = sections::inverse<Rational>(n);
    for (long k = 1; k <= n; ++k) {
        CAPTURE(k);
        std::vector<Rational> e(n, Rational(0));
        e[k - 1] = 1;
        CHECK(sections::inverse_via_diff(e) == inv.apply(e));
    }
}

TEST_CASE("serialization is well-formed") {
    auto c = sections::cesaro<Rational>(3);
    auto csv = sections::to_csv(c);
    CHECK(csv == "1,0,0\n1/2,1/2,0\n1/3,1/3,1/3\n");
    auto j = sections::to_json(c);
    CHECK(j.find("\"N\": 3") != std::string::npos);
    auto zcsv = sections::to_csv(sections::resolvent(Complex(2), 2));
    CHECK(zcsv.find("-1") != std::string::npos);
}
