#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "cesdual/trend.hpp"

using namespace cesdual::trend;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("1/i converges to zero") {
    auto r = detect_trend([](long i) { return 1.0 / i; }, 1 << 14);
    CHECK(r.classification == TrendClass::ConvergesToZero);
}

TEST_CASE("log i diverges") {
    auto r = detect_trend([](long i) { return std::log((double)i); }, 1 << 14);
    CHECK(r.classification == TrendClass::Diverges);
}

TEST_CASE("1 + (-1)^i/i converges to 1") {
    auto r = detect_trend(
        [](long i) { return 1.0 + (i % 2 == 0 ? 1.0 : -1.0) / i; }, 1 << 14);
    CHECK(r.classification == TrendClass::ConvergesTo);
    CHECK(std::exp(r.log_limit_or_bound) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("geometric decay converges to zero before reaching tau_zero") {
    // 0.9^i at i = 2^14 underflows to 0, but the early blocks already decay
    // geometrically; log-scale sampling keeps the tail meaningful
    auto r = detect_trend([](long i) { return i * std::log(0.9); }, 1 << 10,
                          Scale::Log);
    CHECK(r.classification == TrendClass::ConvergesToZero);
}

TEST_CASE("a bounded oscillation is bounded above") {
    auto r = detect_trend(
        [](long i) { return 2.0 + (i % 7) * 1e-4; }, 1 << 14);
    CHECK(r.classification == TrendClass::BoundedAbove);
    CHECK(std::exp(r.log_limit_or_bound) == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("a creeping unbounded rise is not certified bounded") {
    // log i in disguise: slow, monotone, accelerating relative to any plateau
    auto r = detect_trend(
        [](long i) { return std::log(std::log((double)i + 20.0)); }, 1 << 14);
    CHECK(r.classification != TrendClass::BoundedAbove);
    CHECK(r.classification != TrendClass::ConvergesTo);
}

TEST_CASE("+inf samples force divergence") {
    auto r = detect_trend(
        [](long i) { return i > 100 ? kInf : 1.0; }, 1 << 14, Scale::Log);
    CHECK(r.classification == TrendClass::Diverges);
}

TEST_CASE("NaN samples are skipped") {
    auto r = detect_trend(
        [](long i) {
            return i % 3 == 0 ? std::nan("") : 1.0 / i;
        },
        1 << 14);
    CHECK(r.classification == TrendClass::ConvergesToZero);
}

TEST_CASE("nonpositive samples on the linear scale mean log = -inf") {
    auto r = detect_trend([](long) { return 0.0; }, 1 << 14);
    CHECK(r.classification == TrendClass::ConvergesToZero);
}

TEST_CASE("block maxima are recorded with their block uppers") {
    auto r = detect_trend([](long i) { return 1.0 / i; }, 1 << 8);
    REQUIRE(!r.block_maxima.empty());
    CHECK(r.block_maxima.back().upper <= (1 << 8));
    for (std::size_t k = 1; k < r.block_maxima.size(); ++k)
        CHECK(r.block_maxima[k - 1].upper < r.block_maxima[k].upper);
}

TEST_CASE("budget validation") {
    CHECK_THROWS_AS(detect_trend([](long) { return 1.0; }, 100),
                    std::invalid_argument); // not a power of two
    CHECK_THROWS_AS(detect_trend([](long) { return 1.0; }, 32),
                    std::invalid_argument); // too small
}

TEST_CASE("sampler exceptions surface with the offending index") {
    try {
        detect_trend(
            [](long i) -> double {
                if (i == 37) throw std::runtime_error("boom");
                return 1.0 / i;
            },
            1 << 14);
        FAIL("expected exception");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("37") != std::string::npos);
    }
}
