#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cesdual/dynamics.hpp"

using namespace cesdual;
using dynamics::Complex;

namespace {

std::vector<Complex> e1(long n) {
    std::vector<Complex> x(n, Complex(0));
    x[0] = 1;
    return x;
}

} // namespace

TEST_CASE("ones is a fixed point, exactly, at every truncation") {
    for (long n : {2L, 10L, 200L}) {
        CAPTURE(n);
        CHECK(dynamics::ones_fixed_point(n));
    }
}

TEST_CASE("power bound: fixed point keeps the norm constant") {
    auto fam = weights::gallery("remark-3.9");
    std::vector<Complex> ones(256, Complex(1));
    auto r = dynamics::power_bound_check(fam, 1, ones, 32);
    CHECK(r.bound_violations == 0);
    for (double ratio : r.norm_ratios)
        CHECK(ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("power bound: e_1 norms decrease under iteration") {
    auto fam = weights::gallery("remark-3.9");
    auto r = dynamics::power_bound_check(fam, 1, e1(512), 64);
    CHECK(r.bound_violations == 0);
    REQUIRE(r.norm_ratios.size() == 64);
    CHECK(r.norm_ratios.back() <= r.norm_ratios.front());
    for (std::size_t k = 1; k < r.norm_ratios.size(); ++k)
        CHECK(r.norm_ratios[k] <= r.norm_ratios[k - 1] * (1 + 1e-12));
}

TEST_CASE("power bound: 100 seeded random vectors, zero violations") {
    // increasing weights make the averaging operator a q_n-contraction; the
    // truncation guard is relaxed because the test vectors are finitely
    // supported (the truncation is the vector, nothing is cut off)
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto key : {"remark-3.9", "remark-4.4"}) {
        CAPTURE(key);
        auto fam = weights::gallery(key);
        long violations = 0;
        for (int t = 0; t < 100; ++t) {
            std::vector<Complex> x(128);
            for (auto& z : x) z = Complex(u(rng), u(rng));
            auto r = dynamics::power_bound_check(fam, 1 + t % 3, x, 64, 1.0);
            violations += r.bound_violations;
        }
        CHECK(violations == 0);
    }
}

TEST_CASE("truncation guard rejects short truncations of slow weights") {
    auto fam = weights::gallery("remark-4.4"); // v_n decays like a log power
    CHECK_THROWS_AS(dynamics::power_bound_check(fam, 1, e1(512), 8),
                    std::runtime_error);
    // rapidly decaying weights pass the strict default guard
    auto fast = weights::gallery("remark-3.9");
    CHECK_NOTHROW(dynamics::power_bound_check(fast, 1, e1(64), 8));
}

TEST_CASE("argument validation") {
    auto fam = weights::gallery("remark-3.9");
    CHECK_THROWS_AS(dynamics::power_bound_check(fam, 1, {}, 8),
                    std::invalid_argument);
    CHECK_THROWS_AS(dynamics::power_bound_check(fam, 1, e1(64), 1 << 12),
                    std::invalid_argument); // k_max cap
    CHECK_THROWS_AS(dynamics::cesaro_means(fam, 1, e1(64), {16, 16}),
                    std::invalid_argument); // schedule not increasing
}

TEST_CASE("cesaro means: fixed point has zero distance") {
    auto fam = weights::gallery("remark-3.9");
    std::vector<Complex> ones(128, Complex(1));
    auto r = dynamics::cesaro_means(fam, 1, ones, {16, 32, 64});
    for (double d : r.distances) CHECK(d <= 1e-14);
    CHECK(r.halving_ok);
}

TEST_CASE("cesaro means: e_1 distances halve over the dyadic schedule") {
    auto fam = weights::gallery("remark-3.9");
    std::vector<long> schedule;
    for (long k = 16; k <= 2048; k *= 2) schedule.push_back(k);
    auto r = dynamics::cesaro_means(fam, 1, e1(512), schedule);
    REQUIRE(r.distances.size() == schedule.size());
    CHECK(r.bound_violations == 0);
    CHECK(r.decreasing_ok);
    CHECK(r.halving_ok);
    CHECK(r.distances.back() <= r.distances.front() / 2);
    // CSV rendering carries one row per scheduled k
    auto csv = dynamics::to_csv(r);
    CHECK(csv.rfind("k,distance,norm_ratio\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') ==
          static_cast<long>(schedule.size()) + 1);
}

TEST_CASE("cesaro means: x_1 = 0 vectors average toward zero") {
    auto fam = weights::gallery("remark-3.9");
    std::vector<Complex> x(256, Complex(0));
    x[1] = Complex(2, -1);
    x[5] = Complex(-3, 0.5);
    std::vector<long> schedule{16, 64, 256, 1024, 2048};
    auto r = dynamics::cesaro_means(fam, 1, x, schedule);
    CHECK(r.distances.back() < r.distances.front());
    CHECK(r.halving_ok);
}

TEST_CASE("range inverse: exact at small and medium sizes") {
    auto r2 = dynamics::range_inverse_check(2);
    CHECK(r2.tb_identity);
    CHECK(r2.bt_identity);
    auto r50 = dynamics::range_inverse_check(50);
    CHECK(r50.tb_identity);
    CHECK(r50.bt_identity);
    // row sums of the inverse stay under the 3 + log i envelope
    CHECK(r50.row_sum_ratio_max <= 1.0);
    CHECK(r50.row_sum_ratio_max > 0.5);
}
