#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "cesdual/weights.hpp"

using namespace cesdual;
using weights::WeightFamily;

TEST_CASE("gallery keys are stable and buildable") {
    auto keys = weights::gallery_keys();
    REQUIRE(keys.size() == 10);
    for (const char* k :
         {"example-1.5", "example-3.4i", "example-3.4ii", "g1-nuclear",
          "loglog-weights", "power-series-identity", "power-series-log",
          "power-series-loglog", "remark-3.9", "remark-4.4"}) {
        CAPTURE(k);
        CHECK(std::find(keys.begin(), keys.end(), k) != keys.end());
        CHECK_NOTHROW(weights::gallery(k));
    }
    CHECK_THROWS_AS(weights::gallery("no-such-space"), std::invalid_argument);
}

TEST_CASE("log weights evaluate to their closed forms") {
    auto r39 = weights::gallery("remark-3.9"); // a_n(i) = exp(n i)
    CHECK(r39.logA(2L, 3L) == doctest::Approx(6.0));
    CHECK(r39.logV(2L, 3L) == doctest::Approx(-6.0));

    auto psl = weights::gallery("power-series-log"); // a_n(i) = i^n ... log form
    CHECK(psl.logA(3L, 10L) == doctest::Approx(3 * std::log(11.0))); // offset 1

    auto ll = weights::gallery("loglog-weights"); // offset keeps loglog defined
    CHECK(ll.index_offset() == 26);
    CHECK(ll.logA(1L, 1L) ==
          doctest::Approx(std::log(std::log(std::log(27.0)))));
    CHECK(std::isfinite(ll.logA(4L, 1L)));

    auto g1 = weights::gallery("g1-nuclear"); // decreasing in i
    CHECK(g1.logA(1L, 10L) < g1.logA(1L, 1L));
}

TEST_CASE("weights are nondecreasing in n (Koethe matrix shape)") {
    for (auto& key : weights::gallery_keys()) {
        CAPTURE(key);
        auto fam = weights::gallery(key);
        for (long i : {1L, 2L, 17L, 1024L})
            for (long n = 1; n < 4; ++n) {
                double lo = fam.logA(n, i), hi = fam.logA(n + 1, i);
                if (std::isfinite(lo) && std::isfinite(hi))
                    CHECK(lo <= hi + 1e-9);
            }
    }
}

TEST_CASE("q_norm takes the max of v_n(i)|x_i| without underflow") {
    auto fam = weights::gallery("remark-3.9");
    std::vector<std::complex<double>> e1(8, 0.0);
    e1[0] = 1.0;
    // v_1(1) = e^{-1}
    CHECK(weights::q_norm(fam, 1, e1) == doctest::Approx(std::exp(-1.0)));

    std::vector<std::complex<double>> x(8, 0.0);
    x[4] = std::complex<double>(3.0, 4.0); // |x_5| = 5, v_2(5) = e^{-10}
    CHECK(weights::q_norm(fam, 2, x) ==
          doctest::Approx(5.0 * std::exp(-10.0)));

    // a huge entry deep in the tail still registers through log-space
    std::vector<std::complex<double>> y(600, 0.0);
    y[599] = 1e300;
    CHECK(weights::q_norm(fam, 1, y) > 0.0);
    CHECK(std::isfinite(weights::q_norm(fam, 1, y)));
}

TEST_CASE("definition files load with params, sequences and declared flags") {
    const char* text = R"json({
      "name": "custom",
      "logA": "alpha*n*log(i) + w(i)",
      "offset": 0,
      "params": {"alpha": 2.0},
      "sequences": {"w": [0.5, 0.25, 0.125]},
      "declared": {"K1": "holds", "U": "fails"}
    })json";
    auto fam = weights::family_from_json_text(text);
    CHECK(fam.name() == "custom");
    CHECK(fam.logA(1L, 2L) == doctest::Approx(2.0 * std::log(2.0) + 0.25));
    CHECK(fam.declared().get("K1") == weights::Declared::Holds);
    CHECK(fam.declared().get("U") == weights::Declared::Fails);
    CHECK(fam.declared().get("L") == weights::Declared::Unknown);
}

TEST_CASE("definition files reject malformed input") {
    CHECK_THROWS_AS(weights::family_from_json_text("not json"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        weights::family_from_json_text(R"json({"name":"x","logA":"2+*3"})json"),
        std::invalid_argument);
    // free parameter without a binding
    CHECK_THROWS_AS(
        weights::family_from_json_text(R"json({"name":"x","logA":"beta*i"})json"),
        std::invalid_argument);
}
