#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cesdual/criteria.hpp"

using namespace cesdual;
using criteria::Budget;
using criteria::ConditionId;
using criteria::Status;

namespace {

const Budget kDefault{};

criteria::Verdict run(const std::string& family, const std::string& cond,
                      const Budget& b = kDefault) {
    return criteria::check(weights::gallery(family), ConditionId::parse(cond), b);
}

} // namespace

TEST_CASE("condition ids round-trip through parse/str") {
    for (const char* id : {"K1", "Ginf2", "SchwartzS", "GPC", "SV", "N",
                           "SN(2)", "U", "L", "DN", "CesContinuity",
                           "CesCompactness", "DContinuity", "PointEigen(3)",
                           "DragilevTau(1.5)"}) {
        CAPTURE(id);
        CHECK(ConditionId::parse(id).str() == id);
    }
    CHECK_THROWS_AS(ConditionId::parse("NoSuch"), std::invalid_argument);
}

TEST_CASE("budget validation") {
    Budget b;
    CHECK_NOTHROW(b.validate());
    b.i_max = 1000; // not a power of two
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
    b = Budget{};
    b.i_max = 32; // too small
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
    b = Budget{};
    b.n_max = 1;
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
    b = Budget{};
    b.m_max = 4;
    CHECK_THROWS_AS(b.validate(), std::invalid_argument);
}

TEST_CASE("frozen witnesses: exponential weights") {
    // a_n(i) = exp(n i): the suprema below have closed forms
    auto n = run("remark-3.9", "N");
    REQUIRE(n.status == Status::HoldsNumerically);
    REQUIRE(n.witness.has_value());
    CHECK(n.witness->n == 1);
    CHECK(n.witness->m == 2);
    // sup_i i e^{-i} = 1/e
    CHECK(n.witness->bound == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));

    auto gpc = run("remark-3.9", "GPC");
    REQUIRE(gpc.status == Status::HoldsNumerically);
    // sum_i e^{-i} = 1/(e - 1)
    CHECK(gpc.witness->bound ==
          doctest::Approx(1.0 / (std::exp(1.0) - 1.0)).epsilon(1e-6));

    auto sv = run("remark-3.9", "SV");
    REQUIRE(sv.status == Status::HoldsNumerically);
    CHECK(sv.witness->bound ==
          doctest::Approx(1.0 / (std::exp(1.0) - 1.0)).epsilon(1e-6));

    auto cc = run("remark-3.9", "CesContinuity");
    REQUIRE(cc.status == Status::HoldsNumerically);
    CHECK(cc.witnesses.at(1) == 2);
    // sup_i (v_2(i)/i) sum_{j<=i} e^j attained at i = 1: e^{-2} * e = 1/e
    CHECK(cc.witness->bound == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));

    auto u = run("remark-3.9", "U");
    CHECK(u.status == Status::FailsNumerically); // i^i beats e^{n i}
}

TEST_CASE("frozen witnesses: point spectrum thresholds") {
    // a_n(i) = i^{alpha n/(n+1)} e^i with alpha = 1/2:
    // sup_i i^s v_1(i) = sup i^{s - 1/4} e^{-i}, attained near i = 1
    auto p1 = run("example-3.4i", "PointEigen(1)");
    REQUIRE(p1.status == Status::HoldsNumerically);
    CHECK(p1.witness->bound == doctest::Approx(0.367879).epsilon(1e-4));
    auto p6 = run("example-3.4i", "PointEigen(6)");
    REQUIRE(p6.status == Status::HoldsNumerically);
    CHECK(p6.witness->bound == doctest::Approx(73.8929).epsilon(1e-4));

    // a_n(i) = i^{s - 1/(1+n)} with s = 3: i^k v_n -> 0 only for k < 3
    CHECK(run("example-3.4ii", "PointEigen(1)").status ==
          Status::HoldsNumerically);
    CHECK(run("example-3.4ii", "PointEigen(2)").status ==
          Status::HoldsNumerically);
    CHECK(run("example-3.4ii", "PointEigen(3)").status ==
          Status::FailsNumerically);
}

TEST_CASE("frozen witnesses: slow weights") {
    auto s = run("remark-4.4", "SchwartzS");
    REQUIRE(s.status == Status::HoldsNumerically);
    CHECK(s.witnesses.at(1) == 4);
    CHECK(s.witness->bound == doctest::Approx(0.0279321).epsilon(1e-4));

    auto l = run("remark-4.4", "L");
    REQUIRE(l.status == Status::HoldsNumerically);
    CHECK(l.witness->n == 1);
    CHECK(l.witness->bound == doctest::Approx(0.999837).epsilon(1e-4));

    auto ll = run("loglog-weights", "L");
    CHECK(ll.status == Status::FailsNumerically);

    auto drag = run("example-1.5", "DragilevTau(2)");
    CHECK(drag.status == Status::HoldsNumerically); // ratio diverges
}

TEST_CASE("DN failure is reported inconclusive (pointwise form only)") {
    auto dn = run("g1-nuclear", "DN");
    CHECK(dn.status == Status::Inconclusive);
    CHECK(dn.note.find("numerically") != std::string::npos);
}

TEST_CASE("declared regression: every gallery flag reproduces") {
    for (auto& key : weights::gallery_keys()) {
        auto fam = weights::gallery(key);
        for (auto& [cond, want] : fam.declared().flags) {
            CAPTURE(key);
            CAPTURE(cond);
            auto got = criteria::check(fam, ConditionId::parse(cond)).status;
            if (want == weights::Declared::Holds)
                CHECK(got == Status::HoldsNumerically);
            else if (want == weights::Declared::Fails)
                CHECK(got == Status::FailsNumerically);
        }
    }
}

TEST_CASE("classification aggregates and consistency ledger") {
    auto c15 = criteria::classify(weights::gallery("example-1.5"));
    CHECK(c15.ginf == Status::HoldsNumerically);
    CHECK(c15.schwartz == Status::HoldsNumerically);
    CHECK(c15.nuclear == Status::HoldsNumerically);
    CHECK(c15.dn == Status::HoldsNumerically);
    CHECK(c15.u == Status::HoldsNumerically);
    CHECK(c15.l == Status::HoldsNumerically);
    CHECK(c15.cesaro_continuous == Status::HoldsNumerically);

    auto c39 = criteria::classify(weights::gallery("remark-3.9"));
    CHECK(c39.nuclear == Status::HoldsNumerically);
    CHECK(c39.u == Status::FailsNumerically);

    auto c44 = criteria::classify(weights::gallery("remark-4.4"));
    CHECK(c44.nuclear == Status::FailsNumerically);
    CHECK(c44.schwartz == Status::HoldsNumerically);
    CHECK(c44.l == Status::HoldsNumerically);

    auto cll = criteria::classify(weights::gallery("loglog-weights"));
    CHECK(cll.nuclear == Status::FailsNumerically);
    CHECK(cll.l == Status::FailsNumerically);

    auto cg1 = criteria::classify(weights::gallery("g1-nuclear"));
    CHECK(cg1.ginf == Status::FailsNumerically);
    CHECK(cg1.cesaro_continuous == Status::FailsNumerically);
    CHECK(cg1.status("CesContinuity") == Status::FailsNumerically);

    for (auto& key : weights::gallery_keys()) {
        CAPTURE(key);
        auto c = criteria::classify(weights::gallery(key));
        CHECK(c.inconsistencies.empty());
    }
}

TEST_CASE("verdicts are stable when the budget doubles") {
    Budget big;
    big.i_max = 1 << 15;
    for (auto& key : weights::gallery_keys()) {
        auto fam = weights::gallery(key);
        auto base = criteria::classify(fam);
        auto wide = criteria::classify(fam, big);
        for (auto& [cond, v] : base.verdicts) {
            if (v.status == Status::Inconclusive) continue; // may resolve
            CAPTURE(key);
            CAPTURE(cond);
            CHECK(wide.status(cond) == v.status);
        }
    }
}

TEST_CASE("every note is phrased as numerical evidence") {
    auto c = criteria::classify(weights::gallery("remark-4.4"));
    for (auto& [cond, v] : c.verdicts) {
        CAPTURE(cond);
        CHECK(v.note.find("numerically") != std::string::npos);
    }
}
