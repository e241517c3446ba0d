// Numerical evaluation of the asymptotic conditions attached to a weight
// family (smoothness axioms, nuclearity criteria, operator continuity and
// compactness criteria, point-spectrum tests) over a finite budget, plus the
// aggregation into a space classification with internal consistency checks.
//
// Every verdict is numerical evidence at the given budget, never a proof.

#ifndef CESDUAL_CRITERIA_HPP
#define CESDUAL_CRITERIA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cesdual/trend.hpp"
#include "cesdual/weights.hpp"

namespace cesdual::criteria {

// Conditions (quantities written with v_n = 1/a_n):
//   K1             a_n(i) <= a_{n+1}(i) pointwise
//   Ginf1          1 <= a_n(i) <= a_n(i+1) pointwise
//   Ginf2          for all n exist m > n, M: a_n(i)^2 <= M a_m(i)
//   G1axioms       a_n(i+1) <= a_n(i) pointwise, and for all n exist m, C:
//                  a_n(i) <= C a_m(i)^2
//   SchwartzI      exists n: a_n(i) -> inf
//   SchwartzS      for all n exists m: a_n(i)/a_m(i) -> 0
//   GPC            for all n exists m: sum_i a_n(i)/a_m(i) < inf
//   SV             exists n: sum_i v_n(i) < inf
//   N, SN(alpha)   for all n exists m: sup_i i^alpha v_m(i)/v_n(i) < inf
//                  (N is SN with alpha = 1)
//   U              exists n: sup_i i^i v_n(i) < inf
//   L              exists n: sup_i log(i) v_n(i) < inf
//   DN             pointwise sufficient form with s = 1: for all n exist m, C:
//                  a_n(i)^2 <= C a_1(i) a_m(i); its failure is reported
//                  Inconclusive (the true property quantifies over seminorms)
//   CesContinuity  for all n exists m: sup_i (v_m(i)/i) sum_{j<=i} a_n(j) < inf
//   CesCompactness exists n, for all m > n:
//                  lim_i (v_n(i)/i) sum_{j<=i} a_m(j) = 0
//   DContinuity    for all n exists m: sup_i i v_m(i)/v_n(i+1) < inf
//   PointEigen(s)  exists n: lim_i i^s v_n(i) = 0
//   DragilevTau(rho) the growth exponent tau(rho) = lim f(rho x)/f(x) with
//                  f(x) = log a_1(x); Holds means the ratio diverges
//                  ("rapidly increasing"), Fails means it converges.
struct ConditionId {
    enum class Kind {
        K1, Ginf1, Ginf2, G1axioms, SchwartzI, SchwartzS, GPC, SV, N, SN, U, L,
        DN, CesContinuity, CesCompactness, DContinuity, PointEigen, DragilevTau,
    };

    Kind kind;
    double alpha = 0.0; // SN
    int s = 0;          // PointEigen
    double rho = 0.0;   // DragilevTau

    std::string str() const;                        // e.g. "SN(2)", "PointEigen(3)"
    static ConditionId parse(const std::string&);   // inverse of str()
    static std::vector<ConditionId> all();          // the set classify() runs

    static ConditionId make(Kind k) { return {k}; }
    static ConditionId sn(double alpha) { return {Kind::SN, alpha}; }
    static ConditionId point_eigen(int s) { return {Kind::PointEigen, 0, s}; }
    static ConditionId dragilev(double rho) { return {Kind::DragilevTau, 0, 0, rho}; }
};

struct Budget {
    long i_max = 1 << 14;
    int n_max = 4;
    int m_max = 8;

    void validate() const; // throws std::invalid_argument
};

enum class Status { HoldsNumerically, FailsNumerically, Inconclusive };

const char* to_string(Status s);

struct Verdict {
    struct Witness {
        int n = 0;
        int m = 0; // 0 when the condition has no inner m-search
        double bound = 0.0; // observed sup / limit / constant, linear scale
    };
    struct Evidence {
        int n = 0, m = 0;
        trend::TrendReport report;
    };

    Status status = Status::Inconclusive;
    std::optional<Witness> witness; // for for-all-n shapes: the n = 1 entry
    std::map<int, int> witnesses;   // per-n witness m (for-all-n shapes)
    std::vector<Evidence> evidence; // one report per examined (n, m) pair
    std::string note;               // always phrased "numerically ..."
};

// Evaluates one condition.  For "for all n exists m" shapes the search runs
// n = 1..N_max, m = n+1..n+M_max: HoldsNumerically iff every n has a certified
// witness m, FailsNumerically iff some n sees Diverges for every candidate m.
// For "exists n" shapes (SchwartzI, SV, U, L, PointEigen) the search runs
// n = 1..N_max: HoldsNumerically iff some n is certified; FailsNumerically
// iff no n is certified and at least one n's quantity Diverges (failure at a
// small n is taken as evidence for the whole family; noted in the verdict).
Verdict check(const weights::WeightFamily& family, const ConditionId& cond,
              const Budget& budget = {});

struct SpaceClassification {
    std::string family;
    Budget budget;
    std::map<std::string, Verdict> verdicts; // keyed by ConditionId::str()

    // Aggregates.  ginf = K1 && Ginf1 && Ginf2; schwartz follows SchwartzS
    // (falling back to SchwartzI when SchwartzS is Inconclusive); nuclear
    // follows GPC (the general criterion); when GPC is Inconclusive and the
    // G-infinity axioms hold, SV/N are equivalent to it and fill in.
    Status ginf = Status::Inconclusive;
    Status schwartz = Status::Inconclusive;
    Status nuclear = Status::Inconclusive;
    Status dn = Status::Inconclusive;
    Status u = Status::Inconclusive;
    Status l = Status::Inconclusive;
    Status cesaro_continuous = Status::Inconclusive;

    // Violated verdict-level equivalences (empty on a consistent run):
    // GPC = SV = N; PointEigen(1) = N on Ginf+Schwartz families;
    // Ginf1 && SchwartzS => CesContinuity does not fail; U => N.
    std::vector<std::string> inconsistencies;

    Status status(const std::string& cond) const {
        auto it = verdicts.find(cond);
        return it == verdicts.end() ? Status::Inconclusive : it->second.status;
    }
};

SpaceClassification classify(const weights::WeightFamily& family,
                             const Budget& budget = {});

} // namespace cesdual::criteria

#endif
