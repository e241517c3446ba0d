#include "cesdual/criteria.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "cesdual/logsumexp.hpp"

namespace cesdual::criteria {

using trend::Scale;
using trend::TrendClass;
using trend::TrendReport;
using weights::WeightFamily;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// How a trend certifies the examined (n, m) pair.
enum class Cert {
    SupFinite,    // sup < inf: any non-diverging settled trend certifies
    LimZero,      // lim = 0: only ConvergesToZero certifies
    SumConverges, // monotone partial sums: ConvergesTo / BoundedAbove certify
    MustDiverge,  // quantity must tend to inf (SchwartzI)
};

bool certifies(TrendClass c, Cert k) {
    switch (k) {
        case Cert::SupFinite:
            return c == TrendClass::BoundedAbove || c == TrendClass::ConvergesTo ||
                   c == TrendClass::ConvergesToZero;
        case Cert::LimZero: return c == TrendClass::ConvergesToZero;
        case Cert::SumConverges:
            // Partial sums are nondecreasing, so a ConvergesToZero reading
            // just means the whole sum sits below tau_zero: converged.
            return c == TrendClass::BoundedAbove || c == TrendClass::ConvergesTo ||
                   c == TrendClass::ConvergesToZero;
        case Cert::MustDiverge: return c == TrendClass::Diverges;
    }
    return false;
}

bool refutes(TrendClass c, Cert k) {
    if (k == Cert::MustDiverge)
        return c == TrendClass::BoundedAbove || c == TrendClass::ConvergesTo ||
               c == TrendClass::ConvergesToZero;
    return c == TrendClass::Diverges;
}

double observed_bound(const TrendReport& rep) {
    double best = -kInf;
    for (const auto& b : rep.block_maxima)
        if (std::isfinite(b.log_value)) best = std::max(best, b.log_value);
    return std::isfinite(best) ? std::exp(best) : 0.0;
}

// Stateful samplers below require strictly increasing i starting at 1, which
// is how detect_trend drives them.
struct Prefix {
    LogSumExp lse;
    long next = 1;
    void expect(long i) {
        if (i != next++)
            throw std::logic_error("prefix sampler called out of order");
    }
};

std::function<double(long)> make_sampler(const WeightFamily& f,
                                         const ConditionId& cond, int n, int m) {
    using K = ConditionId::Kind;
    switch (cond.kind) {
        case K::Ginf2:
            return [&f, n, m](long i) { return 2 * f.logA(n, i) - f.logA(m, i); };
        case K::G1axioms:
            return [&f, n, m](long i) { return f.logA(n, i) - 2 * f.logA(m, i); };
        case K::SchwartzI:
            return [&f, n](long i) { return f.logA(n, i); };
        case K::SchwartzS:
            return [&f, n, m](long i) { return f.logA(n, i) - f.logA(m, i); };
        case K::GPC: {
            auto p = std::make_shared<Prefix>();
            return [&f, n, m, p](long i) {
                p->expect(i);
                p->lse.add(f.logA(n, i) - f.logA(m, i));
                return p->lse.value();
            };
        }
        case K::SV: {
            auto p = std::make_shared<Prefix>();
            return [&f, n, p](long i) {
                p->expect(i);
                p->lse.add(-f.logA(n, i));
                return p->lse.value();
            };
        }
        case K::N:
        case K::SN: {
            double alpha = cond.kind == K::N ? 1.0 : cond.alpha;
            return [&f, n, m, alpha](long i) {
                return alpha * std::log(static_cast<double>(i)) + f.logA(n, i) -
                       f.logA(m, i);
            };
        }
        case K::U:
            return [&f, n](long i) {
                double di = static_cast<double>(i);
                return di * std::log(di) - f.logA(n, i);
            };
        case K::L:
            return [&f, n](long i) {
                return std::log(std::log(static_cast<double>(i))) - f.logA(n, i);
            };
        case K::DN:
            return [&f, n, m](long i) {
                return 2 * f.logA(n, i) - f.logA(1, i) - f.logA(m, i);
            };
        case K::CesContinuity: {
            auto p = std::make_shared<Prefix>();
            return [&f, n, m, p](long i) {
                p->expect(i);
                p->lse.add(f.logA(n, i));
                return -f.logA(m, i) - std::log(static_cast<double>(i)) +
                       p->lse.value();
            };
        }
        case K::CesCompactness: {
            auto p = std::make_shared<Prefix>();
            return [&f, n, m, p](long i) {
                p->expect(i);
                p->lse.add(f.logA(m, i));
                return -f.logA(n, i) - std::log(static_cast<double>(i)) +
                       p->lse.value();
            };
        }
        case K::DContinuity:
            return [&f, n, m](long i) {
                return std::log(static_cast<double>(i)) + f.logA(n, i + 1) -
                       f.logA(m, i);
            };
        case K::PointEigen: {
            int s = cond.s;
            return [&f, n, s](long i) {
                return s * std::log(static_cast<double>(i)) - f.logA(n, i);
            };
        }
        default:
            throw std::logic_error("make_sampler: condition has no trend quantity");
    }
    return {};
}

// Pointwise comparisons on logs; two +inf entries compare equal.
constexpr double kPointwiseTol = 1e-9;

Verdict pointwise_monotone_n(const WeightFamily& f, const Budget& b) {
    Verdict v;
    for (int n = 1; n <= b.n_max; ++n)
        for (long i = 1; i <= b.i_max; ++i) {
            double lo = f.logA(n, i), hi = f.logA(n + 1, i);
            if (std::isnan(lo) || std::isnan(hi)) continue;
            if (!(lo <= hi + kPointwiseTol)) {
                v.status = Status::FailsNumerically;
                std::ostringstream os;
                os << "numerically violated: a_" << n << "(" << i << ") > a_"
                   << n + 1 << "(" << i << ")";
                v.note = os.str();
                return v;
            }
        }
    v.status = Status::HoldsNumerically;
    v.note = "numerically monotone in n over the full budget";
    return v;
}

Verdict pointwise_ginf1(const WeightFamily& f, const Budget& b) {
    Verdict v;
    for (int n = 1; n <= b.n_max; ++n) {
        double prev = -kInf;
        for (long i = 1; i <= b.i_max; ++i) {
            double cur = f.logA(n, i);
            if (std::isnan(cur)) continue;
            if (!(cur >= -kPointwiseTol) || !(cur >= prev - kPointwiseTol)) {
                v.status = Status::FailsNumerically;
                std::ostringstream os;
                os << "numerically violated at n=" << n << ", i=" << i
                   << (cur < -kPointwiseTol ? " (a_n(i) < 1)"
                                            : " (a_n not increasing in i)");
                v.note = os.str();
                return v;
            }
            prev = cur;
        }
    }
    v.status = Status::HoldsNumerically;
    v.note = "numerically 1 <= a_n(i) <= a_n(i+1) over the full budget";
    return v;
}

bool pointwise_g1_decreasing(const WeightFamily& f, const Budget& b,
                             std::string* why) {
    for (int n = 1; n <= b.n_max; ++n) {
        double prev = kInf;
        for (long i = 1; i <= b.i_max; ++i) {
            double cur = f.logA(n, i);
            if (std::isnan(cur)) continue;
            if (!(cur <= prev + kPointwiseTol)) {
                std::ostringstream os;
                os << "a_n not decreasing in i at n=" << n << ", i=" << i;
                *why = os.str();
                return false;
            }
            prev = cur;
        }
    }
    return true;
}

Verdict forall_exists(const WeightFamily& f, const ConditionId& cond,
                      const Budget& b, Cert cert) {
    Verdict v;
    bool every_n_certified = true;
    bool some_n_all_refuted = false;
    for (int n = 1; n <= b.n_max; ++n) {
        bool found = false, all_refuted = true;
        for (int m = n + 1; m <= n + b.m_max; ++m) {
            TrendReport rep =
                trend::detect_trend(make_sampler(f, cond, n, m), b.i_max, Scale::Log);
            if (!refutes(rep.classification, cert)) all_refuted = false;
            bool cert_here = certifies(rep.classification, cert);
            v.evidence.push_back({n, m, std::move(rep)});
            if (cert_here) {
                found = true;
                v.witnesses[n] = m;
                if (!v.witness)
                    v.witness = Verdict::Witness{n, m, observed_bound(v.evidence.back().report)};
                break; // smallest witness m; later m unexamined
            }
        }
        if (!found) {
            every_n_certified = false;
            if (all_refuted) some_n_all_refuted = true;
        }
    }
    if (every_n_certified) {
        v.status = Status::HoldsNumerically;
        v.note = "numerically certified: every n <= N_max has a witness m";
    } else if (some_n_all_refuted) {
        v.status = Status::FailsNumerically;
        v.note = "numerically refuted: some n diverges for every candidate m";
    } else {
        v.status = Status::Inconclusive;
        v.note = "numerically inconclusive at this budget";
    }
    return v;
}

Verdict exists_n(const WeightFamily& f, const ConditionId& cond, const Budget& b,
                 Cert cert) {
    Verdict v;
    bool any_refuted = false;
    for (int n = 1; n <= b.n_max; ++n) {
        TrendReport rep =
            trend::detect_trend(make_sampler(f, cond, n, 0), b.i_max, Scale::Log);
        if (refutes(rep.classification, cert)) any_refuted = true;
        bool cert_here = certifies(rep.classification, cert);
        v.evidence.push_back({n, 0, std::move(rep)});
        if (cert_here) {
            v.status = Status::HoldsNumerically;
            v.witness = Verdict::Witness{n, 0, observed_bound(v.evidence.back().report)};
            v.witnesses[n] = 0;
            v.note = "numerically certified at witness n";
            return v;
        }
    }
    if (any_refuted) {
        // No witness up to N_max and the quantity is decisively wrong for at
        // least one examined n; since the weights are monotone in n this is
        // taken as evidence against the whole family.
        v.status = Status::FailsNumerically;
        v.note = "numerically refuted: no witness n <= N_max, with divergence "
                 "observed at some n";
    } else {
        v.status = Status::Inconclusive;
        v.note = "numerically inconclusive: no witness n <= N_max";
    }
    return v;
}

Verdict exists_forall(const WeightFamily& f, const ConditionId& cond,
                      const Budget& b, Cert cert) {
    Verdict v;
    bool every_n_refuted = true;
    for (int n = 1; n <= b.n_max; ++n) {
        bool all_certified = true, some_refuted = false;
        for (int m = n + 1; m <= n + b.m_max; ++m) {
            TrendReport rep =
                trend::detect_trend(make_sampler(f, cond, n, m), b.i_max, Scale::Log);
            if (!certifies(rep.classification, cert)) all_certified = false;
            if (refutes(rep.classification, cert)) some_refuted = true;
            v.evidence.push_back({n, m, std::move(rep)});
        }
        if (!some_refuted) every_n_refuted = false;
        if (all_certified) {
            v.status = Status::HoldsNumerically;
            v.witness = Verdict::Witness{n, 0, 0.0};
            v.witnesses[n] = 0;
            v.note = "numerically certified: all m <= n + M_max converge to zero";
            return v;
        }
    }
    v.status = every_n_refuted ? Status::FailsNumerically : Status::Inconclusive;
    v.note = every_n_refuted
                 ? "numerically refuted: every n has a diverging m"
                 : "numerically inconclusive at this budget";
    return v;
}

Verdict dragilev_tau(const WeightFamily& f, double rho, const Budget&) {
    Verdict v;
    TrendReport rep;
    std::vector<double> ratios;
    for (int k = 4; k <= 20; ++k) {
        double x = std::ldexp(1.0, k);
        double fx = f.logA(1, x);
        double frx = f.logA(1, rho * x);
        if (std::isnan(fx) || std::isnan(frx) || fx == 0) continue;
        if (std::isinf(fx) && std::isinf(frx)) continue; // both overflowed
        double r = frx / fx;
        if (std::isnan(r) || r <= 0) continue;
        ratios.push_back(r);
        rep.block_maxima.push_back(
            {static_cast<long>(x), std::isinf(r) ? kInf : std::log(r)});
    }
    std::size_t K = ratios.size();
    if (K < 4) {
        v.status = Status::Inconclusive;
        v.note = "numerically inconclusive: too few usable ratio samples";
        v.evidence.push_back({1, 0, std::move(rep)});
        return v;
    }
    bool diverging = std::isinf(ratios[K - 1]) ||
                     (ratios[K - 1] > 1.05 * ratios[K - 2] &&
                      ratios[K - 2] > 1.05 * ratios[K - 3] &&
                      ratios[K - 3] > 1.05 * ratios[K - 4]);
    bool settled = std::isfinite(ratios[K - 1]) &&
                   std::abs(ratios[K - 1] - ratios[K - 2]) <=
                       0.01 * std::max(1.0, std::abs(ratios[K - 1])) &&
                   std::abs(ratios[K - 2] - ratios[K - 3]) <=
                       0.01 * std::max(1.0, std::abs(ratios[K - 2]));
    if (diverging) {
        rep.classification = TrendClass::Diverges;
        v.status = Status::HoldsNumerically;
        v.note = "numerically rapidly increasing: f(rho x)/f(x) diverges";
        v.witness = Verdict::Witness{
            1, 0, std::isinf(ratios[K - 1]) ? ratios[K - 2] : ratios[K - 1]};
    } else if (settled) {
        rep.classification = TrendClass::ConvergesTo;
        rep.log_limit_or_bound = std::log(ratios[K - 1]);
        v.status = Status::FailsNumerically;
        v.note = "numerically slowly increasing: tau(rho) finite";
        v.witness = Verdict::Witness{1, 0, ratios[K - 1]};
    } else {
        rep.classification = TrendClass::Inconclusive;
        v.status = Status::Inconclusive;
        v.note = "numerically inconclusive ratio trend";
    }
    v.evidence.push_back({1, 0, std::move(rep)});
    return v;
}

Status combine3(Status a, Status b, Status c) {
    bool any_h = a == Status::HoldsNumerically || b == Status::HoldsNumerically ||
                 c == Status::HoldsNumerically;
    bool any_f = a == Status::FailsNumerically || b == Status::FailsNumerically ||
                 c == Status::FailsNumerically;
    if (any_h && !any_f) return Status::HoldsNumerically;
    if (any_f && !any_h) return Status::FailsNumerically;
    return Status::Inconclusive;
}

} // namespace

const char* to_string(Status s) {
    switch (s) {
        case Status::HoldsNumerically: return "HoldsNumerically";
        case Status::FailsNumerically: return "FailsNumerically";
        case Status::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string ConditionId::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::K1: return "K1";
        case Kind::Ginf1: return "Ginf1";
        case Kind::Ginf2: return "Ginf2";
        case Kind::G1axioms: return "G1axioms";
        case Kind::SchwartzI: return "SchwartzI";
        case Kind::SchwartzS: return "SchwartzS";
        case Kind::GPC: return "GPC";
        case Kind::SV: return "SV";
        case Kind::N: return "N";
        case Kind::SN: os << "SN(" << alpha << ")"; return os.str();
        case Kind::U: return "U";
        case Kind::L: return "L";
        case Kind::DN: return "DN";
        case Kind::CesContinuity: return "CesContinuity";
        case Kind::CesCompactness: return "CesCompactness";
        case Kind::DContinuity: return "DContinuity";
        case Kind::PointEigen: os << "PointEigen(" << s << ")"; return os.str();
        case Kind::DragilevTau: os << "DragilevTau(" << rho << ")"; return os.str();
    }
    return "?";
}

ConditionId ConditionId::parse(const std::string& text) {
    using Kind = ConditionId::Kind;
    static const std::map<std::string, Kind> plain = {
        {"K1", Kind::K1}, {"Ginf1", Kind::Ginf1}, {"Ginf2", Kind::Ginf2},
        {"G1axioms", Kind::G1axioms}, {"SchwartzI", Kind::SchwartzI},
        {"SchwartzS", Kind::SchwartzS}, {"GPC", Kind::GPC}, {"SV", Kind::SV},
        {"N", Kind::N}, {"U", Kind::U}, {"L", Kind::L}, {"DN", Kind::DN},
        {"CesContinuity", Kind::CesContinuity},
        {"CesCompactness", Kind::CesCompactness},
        {"DContinuity", Kind::DContinuity},
    };
    auto it = plain.find(text);
    if (it != plain.end()) return {it->second};
    auto open = text.find('(');
    if (open != std::string::npos && text.back() == ')') {
        std::string head = text.substr(0, open);
        std::string arg = text.substr(open + 1, text.size() - open - 2);
        try {
            if (head == "SN") return sn(std::stod(arg));
            if (head == "PointEigen") return point_eigen(std::stoi(arg));
            if (head == "DragilevTau") return dragilev(std::stod(arg));
        } catch (const std::exception&) {
            // falls through to the error below
        }
    }
    throw std::invalid_argument("unknown condition id `" + text + "`");
}

std::vector<ConditionId> ConditionId::all() {
    using Kind = ConditionId::Kind;
    std::vector<ConditionId> out;
    for (Kind k : {Kind::K1, Kind::Ginf1, Kind::Ginf2, Kind::G1axioms,
                   Kind::SchwartzI, Kind::SchwartzS, Kind::GPC, Kind::SV, Kind::N,
                   Kind::U, Kind::L, Kind::DN, Kind::CesContinuity,
                   Kind::CesCompactness, Kind::DContinuity})
        out.push_back({k});
    out.push_back(sn(2.0));
    for (int s : {1, 2, 3}) out.push_back(point_eigen(s));
    out.push_back(dragilev(1.5));
    out.push_back(dragilev(2.0));
    return out;
}

void Budget::validate() const {
    if (i_max < 64 || (i_max & (i_max - 1)) != 0)
        throw std::invalid_argument("budget: I_max must be a power of two >= 64");
    if (n_max < 2) throw std::invalid_argument("budget: N_max must be >= 2");
    if (m_max < 8) throw std::invalid_argument("budget: M_max must be >= 8");
}

Verdict check(const WeightFamily& family, const ConditionId& cond,
              const Budget& budget) {
    budget.validate();
    using K = ConditionId::Kind;
    switch (cond.kind) {
        case K::K1: return pointwise_monotone_n(family, budget);
        case K::Ginf1: return pointwise_ginf1(family, budget);
        case K::G1axioms: {
            std::string why;
            if (!pointwise_g1_decreasing(family, budget, &why)) {
                Verdict v;
                v.status = Status::FailsNumerically;
                v.note = "numerically violated: " + why;
                return v;
            }
            return forall_exists(family, cond, budget, Cert::SupFinite);
        }
        case K::Ginf2:
        case K::N:
        case K::SN:
        case K::CesContinuity:
        case K::DContinuity:
            return forall_exists(family, cond, budget, Cert::SupFinite);
        case K::DN: {
            Verdict v = forall_exists(family, cond, budget, Cert::SupFinite);
            if (v.status == Status::FailsNumerically) {
                // The pointwise form is only sufficient; its failure does not
                // refute the seminorm-level property.
                v.status = Status::Inconclusive;
                v.note = "numerically inconclusive: the pointwise sufficient "
                         "form fails, the seminorm-level property is undecided";
            }
            return v;
        }
        case K::SchwartzS: return forall_exists(family, cond, budget, Cert::LimZero);
        case K::GPC: return forall_exists(family, cond, budget, Cert::SumConverges);
        case K::SchwartzI: return exists_n(family, cond, budget, Cert::MustDiverge);
        case K::SV: return exists_n(family, cond, budget, Cert::SumConverges);
        case K::U:
        case K::L: return exists_n(family, cond, budget, Cert::SupFinite);
        case K::PointEigen: return exists_n(family, cond, budget, Cert::LimZero);
        case K::CesCompactness:
            return exists_forall(family, cond, budget, Cert::LimZero);
        case K::DragilevTau: return dragilev_tau(family, cond.rho, budget);
    }
    throw std::logic_error("check: unhandled condition");
}

SpaceClassification classify(const WeightFamily& family, const Budget& budget) {
    budget.validate();
    SpaceClassification c;
    c.family = family.name();
    c.budget = budget;
    for (const ConditionId& cond : ConditionId::all())
        c.verdicts.emplace(cond.str(), check(family, cond, budget));

    auto S = [&](const char* k) { return c.status(k); };
    if (S("K1") == Status::HoldsNumerically &&
        S("Ginf1") == Status::HoldsNumerically &&
        S("Ginf2") == Status::HoldsNumerically)
        c.ginf = Status::HoldsNumerically;
    else if (S("K1") == Status::FailsNumerically ||
             S("Ginf1") == Status::FailsNumerically ||
             S("Ginf2") == Status::FailsNumerically)
        c.ginf = Status::FailsNumerically;
    else
        c.ginf = Status::Inconclusive;

    c.schwartz = S("SchwartzS") != Status::Inconclusive ? S("SchwartzS")
                                                        : S("SchwartzI");
    // Nuclearity: (GPC) is the general Grothendieck-Pietsch criterion; (SV)
    // and (N) are equivalent to it only under the full G-infinity axioms.
    if (S("GPC") != Status::Inconclusive)
        c.nuclear = S("GPC");
    else if (c.ginf == Status::HoldsNumerically)
        c.nuclear = combine3(S("SV"), S("N"), Status::Inconclusive);
    else
        c.nuclear = Status::Inconclusive;
    c.dn = S("DN");
    c.u = S("U");
    c.l = S("L");
    c.cesaro_continuous = S("CesContinuity");

    auto decided = [](Status s) { return s != Status::Inconclusive; };

    // Equivalences from the classification theorems, gated on the hypotheses
    // they are proved under.
    if (c.ginf == Status::HoldsNumerically) {
        const char* trio[] = {"GPC", "SV", "N"};
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (decided(S(trio[a])) && decided(S(trio[b])) &&
                    S(trio[a]) != S(trio[b]))
                    c.inconsistencies.push_back(
                        std::string("nuclearity equivalence violated: ") + trio[a] +
                        "=" + to_string(S(trio[a])) + " vs " + trio[b] + "=" +
                        to_string(S(trio[b])));
        if (c.schwartz == Status::HoldsNumerically && decided(S("N")) &&
            decided(S("PointEigen(1)")) && S("N") != S("PointEigen(1)"))
            c.inconsistencies.push_back(
                "point-spectrum equivalence violated: N=" +
                std::string(to_string(S("N"))) + " vs PointEigen(1)=" +
                to_string(S("PointEigen(1)")));
    }
    if (S("Ginf1") == Status::HoldsNumerically &&
        S("SchwartzS") == Status::HoldsNumerically &&
        S("CesContinuity") == Status::FailsNumerically)
        c.inconsistencies.push_back(
            "continuity implication violated: Ginf1 and SchwartzS hold but "
            "CesContinuity fails");
    if (S("U") == Status::HoldsNumerically && S("N") == Status::FailsNumerically)
        c.inconsistencies.push_back(
            "implication violated: U holds but N fails");

    return c;
}

} // namespace cesdual::criteria
