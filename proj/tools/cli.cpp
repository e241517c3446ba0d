// cesdual: command-line front end.
//
// Subcommands: gallery | classify | spectrum | resolvent | verify | dynamics
// | eigvec.  Complex values are written "re,im"; rational values "p/q" are
// accepted wherever exactness matters.  Exit codes: 0 success, 1 consistency
// or verification failure, 2 usage error.

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cesdual/criteria.hpp"
#include "cesdual/dynamics.hpp"
#include "cesdual/kernels.hpp"
#include "cesdual/sections.hpp"
#include "cesdual/spectra.hpp"
#include "cesdual/weights.hpp"

using json = nlohmann::ordered_json;
using Complex = std::complex<double>;
using namespace cesdual;

namespace {

constexpr const char* kCaveat = "numerical evidence at finite budget";

struct ExactComplex {
    bool exact = true; // both parts parsed as rationals
    Rational re_r, im_r;
    double re_d = 0.0, im_d = 0.0;

    Complex approx() const { return Complex(re_d, im_d); }
};

// "re,im" or "re"; each part a decimal or an exact integer / "p/q".
ExactComplex parse_complex(const std::string& text) {
    ExactComplex z;
    auto one = [&z](const std::string& s, Rational& out_r, double& out_d) {
        bool rationalish = s.find_first_of(".eE") == std::string::npos;
        if (rationalish) {
            out_r = parse_rational(s); // throws invalid_argument if malformed
            out_d = rational_to_double(out_r);
            return;
        }
        z.exact = false;
        std::size_t pos = 0;
        out_d = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad number `" + s + "`");
    };
    auto comma = text.find(',');
    try {
        one(text.substr(0, comma), z.re_r, z.re_d);
        one(comma == std::string::npos ? "0" : text.substr(comma + 1), z.im_r,
            z.im_d);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(std::string("bad complex `") + text +
                                   "`: " + e.what());
    } catch (const std::out_of_range&) {
        throw CLI::ValidationError("complex value out of range: " + text);
    }
    return z;
}

struct GridAxis {
    double lo = 0, hi = 0, step = 1;
};

// "re0:re1:step" or "re0:re1:step,im0:im1:step"
std::pair<GridAxis, GridAxis> parse_grid(const std::string& text) {
    auto axis = [](const std::string& s) {
        GridAxis a;
        char c1 = 0, c2 = 0;
        std::istringstream is(s);
        if (!(is >> a.lo >> c1 >> a.hi >> c2 >> a.step) || c1 != ':' ||
            c2 != ':' || a.step <= 0 || !(is >> std::ws).eof())
            throw CLI::ValidationError("bad grid axis `" + s +
                                       "` (want lo:hi:step)");
        return a;
    };
    auto comma = text.find(',');
    GridAxis re = axis(text.substr(0, comma));
    GridAxis im = comma == std::string::npos
                      ? GridAxis{0, 0, 1}
                      : axis(text.substr(comma + 1));
    return {re, im};
}

struct CommonOpts {
    std::string space;
    std::string def_file;
    criteria::Budget budget;
    bool as_json = false;
    bool as_csv = false;
};

void add_space_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("space", o.space, "gallery key")->required(false);
    cmd->add_option("--def", o.def_file,
                    "weight definition file (JSON) instead of a gallery key")
        ->check(CLI::ExistingFile);
    cmd->add_option("--imax", o.budget.i_max, "index budget (power of two)");
    cmd->add_option("--nmax", o.budget.n_max, "outer quantifier budget");
    cmd->add_option("--mmax", o.budget.m_max, "inner quantifier budget");
}

weights::WeightFamily load_space(const CommonOpts& o) {
    if (!o.def_file.empty()) {
        if (!o.space.empty())
            throw CLI::ValidationError(
                "give either a gallery key or --def, not both");
        std::ifstream in(o.def_file);
        std::stringstream ss;
        ss << in.rdbuf();
        return weights::family_from_json_text(ss.str());
    }
    if (o.space.empty())
        throw CLI::ValidationError("missing space: gallery key or --def FILE");
    return weights::gallery(o.space);
}

json budget_json(const criteria::Budget& b) {
    return json{{"i_max", b.i_max}, {"n_max", b.n_max}, {"m_max", b.m_max}};
}

json verdict_json(const criteria::Verdict& v) {
    json j;
    j["status"] = criteria::to_string(v.status);
    if (v.witness) {
        j["witness"] = {{"n", v.witness->n}, {"m", v.witness->m},
                        {"bound", v.witness->bound}};
    }
    if (!v.witnesses.empty()) {
        json w = json::object();
        for (auto& [n, m] : v.witnesses) w[std::to_string(n)] = m;
        j["witnesses"] = w;
    }
    j["note"] = v.note;
    return j;
}

int emit_classification(const weights::WeightFamily& fam,
                        const criteria::SpaceClassification& c, bool as_json) {
    if (as_json) {
        json j;
        j["family"] = c.family;
        j["definition"] = fam.definition();
        j["budget"] = budget_json(c.budget);
        j["caveat"] = kCaveat;
        json agg;
        agg["Ginf"] = criteria::to_string(c.ginf);
        agg["Schwartz"] = criteria::to_string(c.schwartz);
        agg["nuclear"] = criteria::to_string(c.nuclear);
        agg["DN"] = criteria::to_string(c.dn);
        agg["U"] = criteria::to_string(c.u);
        agg["L"] = criteria::to_string(c.l);
        agg["CesaroContinuous"] = criteria::to_string(c.cesaro_continuous);
        j["aggregates"] = agg;
        json verdicts = json::object();
        for (auto& [k, v] : c.verdicts) verdicts[k] = verdict_json(v);
        j["verdicts"] = verdicts;
        j["inconsistencies"] = c.inconsistencies;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "family: " << c.family << "  (" << fam.definition()
                  << ")\n";
        std::cout << "budget: I_max=" << c.budget.i_max
                  << " N_max=" << c.budget.n_max << " M_max=" << c.budget.m_max
                  << "  [" << kCaveat << "]\n";
        std::cout << "aggregates: Ginf=" << criteria::to_string(c.ginf)
                  << " Schwartz=" << criteria::to_string(c.schwartz)
                  << " nuclear=" << criteria::to_string(c.nuclear)
                  << " U=" << criteria::to_string(c.u)
                  << " L=" << criteria::to_string(c.l)
                  << " CesContinuity="
                  << criteria::to_string(c.cesaro_continuous) << "\n";
        for (auto& [k, v] : c.verdicts)
            std::cout << "  " << k << ": " << criteria::to_string(v.status)
                      << "  -- " << v.note << "\n";
        for (auto& s : c.inconsistencies)
            std::cout << "INCONSISTENT: " << s << "\n";
    }
    if (!c.inconsistencies.empty()) {
        std::cerr << "classification violates a verdict-level equivalence\n";
        return 1;
    }
    return 0;
}

std::string trend_str(const trend::TrendReport& r) {
    std::ostringstream os;
    os << trend::to_string(r.classification);
    if (r.classification == trend::TrendClass::BoundedAbove ||
        r.classification == trend::TrendClass::ConvergesTo)
        os << "(" << std::exp(r.log_limit_or_bound) << ")";
    return os.str();
}

int run_gallery(bool as_json) {
    if (as_json) {
        json out = json::array();
        for (auto& k : weights::gallery_keys()) {
            auto fam = weights::gallery(k);
            out.push_back({{"key", k}, {"definition", fam.definition()}});
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (auto& k : weights::gallery_keys())
            std::cout << k << "\t" << weights::gallery(k).definition() << "\n";
    }
    return 0;
}

int run_classify(const CommonOpts& o) {
    auto fam = load_space(o);
    auto c = criteria::classify(fam, o.budget);
    return emit_classification(fam, c, o.as_json);
}

int run_spectrum(const CommonOpts& o, const std::string& lambda_text,
                 const std::string& grid_text, long evidence_n,
                 long evidence_m, long evidence_N) {
    auto fam = load_space(o);
    auto c = criteria::classify(fam, o.budget);
    auto desc = spectra::predict(c);
    int rc = c.inconsistencies.empty() ? 0 : 1;

    if (!grid_text.empty()) {
        auto [re, im] = parse_grid(grid_text);
        std::cout << "re,im,membership,evidence\n";
        for (double y = im.lo; y <= im.hi + 1e-15; y += im.step)
            for (double x = re.lo; x <= re.hi + 1e-15; x += re.step) {
                Complex lam(x, y);
                auto mem = spectra::member(desc, lam);
                std::string ev;
                if (evidence_n > 0) {
                    try {
                        auto r = spectra::row_sum_evidence(
                            fam, lam, evidence_n, evidence_m, evidence_N);
                        ev = trend::to_string(r.classification);
                    } catch (const std::exception&) {
                        ev = "n/a";
                    }
                }
                std::cout << x << "," << y << "," << spectra::to_string(mem)
                          << "," << ev << "\n";
            }
        return rc;
    }

    json j;
    j["family"] = c.family;
    j["budget"] = budget_json(c.budget);
    j["caveat"] = kCaveat;
    j["shape"] = spectra::to_string(desc.shape);
    j["sigma_pt"] = desc.sigma_pt;
    if (desc.sigma_star) j["sigma_star"] = *desc.sigma_star;
    else j["sigma_star"] = "not specified by the paper";
    j["notes"] = desc.notes;
    if (!lambda_text.empty()) {
        auto lam = parse_complex(lambda_text);
        auto mem = lam.exact ? spectra::member(desc, lam.re_r, lam.im_r)
                             : spectra::member(desc, lam.approx());
        json q;
        q["lambda"] = lambda_text;
        q["exact"] = lam.exact;
        q["membership"] = spectra::to_string(mem);
        if (evidence_n > 0) {
            auto r = spectra::row_sum_evidence(fam, lam.approx(), evidence_n,
                                               evidence_m, evidence_N);
            q["evidence"] = {{"n", evidence_n},
                             {"m", evidence_m},
                             {"N", evidence_N},
                             {"trend", trend_str(r)}};
        }
        j["query"] = q;
    }
    if (o.as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "shape: " << j["shape"].get<std::string>()
                  << "  sigma_pt: " << desc.sigma_pt << "\n"
                  << j["notes"].get<std::string>() << "\n";
        if (j.contains("query"))
            std::cout << "lambda " << lambda_text << ": "
                      << j["query"]["membership"].get<std::string>() << "\n";
        std::cout << "[" << kCaveat << "]\n";
    }
    return rc;
}

int run_resolvent(const std::string& mu_text, long N, bool as_json) {
    auto mu = parse_complex(mu_text);
    auto r = sections::resolvent(mu.approx(), N);
    if (as_json) std::cout << sections::to_json(r);
    else std::cout << sections::to_csv(r);
    std::cout << "\n";
    return 0;
}

int run_verify(long N) {
    struct Check {
        std::string name;
        bool ok;
    };
    std::vector<Check> checks;
    auto is_ident = [](const sections::TriMatrix<Rational>& m) {
        for (long i = 1; i <= m.dim(); ++i)
            for (long j = 1; j <= i; ++j)
                if (m.at(i, j) != Rational(i == j ? 1 : 0)) return false;
        return true;
    };
    auto C = sections::cesaro<Rational>(N);
    checks.push_back({"inverse*cesaro = I",
                      is_ident(sections::multiply(sections::inverse<Rational>(N), C))});
    auto D = sections::delta<Rational>(N);
    checks.push_back({"delta^2 = I", is_ident(sections::multiply(D, D))});
    auto conj =
        sections::multiply(sections::multiply(D, sections::diag_inv<Rational>(N)), D);
    bool conj_ok = true;
    for (long i = 1; i <= N; ++i)
        for (long j = 1; j <= i; ++j)
            if (conj.at(i, j) != C.at(i, j)) conj_ok = false;
    checks.push_back({"delta*diag(1/i)*delta = cesaro", conj_ok});
    auto ri = dynamics::range_inverse_check(N);
    checks.push_back({"T*B = B*T = I (range inverse)",
                      ri.tb_identity && ri.bt_identity});
    checks.push_back({"C*ones = ones", dynamics::ones_fixed_point(N)});
    bool eig_ok = true;
    for (long m = 1; m <= std::min<long>(8, N); ++m) {
        auto v = sections::eig_direct(m, N);
        auto y = C.apply(v.entries);
        for (long i = 0; i < N; ++i)
            if (y[i] != v.entries[i] * Rational(1, m)) eig_ok = false;
    }
    checks.push_back({"cesaro eigenvectors (m <= 8)", eig_ok});
    bool dual_ok = true;
    for (long s = 1; s <= 12; ++s) {
        auto u = sections::eig_dual(s);
        auto y = sections::dual_apply(u.entries);
        for (std::size_t i = 0; i < u.entries.size(); ++i)
            if (y[i] != u.entries[i] * Rational(1, s)) dual_ok = false;
    }
    checks.push_back({"dual eigenvectors (s <= 12)", dual_ok});

    bool all = true;
    for (auto& c : checks) {
        std::cout << (c.ok ? "pass" : "FAIL") << "  " << c.name << "  (N=" << N
                  << ", exact arithmetic)\n";
        all = all && c.ok;
    }
    return all ? 0 : 1;
}

int run_dynamics(const CommonOpts& o, long n, long N, long k_max,
                 const std::string& x_kind, unsigned seed, double guard) {
    auto fam = load_space(o);
    std::vector<Complex> x(static_cast<std::size_t>(N), Complex(0));
    if (x_kind == "e1") {
        x[0] = 1;
    } else if (x_kind == "ones") {
        for (auto& z : x) z = 1;
    } else if (x_kind == "random") {
        std::mt19937 rng(seed);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (auto& z : x) z = Complex(u(rng), u(rng));
    } else {
        throw CLI::ValidationError("--x must be e1 | ones | random");
    }
    std::vector<long> schedule;
    for (long k = 16; k <= k_max; k *= 2) schedule.push_back(k);
    if (schedule.empty()) schedule.push_back(k_max);
    auto rep = dynamics::cesaro_means(fam, n, x, schedule, guard);
    if (o.as_csv || !o.as_json) {
        std::cout << dynamics::to_csv(rep);
        std::cout << "# " << rep.note << "  [" << kCaveat << "]\n";
    } else {
        json j;
        j["family"] = fam.name();
        j["n"] = n;
        j["N"] = N;
        j["x"] = x_kind;
        j["caveat"] = kCaveat;
        j["k_schedule"] = rep.k_schedule;
        j["distances"] = rep.distances;
        j["norm_ratios"] = rep.norm_ratios;
        j["bound_violations"] = rep.bound_violations;
        j["decreasing_ok"] = rep.decreasing_ok;
        j["halving_ok"] = rep.halving_ok;
        j["note"] = rep.note;
        std::cout << j.dump(2) << "\n";
    }
    return rep.bound_violations == 0 ? 0 : 1;
}

int run_eigvec(const std::string& side, long m, long N, bool as_json) {
    sections::EigVec v = side == "dual" ? sections::eig_dual(m)
                                        : sections::eig_direct(m, N);
    if (as_json) {
        json j;
        j["side"] = side;
        j["eigenvalue"] = rational_to_string(v.eigenvalue);
        json e = json::array();
        for (auto& x : v.entries) e.push_back(rational_to_string(x));
        j["entries"] = e;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "eigenvalue " << rational_to_string(v.eigenvalue) << ":";
        for (auto& x : v.entries) std::cout << " " << rational_to_string(x);
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale laboratory for the discrete Cesaro operator on "
                 "weighted sequence-space duals"};
    app.require_subcommand(1);

    CommonOpts cls_o, spec_o, dyn_o;
    bool gallery_json = false;

    auto* gal = app.add_subcommand("gallery", "list the built-in weight families");
    gal->add_flag("--json", gallery_json);

    auto* cls = app.add_subcommand("classify", "evaluate the condition battery");
    add_space_opts(cls, cls_o);
    cls->add_flag("--json", cls_o.as_json);

    auto* spec = app.add_subcommand("spectrum", "predict the spectrum shape");
    add_space_opts(spec, spec_o);
    spec->add_flag("--json", spec_o.as_json);
    spec->add_flag("--csv", spec_o.as_csv);
    std::string lambda_text, grid_text;
    long ev_n = 0, ev_m = 2, ev_N = 1024;
    spec->add_option("--lambda", lambda_text, "membership query (re,im or p/q)");
    spec->add_option("--grid", grid_text, "re0:re1:step[,im0:im1:step] -> CSV");
    spec->add_option("--evidence-n", ev_n, "row-sum evidence outer index (0 = off)");
    spec->add_option("--evidence-m", ev_m, "row-sum evidence inner index");
    spec->add_option("--evidence-N", ev_N, "row-sum evidence truncation");

    auto* res = app.add_subcommand("resolvent", "emit a resolvent section");
    std::string mu_text = "2";
    long res_N = 32;
    bool res_json = false;
    res->add_option("--mu", mu_text, "spectral parameter (re,im)")->required();
    res->add_option("--N", res_N, "section size");
    res->add_flag("--json", res_json);

    auto* ver = app.add_subcommand("verify", "run the exact identity suite");
    std::string what = "identities";
    long ver_N = 20;
    ver->add_option("what", what)->check(CLI::IsMember({"identities"}));
    ver->add_option("--N", ver_N, "section size");

    auto* dyn = app.add_subcommand("dynamics", "Cesaro-mean convergence run");
    add_space_opts(dyn, dyn_o);
    dyn->add_flag("--json", dyn_o.as_json);
    dyn->add_flag("--csv", dyn_o.as_csv);
    long dyn_n = 1, dyn_N = 512, dyn_kmax = 1 << 11;
    std::string dyn_x = "e1";
    unsigned dyn_seed = 1;
    double dyn_guard = 1e-15;
    dyn->add_option("--n", dyn_n, "seminorm index");
    dyn->add_option("--N", dyn_N, "truncation length");
    dyn->add_option("--kmax", dyn_kmax, "largest iterate count (<= 2^11)");
    dyn->add_option("--x", dyn_x, "start vector: e1 | ones | random");
    dyn->add_option("--seed", dyn_seed, "RNG seed for --x random");
    dyn->add_option("--guard", dyn_guard,
                    "truncation-negligibility tolerance (relax for finitely "
                    "supported start vectors)");

    auto* eig = app.add_subcommand("eigvec", "emit an exact eigenvector");
    std::string side = "direct";
    long eig_m = 2, eig_N = 16;
    bool eig_json = false;
    eig->add_option("--side", side)->check(CLI::IsMember({"direct", "dual"}));
    eig->add_option("--m", eig_m, "eigenvalue 1/m");
    eig->add_option("--N", eig_N, "length (direct side)");
    eig->add_flag("--json", eig_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gal->parsed()) return run_gallery(gallery_json);
        if (cls->parsed()) return run_classify(cls_o);
        if (spec->parsed())
            return run_spectrum(spec_o, lambda_text, grid_text, ev_n, ev_m, ev_N);
        if (res->parsed()) return run_resolvent(mu_text, res_N, res_json);
        if (ver->parsed()) return run_verify(ver_N);
        if (dyn->parsed())
            return run_dynamics(dyn_o, dyn_n, dyn_N, dyn_kmax, dyn_x, dyn_seed,
                                dyn_guard);
        if (eig->parsed()) return run_eigvec(side, eig_m, eig_N, eig_json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
