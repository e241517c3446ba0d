#include "cesdual/weights.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace cesdual::weights {

using weightlang::EvalContext;

WeightFamily::WeightFamily(std::string name, weightlang::ExprPtr log_a,
                           long index_offset, std::map<std::string, double> params,
                           std::map<std::string, std::vector<double>> sequences,
                           DeclaredVerdicts declared)
    : name_(std::move(name)), log_a_(std::move(log_a)), offset_(index_offset),
      params_(std::move(params)), sequences_(std::move(sequences)),
      declared_(std::move(declared)) {
    auto [free_params, calls] = weightlang::free_identifiers(*log_a_);
    for (const auto& p : free_params)
        if (!params_.count(p))
            throw std::invalid_argument("weight family `" + name_ +
                                        "`: undeclared parameter `" + p + "`");
    for (const auto& c : calls)
        if (!sequences_.count(c))
            throw std::invalid_argument("weight family `" + name_ +
                                        "`: unknown sequence `" + c + "`");
}

double WeightFamily::logA(long n, double i) const {
    EvalContext ctx;
    ctx.i = i + static_cast<double>(offset_);
    ctx.n = static_cast<double>(n);
    ctx.params = &params_;
    ctx.sequences = &sequences_;
    return weightlang::eval(*log_a_, ctx);
}

namespace {

DeclaredVerdicts declared_from(std::initializer_list<std::pair<const char*, Declared>> xs) {
    DeclaredVerdicts d;
    for (auto& [k, v] : xs) d.flags[k] = v;
    return d;
}

constexpr auto H = Declared::Holds;
constexpr auto F = Declared::Fails;

struct GalleryEntry {
    const char* expr;
    long offset;
    std::map<std::string, double> default_params;
    DeclaredVerdicts declared;
};

// a_n(i) written as log a_n(i).  Verdicts record the expected classification:
// - example-1.5:  a_n(i) = exp(i n e^{i n}), nuclear Ginf space with (DN), (U).
// - remark-3.9:   a_n(i) = e^{i n}, nuclear but failing (U).
// - example-3.4i: a_n(i) = i^{alpha_n} e^i, alpha_n = alpha*n/(n+1); the
//   increasing sequence tending to alpha is a concrete choice, default 1/2.
// - example-3.4ii: a_n(i) = i^{s - 1/(1+n)}, integer parameter s >= 1.
// - remark-4.4:   a_n(i) = log(i+26)^n, non-nuclear Schwartz with (L).
// - loglog-weights: a_n(i) = (loglog(i+26))^n, non-nuclear Schwartz failing
//   (L); not taken from a worked example, it exercises the closed-disk case.
// - g1-nuclear:   a_n(i) = e^{-i/n}, a finite-type family; Cesaro operator
//   not continuous on its dual.
// - power-series-{identity,log,loglog}: Lambda_inf(alpha) with alpha_i = i,
//   log i, loglog i.
const std::map<std::string, GalleryEntry>& registry() {
    static const std::map<std::string, GalleryEntry> reg = {
        {"example-1.5",
         {"i*n*exp(i*n)", 0, {},
          declared_from({{"K1", H}, {"Ginf1", H}, {"Ginf2", H}, {"SchwartzI", H},
                         {"SchwartzS", H}, {"GPC", H}, {"SV", H}, {"N", H},
                         {"DN", H}, {"U", H}, {"L", H}, {"CesContinuity", H},
                         {"DContinuity", H}, {"DragilevTau(2)", H},
                         {"PointEigen(1)", H}})}},
        {"remark-3.9",
         {"i*n", 0, {},
          declared_from({{"K1", H}, {"Ginf1", H}, {"Ginf2", H}, {"SchwartzS", H},
                         {"GPC", H}, {"SV", H}, {"N", H}, {"U", F}, {"L", H},
                         {"CesContinuity", H}, {"PointEigen(1)", H}})}},
        {"example-3.4i",
         {"(alpha*n/(n+1))*log(i) + i", 0, {{"alpha", 0.5}},
          declared_from({{"K1", H}, {"Ginf1", H}, {"Ginf2", F}, {"SchwartzI", H},
                         {"N", F}, {"PointEigen(1)", H}, {"PointEigen(2)", H},
                         {"PointEigen(3)", H}, {"PointEigen(4)", H},
                         {"PointEigen(5)", H}, {"PointEigen(6)", H}})}},
        {"example-3.4ii",
         {"(s - 1/(1+n))*log(i)", 0, {{"s", 3.0}},
          declared_from({{"K1", H}, {"Ginf1", H}, {"Ginf2", F}, {"SchwartzI", H}})}},
        {"remark-4.4",
         {"n*loglog(i)", 26, {},
          declared_from({{"K1", H}, {"Ginf1", H}, {"Ginf2", H}, {"SchwartzS", H},
                         {"GPC", F}, {"SV", F}, {"U", F}, {"L", H},
                         {"PointEigen(1)", F}})}},
        {"loglog-weights",
         {"n*log(loglog(i))", 26, {},
          declared_from({{"K1", H}, {"Ginf1", H}, {"Ginf2", H}, {"SchwartzS", H},
                         {"SV", F}, {"N", F}, {"U", F}, {"L", F},
                         {"PointEigen(1)", F}})}},
        {"g1-nuclear",
         {"-i/n", 0, {},
          declared_from({{"K1", H}, {"Ginf1", F}, {"G1axioms", H},
                         {"CesContinuity", F}})}},
        {"power-series-identity",
         {"n*i", 0, {},
          declared_from({{"K1", H}, {"Ginf1", H}, {"Ginf2", H}, {"N", H}})}},
        {"power-series-log",
         {"n*log(i)", 1, {},
          declared_from({{"K1", H}, {"Ginf1", H}, {"Ginf2", H}})}},
        {"power-series-loglog",
         {"n*loglog(i)", 26, {},
          declared_from({{"K1", H}, {"Ginf1", H}, {"Ginf2", H}, {"GPC", F}})}},
    };
    return reg;
}

} // namespace

std::vector<std::string> gallery_keys() {
    std::vector<std::string> keys;
    for (const auto& [k, _] : registry()) keys.push_back(k);
    return keys;
}

WeightFamily gallery(const std::string& key,
                     const std::map<std::string, double>& params) {
    auto it = registry().find(key);
    if (it == registry().end()) {
        std::string msg = "unknown gallery key `" + key + "`; known keys:";
        for (const auto& k : gallery_keys()) msg += " " + k;
        throw std::invalid_argument(msg);
    }
    std::map<std::string, double> merged = it->second.default_params;
    for (const auto& [k, v] : params) {
        if (!merged.count(k))
            throw std::invalid_argument("gallery `" + key +
                                        "`: unexpected parameter `" + k + "`");
        merged[k] = v;
    }
    if (key == "example-3.4ii") {
        double s = merged.at("s");
        if (s < 1 || s != std::floor(s))
            throw std::invalid_argument("example-3.4ii requires integer s >= 1");
    }
    if (key == "example-3.4i") {
        double a = merged.at("alpha");
        if (!(a > 0 && a < 1))
            throw std::invalid_argument("example-3.4i requires 0 < alpha < 1");
    }
    return WeightFamily(key, weightlang::parse(it->second.expr),
                        it->second.offset, merged, {}, it->second.declared);
}

WeightFamily family_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("weight definition: ") + e.what());
    }
    std::map<std::string, double> params;
    if (j.contains("params"))
        for (auto& [k, v] : j.at("params").items()) params[k] = v.get<double>();
    std::map<std::string, std::vector<double>> sequences;
    if (j.contains("sequences"))
        for (auto& [k, v] : j.at("sequences").items())
            sequences[k] = v.get<std::vector<double>>();
    DeclaredVerdicts declared;
    if (j.contains("declared"))
        for (auto& [k, v] : j.at("declared").items()) {
            std::string s = v.get<std::string>();
            if (s == "holds") declared.flags[k] = Declared::Holds;
            else if (s == "fails") declared.flags[k] = Declared::Fails;
            else throw std::invalid_argument("declared verdict must be holds|fails");
        }
    try {
        return WeightFamily(j.at("name").get<std::string>(),
                            weightlang::parse(j.at("logA").get<std::string>()),
                            j.value("offset", 0L), std::move(params),
                            std::move(sequences), std::move(declared));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("weight definition: ") + e.what());
    } catch (const weightlang::ParseError& e) {
        throw std::invalid_argument(std::string("weight definition logA: ") + e.what());
    }
}

double q_norm(const WeightFamily& family, long n,
              std::span<const std::complex<double>> x) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < x.size(); ++k) {
        double a = std::abs(x[k]);
        if (a == 0) continue;
        best = std::max(best, family.logV(n, static_cast<long>(k) + 1) + std::log(a));
    }
    return std::isinf(best) && best < 0 ? 0.0 : std::exp(best);
}

} // namespace cesdual::weights
