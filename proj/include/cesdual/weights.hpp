// Weight families: a Köthe matrix A = (a_n(i)) held through log a_n(i),
// with the dual weights v_n = 1/a_n implicit as logV = -logA, the built-in
// gallery of analyzed spaces, and weighted sup-norms.

#ifndef CESDUAL_WEIGHTS_HPP
#define CESDUAL_WEIGHTS_HPP

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cesdual/weightlang.hpp"

namespace cesdual::weights {

enum class Declared { Holds, Fails, Unknown };

// Expected classification flags keyed by condition id string ("N", "U",
// "L", "Ginf2", "PointEigen(3)", ...).  Used by the regression suite.
struct DeclaredVerdicts {
    std::map<std::string, Declared> flags;

    Declared get(const std::string& cond) const {
        auto it = flags.find(cond);
        return it == flags.end() ? Declared::Unknown : it->second;
    }
};

class WeightFamily {
public:
    WeightFamily(std::string name, weightlang::ExprPtr log_a, long index_offset,
                 std::map<std::string, double> params = {},
                 std::map<std::string, std::vector<double>> sequences = {},
                 DeclaredVerdicts declared = {});

    // log a_n(i) evaluated at the shifted index i + offset.  All reported
    // indices stay user-facing (starting at 1); only evaluation shifts.
    double logA(long n, long i) const { return logA(n, static_cast<double>(i)); }
    double logA(long n, double i) const; // real argument, for growth-rate probes
    double logV(long n, long i) const { return -logA(n, i); }

    const std::string& name() const { return name_; }
    long index_offset() const { return offset_; }
    const std::map<std::string, double>& params() const { return params_; }
    const DeclaredVerdicts& declared() const { return declared_; }
    std::string definition() const { return weightlang::pretty_print(*log_a_); }

private:
    std::string name_;
    weightlang::ExprPtr log_a_;
    long offset_;
    std::map<std::string, double> params_;
    std::map<std::string, std::vector<double>> sequences_;
    DeclaredVerdicts declared_;
};

// Registered gallery keys, in a stable order.
std::vector<std::string> gallery_keys();

// Builds a registered family; throws std::invalid_argument on an unknown key
// or a missing/invalid parameter.
WeightFamily gallery(const std::string& key,
                     const std::map<std::string, double>& params = {});

// Weight definition file:
// { "name": str, "logA": expr, "offset": int, "params": {str: number},
//   "sequences": {str: [numbers]}, "declared": {condition-id: "holds"|"fails"} }
WeightFamily family_from_json_text(const std::string& text);

// q_n(x) = max_i v_n(i) |x_i|, evaluated as exp(logV + log|x_i|) with the max
// taken in log-space so that tiny weights do not underflow pairwise products.
double q_norm(const WeightFamily& family, long n,
              std::span<const std::complex<double>> x);

} // namespace cesdual::weights

#endif
