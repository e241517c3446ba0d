// Spectrum of the Cesàro operator on the dual space, predicted from a
// classification via the trichotomy: nuclear spaces get the discrete spectrum
// Sigma = {1/m : m in N} (with Sigma_0 = Sigma plus {0} as the extended set),
// non-nuclear spaces with condition (L) get {0, 1} union the open disk D(1),
// and non-nuclear spaces without (L) get the closed disk.  D(1) is
// {lambda : |lambda - 1/2| < 1/2}, equivalently Re(1/lambda) > 1.
//
// predict() encodes the theorems and is authoritative; row_sum_evidence() is
// numerical corroboration only and never overrides it.

#ifndef CESDUAL_SPECTRA_HPP
#define CESDUAL_SPECTRA_HPP

#include <complex>
#include <optional>
#include <string>

#include "cesdual/criteria.hpp"
#include "cesdual/rational.hpp"
#include "cesdual/trend.hpp"
#include "cesdual/weights.hpp"

namespace cesdual::spectra {

using Complex = std::complex<double>;

enum class Shape {
    NuclearSigma,           // sigma = sigma_pt = Sigma
    DiskOpenPlusEndpoints,  // sigma = {0, 1} union D(1)
    DiskClosed,             // sigma = closure of D(1)
};

const char* to_string(Shape s);

struct SpectrumDescription {
    Shape shape;
    std::string sigma_pt;                  // "Sigma" or "{1}"
    std::optional<std::string> sigma_star; // "Sigma_0" in the nuclear case only
    std::string notes;
};

// Maps a classification to its spectrum shape: nuclear -> NuclearSigma,
// non-nuclear with (L) -> DiskOpenPlusEndpoints, non-nuclear without (L) ->
// DiskClosed.  Throws std::invalid_argument naming the blocking condition
// when an input aggregate is Inconclusive ((L) is only consulted in the
// non-nuclear branch) or when the G-infinity / Schwartz aggregates do not
// hold (the trichotomy is proved in that setting only).
SpectrumDescription predict(const criteria::SpaceClassification& c);

enum class Membership { Inside, BoundaryIn, BoundaryOut, Outside };

const char* to_string(Membership m);

// Exact path: lambda = re + im*i with rational parts; Sigma-membership and
// Re(1/lambda) = 1 are decided exactly.
Membership member(const SpectrumDescription& desc, const Rational& re,
                  const Rational& im);

// Double path: Sigma-membership and the boundary Re(1/lambda) = 1 are decided
// with relative tolerance 1e-12.
Membership member(const SpectrumDescription& desc, Complex lambda);

// Streaming evaluation of the partial row sums
//   R(i) = sum_{j <= i} (v_m(i) / v_n(j)) |e_ij(lambda)|,
// with e_ij the strictly-lower resolvent factor 1/(i prod_{k=j}^i
// (1 - 1/(k lambda))), accumulated entirely in log-space, sampled at i < N
// and classified by the trend engine.  Diverges corroborates lambda in sigma;
// BoundedAbove corroborates resolvent continuity.  When the raw
// classification is Inconclusive but the block maxima end in a nonincreasing
// tail, the report is coerced to BoundedAbove with the observed sup (startup
// transients of the weight ratio otherwise mask a plateau).
// Throws std::invalid_argument unless lambda is outside Sigma_0, n < m, and
// N is a power of two >= 256; std::domain_error if 1 - 1/(k lambda) vanishes.
trend::TrendReport row_sum_evidence(const weights::WeightFamily& family,
                                    Complex lambda, long n, long m, long N);

} // namespace cesdual::spectra

#endif
