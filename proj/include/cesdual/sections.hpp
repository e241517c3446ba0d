// Finite lower-triangular sections of the operators under study: the Cesàro
// matrix C, its inverse, the forward-difference involution Delta, diag(1/i),
// the resolvent (C - mu I)^{-1} with its D_mu/E_mu split, the right shift,
// the dual operator, and the eigenvectors on both sides.
//
// Triangular exactness: for lower-triangular infinite matrices the N-section
// of a product equals the product of N-sections, so every identity below is
// meaningful at finite N (exact over rationals, <= 1e-10 max-norm in doubles).

#ifndef CESDUAL_SECTIONS_HPP
#define CESDUAL_SECTIONS_HPP

#include <complex>
#include <string>
#include <vector>

#include "cesdual/rational.hpp"

namespace cesdual::sections {

using Complex = std::complex<double>;

// Packed lower-triangular matrix, 1-based indices, row i holding i entries.
template <typename Scalar>
class TriMatrix {
public:
    TriMatrix(long n, std::string recipe)
        : n_(n), recipe_(std::move(recipe)), a_(static_cast<std::size_t>(n) * (n + 1) / 2) {}

    long dim() const { return n_; }
    const std::string& recipe() const { return recipe_; }

    Scalar& at(long i, long j) { return a_[idx(i, j)]; }
    const Scalar& at(long i, long j) const { return a_[idx(i, j)]; }

    Scalar get(long i, long j) const { return j > i ? Scalar(0) : a_[idx(i, j)]; }

    std::vector<Scalar> apply(const std::vector<Scalar>& x) const {
        std::vector<Scalar> y(static_cast<std::size_t>(n_), Scalar(0));
        for (long i = 1; i <= n_; ++i) {
            Scalar s(0);
            for (long j = 1; j <= i; ++j) s += at(i, j) * x[j - 1];
            y[i - 1] = s;
        }
        return y;
    }

private:
    std::size_t idx(long i, long j) const {
        return static_cast<std::size_t>(i) * (i - 1) / 2 + (j - 1);
    }

    long n_;
    std::string recipe_;
    std::vector<Scalar> a_;
};

// Serial reference product (the OpenMP kernel lives in kernels.hpp).
template <typename Scalar>
TriMatrix<Scalar> multiply(const TriMatrix<Scalar>& a, const TriMatrix<Scalar>& b) {
    TriMatrix<Scalar> c(a.dim(), a.recipe() + "*" + b.recipe());
    for (long i = 1; i <= a.dim(); ++i)
        for (long j = 1; j <= i; ++j) {
            Scalar s(0);
            for (long k = j; k <= i; ++k) s += a.at(i, k) * b.at(k, j);
            c.at(i, j) = s;
        }
    return c;
}

// Builders over either scalar kind (Rational or Complex); entries are exact
// in both (small integer reciprocals).
template <typename Scalar> TriMatrix<Scalar> cesaro(long n);      // 1/i on row i
template <typename Scalar> TriMatrix<Scalar> inverse(long n);     // diag i, sub -(i-1)
template <typename Scalar> TriMatrix<Scalar> right_shift(long n); // 1 on subdiagonal
template <typename Scalar> TriMatrix<Scalar> delta(long n);       // (-1)^{j-1} C(i-1,j-1)
template <typename Scalar> TriMatrix<Scalar> diag_inv(long n);    // diag 1/i
template <typename Scalar> TriMatrix<Scalar> identity(long n);

TriMatrix<Complex> to_complex(const TriMatrix<Rational>& m);

// (C - mu I)^{-1}: diagonal 1/(1/i - mu), off-diagonal (j < i)
// -1/(i mu^2 prod_{k=j}^{i} (1 - 1/(k mu))).  Partial products are carried as
// log-modulus plus unit phase, so geometric growth/decay in i never overflows.
// Throws std::domain_error when mu = 0 or 1 - 1/(k mu) = 0 for some k <= n,
// naming the offending k.
TriMatrix<Complex> resolvent(Complex mu, long n);

// The split (C - mu I)^{-1} = D_mu - mu^{-2} E_mu: D_mu diagonal with
// 1/(1/i - mu), E_mu strictly lower with e_ij = 1/(i prod_{k=j}^{i}(1 - 1/(k mu))).
// The product's upper limit (k up to i) and the j = 1 column are pinned down
// by requiring the reconstruction to match resolvent() entrywise.
std::pair<TriMatrix<Complex>, TriMatrix<Complex>> split(Complex mu, long n);

struct EigVec {
    enum class Side { Direct, Dual };
    std::vector<Rational> entries;
    Rational eigenvalue;
    Side side;
};

// C x = (1/m) x exactly: x_i = 0 below index m, x_m = 1 (first nonzero entry
// normalized to 1), then x_i = S_{i-1} m / (i - m) with S the prefix sum.
EigVec eig_direct(long m, long n);

// u^{(s)}: u_i = prod_{j=1}^{i-1} (1 - s/j) for i <= s, zero beyond; an
// eigenvector of the dual operator at eigenvalue 1/s with finite support.
EigVec eig_dual(long s);

// (C' y)_i = sum_{j >= i} y_j / j for finitely supported y (given as its
// support prefix); exact, result has the same length.
std::vector<Rational> dual_apply(const std::vector<Rational>& y);

// C^{-1} evaluated as the composition (I - S_r) . D . S_r of Eq.-level
// operators on a vector, with one buffer coordinate so the truncation of the
// differentiation matrix D (whose entries sit on (i, i+1)) never touches the
// compared entries.  Equals inverse(n).apply(x) exactly.
std::vector<Rational> inverse_via_diff(const std::vector<Rational>& x);

// Dense CSV (row-major, zeros above the diagonal).
std::string to_csv(const TriMatrix<Rational>& m);
std::string to_csv(const TriMatrix<Complex>& m);

// JSON triple list {"N":, "kind":, "entries": [[i, j, re, im], ...]}.
std::string to_json(const TriMatrix<Rational>& m);
std::string to_json(const TriMatrix<Complex>& m);

} // namespace cesdual::sections

#endif
