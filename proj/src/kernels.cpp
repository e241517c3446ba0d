#include "cesdual/kernels.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cesdual::kernels {

namespace {

// Neumaier variant of Kahan summation, run separately on the real and
// imaginary parts.
struct CompensatedSum {
    double sum = 0.0, comp = 0.0;

    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

inline Complex row_dot(const CMatrix& a, const CMatrix& b, long i, long j) {
    Complex s(0);
    for (long k = j; k <= i; ++k) s += a.at(i, k) * b.at(k, j);
    return s;
}

inline double row_residual(const CMatrix& a, const CMatrix& b, long i) {
    double worst = 0.0;
    for (long j = 1; j <= i; ++j) {
        CompensatedSum re, im;
        for (long k = j; k <= i; ++k) {
            Complex t = a.at(i, k) * b.at(k, j);
            re.add(t.real());
            im.add(t.imag());
        }
        if (i == j) re.add(-1.0);
        worst = std::max(worst, std::abs(Complex(re.value(), im.value())));
    }
    return worst;
}

} // namespace

CMatrix multiply_serial(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.dim(), a.recipe() + "*" + b.recipe());
    for (long i = 1; i <= a.dim(); ++i)
        for (long j = 1; j <= i; ++j) c.at(i, j) = row_dot(a, b, i, j);
    return c;
}

CMatrix multiply_omp(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.dim(), a.recipe() + "*" + b.recipe());
    const long n = a.dim();
    // Row i costs ~i^2; dynamic scheduling balances the triangle.
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= i; ++j) c.at(i, j) = row_dot(a, b, i, j);
    return c;
}

double identity_residual_serial(const CMatrix& a, const CMatrix& b) {
    double worst = 0.0;
    for (long i = 1; i <= a.dim(); ++i)
        worst = std::max(worst, row_residual(a, b, i));
    return worst;
}

double identity_residual_omp(const CMatrix& a, const CMatrix& b) {
    double worst = 0.0;
    const long n = a.dim();
#pragma omp parallel for schedule(dynamic, 8) reduction(max : worst)
    for (long i = 1; i <= n; ++i)
        worst = std::max(worst, row_residual(a, b, i));
    return worst;
}

void cesaro_apply(std::vector<Complex>& x) {
    Complex prefix(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        prefix += x[i];
        x[i] = prefix / static_cast<double>(i + 1);
    }
}

void cesaro_iterate_batch_serial(std::vector<std::vector<Complex>>& batch, long k) {
    for (auto& x : batch)
        for (long j = 0; j < k; ++j) cesaro_apply(x);
}

void cesaro_iterate_batch_omp(std::vector<std::vector<Complex>>& batch, long k) {
    const long b = static_cast<long>(batch.size());
#pragma omp parallel for schedule(static)
    for (long v = 0; v < b; ++v)
        for (long j = 0; j < k; ++j) cesaro_apply(batch[v]);
}

} // namespace cesdual::kernels
