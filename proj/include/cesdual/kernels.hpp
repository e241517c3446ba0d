// Compute kernels for the finite sections: triangular matrix product,
// identity-residual measurement, and batched Cesàro iteration.  Each kernel
// has a serial reference and an OpenMP variant; the parallel variants split
// work by output row (or by vector in the batch case) so every scalar is
// accumulated in the same order as the reference and the results are
// bit-identical.  The benchmark target (bench-kernels) compares the two.

#ifndef CESDUAL_KERNELS_HPP
#define CESDUAL_KERNELS_HPP

#include <complex>
#include <vector>

#include "cesdual/sections.hpp"

namespace cesdual::kernels {

using Complex = sections::Complex;
using CMatrix = sections::TriMatrix<Complex>;

// Lower-triangular product c_ij = sum_{k=j}^{i} a_ik b_kj.
CMatrix multiply_serial(const CMatrix& a, const CMatrix& b);
CMatrix multiply_omp(const CMatrix& a, const CMatrix& b);

// max_{i,j} |(A B)_ij - delta_ij| without materializing the product.  Each
// entry is accumulated with Neumaier compensated summation: at N = 300 the
// diagonal sums of the resolvent identity have ~N cancelling terms and naive
// accumulation eats most of the 1e-10 tolerance.
double identity_residual_serial(const CMatrix& a, const CMatrix& b);
double identity_residual_omp(const CMatrix& a, const CMatrix& b);

// In-place Cesàro application y_i = (1/i) sum_{j<=i} x_j via one prefix-sum
// pass (O(N), no matrix needed).
void cesaro_apply(std::vector<Complex>& x);

// k Cesàro iterations applied to each vector of the batch; the OpenMP
// variant parallelizes across vectors (each chain is sequential).
void cesaro_iterate_batch_serial(std::vector<std::vector<Complex>>& batch, long k);
void cesaro_iterate_batch_omp(std::vector<std::vector<Complex>>& batch, long k);

} // namespace cesdual::kernels

#endif
