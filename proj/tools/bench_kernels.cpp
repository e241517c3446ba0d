// Benchmark: serial reference kernels vs their OpenMP variants, with an
// equality check (row-parallel scheduling keeps results bit-identical).
//
// Usage: bench-kernels [N] [batch] [iters]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "cesdual/kernels.hpp"
#include "cesdual/sections.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace cesdual;
using kernels::CMatrix;
using kernels::Complex;

namespace {

double seconds(const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

bool bit_identical(const CMatrix& a, const CMatrix& b) {
    for (long i = 1; i <= a.dim(); ++i)
        for (long j = 1; j <= i; ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    long N = argc > 1 ? std::atol(argv[1]) : 1200;
    long batch = argc > 2 ? std::atol(argv[2]) : 256;
    long iters = argc > 3 ? std::atol(argv[3]) : 512;

#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP: not enabled (serial build)\n";
#endif

    auto c = sections::cesaro<Complex>(N);
    auto r = sections::resolvent(Complex(0.4, 0.3), N);

    CMatrix p1(1, ""), p2(1, "");
    double t_mul_s = seconds([&] { p1 = kernels::multiply_serial(c, r); });
    double t_mul_p = seconds([&] { p2 = kernels::multiply_omp(c, r); });
    std::cout << "multiply        N=" << N << ":  serial " << t_mul_s
              << " s,  omp " << t_mul_p << " s,  speedup "
              << t_mul_s / t_mul_p << ",  bit-identical "
              << (bit_identical(p1, p2) ? "yes" : "NO") << "\n";

    double r1 = 0, r2 = 0;
    double t_res_s = seconds([&] { r1 = kernels::identity_residual_serial(c, r); });
    double t_res_p = seconds([&] { r2 = kernels::identity_residual_omp(c, r); });
    std::cout << "residual        N=" << N << ":  serial " << t_res_s
              << " s,  omp " << t_res_p << " s,  speedup "
              << t_res_s / t_res_p << ",  equal "
              << (r1 == r2 ? "yes" : "NO") << "\n";

    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<std::vector<Complex>> xs1(batch,
                                          std::vector<Complex>(N));
    for (auto& x : xs1)
        for (auto& z : x) z = Complex(u(rng), u(rng));
    auto xs2 = xs1;
    double t_bat_s =
        seconds([&] { kernels::cesaro_iterate_batch_serial(xs1, iters); });
    double t_bat_p =
        seconds([&] { kernels::cesaro_iterate_batch_omp(xs2, iters); });
    std::cout << "batch iterate   " << batch << "x" << iters << ":  serial "
              << t_bat_s << " s,  omp " << t_bat_p << " s,  speedup "
              << t_bat_s / t_bat_p << ",  bit-identical "
              << (xs1 == xs2 ? "yes" : "NO") << "\n";
    return 0;
}
