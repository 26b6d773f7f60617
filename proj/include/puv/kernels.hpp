#pragma once

#include <complex>
#include <cstdint>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace puv {

using cdouble = std::complex<double>;

// Execution policy for the data-parallel kernels. Every kernel has a serial
// reference path; the parallel path assigns each output element to exactly
// one thread, so results are bitwise identical across thread counts.
enum class Exec { seq, par };

namespace kernels {

// C = A * B, n x n column-major dense complex.
void matmul(int n, const cdouble* a, const cdouble* b, cdouble* c, Exec exec);

// G(i,j) = sum_k w[k] * conj(A(i,k)) * B(j,k).
// Tables are row-major (function index outer, node index inner); G is
// column-major na x nb.
void weighted_gram(int na, int nb, int nnodes, const cdouble* a, const cdouble* b,
                   const double* w, cdouble* g, Exec exec);

// max_i |f(i)| over i in [0, count). f must be safe to call concurrently.
template <class F>
double max_abs(std::int64_t count, F&& f, Exec exec) {
  double worst = 0.0;
  if (exec == Exec::par) {
#if defined(_OPENMP)
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      const double v = std::abs(f(i));
      if (v > worst) worst = v;
    }
    return worst;
#endif
  }
  for (std::int64_t i = 0; i < count; ++i) {
    const double v = std::abs(f(i));
    if (v > worst) worst = v;
  }
  return worst;
}

}  // namespace kernels
}  // namespace puv
