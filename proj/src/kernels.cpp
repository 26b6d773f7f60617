#include "puv/kernels.hpp"

namespace puv::kernels {

namespace {

inline void matmul_column(int n, const cdouble* a, const cdouble* b, cdouble* c, int j) {
  cdouble* cj = c + static_cast<std::ptrdiff_t>(j) * n;
  for (int i = 0; i < n; ++i) cj[i] = cdouble{0.0, 0.0};
  const cdouble* bj = b + static_cast<std::ptrdiff_t>(j) * n;
  for (int k = 0; k < n; ++k) {
    const cdouble bkj = bj[k];
    if (bkj == cdouble{0.0, 0.0}) continue;
    const cdouble* ak = a + static_cast<std::ptrdiff_t>(k) * n;
    for (int i = 0; i < n; ++i) cj[i] += ak[i] * bkj;
  }
}

inline cdouble gram_entry(int nnodes, const cdouble* arow, const cdouble* brow,
                          const double* w) {
  cdouble acc{0.0, 0.0};
  for (int k = 0; k < nnodes; ++k) acc += w[k] * std::conj(arow[k]) * brow[k];
  return acc;
}

}  // namespace

void matmul(int n, const cdouble* a, const cdouble* b, cdouble* c, Exec exec) {
  if (exec == Exec::par) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) matmul_column(n, a, b, c, j);
    return;
#endif
  }
  for (int j = 0; j < n; ++j) matmul_column(n, a, b, c, j);
}

void weighted_gram(int na, int nb, int nnodes, const cdouble* a, const cdouble* b,
                   const double* w, cdouble* g, Exec exec) {
  if (exec == Exec::par) {
#if defined(_OPENMP)
#pragma omp parallel for collapse(2) schedule(static)
    for (int j = 0; j < nb; ++j)
      for (int i = 0; i < na; ++i)
        g[static_cast<std::ptrdiff_t>(j) * na + i] =
            gram_entry(nnodes, a + static_cast<std::ptrdiff_t>(i) * nnodes,
                       b + static_cast<std::ptrdiff_t>(j) * nnodes, w);
    return;
#endif
  }
  for (int j = 0; j < nb; ++j)
    for (int i = 0; i < na; ++i)
      g[static_cast<std::ptrdiff_t>(j) * na + i] =
          gram_entry(nnodes, a + static_cast<std::ptrdiff_t>(i) * nnodes,
                     b + static_cast<std::ptrdiff_t>(j) * nnodes, w);
}

}  // namespace puv::kernels
