/// @file kernels.hpp
/// @brief Per-cell compute kernels in two interchangeable flavors.
///
/// ldg::kern is the OpenMP-parallel implementation used by the solver;
/// ldg::refkern is a plain serial mirror kept for testing and benchmarking.
/// Both produce bit-identical results: every cell writes only its own slots,
/// and reductions are either exact (max) or per-cell partials that the caller
/// accumulates serially.
///
/// Layout conventions: modal coefficients are cell-major, coeffs[j*M + m];
/// pointwise values are values[j*Q + q]; basis tables are point-major,
/// phi[q*M + m]; fhat[j] is the interface value at the right edge of cell j,
/// with periodic wrap (the left edge of cell 0 is interface n_cells-1).

#pragma once

#include <cstddef>

namespace ldg {

#define LDG_DECLARE_KERNELS                                                     \
    /* values[j*Q+q] = sum_m coeffs[j*M+m] * phi[q*M+m] */                      \
    void eval_values(int n_cells, int n_modes, int n_points,                    \
                     const double* coeffs, const double* phi, double* values);  \
                                                                                \
    /* minus[j] = trace of cell j at its right edge,                           \
       plus[j]  = trace of cell j+1 (periodic) at its left edge */             \
    void interface_traces(int n_cells, int n_modes, const double* coeffs,       \
                          const double* trace_right, const double* trace_left,  \
                          double* minus, double* plus);                         \
                                                                                \
    /* out[j*M+m] = (2/h_j) * (-sum_q w_q f[j,q] dphi[q,m]                     \
                               + fhat_right tR[m] - fhat_left tL[m]) */        \
    void weak_deriv_cells(int n_cells, int n_modes, int n_points,               \
                          const double* cell_widths, const double* weights,     \
                          const double* dphi, const double* trace_right,        \
                          const double* trace_left, const double* f_values,     \
                          const double* fhat, double* out);                     \
                                                                                \
    /* out[j*M+m] = (2/h_j) * (sum_q w_q flux[j,q] dphi[q,m]                   \
                               - fhat_right tR[m] + fhat_left tL[m])           \
                  + sum_q w_q source[j,q] phi[q,m]; source may be null */      \
    void residual_cells(int n_cells, int n_modes, int n_points,                 \
                        const double* cell_widths, const double* weights,       \
                        const double* phi, const double* dphi,                  \
                        const double* trace_right, const double* trace_left,    \
                        const double* flux_values, const double* fhat,          \
                        const double* source_values, double* out);              \
                                                                                \
    double max_abs(std::size_t n, const double* data);                          \
                                                                                \
    /* max over samples of |u| + sqrt(|1 + eta|) */                             \
    double max_wave_speed(std::size_t n, const double* eta, const double* u);   \
                                                                                \
    /* out[j] = sum_q w_q values[j,q]^2 */                                      \
    void cell_sq_sums(int n_cells, int n_points, const double* weights,         \
                      const double* values, double* out);

namespace kern {
LDG_DECLARE_KERNELS
}

namespace refkern {
LDG_DECLARE_KERNELS
}

#undef LDG_DECLARE_KERNELS

} // namespace ldg
