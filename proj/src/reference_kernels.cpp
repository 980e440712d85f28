#include "ldg/kernels.hpp"

#include <cmath>

namespace ldg::refkern {

void eval_values(int n_cells, int n_modes, int n_points,
                 const double* coeffs, const double* phi, double* values) {
    for (int j = 0; j < n_cells; ++j) {
        const double* c = coeffs + static_cast<std::size_t>(j) * n_modes;
        double* out = values + static_cast<std::size_t>(j) * n_points;
        for (int q = 0; q < n_points; ++q) {
            const double* row = phi + static_cast<std::size_t>(q) * n_modes;
            double acc = 0.0;
            for (int m = 0; m < n_modes; ++m) acc += c[m] * row[m];
            out[q] = acc;
        }
    }
}

void interface_traces(int n_cells, int n_modes, const double* coeffs,
                      const double* trace_right, const double* trace_left,
                      double* minus, double* plus) {
    for (int j = 0; j < n_cells; ++j) {
        const int jn = (j + 1 == n_cells) ? 0 : j + 1;
        const double* cj = coeffs + static_cast<std::size_t>(j) * n_modes;
        const double* cn = coeffs + static_cast<std::size_t>(jn) * n_modes;
        double m_acc = 0.0;
        double p_acc = 0.0;
        for (int m = 0; m < n_modes; ++m) {
            m_acc += cj[m] * trace_right[m];
            p_acc += cn[m] * trace_left[m];
        }
        minus[j] = m_acc;
        plus[j] = p_acc;
    }
}

void weak_deriv_cells(int n_cells, int n_modes, int n_points,
                      const double* cell_widths, const double* weights,
                      const double* dphi, const double* trace_right,
                      const double* trace_left, const double* f_values,
                      const double* fhat, double* out) {
    for (int j = 0; j < n_cells; ++j) {
        const int jl = (j == 0) ? n_cells - 1 : j - 1;
        const double fr = fhat[j];
        const double fl = fhat[jl];
        const double scale = 2.0 / cell_widths[j];
        const double* f = f_values + static_cast<std::size_t>(j) * n_points;
        double* g = out + static_cast<std::size_t>(j) * n_modes;
        for (int m = 0; m < n_modes; ++m)
            g[m] = fr * trace_right[m] - fl * trace_left[m];
        for (int q = 0; q < n_points; ++q) {
            const double wf = weights[q] * f[q];
            const double* row = dphi + static_cast<std::size_t>(q) * n_modes;
            for (int m = 0; m < n_modes; ++m) g[m] -= wf * row[m];
        }
        for (int m = 0; m < n_modes; ++m) g[m] *= scale;
    }
}

void residual_cells(int n_cells, int n_modes, int n_points,
                    const double* cell_widths, const double* weights,
                    const double* phi, const double* dphi,
                    const double* trace_right, const double* trace_left,
                    const double* flux_values, const double* fhat,
                    const double* source_values, double* out) {
    for (int j = 0; j < n_cells; ++j) {
        const int jl = (j == 0) ? n_cells - 1 : j - 1;
        const double fr = fhat[j];
        const double fl = fhat[jl];
        const double scale = 2.0 / cell_widths[j];
        const double* f = flux_values + static_cast<std::size_t>(j) * n_points;
        double* r = out + static_cast<std::size_t>(j) * n_modes;
        for (int m = 0; m < n_modes; ++m)
            r[m] = fl * trace_left[m] - fr * trace_right[m];
        for (int q = 0; q < n_points; ++q) {
            const double wf = weights[q] * f[q];
            const double* row = dphi + static_cast<std::size_t>(q) * n_modes;
            for (int m = 0; m < n_modes; ++m) r[m] += wf * row[m];
        }
        for (int m = 0; m < n_modes; ++m) r[m] *= scale;
        if (source_values != nullptr) {
            const double* s = source_values + static_cast<std::size_t>(j) * n_points;
            for (int q = 0; q < n_points; ++q) {
                const double ws = weights[q] * s[q];
                const double* row = phi + static_cast<std::size_t>(q) * n_modes;
                for (int m = 0; m < n_modes; ++m) r[m] += ws * row[m];
            }
        }
    }
}

double max_abs(std::size_t n, const double* data) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = std::abs(data[i]);
        if (v > acc) acc = v;
    }
    return acc;
}

double max_wave_speed(std::size_t n, const double* eta, const double* u) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = std::abs(u[i]) + std::sqrt(std::abs(1.0 + eta[i]));
        if (v > acc) acc = v;
    }
    return acc;
}

void cell_sq_sums(int n_cells, int n_points, const double* weights,
                  const double* values, double* out) {
    for (int j = 0; j < n_cells; ++j) {
        const double* v = values + static_cast<std::size_t>(j) * n_points;
        double acc = 0.0;
        for (int q = 0; q < n_points; ++q) acc += weights[q] * v[q] * v[q];
        out[j] = acc;
    }
}

} // namespace ldg::refkern
