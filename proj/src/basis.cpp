#include "ldg/basis.hpp"

#include <cmath>

#include "ldg/check.hpp"

namespace ldg {

namespace {

double legendre_value(int m, double xi) {
    if (m == 0) return 1.0;
    double p0 = 1.0;
    double p1 = xi;
    for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

/// P_m' via the derivative recurrence P'_{m} = P'_{m-2} + (2m - 1) P_{m-1}.
double legendre_deriv(int m, double xi) {
    if (m == 0) return 0.0;
    double dp_prev = 0.0; // P'_{m-2} chain
    double dp = 1.0;      // P'_1
    if (m == 1) return dp;
    for (int k = 2; k <= m; ++k) {
        const double dp_next = dp_prev + (2.0 * k - 1.0) * legendre_value(k - 1, xi);
        dp_prev = dp;
        dp = dp_next;
    }
    return dp;
}

double norm_factor(int m) { return std::sqrt((2.0 * m + 1.0) / 2.0); }

} // namespace

double basis_value(int m, double xi) { return norm_factor(m) * legendre_value(m, xi); }

double basis_deriv(int m, double xi) { return norm_factor(m) * legendre_deriv(m, xi); }

BasisTable build_basis_table(int degree, const QuadratureRule& rule) {
    LDG_CHECK(degree >= 0, "degree must be nonnegative");
    BasisTable table;
    table.n_modes = degree + 1;
    table.n_points = rule.n_points;
    table.phi.resize(static_cast<std::size_t>(table.n_points) * table.n_modes);
    table.dphi.resize(table.phi.size());
    for (int q = 0; q < table.n_points; ++q) {
        const double xi = rule.ref_points[q];
        for (int m = 0; m < table.n_modes; ++m) {
            table.phi[static_cast<std::size_t>(q) * table.n_modes + m] = basis_value(m, xi);
            table.dphi[static_cast<std::size_t>(q) * table.n_modes + m] = basis_deriv(m, xi);
        }
    }
    table.trace_right.resize(table.n_modes);
    table.trace_left.resize(table.n_modes);
    for (int m = 0; m < table.n_modes; ++m) {
        table.trace_right[m] = norm_factor(m);
        table.trace_left[m] = (m % 2 == 0 ? 1.0 : -1.0) * norm_factor(m);
    }
    return table;
}

} // namespace ldg
