/// @file basis.hpp
/// @brief Orthonormal Legendre modal basis on the reference cell [-1, 1].

#pragma once

#include <vector>

#include "ldg/quadrature.hpp"

namespace ldg {

/// phi_m(xi) = sqrt((2m + 1) / 2) P_m(xi), so that
/// \int_{-1}^{1} phi_m phi_n = delta_{mn}.
double basis_value(int m, double xi);

/// d(phi_m)/dxi.
double basis_deriv(int m, double xi);

/// Basis tables at a quadrature rule's points, stored point-major:
/// phi[q * n_modes + m]. Trace vectors hold phi_m(+1) and phi_m(-1).
struct BasisTable {
    int n_modes = 0;
    int n_points = 0;
    std::vector<double> phi;
    std::vector<double> dphi;
    std::vector<double> trace_right;
    std::vector<double> trace_left;
};

/// Tabulate the first (degree + 1) modes at the rule's points.
BasisTable build_basis_table(int degree, const QuadratureRule& rule);

} // namespace ldg
