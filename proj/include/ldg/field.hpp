/// @file field.hpp
/// @brief Piecewise-polynomial fields in the orthonormal modal basis, with
/// traces, norms, and the small amount of vector arithmetic time stepping
/// needs.

#pragma once

#include <functional>
#include <vector>

#include "ldg/basis.hpp"
#include "ldg/mesh.hpp"
#include "ldg/quadrature.hpp"

namespace ldg {

/// Modal coefficients, cell-major: coeffs[j * (degree + 1) + m].
struct DGField {
    MeshPtr mesh;
    int degree = 0;
    std::vector<double> coeffs;

    int n_modes() const { return degree + 1; }
    double& coeff(int j, int m) { return coeffs[static_cast<std::size_t>(j) * (degree + 1) + m]; }
    double coeff(int j, int m) const {
        return coeffs[static_cast<std::size_t>(j) * (degree + 1) + m];
    }
    bool all_finite() const;
};

DGField make_zero_field(MeshPtr mesh, int degree);
bool conformable(const DGField& f, const DGField& g);

/// One-sided values at the N periodic interfaces; index j is the interface
/// at the right edge of cell j. minus[j] comes from cell j, plus[j] from
/// cell j+1 (wrapping to cell 0).
struct InterfaceTraces {
    std::vector<double> minus;
    std::vector<double> plus;

    double jump(int j) const { return plus[j] - minus[j]; }
    double average(int j) const { return 0.5 * (plus[j] + minus[j]); }
};

InterfaceTraces interface_traces(const DGField& f);

/// Value at reference coordinate xi in cell j.
double eval_point(const DGField& f, int cell, double xi);

/// Values at a basis table's points, cell-major: values[j * n_points + q].
std::vector<double> eval_at_table(const DGField& f, const BasisTable& table);

/// y <- a*y + b*x
void axpby_inplace(double a, DGField& y, double b, const DGField& x);
DGField axpby(double a, const DGField& x, double b, const DGField& y);

/// Exact L2 norm from modal orthonormality.
double l2_norm(const DGField& f);

/// Exact integral over the domain from the mean modes.
double integral(const DGField& f);

/// L2 norm of the in-cell derivative (interface jumps ignored). Exact: the
/// integrand is a polynomial well inside the error rule's exactness degree.
double broken_deriv_l2(const DGField& f);

/// sqrt of the sum of squared interface jumps.
double jump_seminorm(const DGField& f);

/// L2 distance to a pointwise function, using a degree+3 point rule per cell.
double l2_error(const DGField& f, const std::function<double(double)>& exact);

/// Max distance to a pointwise function, sampled at the error-rule points
/// plus both endpoints of every cell.
double linf_error(const DGField& f, const std::function<double(double)>& exact);

/// Max of |f| over the same sample set as linf_error.
double linf_norm(const DGField& f);

} // namespace ldg
