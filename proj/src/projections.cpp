#include "ldg/projections.hpp"

#include <Eigen/Dense>

#include "ldg/basis.hpp"
#include "ldg/check.hpp"
#include "ldg/quadrature.hpp"

namespace ldg {

namespace {

/// Projection quadrature, exact well past the 2k degree the orthogonality
/// conditions need.
QuadratureRule projection_rule(int degree) { return gauss_legendre_rule(degree + 3); }

/// Radau projections: k orthogonality rows against modes 0..k-1 plus one
/// endpoint interpolation row, solved densely per cell.
DGField radau_project(const ScalarFn& g, MeshPtr mesh, int degree, double endpoint_xi) {
    LDG_CHECK(mesh != nullptr, "null mesh");
    LDG_CHECK(degree >= 1, "Radau projection needs degree >= 1");
    const auto rule = projection_rule(degree);
    const auto table = build_basis_table(degree, rule);
    const int n_modes = degree + 1;

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n_modes, n_modes);
    for (int m = 0; m + 1 < n_modes; ++m)
        for (int n = 0; n < n_modes; ++n)
            for (int q = 0; q < rule.n_points; ++q)
                A(m, n) += rule.weights[q] *
                           table.phi[static_cast<std::size_t>(q) * n_modes + m] *
                           table.phi[static_cast<std::size_t>(q) * n_modes + n];
    for (int n = 0; n < n_modes; ++n) A(n_modes - 1, n) = basis_value(n, endpoint_xi);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    LDG_CHECK((A * lu.solve(Eigen::MatrixXd::Identity(n_modes, n_modes)) -
               Eigen::MatrixXd::Identity(n_modes, n_modes))
                      .norm() < 1e-10,
              "singular local projection system");

    DGField f = make_zero_field(mesh, degree);
    Eigen::VectorXd rhs(n_modes);
    for (int j = 0; j < mesh->n_cells; ++j) {
        for (int m = 0; m + 1 < n_modes; ++m) {
            double acc = 0.0;
            for (int q = 0; q < rule.n_points; ++q)
                acc += rule.weights[q] * g(mesh->to_physical(j, rule.ref_points[q])) *
                       table.phi[static_cast<std::size_t>(q) * n_modes + m];
            rhs(m) = acc;
        }
        rhs(n_modes - 1) = g(mesh->to_physical(j, endpoint_xi));
        const Eigen::VectorXd c = lu.solve(rhs);
        for (int m = 0; m < n_modes; ++m) f.coeff(j, m) = c(m);
    }
    return f;
}

} // namespace

DGField l2_project(const ScalarFn& g, MeshPtr mesh, int degree) {
    LDG_CHECK(mesh != nullptr, "null mesh");
    const auto rule = projection_rule(degree);
    const auto table = build_basis_table(degree, rule);
    const int n_modes = degree + 1;
    DGField f = make_zero_field(mesh, degree);
    for (int j = 0; j < mesh->n_cells; ++j) {
        for (int q = 0; q < rule.n_points; ++q) {
            const double wg = rule.weights[q] * g(mesh->to_physical(j, rule.ref_points[q]));
            for (int m = 0; m < n_modes; ++m)
                f.coeff(j, m) += wg * table.phi[static_cast<std::size_t>(q) * n_modes + m];
        }
    }
    return f;
}

DGField radau_project_plus(const ScalarFn& g, MeshPtr mesh, int degree) {
    return radau_project(g, std::move(mesh), degree, -1.0);
}

DGField radau_project_minus(const ScalarFn& g, MeshPtr mesh, int degree) {
    return radau_project(g, std::move(mesh), degree, 1.0);
}

InitialState init_state(const ScalarFn& eta0, const ScalarFn& u0, MeshPtr mesh, int degree) {
    InitialState s;
    s.eta_h = radau_project_plus(eta0, mesh, degree);
    s.u_h = radau_project_plus(u0, std::move(mesh), degree);
    return s;
}

} // namespace ldg
