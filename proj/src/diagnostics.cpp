#include "ldg/diagnostics.hpp"

#include <cmath>

#include "ldg/projections.hpp"

namespace ldg {

ErrorSplitDiagnostic xi_diagnostic(const LdgContext& ctx, const DGField& eta_h,
                                   const DGField& u_h, const AuxFields& aux,
                                   const ClosedForm& eta_exact, const ClosedForm& u_exact,
                                   double t) {
    const auto mesh = ctx.mesh;
    const int k = ctx.degree;

    ErrorSplitDiagnostic d;
    d.xi_u = axpby(1.0, radau_project_plus(u_exact.at_time(t), mesh, k), -1.0, u_h);
    d.xi_eta = axpby(1.0, radau_project_plus(eta_exact.at_time(t), mesh, k), -1.0, eta_h);
    const auto v_exact = [&u_exact, t](double x) { return u_exact.dx(1, x, t); };
    const auto w_exact = [&eta_exact, t](double x) { return eta_exact.dx(1, x, t); };
    d.xi_v = axpby(1.0, l2_project(v_exact, mesh, k), -1.0, aux.v);
    d.xi_w = axpby(1.0, l2_project(w_exact, mesh, k), -1.0, aux.w);

    const double inv_sqrt_h = 1.0 / std::sqrt(mesh->h_max);
    const double den_v = l2_norm(d.xi_v);
    if (den_v >= 1e-14) {
        d.ratio_u_deriv = broken_deriv_l2(d.xi_u) / den_v;
        d.ratio_u_jump = inv_sqrt_h * jump_seminorm(d.xi_u) / den_v;
    }
    const double den_w = l2_norm(d.xi_w);
    if (den_w >= 1e-14) {
        d.ratio_eta_deriv = broken_deriv_l2(d.xi_eta) / den_w;
        d.ratio_eta_jump = inv_sqrt_h * jump_seminorm(d.xi_eta) / den_w;
    }
    return d;
}

} // namespace ldg
