#include "ldg/operators.hpp"

#include <cmath>

#include "ldg/check.hpp"
#include "ldg/kernels.hpp"

namespace ldg {

LdgContext make_context(MeshPtr mesh, int degree, const AbcdParams& params) {
    LDG_CHECK(mesh != nullptr, "null mesh");
    LDG_CHECK(degree >= 1 && degree <= 3, "supported degrees are 1, 2, 3");
    LdgContext ctx;
    ctx.mesh = std::move(mesh);
    ctx.degree = degree;
    ctx.params = params;
    ctx.volume_rule = gauss_legendre_rule(2 * (degree + 1));
    ctx.volume_basis = build_basis_table(degree, ctx.volume_rule);
    return ctx;
}

namespace {

/// Interface values per the flux spec, indexed like InterfaceTraces.
std::vector<double> interface_flux_values(const LdgContext& ctx, const DGField& f,
                                          const FluxSpec& flux) {
    const auto traces = interface_traces(f);
    const int n = ctx.mesh->n_cells;
    std::vector<double> fhat(n);
    const bool penalized = flux.rule == TraceRule::PlusWithJumpPenalty ||
                           flux.rule == TraceRule::MinusWithJumpPenalty;
    const bool from_plus =
        flux.rule == TraceRule::Plus || flux.rule == TraceRule::PlusWithJumpPenalty;
    LDG_CHECK(!penalized || flux.jump_source != nullptr,
              "penalty rule requires a jump source field");
    if (penalized && flux.penalty_sign != 0) {
        const auto jtr = interface_traces(*flux.jump_source);
        const double factor = flux.penalty_sign * ctx.params.lambda * 0.5;
        for (int j = 0; j < n; ++j)
            fhat[j] = (from_plus ? traces.plus[j] : traces.minus[j]) + factor * jtr.jump(j);
    } else {
        // penalty_sign == 0 eliminates the penalty term exactly
        for (int j = 0; j < n; ++j)
            fhat[j] = from_plus ? traces.plus[j] : traces.minus[j];
    }
    return fhat;
}

} // namespace

DGField weak_deriv(const LdgContext& ctx, const DGField& f, const FluxSpec& flux) {
    LDG_CHECK(f.mesh == ctx.mesh && f.degree == ctx.degree, "field does not match context");
    const auto fhat = interface_flux_values(ctx, f, flux);
    const auto values = eval_at_table(f, ctx.volume_basis);
    DGField g = make_zero_field(ctx.mesh, ctx.degree);
    kern::weak_deriv_cells(ctx.mesh->n_cells, ctx.degree + 1, ctx.volume_rule.n_points,
                           ctx.mesh->cell_widths.data(), ctx.volume_rule.weights.data(),
                           ctx.volume_basis.dphi.data(), ctx.volume_basis.trace_right.data(),
                           ctx.volume_basis.trace_left.data(), values.data(), fhat.data(),
                           g.coeffs.data());
    return g;
}

AuxFields compute_aux(const LdgContext& ctx, const DGField& eta_h, const DGField& u_h) {
    LDG_CHECK(conformable(eta_h, u_h), "fields not conformable");
    AuxFields aux;
    aux.v = weak_deriv(ctx, u_h, FluxSpec::plus());
    aux.w = weak_deriv(ctx, eta_h, FluxSpec::plus());
    aux.p = weak_deriv(ctx, aux.v, FluxSpec::minus());
    aux.theta = weak_deriv(ctx, aux.w, FluxSpec::minus());
    aux.q = weak_deriv(ctx, aux.v, FluxSpec::plus_penalty(ctx.params.sign_c, aux.w));
    aux.zeta = weak_deriv(ctx, aux.w, FluxSpec::minus_penalty(ctx.params.sign_a, aux.v));
    return aux;
}

double compute_alpha(const LdgContext& ctx, const DGField& eta_h, const DGField& u_h) {
    const auto eta_vals = eval_at_table(eta_h, ctx.volume_basis);
    const auto u_vals = eval_at_table(u_h, ctx.volume_basis);
    double alpha = kern::max_wave_speed(eta_vals.size(), eta_vals.data(), u_vals.data());

    const auto eta_tr = interface_traces(eta_h);
    const auto u_tr = interface_traces(u_h);
    const std::size_t n = eta_tr.minus.size();
    alpha = std::max(alpha, kern::max_wave_speed(n, eta_tr.minus.data(), u_tr.minus.data()));
    alpha = std::max(alpha, kern::max_wave_speed(n, eta_tr.plus.data(), u_tr.plus.data()));
    return alpha;
}

void lf_flux(const InterfaceTraces& eta_tr, const InterfaceTraces& u_tr, double alpha,
             std::vector<double>& f1, std::vector<double>& f2) {
    const std::size_t n = eta_tr.minus.size();
    LDG_CHECK(u_tr.minus.size() == n, "trace sets not conformable");
    f1.resize(n);
    f2.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double em = eta_tr.minus[j];
        const double ep = eta_tr.plus[j];
        const double um = u_tr.minus[j];
        const double up = u_tr.plus[j];
        f1[j] = 0.5 * (um + up) + 0.5 * (em * um + ep * up) - 0.5 * alpha * (ep - em);
        f2[j] = 0.5 * (em + ep) + 0.25 * (um * um + up * up) - 0.5 * alpha * (up - um);
    }
}

ResidualResult spatial_residual(const LdgContext& ctx, const DGField& eta_h,
                                const DGField& u_h, double t, double alpha,
                                const SourcePair* source) {
    const auto aux = compute_aux(ctx, eta_h, u_h);

    const auto eta_tr = interface_traces(eta_h);
    const auto u_tr = interface_traces(u_h);
    std::vector<double> f1, f2;
    lf_flux(eta_tr, u_tr, alpha, f1, f2);

    // Total interface fluxes: the dispersive terms ride along as a*q^- and
    // c*zeta^-.
    const int n = ctx.mesh->n_cells;
    const auto q_tr = interface_traces(aux.q);
    const auto zeta_tr = interface_traces(aux.zeta);
    for (int j = 0; j < n; ++j) {
        f1[j] += ctx.params.a * q_tr.minus[j];
        f2[j] += ctx.params.c * zeta_tr.minus[j];
    }

    // Volume fluxes u + eta*u + a*q and eta + u^2/2 + c*zeta at the
    // assembly points.
    const int nq = ctx.volume_rule.n_points;
    const auto eta_vals = eval_at_table(eta_h, ctx.volume_basis);
    const auto u_vals = eval_at_table(u_h, ctx.volume_basis);
    const auto q_vals = eval_at_table(aux.q, ctx.volume_basis);
    const auto zeta_vals = eval_at_table(aux.zeta, ctx.volume_basis);
    std::vector<double> flux1(eta_vals.size());
    std::vector<double> flux2(eta_vals.size());
    for (std::size_t i = 0; i < flux1.size(); ++i) {
        flux1[i] = u_vals[i] + eta_vals[i] * u_vals[i] + ctx.params.a * q_vals[i];
        flux2[i] = eta_vals[i] + 0.5 * u_vals[i] * u_vals[i] + ctx.params.c * zeta_vals[i];
    }

    std::vector<double> src1, src2;
    const double* src1_ptr = nullptr;
    const double* src2_ptr = nullptr;
    if (source != nullptr) {
        src1.resize(flux1.size());
        src2.resize(flux1.size());
        for (int j = 0; j < n; ++j) {
            for (int q = 0; q < nq; ++q) {
                const double x = ctx.mesh->to_physical(j, ctx.volume_rule.ref_points[q]);
                src1[static_cast<std::size_t>(j) * nq + q] = source->s1(x, t);
                src2[static_cast<std::size_t>(j) * nq + q] = source->s2(x, t);
            }
        }
        src1_ptr = src1.data();
        src2_ptr = src2.data();
    }

    ResidualResult res;
    res.r_eta = make_zero_field(ctx.mesh, ctx.degree);
    res.r_u = make_zero_field(ctx.mesh, ctx.degree);
    kern::residual_cells(n, ctx.degree + 1, nq, ctx.mesh->cell_widths.data(),
                         ctx.volume_rule.weights.data(), ctx.volume_basis.phi.data(),
                         ctx.volume_basis.dphi.data(), ctx.volume_basis.trace_right.data(),
                         ctx.volume_basis.trace_left.data(), flux1.data(), f1.data(),
                         src1_ptr, res.r_eta.coeffs.data());
    kern::residual_cells(n, ctx.degree + 1, nq, ctx.mesh->cell_widths.data(),
                         ctx.volume_rule.weights.data(), ctx.volume_basis.phi.data(),
                         ctx.volume_basis.dphi.data(), ctx.volume_basis.trace_right.data(),
                         ctx.volume_basis.trace_left.data(), flux2.data(), f2.data(),
                         src2_ptr, res.r_u.coeffs.data());
    res.finite = res.r_eta.all_finite() && res.r_u.all_finite();
    return res;
}

std::pair<double, double> conserved_quantities(const DGField& eta_h, const DGField& u_h) {
    return {integral(eta_h), integral(u_h)};
}

} // namespace ldg
