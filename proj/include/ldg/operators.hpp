/// @file operators.hpp
/// @brief Spatial discretization: auxiliary-variable recovery through
/// one-sided weak derivatives, the Lax-Friedrichs nonlinear flux, and the
/// assembled right-hand side of the semi-discrete system.

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ldg/basis.hpp"
#include "ldg/field.hpp"
#include "ldg/mesh.hpp"
#include "ldg/params.hpp"
#include "ldg/quadrature.hpp"

namespace ldg {

/// Precomputed rules and basis tables shared by all spatial operators on one
/// (mesh, degree, params) configuration. Immutable after construction.
struct LdgContext {
    MeshPtr mesh;
    int degree = 0;
    AbcdParams params;
    QuadratureRule volume_rule; // 2(degree+1) points, used for assembly
    BasisTable volume_basis;
};

LdgContext make_context(MeshPtr mesh, int degree, const AbcdParams& params);

/// Interface value rules for the auxiliary weak derivatives. The penalized
/// rules add sign * lambda * [jump_source] / 2 to the chosen trace.
enum class TraceRule { Plus, Minus, PlusWithJumpPenalty, MinusWithJumpPenalty };

struct FluxSpec {
    TraceRule rule = TraceRule::Plus;
    int penalty_sign = 0;
    const DGField* jump_source = nullptr;

    static FluxSpec plus() { return {TraceRule::Plus, 0, nullptr}; }
    static FluxSpec minus() { return {TraceRule::Minus, 0, nullptr}; }
    static FluxSpec plus_penalty(int sign, const DGField& jump_source) {
        return {TraceRule::PlusWithJumpPenalty, sign, &jump_source};
    }
    static FluxSpec minus_penalty(int sign, const DGField& jump_source) {
        return {TraceRule::MinusWithJumpPenalty, sign, &jump_source};
    }
};

/// Weak derivative G of f: per cell, \int G phi = -[\int f phi_x - fhat phi^-
/// + fhat phi^+], mass-inverted through the diagonal (h_j/2) scaling.
DGField weak_deriv(const LdgContext& ctx, const DGField& f, const FluxSpec& flux);

/// First-order-rewrite auxiliary fields. p and q are both discrete
/// derivatives of the same v and differ only through the flux choice; theta
/// and zeta relate to w the same way.
struct AuxFields {
    DGField v;     // ~ u_x, plus trace
    DGField w;     // ~ eta_x, plus trace
    DGField p;     // ~ v_x, minus trace
    DGField q;     // ~ v_x, plus trace with sign(c) penalty on [w]
    DGField theta; // ~ w_x, minus trace
    DGField zeta;  // ~ w_x, minus trace with sign(a) penalty on [v]
};

AuxFields compute_aux(const LdgContext& ctx, const DGField& eta_h, const DGField& u_h);

/// Global dissipation coefficient max(|u| + sqrt|1 + eta|) over all volume
/// quadrature points and both one-sided traces at every interface. The
/// absolute value keeps it real once 1 + eta dips negative.
double compute_alpha(const LdgContext& ctx, const DGField& eta_h, const DGField& u_h);

/// Lax-Friedrichs flux for the nonlinear pair, per interface:
///   f1 = {u} + {eta u} - (alpha/2)[eta]
///   f2 = {eta} + (1/2){u^2} - (alpha/2)[u]
/// Braces average the one-sided products, brackets are plus-minus jumps.
void lf_flux(const InterfaceTraces& eta_tr, const InterfaceTraces& u_tr, double alpha,
             std::vector<double>& f1, std::vector<double>& f2);

/// Optional manufactured forcing, evaluated pointwise as (x, t).
struct SourcePair {
    std::function<double(double, double)> s1;
    std::function<double(double, double)> s2;
};

struct ResidualResult {
    DGField r_eta;
    DGField r_u;
    bool finite = true;
};

/// Weak-form right sides: d/dt(eta_h - b*theta_h) = r_eta and
/// d/dt(u_h - d*p_h) = r_u in the broken polynomial space, both
/// mass-inverted. alpha is supplied by the caller so its refresh policy
/// stays with the time integrator.
ResidualResult spatial_residual(const LdgContext& ctx, const DGField& eta_h,
                                const DGField& u_h, double t, double alpha,
                                const SourcePair* source);

/// (int eta_h, int u_h): exact discrete invariants of the semi-discrete
/// scheme. Testing against the constant function telescopes every interface
/// term, and the auxiliary fields integrate to zero cell sums the same way,
/// so both integrals are conserved in time.
std::pair<double, double> conserved_quantities(const DGField& eta_h, const DGField& u_h);

} // namespace ldg
