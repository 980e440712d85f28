/// @file diagnostics.hpp
/// @brief Projection-error split diagnostic: compares the distance of the
/// numerical solution from projected exact data against the auxiliary-field
/// mismatch it is bounded by.

#pragma once

#include <optional>

#include "ldg/exact.hpp"
#include "ldg/field.hpp"
#include "ldg/operators.hpp"

namespace ldg {

/// xi fields are projection-minus-numerical differences: xi_u = P+u - u_h,
/// xi_v = P v - v_h (plain L2 projection), and the eta/w analogues. The
/// ratios ||d/dx xi_u|| / ||xi_v|| and h^{-1/2} |[xi_u]| / ||xi_v|| stay
/// bounded under refinement; nullopt marks a vanishing denominator.
struct ErrorSplitDiagnostic {
    DGField xi_u;
    DGField xi_v;
    DGField xi_eta;
    DGField xi_w;
    std::optional<double> ratio_u_deriv;
    std::optional<double> ratio_u_jump;
    std::optional<double> ratio_eta_deriv;
    std::optional<double> ratio_eta_jump;
};

ErrorSplitDiagnostic xi_diagnostic(const LdgContext& ctx, const DGField& eta_h,
                                   const DGField& u_h, const AuxFields& aux,
                                   const ClosedForm& eta_exact, const ClosedForm& u_exact,
                                   double t);

} // namespace ldg
