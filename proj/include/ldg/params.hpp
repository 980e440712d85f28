/// @file params.hpp
/// @brief Model parameters for the dispersive Boussinesq family and their
/// validation rules.

#pragma once

#include <optional>
#include <string>

namespace ldg {

/// sign(0) = 0, which in turn disables the matching jump penalty exactly.
int sign_of(double x);

/// Parameters of the two-equation system
///   eta_t + u_x + (eta u)_x + a u_xxx - b eta_xxt = 0
///   u_t + eta_x + (u^2/2)_x + c eta_xxx - d u_xxt = 0
/// lambda weights the interface jump penalties in the auxiliary fluxes.
struct AbcdParams {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    int sign_a = 0;
    int sign_c = 0;
    double lambda = 1.0;
};

/// Validates the hard constraints (b >= 0, d >= 0, required by the implicit
/// update operators) and fills the cached signs.
AbcdParams make_params(double a, double b, double c, double d, double lambda = 1.0);

/// The family is usually posed with a+b+c+d = 1/3, but known exact solutions
/// exist off that slice, so a violation only warns.
std::optional<std::string> sum_rule_warning(const AbcdParams& p);

} // namespace ldg
