/// @file projections.hpp
/// @brief L2 and Radau projections into the broken polynomial space, and the
/// construction of numerical initial data.

#pragma once

#include <functional>

#include "ldg/field.hpp"
#include "ldg/mesh.hpp"

namespace ldg {

using ScalarFn = std::function<double(double)>;

/// Standard L2 projection: per cell, (Pg - g) is orthogonal to every basis
/// mode.
DGField l2_project(const ScalarFn& g, MeshPtr mesh, int degree);

/// Radau projection matching g at the LEFT endpoint of every cell and
/// orthogonal to polynomials of degree k-1.
DGField radau_project_plus(const ScalarFn& g, MeshPtr mesh, int degree);

/// Mirror of radau_project_plus, matching at the RIGHT endpoint.
DGField radau_project_minus(const ScalarFn& g, MeshPtr mesh, int degree);

/// Numerical initial data: both unknowns enter through the plus-side Radau
/// projection, pairing with the plus-trace fluxes of the scheme. Auxiliary
/// fields are never stored; they are recovered from (eta_h, u_h) on demand.
struct InitialState {
    DGField eta_h;
    DGField u_h;
};

InitialState init_state(const ScalarFn& eta0, const ScalarFn& u0, MeshPtr mesh, int degree);

} // namespace ldg
