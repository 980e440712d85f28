/// @file evolution.hpp
/// @brief Factorized implicit operators recovering the time derivatives from
/// the weak-form right sides.

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>

#include "ldg/field.hpp"
#include "ldg/operators.hpp"

namespace ldg {

/// Holds the composed second-derivative operator K (plus-trace derivative
/// followed by minus-trace derivative, mass-inverted) and the factorizations
/// of I - b*K and I - d*K in modal coefficient space. K is block-tridiagonal
/// with periodic corner blocks; at this scale it is stored dense. Immutable
/// after construction and shareable across threads.
struct EvolutionOperator {
    MeshPtr mesh;
    int degree = 0;
    double b = 0.0;
    double d = 0.0;
    Eigen::MatrixXd theta_mat;
    std::optional<Eigen::PartialPivLU<Eigen::MatrixXd>> lu_eta; // absent when b = 0
    std::optional<Eigen::PartialPivLU<Eigen::MatrixXd>> lu_u;   // absent when d = 0
};

/// Assembles K by probing the composed weak-derivative operator with unit
/// coefficient vectors, so the matrix agrees with the field path exactly,
/// then factorizes. Nonsingularity is asserted by a solve-residual probe.
EvolutionOperator build_evolution_solver(const LdgContext& ctx);

/// Solves (I - b*K) eta_t = r_eta and (I - d*K) u_t = r_u.
std::pair<DGField, DGField> recover_time_derivatives(const EvolutionOperator& op,
                                                     const DGField& r_eta,
                                                     const DGField& r_u);

/// Forward applications (I - b*K) x and (I - d*K) x, for round-trip checks.
DGField apply_forward_eta(const EvolutionOperator& op, const DGField& x);
DGField apply_forward_u(const EvolutionOperator& op, const DGField& x);

} // namespace ldg
