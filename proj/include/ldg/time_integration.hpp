/// @file time_integration.hpp
/// @brief Third-order strong-stability-preserving Runge-Kutta stepping in
/// Shu-Osher form, with exact landing on requested times and graceful
/// blow-up handling.

#pragma once

#include <optional>
#include <vector>

#include "ldg/cases.hpp"
#include "ldg/evolution.hpp"
#include "ldg/field.hpp"
#include "ldg/operators.hpp"

namespace ldg {

inline double axpby(double a, double x, double b, double y) { return a * x + b * y; }

/// One Shu-Osher SSP-RK3 step of y' = rhs(y, t) for any state type with an
/// axpby(a, x, b, y) overload. Used directly by the scalar surrogate tests
/// and mirrored by the field stepper below.
template <class State, class Rhs>
State ssp_rk3_step_generic(const State& y, double t, double dt, Rhs&& rhs) {
    const State k1 = rhs(y, t);
    const State y1 = axpby(1.0, y, dt, k1);
    const State k2 = rhs(y1, t + dt);
    const State y2 = axpby(0.75, y, 0.25, axpby(1.0, y1, dt, k2));
    const State k3 = rhs(y2, t + 0.5 * dt);
    return axpby(1.0 / 3.0, y, 2.0 / 3.0, axpby(1.0, y2, dt, k3));
}

struct SimState {
    double t = 0.0;
    DGField eta_h;
    DGField u_h;
};

/// When the dissipation coefficient alpha is refreshed: once per step
/// (default), at every RK stage, or only from the initial data.
enum class AlphaPolicy { PerStep, PerStage, InitialOnly };

AlphaPolicy parse_alpha_policy(const std::string& text);
std::string alpha_policy_name(AlphaPolicy policy);

struct StepResult {
    SimState state;
    bool blew_up = false;
};

/// One SSP-RK3 step of the coupled system. fixed_alpha carries the
/// per-step/initial policies; nullopt recomputes alpha at every stage. On a
/// non-finite residual the pre-step state comes back with blew_up set.
StepResult ssp_rk3_step(const SimState& state, double dt, const LdgContext& ctx,
                        const EvolutionOperator& op, const SourcePair* source,
                        std::optional<double> fixed_alpha);

struct InvariantSample {
    double t = 0.0;
    double i_eta = 0.0;
    double i_u = 0.0;
    double eta_linf = 0.0;
};

struct Trajectory {
    std::vector<SimState> snapshots; // at the requested times, in order
    std::vector<InvariantSample> invariants;
    SimState final_state;
    bool blew_up = false;
    double last_valid_time = 0.0;
    int steps_taken = 0;
};

/// Integrates the case from its projected initial data to t_final, landing
/// exactly on every snapshot time and on t_final by step shortening. The
/// invariant log gets one sample per step. A blow-up (non-finite state or
/// max|eta| above 1e6) stops the run and flushes the last valid state as a
/// terminal snapshot.
Trajectory run_simulation(const CaseSpec& spec, int n_cells, int degree,
                          const DtRule& dt_rule, const std::vector<double>& snapshot_times,
                          AlphaPolicy policy);

} // namespace ldg
