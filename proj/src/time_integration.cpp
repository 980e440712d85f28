#include "ldg/time_integration.hpp"

#include <algorithm>
#include <cmath>

#include "ldg/check.hpp"
#include "ldg/projections.hpp"

namespace ldg {

namespace {

struct StatePair {
    DGField eta;
    DGField u;
};

StatePair axpby(double a, const StatePair& x, double b, const StatePair& y) {
    return {ldg::axpby(a, x.eta, b, y.eta), ldg::axpby(a, x.u, b, y.u)};
}

} // namespace

AlphaPolicy parse_alpha_policy(const std::string& text) {
    if (text == "per-step") return AlphaPolicy::PerStep;
    if (text == "per-stage") return AlphaPolicy::PerStage;
    if (text == "initial") return AlphaPolicy::InitialOnly;
    fail("parse_alpha_policy", "unknown alpha policy '" + text +
                                   "' (expected per-step, per-stage, initial)");
}

std::string alpha_policy_name(AlphaPolicy policy) {
    switch (policy) {
        case AlphaPolicy::PerStep: return "per-step";
        case AlphaPolicy::PerStage: return "per-stage";
        default: return "initial";
    }
}

StepResult ssp_rk3_step(const SimState& state, double dt, const LdgContext& ctx,
                        const EvolutionOperator& op, const SourcePair* source,
                        std::optional<double> fixed_alpha) {
    LDG_CHECK(dt > 0.0, "step size must be positive");
    bool ok = true;
    auto stage = [&](const StatePair& y, double ts) -> StatePair {
        const double alpha =
            fixed_alpha.has_value() ? *fixed_alpha : compute_alpha(ctx, y.eta, y.u);
        const ResidualResult res = spatial_residual(ctx, y.eta, y.u, ts, alpha, source);
        if (!res.finite) {
            ok = false;
            return {res.r_eta, res.r_u};
        }
        auto [eta_t, u_t] = recover_time_derivatives(op, res.r_eta, res.r_u);
        return {std::move(eta_t), std::move(u_t)};
    };

    const StatePair y0{state.eta_h, state.u_h};
    const StatePair k1 = stage(y0, state.t);
    if (!ok) return {state, true};
    const StatePair y1 = axpby(1.0, y0, dt, k1);

    const StatePair k2 = stage(y1, state.t + dt);
    if (!ok) return {state, true};
    const StatePair y2 = axpby(0.75, y0, 0.25, axpby(1.0, y1, dt, k2));

    const StatePair k3 = stage(y2, state.t + 0.5 * dt);
    if (!ok) return {state, true};
    StatePair y3 = axpby(1.0 / 3.0, y0, 2.0 / 3.0, axpby(1.0, y2, dt, k3));

    return {{state.t + dt, std::move(y3.eta), std::move(y3.u)}, false};
}

namespace {

constexpr double kEtaLinfStop = 1e6;

/// Absolute tolerance for identifying landed times with requested ones.
double time_tol(double t_final) { return 1e-12 * std::max(1.0, std::abs(t_final)); }

std::vector<double> sorted_mandatory(double t_final, const std::vector<double>& snapshots) {
    const double tol = time_tol(t_final);
    std::vector<double> mandatory;
    for (const double s : snapshots)
        if (s > tol && s < t_final - tol) mandatory.push_back(s);
    mandatory.push_back(t_final);
    std::sort(mandatory.begin(), mandatory.end());
    mandatory.erase(std::unique(mandatory.begin(), mandatory.end(),
                                [tol](double a, double b) { return std::abs(a - b) <= tol; }),
                    mandatory.end());
    return mandatory;
}

/// Landing times for the equal-target rule: T*i/n plus any off-grid
/// snapshot times, so the default reproduction setups take exactly n steps.
std::vector<double> fixed_count_targets(int n_steps, double t_final,
                                        const std::vector<double>& mandatory) {
    const double tol = time_tol(t_final);
    std::vector<double> targets;
    targets.reserve(n_steps);
    for (int i = 1; i <= n_steps; ++i)
        targets.push_back(t_final * (static_cast<double>(i) / n_steps));
    targets.back() = t_final;
    for (const double m : mandatory) {
        const bool present = std::any_of(targets.begin(), targets.end(),
                                         [&](double v) { return std::abs(v - m) <= tol; });
        if (!present)
            targets.insert(std::upper_bound(targets.begin(), targets.end(), m), m);
    }
    return targets;
}

/// Landing times for a factor schedule: dt = factor * h inside each segment,
/// with steps shortened to land on segment ends and mandatory times. The
/// relative guard folds a would-be sliver step into its predecessor.
std::vector<double> factor_schedule_targets(const DtRule& rule, double t_final, double h,
                                            const std::vector<double>& mandatory) {
    const double tol = time_tol(t_final);
    LDG_CHECK(rule.segments.back().first >= t_final - tol,
              "schedule does not reach the final time");
    std::vector<double> targets;
    double t = 0.0;
    std::size_t mi = 0;
    while (t < t_final - tol) {
        const auto seg = std::find_if(rule.segments.begin(), rule.segments.end(),
                                      [&](const auto& s) { return t < s.first - tol; });
        LDG_CHECK(seg != rule.segments.end(), "schedule does not reach the final time");
        const double dt_nom = seg->second * h;
        while (mi < mandatory.size() && mandatory[mi] <= t + tol) ++mi;
        double stop = std::min(seg->first, t_final);
        if (mi < mandatory.size()) stop = std::min(stop, mandatory[mi]);
        double next = t + dt_nom;
        if (next >= stop - dt_nom * 1e-9) next = stop;
        targets.push_back(next);
        t = next;
    }
    return targets;
}

} // namespace

Trajectory run_simulation(const CaseSpec& spec, int n_cells, int degree,
                          const DtRule& dt_rule, const std::vector<double>& snapshot_times,
                          AlphaPolicy policy) {
    auto mesh = build_uniform_mesh(spec.x_left, spec.x_right, n_cells);
    const LdgContext ctx = make_context(mesh, degree, spec.params);
    const EvolutionOperator op = build_evolution_solver(ctx);
    const InitialState init =
        init_state(spec.eta_form.at_time(0.0), spec.u_form.at_time(0.0), mesh, degree);

    const double t_final = spec.t_final;
    const double tol = time_tol(t_final);
    for (const double s : snapshot_times)
        LDG_CHECK(s >= -tol && s <= t_final + tol, "snapshot time outside the run interval");

    Trajectory traj;
    SimState state{0.0, init.eta_h, init.u_h};
    const SourcePair* source = spec.has_source ? &spec.source : nullptr;

    auto capture_if_requested = [&](const SimState& s) {
        for (const double st : snapshot_times)
            if (std::abs(st - s.t) <= tol) {
                traj.snapshots.push_back(s);
                return;
            }
    };
    auto log_invariants = [&](const SimState& s) {
        const auto [ie, iu] = conserved_quantities(s.eta_h, s.u_h);
        traj.invariants.push_back({s.t, ie, iu, linf_norm(s.eta_h)});
    };

    capture_if_requested(state);
    log_invariants(state);

    if (t_final <= tol) {
        traj.final_state = state;
        traj.last_valid_time = state.t;
        return traj;
    }

    const double alpha_initial = compute_alpha(ctx, state.eta_h, state.u_h);

    const auto mandatory = sorted_mandatory(t_final, snapshot_times);
    const std::vector<double> targets =
        dt_rule.kind == DtRule::Kind::FixedCount
            ? fixed_count_targets(dt_rule.n_steps, t_final, mandatory)
            : factor_schedule_targets(dt_rule, t_final, mesh->h_max, mandatory);

    auto stop_at = [&](const SimState& last_valid) {
        traj.blew_up = true;
        traj.last_valid_time = last_valid.t;
        if (traj.snapshots.empty() || traj.snapshots.back().t < last_valid.t - tol)
            traj.snapshots.push_back(last_valid);
        traj.final_state = last_valid;
    };

    for (const double target : targets) {
        const double dt = target - state.t;
        LDG_CHECK(dt > 0.0, "nonpositive step in schedule");

        std::optional<double> alpha;
        if (policy == AlphaPolicy::InitialOnly)
            alpha = alpha_initial;
        else if (policy == AlphaPolicy::PerStep)
            alpha = compute_alpha(ctx, state.eta_h, state.u_h);

        const SimState before = state;
        StepResult sr = ssp_rk3_step(state, dt, ctx, op, source, alpha);
        ++traj.steps_taken;

        if (sr.blew_up) {
            stop_at(before);
            return traj;
        }
        state = std::move(sr.state);
        state.t = target;

        if (!state.eta_h.all_finite() || !state.u_h.all_finite()) {
            stop_at(before);
            return traj;
        }

        log_invariants(state);
        capture_if_requested(state);

        if (traj.invariants.back().eta_linf > kEtaLinfStop) {
            stop_at(state);
            return traj;
        }
    }

    traj.final_state = state;
    traj.last_valid_time = state.t;
    return traj;
}

} // namespace ldg
