#include "ldg/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "ldg/check.hpp"
#include "ldg/evolution.hpp"
#include "ldg/projections.hpp"

namespace ldg {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

CaseSpec configured_case(CaseId id, double lambda, bool headon_literal_sign) {
    CaseSpec spec =
        id == CaseId::Headon ? headon_case(headon_literal_sign) : case_catalog(id);
    spec.params.lambda = lambda;
    return spec;
}

} // namespace

AccuracyStudy run_accuracy_study(CaseId id, int degree, const StudyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    AccuracyStudy study;
    study.spec = configured_case(id, options.lambda, false);
    LDG_CHECK(study.spec.has_exact, "case has no exact solution to measure against");
    study.degree = degree;
    study.report.id = id;
    study.report.degree = degree;

    const auto& ladder =
        options.refinements.has_value() ? *options.refinements : study.spec.refinements;
    LDG_CHECK(!ladder.empty(), "empty refinement ladder");

    for (const auto& [nx, nt] : ladder) {
        const Trajectory traj =
            run_simulation(study.spec, nx, degree, DtRule::fixed_count(nt), {},
                           options.alpha_policy);
        if (traj.blew_up) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "%s blew up near t=%.6g at Nx=%d",
                          study.spec.name.c_str(), traj.last_valid_time, nx);
            throw BlowupError(buf);
        }
        const double t_end = study.spec.t_final;
        ErrorRow row;
        row.nx = nx;
        row.nt = nt;
        row.l2_u = l2_error(traj.final_state.u_h, study.spec.u_form.at_time(t_end));
        row.l2_eta = l2_error(traj.final_state.eta_h, study.spec.eta_form.at_time(t_end));
        row.linf_u = linf_error(traj.final_state.u_h, study.spec.u_form.at_time(t_end));
        row.linf_eta = linf_error(traj.final_state.eta_h, study.spec.eta_form.at_time(t_end));
        study.report.rows.push_back(row);
    }
    fill_rates(study.report);
    study.wall_seconds = seconds_since(start);
    return study;
}

namespace {

CollisionRun run_collision(CaseId id, const CollisionOptions& options, bool blowup_expected) {
    const auto start = std::chrono::steady_clock::now();
    CollisionRun run;
    run.spec = configured_case(id, options.lambda, options.headon_literal_sign);
    run.n_cells = options.n_cells.value_or(run.spec.default_n_cells);
    run.degree = options.degree.value_or(run.spec.default_degree);
    run.traj = run_simulation(run.spec, run.n_cells, run.degree, run.spec.dt_rule,
                              run.spec.snapshot_times, options.alpha_policy);
    if (run.traj.blew_up && !blowup_expected) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%s blew up near t=%.6g", run.spec.name.c_str(),
                      run.traj.last_valid_time);
        throw BlowupError(buf);
    }
    run.wall_seconds = seconds_since(start);
    return run;
}

} // namespace

CollisionRun run_blowup(const CollisionOptions& options) {
    return run_collision(CaseId::Blowup, options, true);
}

CollisionRun run_headon(const CollisionOptions& options) {
    return run_collision(CaseId::Headon, options, false);
}

CollisionRun run_single(CaseId id, int nx, int nt, const std::vector<double>& snapshots,
                        int degree, AlphaPolicy policy, double lambda,
                        bool headon_literal_sign) {
    const auto start = std::chrono::steady_clock::now();
    CollisionRun run;
    run.spec = configured_case(id, lambda, headon_literal_sign);
    run.n_cells = nx;
    run.degree = degree;
    run.traj =
        run_simulation(run.spec, nx, degree, DtRule::fixed_count(nt), snapshots, policy);
    run.wall_seconds = seconds_since(start);
    return run;
}

DiagnosticStudy run_diagnose(CaseId id, int degree, const StudyOptions& options) {
    DiagnosticStudy study;
    study.spec = configured_case(id, options.lambda, false);
    LDG_CHECK(study.spec.has_exact, "diagnostic needs a case with an exact solution");
    study.degree = degree;

    std::vector<std::pair<int, int>> ladder;
    if (options.refinements.has_value()) {
        ladder = *options.refinements;
    } else {
        // skip the pre-asymptotic coarsest row, keep the next three
        const auto& all = study.spec.refinements;
        for (std::size_t i = 1; i < all.size() && i <= 3; ++i) ladder.push_back(all[i]);
    }
    LDG_CHECK(!ladder.empty(), "empty refinement ladder");

    for (const auto& [nx, nt] : ladder) {
        const Trajectory traj = run_simulation(
            study.spec, nx, degree, DtRule::fixed_count(nt), {}, options.alpha_policy);
        if (traj.blew_up) throw BlowupError(study.spec.name + " blew up during diagnose");

        auto mesh = traj.final_state.eta_h.mesh;
        const LdgContext ctx = make_context(mesh, degree, study.spec.params);
        const AuxFields aux =
            compute_aux(ctx, traj.final_state.eta_h, traj.final_state.u_h);
        const ErrorSplitDiagnostic d =
            xi_diagnostic(ctx, traj.final_state.eta_h, traj.final_state.u_h, aux,
                          study.spec.eta_form, study.spec.u_form, study.spec.t_final);
        DiagnosticRow row;
        row.nx = nx;
        row.nt = nt;
        row.ratio_u_deriv = d.ratio_u_deriv;
        row.ratio_u_jump = d.ratio_u_jump;
        row.ratio_eta_deriv = d.ratio_eta_deriv;
        row.ratio_eta_jump = d.ratio_eta_jump;
        study.rows.push_back(row);
    }
    return study;
}

SourceComparison compare_sources(CaseId id) {
    const CaseSpec spec = case_catalog(id);
    LDG_CHECK(spec.has_source, "case has no manufactured forcing");
    const SourcePair derived = derived_source(spec.params);
    const SourcePair printed = printed_source(id);

    SourceComparison cmp;
    const int nx = 101;
    const int nt = 11;
    for (int i = 0; i < nx; ++i) {
        const double x =
            spec.x_left + (spec.x_right - spec.x_left) * i / static_cast<double>(nx - 1);
        for (int j = 0; j < nt; ++j) {
            const double t = spec.t_final * j / static_cast<double>(nt - 1);
            cmp.max_dev_s1 =
                std::max(cmp.max_dev_s1, std::abs(derived.s1(x, t) - printed.s1(x, t)));
            cmp.max_dev_s2 =
                std::max(cmp.max_dev_s2, std::abs(derived.s2(x, t) - printed.s2(x, t)));
        }
    }
    return cmp;
}

} // namespace ldg
