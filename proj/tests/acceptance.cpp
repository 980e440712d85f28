/// @file acceptance.cpp
/// @brief End-to-end acceptance suite. Prints one PASS/FAIL line per
/// criterion and exits 10 if any criterion failed, 0 otherwise.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ldg/basis.hpp"
#include "ldg/cases.hpp"
#include "ldg/evolution.hpp"
#include "ldg/experiments.hpp"
#include "ldg/field.hpp"
#include "ldg/io.hpp"
#include "ldg/operators.hpp"
#include "ldg/projections.hpp"
#include "ldg/time_integration.hpp"

using namespace ldg;

namespace {

int g_failed = 0;

struct Outcome {
    bool ok = false;
    std::string detail;
};

void run_criterion(int idx, const char* name, const std::function<Outcome()>& body) {
    Outcome res;
    try {
        res = body();
    } catch (const std::exception& e) {
        res.ok = false;
        res.detail = std::string("exception: ") + e.what();
    }
    if (!res.ok) ++g_failed;
    std::printf("%s %2d %-22s %s\n", res.ok ? "PASS" : "FAIL", idx, name,
                res.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

bool near(double x, double target, double tol) { return std::abs(x - target) <= tol; }

double rate_or_nan(const std::optional<double>& r) {
    return r.has_value() ? *r : std::numeric_limits<double>::quiet_NaN();
}

/// Final-row rate/error gate shared by the convergence criteria.
Outcome rate_gate(const AccuracyStudy& study, double target_u, double target_eta,
                  double err_cap_u, double err_cap_eta, double wall_cap) {
    const ErrorRow& last = study.report.rows.back();
    const double ru = rate_or_nan(last.rate_l2_u);
    const double re = rate_or_nan(last.rate_l2_eta);
    Outcome res;
    res.ok = near(ru, target_u, 0.2) && near(re, target_eta, 0.2);
    if (err_cap_u > 0.0) res.ok = res.ok && last.l2_u <= err_cap_u;
    if (err_cap_eta > 0.0) res.ok = res.ok && last.l2_eta <= err_cap_eta;
    if (wall_cap > 0.0) res.ok = res.ok && study.wall_seconds < wall_cap;
    res.detail = fmt("rates u=%.4f eta=%.4f errors %.3e/%.3e wall %.1fs", ru, re,
                     last.l2_u, last.l2_eta, study.wall_seconds);
    return res;
}

/// Pointwise residual of the two equations for a manufactured case, sampled
/// on a 1000-point (x, t) grid.
double manufactured_residual(const CaseSpec& spec) {
    const auto& p = spec.params;
    const auto& e = spec.eta_form;
    const auto& u = spec.u_form;
    double worst = 0.0;
    for (int it = 0; it < 4; ++it) {
        const double t = spec.t_final * it / 3.0;
        for (int ix = 0; ix < 250; ++ix) {
            const double x =
                spec.x_left + (spec.x_right - spec.x_left) * (ix + 0.5) / 250.0;
            const double r1 = e.dt(x, t) + u.dx(1, x, t) +
                              e.dx(1, x, t) * u.value(x, t) +
                              e.value(x, t) * u.dx(1, x, t) + p.a * u.dx(3, x, t) -
                              p.b * e.dt_dxx(x, t) - spec.source.s1(x, t);
            const double r2 = u.dt(x, t) + e.dx(1, x, t) +
                              u.value(x, t) * u.dx(1, x, t) + p.c * e.dx(3, x, t) -
                              p.d * u.dt_dxx(x, t) - spec.source.s2(x, t);
            worst = std::max(worst, std::max(std::abs(r1), std::abs(r2)));
        }
    }
    return worst;
}

double max_coeff_diff(const DGField& f, const DGField& g) {
    double worst = 0.0;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        worst = std::max(worst, std::abs(f.coeffs[i] - g.coeffs[i]));
    return worst;
}

// ---- criterion bodies ----

Outcome eta_exact_cases() {
    Outcome res;
    res.ok = true;
    double worst_eta = 0.0;
    std::string rates;
    for (CaseId id : {CaseId::C5, CaseId::C6}) {
        for (int k : {1, 2}) {
            const auto study = run_accuracy_study(id, k);
            for (const ErrorRow& row : study.report.rows) {
                worst_eta = std::max(worst_eta, row.l2_eta);
                res.ok = res.ok && row.l2_eta <= 1e-12;
            }
            const double ru = rate_or_nan(study.report.rows.back().rate_l2_u);
            res.ok = res.ok && near(ru, k + 1.0, 0.2);
            rates += fmt(" %.2f", ru);
        }
    }
    res.detail = fmt("max eta error %.2e, u rates%s", worst_eta, rates.c_str());
    return res;
}

Outcome manufactured_cases() {
    Outcome res;
    res.ok = true;
    const double dev2 = manufactured_residual(case_catalog(CaseId::C2));
    const double dev4 = manufactured_residual(case_catalog(CaseId::C4));
    res.ok = dev2 <= 1e-10 && dev4 <= 1e-10;

    std::string rates;
    for (int k : {1, 2}) {
        const auto study = run_accuracy_study(CaseId::C2, k);
        const ErrorRow& last = study.report.rows.back();
        const double ru = rate_or_nan(last.rate_l2_u);
        const double re = rate_or_nan(last.rate_l2_eta);
        res.ok = res.ok && near(ru, k + 1.0, 0.2) && near(re, k + 1.0, 0.2);
        rates += fmt(" c2k%d=%.2f/%.2f", k, ru, re);
    }
    {
        const auto study = run_accuracy_study(CaseId::C4, 2);
        const ErrorRow& last = study.report.rows.back();
        const double ru = rate_or_nan(last.rate_l2_u);
        const double re = rate_or_nan(last.rate_l2_eta);
        res.ok = res.ok && near(ru, 3.0, 0.2) && near(re, 3.0, 0.2);
        rates += fmt(" c4k2=%.2f/%.2f", ru, re);
    }
    res.detail = fmt("residuals %.1e/%.1e rates%s", dev2, dev4, rates.c_str());
    return res;
}

// Known red. The collision drives a one-cell spike at x = 0; the densely
// sampled sup recorded here converges to ~10.9 at t = 3.24 under mesh
// refinement (11.24 / 10.91 / 10.87 at N = 80 / 160 / 320), and the t = 4.4
// reading spans 72 (cell midpoints) to 668 (trace points) at N = 160 purely
// by sampling convention. The gate values are kept rather than refit.
Outcome blowup_window() {
    const auto run = run_blowup();
    const auto& inv = run.traj.invariants;
    double before = 0.0;
    for (const auto& s : inv)
        if (s.t <= 3.24 + 1e-9) before = std::max(before, s.eta_linf);
    const double at_end = inv.back().eta_linf;
    const double t_end = inv.back().t;
    Outcome res;
    res.ok = before < 10.0 && at_end >= 60.0 && at_end <= 250.0 &&
             std::abs(t_end - 4.4) <= 1e-9 && run.wall_seconds < 180.0;
    res.detail = fmt("max|eta| %.2f through 3.24, %.1f at %.4f, wall %.1fs", before,
                     at_end, t_end, run.wall_seconds);
    return res;
}

Outcome headon_collision() {
    const auto run = run_headon();
    const auto& traj = run.traj;
    Outcome res;
    res.ok = !traj.blew_up && std::abs(traj.final_state.t - 12.0) <= 1e-9;

    double drift = 0.0;
    for (const auto& s : traj.invariants) {
        drift = std::max(drift, std::abs(s.i_eta - traj.invariants.front().i_eta));
        drift = std::max(drift, std::abs(s.i_u - traj.invariants.front().i_u));
    }
    res.ok = res.ok && drift <= 1e-8;

    // two separated pulses: second peak comparable to the first, valley
    // between them under a quarter of the lower peak
    const auto& snap = traj.snapshots.back();
    const auto sample = sample_state(snap.eta_h, snap.u_h);
    const double width = 28.0;
    std::size_t i1 = 0;
    for (std::size_t i = 0; i < sample.eta.size(); ++i)
        if (sample.eta[i] > sample.eta[i1]) i1 = i;
    const double x1 = sample.x[i1];
    const double p1 = sample.eta[i1];
    double p2 = -std::numeric_limits<double>::infinity(), x2 = x1;
    for (std::size_t i = 0; i < sample.eta.size(); ++i) {
        const double gap = std::abs(sample.x[i] - x1);
        if (std::min(gap, width - gap) < 5.0) continue;
        if (sample.eta[i] > p2) {
            p2 = sample.eta[i];
            x2 = sample.x[i];
        }
    }
    double valley = std::numeric_limits<double>::infinity();
    const double lo = std::min(x1, x2) + 1.0;
    const double hi = std::max(x1, x2) - 1.0;
    for (std::size_t i = 0; i < sample.eta.size(); ++i)
        if (sample.x[i] > lo && sample.x[i] < hi)
            valley = std::min(valley, sample.eta[i]);
    res.ok = res.ok && p2 > 0.5 * p1 && valley < 0.25 * std::min(p1, p2) &&
             run.wall_seconds < 180.0;
    res.detail = fmt("peaks %.4f@%.2f %.4f@%.2f valley %.1e drift %.1e wall %.1fs", p1,
                     x1, p2, x2, valley, drift, run.wall_seconds);
    return res;
}

Outcome operator_properties() {
    Outcome res;
    res.ok = true;
    std::string parts;

    // projection reproduction and orthogonality (same rule the projector uses)
    {
        double worst = 0.0;
        const auto mesh = build_uniform_mesh(0.0, 1.0, 8);
        for (int k : {1, 2, 3}) {
            const auto poly = [k](double x) {
                double v = 1.0;
                for (int m = 1; m <= k; ++m) v = v * x + 0.25 * m;
                return v;
            };
            const auto proj = l2_project(poly, mesh, k);
            worst = std::max(worst, l2_error(proj, poly));

            const auto sproj = l2_project([](double x) { return std::sin(3.0 * x); },
                                          mesh, k);
            const auto rule = gauss_legendre_rule(k + 3);
            const auto basis = build_basis_table(k, rule);
            for (int j = 0; j < mesh->n_cells; ++j)
                for (int m = 0; m <= k; ++m) {
                    double moment = 0.0;
                    for (int q = 0; q < rule.n_points; ++q) {
                        const double x = mesh->to_physical(j, rule.ref_points[q]);
                        moment += 0.5 * mesh->cell_widths[j] * rule.weights[q] *
                                  (std::sin(3.0 * x) - eval_point(sproj, j, rule.ref_points[q])) *
                                  basis.phi[static_cast<std::size_t>(q) * (k + 1) + m];
                    }
                    worst = std::max(worst, std::abs(moment));
                }
        }
        res.ok = res.ok && worst <= 1e-13;
        parts += fmt(" proj=%.1e", worst);
    }

    // weak derivative of piecewise-constant data {3, 5} against hand values:
    // G_{j,m} reduces to a pure interface difference times phi_m(-1)
    {
        const auto mesh = build_uniform_mesh(0.0, 1.0, 2);
        const auto ctx = make_context(mesh, 1, make_params(0.0, 0.0, 0.0, 0.0));
        auto f = make_zero_field(mesh, 1);
        f.coeff(0, 0) = 3.0 * std::sqrt(2.0);
        f.coeff(1, 0) = 5.0 * std::sqrt(2.0);
        const auto g = weak_deriv(ctx, f, FluxSpec::minus());
        const double s2 = std::sqrt(2.0), s15 = std::sqrt(1.5);
        double worst = 0.0;
        const std::pair<double, double> checks[] = {
            {g.coeff(0, 0), -4.0 * s2},    {g.coeff(0, 1), 8.0 * s15},
            {g.coeff(1, 0), 4.0 * s2},     {g.coeff(1, 1), -8.0 * s15},
            {eval_point(g, 0, 0.0), -4.0}, {eval_point(g, 1, 0.0), 4.0}};
        for (const auto& [got, want] : checks)
            worst = std::max(worst, std::abs(got - want));
        res.ok = res.ok && worst <= 1e-13;
        parts += fmt(" const-data=%.1e", worst);
    }

    // flux consistency on continuous traces
    {
        InterfaceTraces et, ut;
        et.minus = {0.3, -1.2};
        et.plus = et.minus;
        ut.minus = {-0.7, 0.4};
        ut.plus = ut.minus;
        std::vector<double> f1, f2;
        lf_flux(et, ut, 1.3, f1, f2);
        double worst = 0.0;
        for (int j = 0; j < 2; ++j) {
            const double eta = et.minus[j], u = ut.minus[j];
            worst = std::max(worst, std::abs(f1[j] - (u + eta * u)));
            worst = std::max(worst, std::abs(f2[j] - (eta + 0.5 * u * u)));
        }
        res.ok = res.ok && worst == 0.0;
        parts += fmt(" flux=%.1e", worst);
    }

    // aux recovery is linear; zero penalty signs reduce to plain traces
    {
        const auto mesh = build_uniform_mesh(0.0, 40.0, 16);
        const auto spec = case_catalog(CaseId::C1);
        const auto ctx = make_context(mesh, 2, spec.params);
        const auto fa = l2_project([](double x) { return std::sin(0.3 * x); }, mesh, 2);
        const auto fb = radau_project_plus([](double x) { return std::cos(0.2 * x) + 0.1 * x; },
                                           mesh, 2);
        const auto ga = l2_project([](double x) { return std::cos(0.15 * x); }, mesh, 2);
        const auto gb = radau_project_plus([](double x) { return std::sin(0.45 * x); }, mesh, 2);
        const auto ax = compute_aux(ctx, fa, ga);
        const auto ay = compute_aux(ctx, fb, gb);
        const auto az = compute_aux(ctx, axpby(1.0, fa, -2.5, fb), axpby(1.0, ga, -2.5, gb));
        double worst = 0.0;
        const auto combine = [&](const DGField& a, const DGField& b, const DGField& z) {
            worst = std::max(worst, max_coeff_diff(z, axpby(1.0, a, -2.5, b)));
        };
        combine(ax.v, ay.v, az.v);
        combine(ax.w, ay.w, az.w);
        combine(ax.p, ay.p, az.p);
        combine(ax.q, ay.q, az.q);
        combine(ax.theta, ay.theta, az.theta);
        combine(ax.zeta, ay.zeta, az.zeta);
        res.ok = res.ok && worst <= 1e-12;
        parts += fmt(" aux=%.1e", worst);

        const double s0 =
            std::max(max_coeff_diff(weak_deriv(ctx, fa, FluxSpec::minus_penalty(0, ga)),
                                    weak_deriv(ctx, fa, FluxSpec::minus())),
                     max_coeff_diff(weak_deriv(ctx, fa, FluxSpec::plus_penalty(0, ga)),
                                    weak_deriv(ctx, fa, FluxSpec::plus())));
        res.ok = res.ok && s0 <= 1e-14;
        parts += fmt(" sign0=%.1e", s0);
    }

    // implicit-solve round trip
    {
        const auto spec = case_catalog(CaseId::C1);
        const auto mesh = build_uniform_mesh(spec.x_left, spec.x_right, 32);
        const auto ctx = make_context(mesh, 2, spec.params);
        const auto op = build_evolution_solver(ctx);
        const auto re = l2_project([](double x) { return std::sin(0.4 * x) + 0.2; }, mesh, 2);
        const auto ru = l2_project([](double x) { return std::cos(0.25 * x); }, mesh, 2);
        const auto [de, du] = recover_time_derivatives(op, re, ru);
        const double rt = std::max(max_coeff_diff(apply_forward_eta(op, de), re),
                                   max_coeff_diff(apply_forward_u(op, du), ru));
        res.ok = res.ok && rt <= 1e-10;
        parts += fmt(" roundtrip=%.1e", rt);
    }

    // scalar stepper order
    {
        const auto rhs = [](double y, double) { return -y; };
        std::vector<double> errs;
        for (int n : {20, 40, 80}) {
            double y = 1.0, t = 0.0;
            const double dt = 1.0 / n;
            for (int i = 0; i < n; ++i, t += dt) y = ssp_rk3_step_generic(y, t, dt, rhs);
            errs.push_back(std::abs(y - std::exp(-1.0)));
        }
        const double r1 = std::log2(errs[0] / errs[1]);
        const double r2 = std::log2(errs[1] / errs[2]);
        res.ok = res.ok && near(r1, 3.0, 0.05) && near(r2, 3.0, 0.05);
        parts += fmt(" rk3=%.3f/%.3f", r1, r2);
    }

    // error-split ratios stay bounded under refinement
    {
        StudyOptions opts;
        opts.refinements = {{40, 40}, {80, 80}, {160, 160}};
        const auto study = run_diagnose(CaseId::C1, 1, opts);
        bool bounded = study.rows.size() == 3;
        double worst_growth = 0.0;
        const auto column = [&](const std::function<std::optional<double>(const DiagnosticRow&)>& get) {
            for (std::size_t i = 0; i + 1 < study.rows.size(); ++i) {
                const auto lo = get(study.rows[i]);
                const auto hi = get(study.rows[i + 1]);
                if (!lo || !hi) {
                    bounded = false;
                    return;
                }
                const double growth = *hi / *lo;
                worst_growth = std::max(worst_growth, growth);
                bounded = bounded && growth < 2.0;
            }
        };
        column([](const DiagnosticRow& r) { return r.ratio_u_deriv; });
        column([](const DiagnosticRow& r) { return r.ratio_u_jump; });
        column([](const DiagnosticRow& r) { return r.ratio_eta_deriv; });
        column([](const DiagnosticRow& r) { return r.ratio_eta_jump; });
        res.ok = res.ok && bounded;
        parts += fmt(" ratio-growth=%.2f", worst_growth);
    }

    res.detail = parts.empty() ? "" : parts.substr(1);
    return res;
}

Outcome determinism() {
    StudyOptions opts;
    opts.refinements = {{20, 20}, {40, 40}};
    const auto s1 = run_accuracy_study(CaseId::C1, 1, opts);
    const auto s2 = run_accuracy_study(CaseId::C1, 1, opts);
    const bool tables = render_error_table(s1.report) == render_error_table(s2.report);

    const auto spec = case_catalog(CaseId::C1);
    const auto one = run_simulation(spec, 20, 1, DtRule::fixed_count(20), {spec.t_final},
                                    AlphaPolicy::PerStep);
    const auto two = run_simulation(spec, 20, 1, DtRule::fixed_count(20), {spec.t_final},
                                    AlphaPolicy::PerStep);
    const bool snaps =
        render_snapshot(sample_state(one.snapshots.back().eta_h, one.snapshots.back().u_h)) ==
        render_snapshot(sample_state(two.snapshots.back().eta_h, two.snapshots.back().u_h));
    const bool logs = render_invariant_log(one.invariants) == render_invariant_log(two.invariants);

    Outcome res;
    res.ok = tables && snaps && logs;
    res.detail = fmt("tables %s, snapshots %s, logs %s", tables ? "identical" : "DIFFER",
                     snaps ? "identical" : "DIFFER", logs ? "identical" : "DIFFER");
    return res;
}

} // namespace

int main() {
    run_criterion(1, "case1-k1-rates", [] {
        return rate_gate(run_accuracy_study(CaseId::C1, 1), 2.04, 2.02, 2.0 * 1.657e-4,
                         2.0 * 1.748e-4, 30.0);
    });
    run_criterion(2, "case1-k2-rates", [] {
        return rate_gate(run_accuracy_study(CaseId::C1, 2), 2.96, 2.93, 2.0 * 1.645e-6,
                         2.0 * 1.732e-6, 60.0);
    });
    run_criterion(3, "case3-k2-rates", [] {
        return rate_gate(run_accuracy_study(CaseId::C3, 2), 2.99, 2.99, 0.0, 0.0, 0.0);
    });
    run_criterion(4, "eta-exact-cases", eta_exact_cases);
    run_criterion(5, "case7-stiff-rates", [] {
        return rate_gate(run_accuracy_study(CaseId::C7, 2), 2.95, 2.97, 0.0, 0.0, 0.0);
    });
    run_criterion(6, "manufactured-cases", manufactured_cases);
    run_criterion(7, "blowup-window", blowup_window);
    run_criterion(8, "headon-collision", headon_collision);
    run_criterion(9, "operator-properties", operator_properties);
    run_criterion(10, "determinism", determinism);

    std::printf("acceptance: %d/10 passed\n", 10 - g_failed);
    return g_failed == 0 ? 0 : 10;
}
