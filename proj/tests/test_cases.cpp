#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "ldg/cases.hpp"
#include "ldg/check.hpp"
#include "ldg/experiments.hpp"
#include "ldg/projections.hpp"

using namespace ldg;

namespace {

/// Pointwise residual of the first equation at (x, t):
/// eta_t + u_x + (eta u)_x + a u_xxx - b eta_xxt - s1.
double residual1(const CaseSpec& s, double x, double t) {
    const auto& e = s.eta_form;
    const auto& u = s.u_form;
    const double nonlinear = e.dx(1, x, t) * u.value(x, t) + e.value(x, t) * u.dx(1, x, t);
    const double s1 = s.has_source ? s.source.s1(x, t) : 0.0;
    return e.dt(x, t) + u.dx(1, x, t) + nonlinear + s.params.a * u.dx(3, x, t) -
           s.params.b * e.dt_dxx(x, t) - s1;
}

/// Pointwise residual of the second equation at (x, t):
/// u_t + eta_x + (u^2/2)_x + c eta_xxx - d u_xxt - s2.
double residual2(const CaseSpec& s, double x, double t) {
    const auto& e = s.eta_form;
    const auto& u = s.u_form;
    const double s2 = s.has_source ? s.source.s2(x, t) : 0.0;
    return u.dt(x, t) + e.dx(1, x, t) + u.value(x, t) * u.dx(1, x, t) +
           s.params.c * e.dx(3, x, t) - s.params.d * u.dt_dxx(x, t) - s2;
}

double max_residual(const CaseSpec& s) {
    double worst = 0.0;
    const int nx = 1000;
    for (int i = 0; i <= nx; ++i) {
        const double x = s.x_left + (s.x_right - s.x_left) * i / static_cast<double>(nx);
        for (double frac : {0.0, 0.31, 1.0}) {
            const double t = frac * s.t_final;
            worst = std::max(worst, std::abs(residual1(s, x, t)));
            worst = std::max(worst, std::abs(residual2(s, x, t)));
        }
    }
    return worst;
}

/// The collision data restricted to one of its two pulses.
CaseSpec single_pulse(const CaseSpec& full, std::size_t which) {
    CaseSpec s = full;
    s.eta_form.components = {full.eta_form.components.at(which)};
    s.u_form.components = {full.u_form.components.at(which)};
    return s;
}

} // namespace

TEST_CASE("catalog: parameters and initial peaks match the written forms") {
    const auto c1 = case_catalog(CaseId::C1);
    CHECK(c1.params.a == doctest::Approx(-7.0 / 30.0).epsilon(1e-15));
    CHECK(c1.params.b == doctest::Approx(7.0 / 15.0).epsilon(1e-15));
    CHECK(c1.params.c == doctest::Approx(-0.4).epsilon(1e-15));
    CHECK(c1.params.d == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(c1.eta_form.value(20.0, 0.0) == doctest::Approx(0.375).epsilon(1e-14));
    CHECK(c1.u_form.value(20.0, 0.0) ==
          doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-14));
    // the crest travels with speed 5 sqrt(2) / 6
    const double speed = 5.0 * std::sqrt(2.0) / 6.0;
    CHECK(c1.eta_form.value(20.0 + 0.5 * speed, 0.5) ==
          doctest::Approx(0.375).epsilon(1e-14));

    const auto c5 = case_catalog(CaseId::C5);
    CHECK(c5.eta_form.value(3.7, 0.2) == -1.0);
    CHECK(c5.u_form.value(20.0, 0.0) == doctest::Approx(2.0 / 3.0 + 1.0).epsilon(1e-14));

    const auto c2 = case_catalog(CaseId::C2);
    CHECK(c2.source.s1(0.0, 0.0) == doctest::Approx(23.0 / 12.0).epsilon(1e-14));

    CHECK(parse_case_id("3") == CaseId::C3);
    CHECK(parse_case_id("case7") == CaseId::C7);
    CHECK(parse_case_id("blowup") == CaseId::Blowup);
    CHECK_THROWS_AS(parse_case_id("8"), CheckError);
    CHECK(case_name(CaseId::C4) == "case4");
}

TEST_CASE("every exact-solution case satisfies its own system pointwise") {
    for (CaseId id : {CaseId::C1, CaseId::C2, CaseId::C3, CaseId::C4, CaseId::C5,
                      CaseId::C6, CaseId::C7}) {
        const auto spec = case_catalog(id);
        CAPTURE(spec.name);
        CHECK(max_residual(spec) <= 1e-10);
    }
}

TEST_CASE("each collision pulse alone solves the homogeneous system") {
    const auto blowup = case_catalog(CaseId::Blowup);
    for (std::size_t which : {std::size_t{0}, std::size_t{1}}) {
        auto pulse = single_pulse(blowup, which);
        pulse.t_final = 1.0; // evaluate residuals away from t = 0 as well
        CHECK(max_residual(pulse) <= 1e-10);
    }
    // the head-on pulses are stationary superposition data only; their sum
    // at t = 0 still matches the written peak height 1/sqrt(8)
    const auto headon = case_catalog(CaseId::Headon);
    CHECK(headon.eta_form.value(7.0, 0.0) ==
          doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-4));
}

TEST_CASE("the printed coupled-BBM profile equals its expanded sech polynomial") {
    // (15/4)(cosh(2 beta s) - 2) sech^4(beta s) with beta = 3/sqrt(10)
    const auto c3 = case_catalog(CaseId::C3);
    const double beta = 3.0 / std::sqrt(10.0);
    for (double s = -8.0; s <= 8.0; s += 0.37) {
        const double sech = 1.0 / std::cosh(beta * s);
        const double printed =
            15.0 / 4.0 * (std::cosh(2.0 * beta * s) - 2.0) * std::pow(sech, 4);
        CHECK(c3.eta_form.value(20.0 + s, 0.0) ==
              doctest::Approx(printed).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("manufactured forcing: derived matches one printed form, flags the other") {
    const auto c2 = compare_sources(CaseId::C2);
    CHECK(c2.max_dev_s1 <= 1e-12);
    CHECK(c2.max_dev_s2 <= 1e-12);

    // the second printed component of the other manufactured case reads
    // (1/2)cos(2(x+t)) where the substitution yields (1/2)sin(2(x+t))
    const auto c4 = compare_sources(CaseId::C4);
    CHECK(c4.max_dev_s1 <= 1e-12);
    CHECK(c4.max_dev_s2 > 0.6);
    CHECK(c4.max_dev_s2 <= 0.5 * std::sqrt(2.0) + 1e-9);
}

TEST_CASE("head-on velocity pulses: default rides with the height, literal swaps") {
    const auto def = headon_case(false);
    CHECK(def.u_form.value(7.0, 0.0) == doctest::Approx(0.375).epsilon(1e-4));
    CHECK(def.u_form.value(-7.0, 0.0) == doctest::Approx(-0.375).epsilon(1e-4));

    const auto lit = headon_case(true);
    CHECK(lit.u_form.value(-7.0, 0.0) == doctest::Approx(0.375).epsilon(1e-4));
    CHECK(lit.u_form.value(7.0, 0.0) == doctest::Approx(-0.375).epsilon(1e-4));

    // eta is the same either way
    CHECK(lit.eta_form.value(7.0, 0.0) ==
          doctest::Approx(def.eta_form.value(7.0, 0.0)).epsilon(1e-15));
}

TEST_CASE("experimental orders: convention and a printed-table check") {
    const auto r = eoc({4e-2, 1e-2});
    REQUIRE(r.size() == 2);
    CHECK(*r[0] == 0.0);
    CHECK(*r[1] == doctest::Approx(2.0).epsilon(1e-13));

    // errors at or below machine zero have no applicable rate
    const auto z = eoc({1e-13, 1e-14});
    CHECK(*z[0] == 0.0);
    CHECK_FALSE(z[1].has_value());

    // the printed 4-digit errors of the first solitary-wave table reproduce
    // the printed rate 1.9426 to rounding
    const auto printed = eoc({0.05225, 0.01359});
    CHECK(*printed[1] == doctest::Approx(1.9426).epsilon(1e-3));
}

TEST_CASE("projected initial data recovers auxiliary derivatives at k+1") {
    const auto spec = case_catalog(CaseId::C1);
    for (int k : {1, 2}) {
        std::vector<double> errs_v, errs_w;
        for (int n : {40, 80}) {
            const auto mesh = build_uniform_mesh(spec.x_left, spec.x_right, n);
            const auto ctx = make_context(mesh, k, spec.params);
            const auto init = init_state(spec.eta_form.at_time(0.0),
                                         spec.u_form.at_time(0.0), mesh, k);
            const auto aux = compute_aux(ctx, init.eta_h, init.u_h);
            errs_v.push_back(
                l2_error(aux.v, [&](double x) { return spec.u_form.dx(1, x, 0.0); }));
            errs_w.push_back(
                l2_error(aux.w, [&](double x) { return spec.eta_form.dx(1, x, 0.0); }));
        }
        CHECK(std::abs(std::log2(errs_v[0] / errs_v[1]) - (k + 1.0)) < 0.3);
        CHECK(std::abs(std::log2(errs_w[0] / errs_w[1]) - (k + 1.0)) < 0.3);
    }
}

TEST_CASE("fill_rates threads the eoc columns through a report") {
    ErrorReport report;
    report.rows.push_back({20, 20, 4e-2, 8e-2, 1e-2, 2e-2, {}, {}, {}, {}});
    report.rows.push_back({40, 40, 1e-2, 1e-2, 2.5e-3, 1e-14, {}, {}, {}, {}});
    fill_rates(report);
    CHECK(*report.rows[0].rate_l2_u == 0.0);
    CHECK(*report.rows[1].rate_l2_u == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(*report.rows[1].rate_l2_eta == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(*report.rows[1].rate_linf_u == doctest::Approx(2.0).epsilon(1e-13));
    CHECK_FALSE(report.rows[1].rate_linf_eta.has_value());
}
