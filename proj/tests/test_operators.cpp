#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "ldg/cases.hpp"
#include "ldg/check.hpp"
#include "ldg/operators.hpp"
#include "ldg/projections.hpp"

using namespace ldg;

namespace {

LdgContext zero_param_context(MeshPtr mesh, int degree) {
    return make_context(mesh, degree, make_params(0.0, 0.0, 0.0, 0.0));
}

double max_coeff_diff(const DGField& f, const DGField& g) {
    double m = 0.0;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        m = std::max(m, std::abs(f.coeffs[i] - g.coeffs[i]));
    return m;
}

} // namespace

TEST_CASE("weak derivative of a constant vanishes under every flux rule") {
    const auto mesh = build_uniform_mesh(0.0, 5.0, 8);
    const auto ctx = zero_param_context(mesh, 2);
    const auto c = l2_project([](double) { return 4.2; }, mesh, 2);

    for (const auto& flux : {FluxSpec::plus(), FluxSpec::minus(),
                             FluxSpec::plus_penalty(1, c), FluxSpec::minus_penalty(-1, c)}) {
        const auto g = weak_deriv(ctx, c, flux);
        CHECK(l2_norm(g) <= 1e-13);
    }
}

TEST_CASE("weak derivative: hand-checked two-cell piecewise constants") {
    // values 3 and 5 on [0, 1/2) and [1/2, 1), k=1, h = 1/2 so 2/h = 4
    const auto mesh = build_uniform_mesh(0.0, 1.0, 2);
    const auto ctx = zero_param_context(mesh, 1);
    auto f = make_zero_field(mesh, 1);
    f.coeff(0, 0) = 3.0 * std::sqrt(2.0);
    f.coeff(1, 0) = 5.0 * std::sqrt(2.0);

    const double s2 = std::sqrt(2.0);
    const double s32 = std::sqrt(1.5);

    SUBCASE("minus traces") {
        const auto g = weak_deriv(ctx, f, FluxSpec::minus());
        // cell 0: fhat_R = 3 (own trace), fhat_L = 5 (periodic wrap)
        CHECK(g.coeff(0, 0) == doctest::Approx(-4.0 * s2).epsilon(1e-14));
        CHECK(g.coeff(0, 1) == doctest::Approx(8.0 * s32).epsilon(1e-14));
        CHECK(g.coeff(1, 0) == doctest::Approx(4.0 * s2).epsilon(1e-14));
        CHECK(g.coeff(1, 1) == doctest::Approx(-8.0 * s32).epsilon(1e-14));
        // cell means: (2/h)(fhat_R - fhat_L)/... = -4 and +4
        CHECK(eval_point(g, 0, 0.0) == doctest::Approx(-4.0).epsilon(1e-14));
        CHECK(eval_point(g, 1, 0.0) == doctest::Approx(4.0).epsilon(1e-14));
    }

    SUBCASE("plus traces") {
        const auto g = weak_deriv(ctx, f, FluxSpec::plus());
        // cell 0: fhat_R = 5 (right neighbor), fhat_L = 3 (own left value)
        CHECK(g.coeff(0, 0) == doctest::Approx(4.0 * s2).epsilon(1e-14));
        CHECK(g.coeff(0, 1) == doctest::Approx(8.0 * s32).epsilon(1e-14));
        CHECK(g.coeff(1, 0) == doctest::Approx(-4.0 * s2).epsilon(1e-14));
        CHECK(g.coeff(1, 1) == doctest::Approx(-8.0 * s32).epsilon(1e-14));
    }

    SUBCASE("penalty with unit sign shifts the trace by lambda [jump]/2") {
        // [f] = +2 at interface 0 and -2 at interface 1, so the penalized
        // trace gains +1 and -1; cell 0 midpoint shift is then
        // (2/h)(delta_R phi_0(1) - delta_L phi_0(-1)) phi_0(0) = 4.
        const auto g_plain = weak_deriv(ctx, f, FluxSpec::minus());
        const auto g_pen = weak_deriv(ctx, f, FluxSpec::minus_penalty(1, f));
        CHECK(eval_point(g_pen, 0, 0.0) - eval_point(g_plain, 0, 0.0) ==
              doctest::Approx(4.0).epsilon(1e-13));
    }
}

TEST_CASE("auxiliary derivative of projected data converges at k+1") {
    const auto spec = case_catalog(CaseId::C1);
    for (int k : {1, 2}) {
        std::vector<double> errs;
        for (int n : {40, 80, 160}) {
            const auto mesh = build_uniform_mesh(spec.x_left, spec.x_right, n);
            const auto ctx = make_context(mesh, k, spec.params);
            const auto init =
                init_state(spec.eta_form.at_time(0.0), spec.u_form.at_time(0.0), mesh, k);
            const auto v = weak_deriv(ctx, init.u_h, FluxSpec::plus());
            errs.push_back(
                l2_error(v, [&](double x) { return spec.u_form.dx(1, x, 0.0); }));
        }
        const double r1 = std::log2(errs[0] / errs[1]);
        const double r2 = std::log2(errs[1] / errs[2]);
        CHECK(std::abs(r2 - (k + 1.0)) < 0.25);
        CHECK(r1 > k + 0.5);
    }
}

TEST_CASE("lax-friedrichs flux: pinned values and exact consistency") {
    SUBCASE("hand value") {
        InterfaceTraces eta_tr{{0.0}, {1.0}};
        InterfaceTraces u_tr{{2.0}, {2.0}};
        std::vector<double> f1, f2;
        lf_flux(eta_tr, u_tr, 3.0, f1, f2);
        CHECK(f1[0] == doctest::Approx(1.5).epsilon(1e-15));
        CHECK(f2[0] == doctest::Approx(2.5).epsilon(1e-15));
    }

    SUBCASE("continuous traces collapse to the physical flux for any alpha") {
        const double eta = 0.3, u = -1.2;
        InterfaceTraces eta_tr{{eta}, {eta}};
        InterfaceTraces u_tr{{u}, {u}};
        for (double alpha : {0.0, 1.0, 2.7}) {
            std::vector<double> f1, f2;
            lf_flux(eta_tr, u_tr, alpha, f1, f2);
            CHECK(f1[0] == u + eta * u);
            CHECK(f2[0] == eta + 0.5 * u * u);
        }
    }
}

TEST_CASE("compute_aux is linear: superposition of two states") {
    const auto spec = case_catalog(CaseId::C1);
    const auto mesh = build_uniform_mesh(spec.x_left, spec.x_right, 24);
    const auto ctx = make_context(mesh, 2, spec.params);

    const auto e1 = l2_project([](double x) { return std::sin(0.1 * M_PI * x); }, mesh, 2);
    const auto u1 = l2_project([](double x) { return std::cos(0.05 * M_PI * x); }, mesh, 2);
    const auto e2 = radau_project_plus(spec.eta_form.at_time(0.0), mesh, 2);
    const auto u2 = radau_project_plus(spec.u_form.at_time(0.0), mesh, 2);

    const auto a1 = compute_aux(ctx, e1, u1);
    const auto a2 = compute_aux(ctx, e2, u2);
    const auto a12 = compute_aux(ctx, axpby(1.0, e1, 1.0, e2), axpby(1.0, u1, 1.0, u2));

    const auto check_sum = [&](const DGField& s, const DGField& x, const DGField& y) {
        CHECK(max_coeff_diff(s, axpby(1.0, x, 1.0, y)) <= 1e-12);
    };
    check_sum(a12.v, a1.v, a2.v);
    check_sum(a12.w, a1.w, a2.w);
    check_sum(a12.p, a1.p, a2.p);
    check_sum(a12.q, a1.q, a2.q);
    check_sum(a12.theta, a1.theta, a2.theta);
    check_sum(a12.zeta, a1.zeta, a2.zeta);
}

TEST_CASE("sign(0) removes the jump penalty exactly") {
    const auto mesh = build_uniform_mesh(0.0, 40.0, 16);
    const auto jump_src = l2_project([](double x) { return std::sin(0.2 * x); }, mesh, 2);
    const auto f = l2_project([](double x) { return std::cos(0.15 * x); }, mesh, 2);
    const auto ctx = zero_param_context(mesh, 2);

    const auto plain_minus = weak_deriv(ctx, f, FluxSpec::minus());
    const auto pen_minus = weak_deriv(ctx, f, FluxSpec::minus_penalty(0, jump_src));
    CHECK(max_coeff_diff(plain_minus, pen_minus) <= 1e-14);

    const auto plain_plus = weak_deriv(ctx, f, FluxSpec::plus());
    const auto pen_plus = weak_deriv(ctx, f, FluxSpec::plus_penalty(0, jump_src));
    CHECK(max_coeff_diff(plain_plus, pen_plus) <= 1e-14);

    // with a = c = 0 the penalized fields coincide with their plain partners
    const auto spec = case_catalog(CaseId::C3);
    const auto ctx3 = make_context(mesh, 2, spec.params);
    const auto init = init_state(spec.eta_form.at_time(0.0), spec.u_form.at_time(0.0),
                                 mesh, 2);
    const auto aux = compute_aux(ctx3, init.eta_h, init.u_h);
    CHECK(max_coeff_diff(aux.q, weak_deriv(ctx3, aux.v, FluxSpec::plus())) <= 1e-14);
    CHECK(max_coeff_diff(aux.zeta, aux.theta) <= 1e-14);
}

TEST_CASE("dissipation coefficient alpha") {
    SUBCASE("zero state gives sqrt(1) = 1") {
        const auto mesh = build_uniform_mesh(0.0, 1.0, 4);
        const auto ctx = zero_param_context(mesh, 1);
        const auto z = make_zero_field(mesh, 1);
        CHECK(compute_alpha(ctx, z, z) == doctest::Approx(1.0).epsilon(1e-14));
    }

    SUBCASE("eta = -1 with zero velocity gives 0") {
        const auto mesh = build_uniform_mesh(0.0, 1.0, 4);
        const auto ctx = zero_param_context(mesh, 1);
        const auto e = l2_project([](double) { return -1.0; }, mesh, 1);
        const auto z = make_zero_field(mesh, 1);
        CHECK(compute_alpha(ctx, e, z) <= 1e-7);
    }

    SUBCASE("solitary-wave initial data") {
        const auto spec = case_catalog(CaseId::C1);
        const auto mesh = build_uniform_mesh(spec.x_left, spec.x_right, 320);
        const auto ctx = make_context(mesh, 2, spec.params);
        const auto init = init_state(spec.eta_form.at_time(0.0), spec.u_form.at_time(0.0),
                                     mesh, 2);
        const double expected = 1.0 / (2.0 * std::sqrt(2.0)) + std::sqrt(1.375);
        CHECK(compute_alpha(ctx, init.eta_h, init.u_h) ==
              doctest::Approx(expected).epsilon(1e-3));
    }
}

TEST_CASE("residual structure") {
    SUBCASE("zero state is a fixed point without forcing") {
        const auto spec = case_catalog(CaseId::C1);
        const auto mesh = build_uniform_mesh(spec.x_left, spec.x_right, 12);
        const auto ctx = make_context(mesh, 2, spec.params);
        const auto z = make_zero_field(mesh, 2);
        const auto res = spatial_residual(ctx, z, z, 0.0, 1.0, nullptr);
        CHECK(res.finite);
        CHECK(l2_norm(res.r_eta) <= 1e-14);
        CHECK(l2_norm(res.r_u) <= 1e-14);
    }

    SUBCASE("flat eta = -1 freezes the height equation when a = 0") {
        const auto spec = case_catalog(CaseId::C5);
        const auto mesh = build_uniform_mesh(spec.x_left, spec.x_right, 20);
        const auto ctx = make_context(mesh, 2, spec.params);
        const auto init = init_state(spec.eta_form.at_time(0.0), spec.u_form.at_time(0.0),
                                     mesh, 2);
        const double alpha = compute_alpha(ctx, init.eta_h, init.u_h);
        const auto res = spatial_residual(ctx, init.eta_h, init.u_h, 0.0, alpha, nullptr);
        CHECK(res.finite);
        CHECK(l2_norm(res.r_eta) <= 1e-13);
        CHECK(l2_norm(res.r_u) > 1e-3); // the velocity equation still moves
    }

    SUBCASE("conserved quantities match the field integrals") {
        const auto mesh = build_uniform_mesh(0.0, 2.0, 6);
        const auto e = l2_project([](double x) { return x; }, mesh, 1);
        const auto u = l2_project([](double x) { return 3.0 - x; }, mesh, 1);
        const auto [ie, iu] = conserved_quantities(e, u);
        CHECK(ie == doctest::Approx(2.0).epsilon(1e-13));
        CHECK(iu == doctest::Approx(4.0).epsilon(1e-13));
    }
}
