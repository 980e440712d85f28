#include "ldg/cases.hpp"

#include <cmath>

#include "ldg/check.hpp"

namespace ldg {

DtRule DtRule::fixed_count(int n) {
    LDG_CHECK(n >= 1, "need at least one step");
    DtRule r;
    r.kind = Kind::FixedCount;
    r.n_steps = n;
    return r;
}

DtRule DtRule::factor_schedule(std::vector<std::pair<double, double>> segments) {
    LDG_CHECK(!segments.empty(), "empty schedule");
    for (std::size_t i = 0; i < segments.size(); ++i) {
        LDG_CHECK(segments[i].second > 0.0, "step factor must be positive");
        LDG_CHECK(i == 0 || segments[i].first > segments[i - 1].first,
                  "segment ends must increase");
    }
    DtRule r;
    r.kind = Kind::FactorSchedule;
    r.segments = std::move(segments);
    return r;
}

SourcePair derived_source(const AbcdParams& p) {
    SourcePair s;
    s.s1 = [a = p.a, b = p.b](double x, double t) {
        const double ph = x + t;
        return std::cos(2.0 * ph) + (1.0 - a) * std::cos(ph) - (1.0 + b) * std::sin(ph);
    };
    s.s2 = [c = p.c, d = p.d](double x, double t) {
        const double ph = x + t;
        return 0.5 * std::sin(2.0 * ph) + (1.0 + d) * std::cos(ph) +
               (c - 1.0) * std::sin(ph);
    };
    return s;
}

SourcePair printed_source(CaseId id) {
    SourcePair s;
    if (id == CaseId::C2) {
        s.s1 = [](double x, double t) {
            const double ph = x + t;
            return std::cos(2.0 * ph) + 11.0 / 12.0 * std::cos(ph) -
                   19.0 / 18.0 * std::sin(ph);
        };
        s.s2 = [](double x, double t) {
            const double ph = x + t;
            return 0.5 * std::sin(2.0 * ph) + 10.0 / 9.0 * std::cos(ph) -
                   11.0 / 12.0 * std::sin(ph);
        };
        return s;
    }
    if (id == CaseId::C4) {
        s.s1 = [](double x, double t) {
            const double ph = x + t;
            return std::cos(2.0 * ph) + 8.0 / 9.0 * std::cos(ph) -
                   10.0 / 9.0 * std::sin(ph);
        };
        s.s2 = [](double x, double t) {
            const double ph = x + t;
            return 0.5 * std::cos(2.0 * ph) + std::cos(ph) - 8.0 / 9.0 * std::sin(ph);
        };
        return s;
    }
    fail("printed_source", "no printed source for this case");
}

namespace {

std::vector<std::pair<int, int>> matched_ladder() {
    return {{20, 20}, {40, 40}, {80, 80}, {160, 160}, {320, 320}};
}

CaseSpec manufactured_case(CaseId id) {
    CaseSpec s;
    s.id = id;
    s.has_exact = true;
    s.eta_form.components.push_back(cosine_component(1.0, 0.0, -1.0));
    s.u_form.components.push_back(sine_component(1.0, 0.0, -1.0));
    s.has_source = true;
    return s;
}

} // namespace

CaseSpec case_catalog(CaseId id) {
    CaseSpec s;
    switch (id) {
        case CaseId::C1: {
            s.id = id;
            s.name = "case1";
            s.params = make_params(-7.0 / 30.0, 7.0 / 15.0, -2.0 / 5.0, 1.0 / 2.0);
            s.x_left = 0.0;
            s.x_right = 40.0;
            s.t_final = 0.8;
            s.has_exact = true;
            const double beta = 0.5 * std::sqrt(5.0 / 7.0);
            const double speed = 5.0 * std::sqrt(2.0) / 6.0;
            s.eta_form.components.push_back(sech_component(3.0 / 8.0, 0.0, beta, 20.0, speed));
            s.u_form.components.push_back(
                sech_component(1.0 / (2.0 * std::sqrt(2.0)), 0.0, beta, 20.0, speed));
            s.refinements = matched_ladder();
            return s;
        }
        case CaseId::C2: {
            s = manufactured_case(id);
            s.name = "case2";
            s.params = make_params(1.0 / 12.0, 1.0 / 18.0, 1.0 / 12.0, 1.0 / 9.0);
            s.x_left = 0.0;
            s.x_right = 2.0 * M_PI;
            s.t_final = M_PI / 50.0;
            s.source = derived_source(s.params);
            s.refinements = matched_ladder();
            return s;
        }
        case CaseId::C3: {
            s.id = id;
            s.name = "case3";
            s.params = make_params(0.0, 1.0 / 6.0, 0.0, 1.0 / 6.0);
            s.x_left = 0.0;
            s.x_right = 40.0;
            s.t_final = 0.01;
            s.has_exact = true;
            // (15/4)(cosh(2 beta s) - 2) sech^4(beta s) expanded through
            // cosh(2y) = 2 cosh^2(y) - 1 into the sech polynomial below.
            const double beta = 3.0 / std::sqrt(10.0);
            s.eta_form.components.push_back(
                sech_component(15.0 / 2.0, -45.0 / 4.0, beta, 20.0, 2.5));
            s.u_form.components.push_back(sech_component(15.0 / 2.0, 0.0, beta, 20.0, 2.5));
            s.refinements = matched_ladder();
            return s;
        }
        case CaseId::C4: {
            s = manufactured_case(id);
            s.name = "case4";
            s.params = make_params(1.0 / 9.0, 1.0 / 9.0, 1.0 / 9.0, 0.0);
            s.x_left = 0.0;
            s.x_right = 8.0 * M_PI;
            s.t_final = 0.04;
            s.source = derived_source(s.params);
            s.refinements = {{20, 1000}, {40, 2000}, {80, 4000}, {160, 8000}, {320, 16000}};
            return s;
        }
        case CaseId::C5: {
            s.id = id;
            s.name = "case5";
            s.params = make_params(0.0, 0.0, 0.0, 1.0 / 6.0);
            s.x_left = 0.0;
            s.x_right = 40.0;
            s.t_final = 0.01;
            s.has_exact = true;
            s.eta_form.constant = -1.0;
            s.u_form.constant = 2.0 / 3.0;
            s.u_form.components.push_back(
                sech_component(1.0, 0.0, 1.0 / std::sqrt(2.0), 20.0, 1.0));
            s.refinements = matched_ladder();
            return s;
        }
        case CaseId::C6: {
            s.id = id;
            s.name = "case6";
            s.params = make_params(0.0, 1.0 / 3.0, -1.0 / 3.0, 1.0 / 3.0);
            s.x_left = 0.0;
            s.x_right = 40.0;
            s.t_final = 0.01;
            s.has_exact = true;
            s.eta_form.constant = -1.0;
            s.u_form.constant = 1.0;
            s.u_form.components.push_back(
                sech_component(6.0, 0.0, 1.0 / std::sqrt(2.0), 20.0, 3.0));
            s.refinements = matched_ladder();
            return s;
        }
        case CaseId::C7: {
            s.id = id;
            s.name = "case7";
            s.params = make_params(1.0 / 6.0, 0.0, 1.0 / 6.0, 0.0);
            s.x_left = 0.0;
            s.x_right = 40.0;
            s.t_final = 0.01;
            s.has_exact = true;
            const double beta = std::sqrt(1.5);
            const double speed = std::sqrt(2.0);
            s.eta_form.constant = -1.0;
            s.eta_form.components.push_back(sech_component(1.5, 0.0, beta, 20.0, speed));
            s.u_form.components.push_back(
                sech_component(3.0 / std::sqrt(2.0), 0.0, beta, 20.0, speed));
            s.refinements = {{20, 200}, {40, 400}, {80, 800}, {160, 1600}, {320, 3200}};
            return s;
        }
        case CaseId::Blowup: {
            s.id = id;
            s.name = "blowup";
            s.params = make_params(0.0, 1.0 / 6.0, 0.0, 1.0 / 6.0);
            s.x_left = -14.0;
            s.x_right = 14.0;
            s.t_final = 4.4;
            // Each pulse alone solves the system exactly; their sum is only
            // initial data, so no error norms are defined for this run.
            const double beta = 3.0 / std::sqrt(10.0);
            s.eta_form.components.push_back(
                sech_component(15.0 / 2.0, -45.0 / 4.0, beta, 7.0, -2.5));
            s.eta_form.components.push_back(
                sech_component(15.0 / 2.0, -45.0 / 4.0, beta, -7.0, 2.5));
            s.u_form.components.push_back(sech_component(-15.0 / 2.0, 0.0, beta, 7.0, -2.5));
            s.u_form.components.push_back(sech_component(15.0 / 2.0, 0.0, beta, -7.0, 2.5));
            s.snapshot_times = {0.0, 1.5, 3.24, 4.4};
            s.dt_rule = DtRule::factor_schedule({{3.24, 0.00107}, {4.4, 0.00052}});
            s.default_n_cells = 160; // h = 0.175
            s.default_degree = 2;
            return s;
        }
        case CaseId::Headon:
        default:
            return headon_case(false);
    }
}

CaseSpec headon_case(bool literal_sign) {
    CaseSpec s;
    s.id = CaseId::Headon;
    s.name = "headon";
    s.params = make_params(-7.0 / 30.0, 7.0 / 15.0, -2.0 / 5.0, 1.0 / 2.0);
    s.x_left = -14.0;
    s.x_right = 14.0;
    s.t_final = 12.0;
    const double beta = std::sqrt(5.0 / 28.0);
    const double amp_eta = 1.0 / std::sqrt(8.0);
    s.eta_form.components.push_back(sech_component(amp_eta, 0.0, beta, 7.0, 0.0));
    s.eta_form.components.push_back(sech_component(amp_eta, 0.0, beta, -7.0, 0.0));
    // Default: each velocity pulse rides with its height pulse. The literal
    // variant swaps the centers, (x + x0) in place of (x - x0).
    const double up_center = literal_sign ? -7.0 : 7.0;
    s.u_form.components.push_back(sech_component(3.0 / 8.0, 0.0, beta, up_center, 0.0));
    s.u_form.components.push_back(sech_component(-3.0 / 8.0, 0.0, beta, -up_center, 0.0));
    s.snapshot_times = {0.0, 3.0, 6.0, 9.0, 12.0};
    s.dt_rule = DtRule::factor_schedule({{12.0, 0.00214}});
    s.default_n_cells = 160; // h = 0.175
    s.default_degree = 2;
    return s;
}

CaseId parse_case_id(const std::string& text) {
    if (text == "1" || text == "case1") return CaseId::C1;
    if (text == "2" || text == "case2") return CaseId::C2;
    if (text == "3" || text == "case3") return CaseId::C3;
    if (text == "4" || text == "case4") return CaseId::C4;
    if (text == "5" || text == "case5") return CaseId::C5;
    if (text == "6" || text == "case6") return CaseId::C6;
    if (text == "7" || text == "case7") return CaseId::C7;
    if (text == "blowup") return CaseId::Blowup;
    if (text == "headon") return CaseId::Headon;
    fail("parse_case_id", "unknown case '" + text + "' (expected 1..7, blowup, headon)");
}

std::string case_name(CaseId id) { return case_catalog(id).name; }

std::vector<std::optional<double>> eoc(const std::vector<double>& errors,
                                       double machine_zero) {
    std::vector<std::optional<double>> rates(errors.size());
    if (errors.empty()) return rates;
    rates[0] = 0.0;
    for (std::size_t i = 1; i < errors.size(); ++i) {
        if (errors[i - 1] <= machine_zero || errors[i] <= machine_zero)
            rates[i] = std::nullopt;
        else
            rates[i] = std::log2(errors[i - 1] / errors[i]);
    }
    return rates;
}

void fill_rates(ErrorReport& report) {
    std::vector<double> l2u, l2e, lu, le;
    for (const auto& r : report.rows) {
        l2u.push_back(r.l2_u);
        l2e.push_back(r.l2_eta);
        lu.push_back(r.linf_u);
        le.push_back(r.linf_eta);
    }
    const auto r1 = eoc(l2u);
    const auto r2 = eoc(l2e);
    const auto r3 = eoc(lu);
    const auto r4 = eoc(le);
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        report.rows[i].rate_l2_u = r1[i];
        report.rows[i].rate_l2_eta = r2[i];
        report.rows[i].rate_linf_u = r3[i];
        report.rows[i].rate_linf_eta = r4[i];
    }
}

} // namespace ldg
