/// @file cases.hpp
/// @brief Built-in experiment catalog: seven accuracy cases with exact or
/// manufactured solutions, two collision runs, and the rate computation for
/// refinement studies.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ldg/exact.hpp"
#include "ldg/operators.hpp"
#include "ldg/params.hpp"

namespace ldg {

enum class CaseId { C1, C2, C3, C4, C5, C6, C7, Blowup, Headon };

/// Time-step prescription. FixedCount lands on T in exactly n_steps equal
/// targets; FactorSchedule walks segments of dt = factor * h up to each
/// segment end.
struct DtRule {
    enum class Kind { FixedCount, FactorSchedule };
    Kind kind = Kind::FixedCount;
    int n_steps = 0;
    std::vector<std::pair<double, double>> segments; // (t_end, dt factor)

    static DtRule fixed_count(int n);
    static DtRule factor_schedule(std::vector<std::pair<double, double>> segments);
};

struct CaseSpec {
    CaseId id = CaseId::C1;
    std::string name;
    AbcdParams params;
    double x_left = 0.0;
    double x_right = 0.0;
    double t_final = 0.0;

    /// Closed forms. For the collision runs these only define the t=0 data
    /// and has_exact is false (sums of pulses are not exact solutions).
    ClosedForm eta_form;
    ClosedForm u_form;
    bool has_exact = false;

    bool has_source = false;
    SourcePair source;

    /// (Nx, Nt) ladder for accuracy studies.
    std::vector<std::pair<int, int>> refinements;

    /// Collision-run settings.
    std::vector<double> snapshot_times;
    DtRule dt_rule;
    int default_n_cells = 0;
    int default_degree = 0;
};

CaseSpec case_catalog(CaseId id);

/// The collision initial data with the velocity pulses placed at (x + x0)
/// instead of (x - x0), i.e. swapped relative to their height pulses.
CaseSpec headon_case(bool literal_sign);

/// Accepts "1".."7", "blowup", "headon".
CaseId parse_case_id(const std::string& text);
std::string case_name(CaseId id);

/// Manufactured forcing obtained by substituting eta = cos(x+t),
/// u = sin(x+t) into the system:
///   s1 = cos(2(x+t)) + (1-a)cos(x+t) - (1+b)sin(x+t)
///   s2 = (1/2)sin(2(x+t)) + (1+d)cos(x+t) + (c-1)sin(x+t)
SourcePair derived_source(const AbcdParams& p);

/// The forcing exactly as printed for Cases 2 and 4, kept for the
/// derived-vs-printed comparison report. The Case 4 second component is
/// suspected of a typo (cos where the derivation gives sin).
SourcePair printed_source(CaseId id);

/// Experimental orders under mesh halving: log2(err[i-1]/err[i]). The first
/// entry is 0 by table convention; entries touching an error at or below
/// machine_zero are not applicable (nullopt).
std::vector<std::optional<double>> eoc(const std::vector<double>& errors,
                                       double machine_zero = 1e-12);

struct ErrorRow {
    int nx = 0;
    int nt = 0;
    double l2_u = 0.0;
    double l2_eta = 0.0;
    double linf_u = 0.0;
    double linf_eta = 0.0;
    std::optional<double> rate_l2_u;
    std::optional<double> rate_l2_eta;
    std::optional<double> rate_linf_u;
    std::optional<double> rate_linf_eta;
};

struct ErrorReport {
    CaseId id = CaseId::C1;
    int degree = 0;
    std::vector<ErrorRow> rows;
};

/// Fills the four rate columns of a report from its error columns.
void fill_rates(ErrorReport& report);

} // namespace ldg
