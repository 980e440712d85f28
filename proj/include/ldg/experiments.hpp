/// @file experiments.hpp
/// @brief Drivers for the catalog experiments: refinement studies with rate
/// tables, the two collision runs, and the boundedness diagnostic sweep.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldg/cases.hpp"
#include "ldg/diagnostics.hpp"
#include "ldg/time_integration.hpp"

namespace ldg {

/// A run blew up where the experiment requires smoothness.
struct BlowupError : std::runtime_error {
    explicit BlowupError(const std::string& msg) : std::runtime_error(msg) {}
};

struct StudyOptions {
    std::optional<std::vector<std::pair<int, int>>> refinements;
    AlphaPolicy alpha_policy = AlphaPolicy::PerStep;
    double lambda = 1.0;
};

struct AccuracyStudy {
    CaseSpec spec;
    int degree = 0;
    ErrorReport report;
    double wall_seconds = 0.0;
};

/// Runs every (Nx, Nt) row of the case to its final time and assembles
/// errors and rates. Throws BlowupError if any row blows up.
AccuracyStudy run_accuracy_study(CaseId id, int degree, const StudyOptions& options = {});

struct CollisionOptions {
    std::optional<int> n_cells;
    std::optional<int> degree;
    AlphaPolicy alpha_policy = AlphaPolicy::PerStep;
    double lambda = 1.0;
    bool headon_literal_sign = false;
};

struct CollisionRun {
    CaseSpec spec;
    int n_cells = 0;
    int degree = 0;
    Trajectory traj;
    double wall_seconds = 0.0;
};

/// Two counter-propagating pulses driven into the 1 + eta < 0 regime; runs
/// the piecewise step schedule to t = 4.4 and reports the max-norm history.
/// Blow-up here is the expected outcome, never an error.
CollisionRun run_blowup(const CollisionOptions& options = {});

/// Smooth head-on collision to t = 12. Blow-up here throws BlowupError.
CollisionRun run_headon(const CollisionOptions& options = {});

/// Runs a single (Nx, Nt, snapshots) simulation of any catalog case.
CollisionRun run_single(CaseId id, int nx, int nt, const std::vector<double>& snapshots,
                        int degree, AlphaPolicy policy, double lambda,
                        bool headon_literal_sign);

struct DiagnosticRow {
    int nx = 0;
    int nt = 0;
    std::optional<double> ratio_u_deriv;
    std::optional<double> ratio_u_jump;
    std::optional<double> ratio_eta_deriv;
    std::optional<double> ratio_eta_jump;
};

struct DiagnosticStudy {
    CaseSpec spec;
    int degree = 0;
    std::vector<DiagnosticRow> rows;
};

/// Evaluates the error-split ratios at the final time across refinements
/// (the case ladder minus its coarsest row unless overridden).
DiagnosticStudy run_diagnose(CaseId id, int degree, const StudyOptions& options = {});

struct SourceComparison {
    double max_dev_s1 = 0.0;
    double max_dev_s2 = 0.0;
};

/// Max pointwise deviation between the derived forcing and the printed
/// forms of Cases 2 and 4 over a dense (x, t) sample grid.
SourceComparison compare_sources(CaseId id);

} // namespace ldg
