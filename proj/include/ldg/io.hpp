/// @file io.hpp
/// @brief Run configuration, config-file parsing, output-directory
/// resolution, and bit-stable CSV/JSON emission of tables and snapshots.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ldg/experiments.hpp"

namespace ldg {

enum class Command { Accuracy, Simulate, Blowup, Headon, Diagnose };

Command parse_command(const std::string& name);
std::string command_name(Command cmd);

/// One run's worth of settings. Absent optionals mean the case default.
struct RunConfig {
    Command command = Command::Accuracy;
    std::optional<CaseId> case_id;
    std::optional<int> degree;
    std::optional<int> nx;
    std::optional<int> nt;
    std::optional<std::string> out_dir;
    std::optional<std::vector<double>> snapshot_times;
    double lambda = 1.0;
    AlphaPolicy alpha_policy = AlphaPolicy::PerStep;
    bool headon_literal_sign = false;
};

/// Merges keys from a JSON config file into cfg. Recognized keys: case,
/// degree, nx, nt, out, lambda, alpha_policy, headon_literal_sign,
/// snapshot_times. An unknown key is rejected by name.
void apply_config_file(RunConfig& cfg, const std::string& path);

/// The flag-or-config value wins, then the LDG_OUT_ROOT env var, then "out".
std::string resolve_out_dir(const std::optional<std::string>& configured);

void ensure_dir(const std::string& path);

/// %.3e, the 4-significant-digit table format.
std::string format_sci(double v);
/// %.4f, or "na" when the rate is not applicable.
std::string format_rate(const std::optional<double>& rate);

/// Header: Nx,Nt,l2_u,rate,l2_eta,rate,linf_u,rate,linf_eta,rate.
std::string render_error_table(const ErrorReport& report);
void write_error_table(const ErrorReport& report, const std::string& path);

/// Per-cell sample locations: left endpoint, the error-rule interior
/// points, right endpoint; cells in order, so coincident interface
/// abscissae keep the left cell's trace first.
struct SnapshotSample {
    std::vector<double> x;
    std::vector<double> eta;
    std::vector<double> u;
};

SnapshotSample sample_state(const DGField& eta_h, const DGField& u_h);

/// Columns x,eta,u at full precision (%.12e).
std::string render_snapshot(const SnapshotSample& sample);

/// "<stem>_t<%.4f>.csv"
std::string snapshot_filename(const std::string& stem, double t);

/// Writes dir/<stem>_t<time>.csv for one state; returns the path.
std::string write_snapshot(const SimState& state, const std::string& dir,
                           const std::string& stem);

/// Columns t,int_eta,int_u,linf_eta at full precision.
std::string render_invariant_log(const std::vector<InvariantSample>& samples);
void write_invariant_log(const std::vector<InvariantSample>& samples,
                         const std::string& path);

/// Header: Nx,Nt,u_deriv_ratio,u_jump_ratio,eta_deriv_ratio,eta_jump_ratio.
std::string render_diagnostic_table(const DiagnosticStudy& study);
void write_diagnostic_table(const DiagnosticStudy& study, const std::string& path);

/// Columns component,max_deviation for the derived-vs-printed forcing.
std::string render_source_comparison(const SourceComparison& cmp);
void write_source_comparison(const SourceComparison& cmp, const std::string& path);

/// One line, e.g. "fixed_count(400)" or
/// "factor_schedule((3.24, 0.00107), (4.4, 0.00052))".
std::string dt_rule_description(const DtRule& rule);

/// Provenance for a table or simulation output. The sidecar is the only
/// artifact carrying wall-clock timing, keeping data files byte-stable.
struct RunMetadata {
    std::string case_name;
    AbcdParams params;
    int degree = 0;
    AlphaPolicy policy = AlphaPolicy::PerStep;
    std::string dt_rule;
    std::optional<int> nx;
    std::optional<int> nt;
    double wall_seconds = 0.0;
};

std::string render_metadata(const RunMetadata& meta);
void write_metadata(const RunMetadata& meta, const std::string& path);

/// Sidecar path for a table: "<table>.csv" -> "<table>.meta.json".
std::string metadata_path_for(const std::string& table_path);

} // namespace ldg
