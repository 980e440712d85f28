/// @file main.cpp
/// @brief Command-line driver: accuracy tables, single simulations, the two
/// collision experiments, and the error-split diagnostic.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ldg/check.hpp"
#include "ldg/io.hpp"

namespace {

using namespace ldg;

/// Flag values as typed on the command line; presence tracked via CLI11.
struct FlagValues {
    std::string case_text;
    int degree = 0;
    int nx = 0;
    int nt = 0;
    std::string out;
    double lambda = 1.0;
    std::string alpha_policy;
    bool headon_literal_sign = false;
    std::string config_path;
};

void add_common_flags(CLI::App* sub, FlagValues& v, bool with_case, bool with_nx_nt,
                      bool with_headon_flag) {
    if (with_case)
        sub->add_option("--case", v.case_text, "case id: 1..7, blowup, headon");
    sub->add_option("--degree", v.degree, "polynomial degree k in {1,2,3}");
    if (with_nx_nt) {
        sub->add_option("--nx", v.nx, "number of cells");
        sub->add_option("--nt", v.nt, "number of equal time steps to the final time");
    }
    sub->add_option("--out", v.out, "output root directory");
    sub->add_option("--lambda", v.lambda, "jump-penalty scale");
    sub->add_option("--alpha-policy", v.alpha_policy,
                    "dissipation refresh: per-step, per-stage, initial");
    if (with_headon_flag)
        sub->add_flag("--headon-literal-sign", v.headon_literal_sign,
                      "place the velocity pulses at (x + x0) as printed");
    sub->add_option("--config", v.config_path, "JSON config file");
}

/// True if the flag exists on this subcommand and was typed by the user.
bool flag_given(const CLI::App* sub, const std::string& name) {
    const CLI::Option* opt = sub->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

/// Merges config file first, then any explicitly typed flags on top.
RunConfig build_config(Command command, const CLI::App* sub, const FlagValues& v) {
    RunConfig cfg;
    cfg.command = command;
    if (flag_given(sub, "--config")) apply_config_file(cfg, v.config_path);
    if (flag_given(sub, "--case")) cfg.case_id = parse_case_id(v.case_text);
    if (flag_given(sub, "--degree")) cfg.degree = v.degree;
    if (flag_given(sub, "--nx")) cfg.nx = v.nx;
    if (flag_given(sub, "--nt")) cfg.nt = v.nt;
    if (flag_given(sub, "--out")) cfg.out_dir = v.out;
    if (flag_given(sub, "--lambda")) cfg.lambda = v.lambda;
    if (flag_given(sub, "--alpha-policy"))
        cfg.alpha_policy = parse_alpha_policy(v.alpha_policy);
    if (flag_given(sub, "--headon-literal-sign"))
        cfg.headon_literal_sign = v.headon_literal_sign;
    return cfg;
}

void warn_sum_rule(const AbcdParams& params) {
    if (const auto msg = sum_rule_warning(params); msg.has_value())
        std::cerr << "warning: " << *msg << "\n";
}

int resolve_degree(const RunConfig& cfg, const CaseSpec& spec) {
    if (cfg.degree.has_value()) return *cfg.degree;
    return spec.default_degree > 0 ? spec.default_degree : 2;
}

CaseSpec spec_for(const RunConfig& cfg, CaseId id) {
    CaseSpec spec = id == CaseId::Headon ? headon_case(cfg.headon_literal_sign)
                                         : case_catalog(id);
    spec.params.lambda = cfg.lambda;
    return spec;
}

RunMetadata base_metadata(const CaseSpec& spec, int degree, const RunConfig& cfg,
                          const std::string& dt_rule, double wall_seconds) {
    RunMetadata meta;
    meta.case_name = spec.name;
    meta.params = spec.params;
    meta.degree = degree;
    meta.policy = cfg.alpha_policy;
    meta.dt_rule = dt_rule;
    meta.wall_seconds = wall_seconds;
    return meta;
}

int run_accuracy_cmd(const RunConfig& cfg) {
    LDG_CHECK(cfg.case_id.has_value(), "accuracy needs --case");
    const CaseSpec probe = spec_for(cfg, *cfg.case_id);
    warn_sum_rule(probe.params);
    const int degree = resolve_degree(cfg, probe);

    StudyOptions options;
    options.alpha_policy = cfg.alpha_policy;
    options.lambda = cfg.lambda;
    LDG_CHECK(cfg.nx.has_value() == cfg.nt.has_value(),
              "give --nx and --nt together to run a single row");
    if (cfg.nx.has_value()) options.refinements = {{*cfg.nx, *cfg.nt}};

    const AccuracyStudy study = run_accuracy_study(*cfg.case_id, degree, options);

    const std::string dir =
        resolve_out_dir(cfg.out_dir) + "/" + study.spec.name + "_k" + std::to_string(degree);
    ensure_dir(dir);
    const std::string table_path = dir + "/errors.csv";
    write_error_table(study.report, table_path);

    RunMetadata meta = base_metadata(study.spec, degree, cfg, "fixed_count per row",
                                     study.wall_seconds);
    write_metadata(meta, metadata_path_for(table_path));

    if (study.spec.has_source) {
        write_source_comparison(compare_sources(*cfg.case_id), dir + "/source_deviation.csv");
    }

    std::cout << render_error_table(study.report);
    std::cerr << "wrote " << table_path << " (" << study.wall_seconds << " s)\n";
    return 0;
}

int run_simulate_cmd(const RunConfig& cfg) {
    LDG_CHECK(cfg.case_id.has_value(), "simulate needs --case");
    const CaseSpec spec = spec_for(cfg, *cfg.case_id);
    warn_sum_rule(spec.params);
    const int degree = resolve_degree(cfg, spec);

    int nx = 0;
    if (cfg.nx.has_value())
        nx = *cfg.nx;
    else if (spec.default_n_cells > 0)
        nx = spec.default_n_cells;
    else
        fail("simulate", "this case has no default mesh; give --nx");

    DtRule rule = spec.dt_rule;
    if (cfg.nt.has_value())
        rule = DtRule::fixed_count(*cfg.nt);
    else
        LDG_CHECK(rule.kind == DtRule::Kind::FactorSchedule || rule.n_steps > 0,
                  "this case has no default step rule; give --nt");

    std::vector<double> snapshots;
    if (cfg.snapshot_times.has_value())
        snapshots = *cfg.snapshot_times;
    else if (!spec.snapshot_times.empty())
        snapshots = spec.snapshot_times;
    else
        snapshots = {0.0, spec.t_final};

    const auto start = std::chrono::steady_clock::now();
    const Trajectory traj = run_simulation(spec, nx, degree, rule, snapshots,
                                           cfg.alpha_policy);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const std::string dir = resolve_out_dir(cfg.out_dir) + "/" + spec.name + "_k" +
                            std::to_string(degree) + "_nx" + std::to_string(nx);
    ensure_dir(dir);
    for (const SimState& state : traj.snapshots) write_snapshot(state, dir, spec.name);
    write_invariant_log(traj.invariants, dir + "/invariants.csv");

    RunMetadata meta = base_metadata(spec, degree, cfg, dt_rule_description(rule), wall);
    meta.nx = nx;
    if (rule.kind == DtRule::Kind::FixedCount) meta.nt = rule.n_steps;
    write_metadata(meta, dir + "/run.meta.json");

    for (const SimState& state : traj.snapshots) {
        char line[96];
        std::snprintf(line, sizeof(line), "t=%.4f  max|eta|=%.6e\n", state.t,
                      linf_norm(state.eta_h));
        std::cout << line;
    }
    if (traj.blew_up) {
        std::cout << "blow-up: last valid time " << traj.last_valid_time << "\n";
        return 3;
    }
    std::cerr << "wrote " << dir << " (" << wall << " s)\n";
    return 0;
}

int run_collision_cmd(const RunConfig& cfg, bool is_blowup) {
    LDG_CHECK(!cfg.nt.has_value(),
              "this run uses its own step schedule; use simulate to override --nt");
    CollisionOptions options;
    options.n_cells = cfg.nx;
    options.degree = cfg.degree;
    options.alpha_policy = cfg.alpha_policy;
    options.lambda = cfg.lambda;
    options.headon_literal_sign = cfg.headon_literal_sign;

    const CollisionRun run = is_blowup ? run_blowup(options) : run_headon(options);
    warn_sum_rule(run.spec.params);

    const std::string dir = resolve_out_dir(cfg.out_dir) + "/" + run.spec.name;
    ensure_dir(dir);
    for (const SimState& state : run.traj.snapshots)
        write_snapshot(state, dir, run.spec.name);
    write_invariant_log(run.traj.invariants, dir + "/invariants.csv");

    RunMetadata meta;
    meta.case_name = run.spec.name;
    meta.params = run.spec.params;
    meta.degree = run.degree;
    meta.policy = cfg.alpha_policy;
    meta.dt_rule = dt_rule_description(run.spec.dt_rule);
    meta.nx = run.n_cells;
    meta.wall_seconds = run.wall_seconds;
    write_metadata(meta, dir + "/run.meta.json");

    for (const SimState& state : run.traj.snapshots) {
        char line[96];
        std::snprintf(line, sizeof(line), "t=%.4f  max|eta|=%.6e\n", state.t,
                      linf_norm(state.eta_h));
        std::cout << line;
    }
    if (run.traj.blew_up)
        std::cout << "blow-up: last valid time " << run.traj.last_valid_time << "\n";
    std::cerr << "wrote " << dir << " (" << run.wall_seconds << " s)\n";
    return 0;
}

int run_diagnose_cmd(const RunConfig& cfg) {
    LDG_CHECK(cfg.case_id.has_value(), "diagnose needs --case");
    const CaseSpec probe = spec_for(cfg, *cfg.case_id);
    warn_sum_rule(probe.params);
    const int degree = resolve_degree(cfg, probe);

    StudyOptions options;
    options.alpha_policy = cfg.alpha_policy;
    options.lambda = cfg.lambda;
    LDG_CHECK(cfg.nx.has_value() == cfg.nt.has_value(),
              "give --nx and --nt together to run a single row");
    if (cfg.nx.has_value()) options.refinements = {{*cfg.nx, *cfg.nt}};

    const DiagnosticStudy study = run_diagnose(*cfg.case_id, degree, options);

    const std::string dir =
        resolve_out_dir(cfg.out_dir) + "/" + study.spec.name + "_k" + std::to_string(degree);
    ensure_dir(dir);
    const std::string table_path = dir + "/ratios.csv";
    write_diagnostic_table(study, table_path);

    RunMetadata meta = base_metadata(study.spec, degree, cfg, "fixed_count per row", 0.0);
    write_metadata(meta, metadata_path_for(table_path));

    std::cout << render_diagnostic_table(study);
    std::cerr << "wrote " << table_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local DG solver for the abcd family of Boussinesq systems"};
    app.require_subcommand(1);

    FlagValues accuracy_v, simulate_v, blowup_v, headon_v, diagnose_v;
    CLI::App* accuracy = app.add_subcommand("accuracy", "refinement study with rate table");
    add_common_flags(accuracy, accuracy_v, true, true, false);
    CLI::App* simulate = app.add_subcommand("simulate", "single run with snapshots");
    add_common_flags(simulate, simulate_v, true, true, true);
    CLI::App* blowup = app.add_subcommand("blowup", "two-pulse collision into blow-up");
    add_common_flags(blowup, blowup_v, false, true, false);
    CLI::App* headon = app.add_subcommand("headon", "smooth head-on collision");
    add_common_flags(headon, headon_v, false, true, true);
    CLI::App* diagnose = app.add_subcommand("diagnose", "error-split ratio table");
    add_common_flags(diagnose, diagnose_v, true, true, false);

    try {
        app.parse(argc, argv);
        if (accuracy->parsed())
            return run_accuracy_cmd(build_config(Command::Accuracy, accuracy, accuracy_v));
        if (simulate->parsed())
            return run_simulate_cmd(build_config(Command::Simulate, simulate, simulate_v));
        if (blowup->parsed())
            return run_collision_cmd(build_config(Command::Blowup, blowup, blowup_v), true);
        if (headon->parsed())
            return run_collision_cmd(build_config(Command::Headon, headon, headon_v), false);
        if (diagnose->parsed())
            return run_diagnose_cmd(build_config(Command::Diagnose, diagnose, diagnose_v));
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ldg::BlowupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ldg::CheckError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
