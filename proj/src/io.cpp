#include "ldg/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "ldg/check.hpp"
#include "ldg/quadrature.hpp"

namespace ldg {

namespace {

std::string printf_str(const char* fmt, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    LDG_CHECK(out.good(), "cannot open for writing: " + path);
    out << text;
    out.flush();
    LDG_CHECK(out.good(), "write failed: " + path);
}

} // namespace

Command parse_command(const std::string& name) {
    if (name == "accuracy") return Command::Accuracy;
    if (name == "simulate") return Command::Simulate;
    if (name == "blowup") return Command::Blowup;
    if (name == "headon") return Command::Headon;
    if (name == "diagnose") return Command::Diagnose;
    fail("parse_command", "unknown command: " + name);
}

std::string command_name(Command cmd) {
    switch (cmd) {
        case Command::Accuracy: return "accuracy";
        case Command::Simulate: return "simulate";
        case Command::Blowup: return "blowup";
        case Command::Headon: return "headon";
        case Command::Diagnose: return "diagnose";
    }
    fail("command_name", "unreachable");
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    LDG_CHECK(in.good(), "cannot open config file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        fail("apply_config_file", path + ": " + e.what());
    }
    LDG_CHECK(doc.is_object(), path + ": config root must be a JSON object");

    for (const auto& [key, value] : doc.items()) {
        try {
            if (key == "case") {
                cfg.case_id = parse_case_id(value.is_string()
                                                ? value.get<std::string>()
                                                : std::to_string(value.get<int>()));
            } else if (key == "degree") {
                cfg.degree = value.get<int>();
            } else if (key == "nx") {
                cfg.nx = value.get<int>();
            } else if (key == "nt") {
                cfg.nt = value.get<int>();
            } else if (key == "out") {
                cfg.out_dir = value.get<std::string>();
            } else if (key == "lambda") {
                cfg.lambda = value.get<double>();
            } else if (key == "alpha_policy") {
                cfg.alpha_policy = parse_alpha_policy(value.get<std::string>());
            } else if (key == "headon_literal_sign") {
                cfg.headon_literal_sign = value.get<bool>();
            } else if (key == "snapshot_times") {
                cfg.snapshot_times = value.get<std::vector<double>>();
            } else {
                fail("apply_config_file", path + ": unknown config key: " + key);
            }
        } catch (const nlohmann::json::exception& e) {
            fail("apply_config_file", path + ": key \"" + key + "\": " + e.what());
        }
    }
}

std::string resolve_out_dir(const std::optional<std::string>& configured) {
    if (configured.has_value() && !configured->empty()) return *configured;
    if (const char* env = std::getenv("LDG_OUT_ROOT"); env != nullptr && *env != '\0')
        return env;
    return "out";
}

void ensure_dir(const std::string& path) {
    std::error_code ec;
    std::filesystem::create_directories(path, ec);
    LDG_CHECK(!ec, "cannot create directory " + path + ": " + ec.message());
}

std::string format_sci(double v) { return printf_str("%.3e", v); }

std::string format_rate(const std::optional<double>& rate) {
    return rate.has_value() ? printf_str("%.4f", *rate) : "na";
}

std::string render_error_table(const ErrorReport& report) {
    LDG_CHECK(!report.rows.empty(), "empty error report");
    std::string out = "Nx,Nt,l2_u,rate,l2_eta,rate,linf_u,rate,linf_eta,rate\n";
    for (const ErrorRow& r : report.rows) {
        out += std::to_string(r.nx) + "," + std::to_string(r.nt);
        out += "," + format_sci(r.l2_u) + "," + format_rate(r.rate_l2_u);
        out += "," + format_sci(r.l2_eta) + "," + format_rate(r.rate_l2_eta);
        out += "," + format_sci(r.linf_u) + "," + format_rate(r.rate_linf_u);
        out += "," + format_sci(r.linf_eta) + "," + format_rate(r.rate_linf_eta);
        out += "\n";
    }
    return out;
}

void write_error_table(const ErrorReport& report, const std::string& path) {
    write_text(path, render_error_table(report));
}

SnapshotSample sample_state(const DGField& eta_h, const DGField& u_h) {
    LDG_CHECK(conformable(eta_h, u_h), "snapshot fields on different meshes");
    const auto rule = gauss_legendre_rule(eta_h.degree + 3);
    std::vector<double> ref;
    ref.reserve(rule.n_points + 2);
    ref.push_back(-1.0);
    ref.insert(ref.end(), rule.ref_points.begin(), rule.ref_points.end());
    ref.push_back(1.0);

    SnapshotSample sample;
    const int n = eta_h.mesh->n_cells;
    sample.x.reserve(static_cast<std::size_t>(n) * ref.size());
    sample.eta.reserve(sample.x.capacity());
    sample.u.reserve(sample.x.capacity());
    for (int j = 0; j < n; ++j) {
        for (double xi : ref) {
            sample.x.push_back(eta_h.mesh->to_physical(j, xi));
            sample.eta.push_back(eval_point(eta_h, j, xi));
            sample.u.push_back(eval_point(u_h, j, xi));
        }
    }
    return sample;
}

std::string render_snapshot(const SnapshotSample& sample) {
    std::string out = "x,eta,u\n";
    for (std::size_t i = 0; i < sample.x.size(); ++i) {
        out += printf_str("%.12e", sample.x[i]) + "," + printf_str("%.12e", sample.eta[i]) +
               "," + printf_str("%.12e", sample.u[i]) + "\n";
    }
    return out;
}

std::string snapshot_filename(const std::string& stem, double t) {
    return stem + "_t" + printf_str("%.4f", t) + ".csv";
}

std::string write_snapshot(const SimState& state, const std::string& dir,
                           const std::string& stem) {
    ensure_dir(dir);
    const std::string path = dir + "/" + snapshot_filename(stem, state.t);
    write_text(path, render_snapshot(sample_state(state.eta_h, state.u_h)));
    return path;
}

std::string render_invariant_log(const std::vector<InvariantSample>& samples) {
    std::string out = "t,int_eta,int_u,linf_eta\n";
    for (const InvariantSample& s : samples) {
        out += printf_str("%.12e", s.t) + "," + printf_str("%.12e", s.i_eta) + "," +
               printf_str("%.12e", s.i_u) + "," + printf_str("%.12e", s.eta_linf) + "\n";
    }
    return out;
}

void write_invariant_log(const std::vector<InvariantSample>& samples,
                         const std::string& path) {
    write_text(path, render_invariant_log(samples));
}

std::string render_diagnostic_table(const DiagnosticStudy& study) {
    std::string out = "Nx,Nt,u_deriv_ratio,u_jump_ratio,eta_deriv_ratio,eta_jump_ratio\n";
    const auto cell = [](const std::optional<double>& v) {
        return v.has_value() ? format_sci(*v) : std::string("na");
    };
    for (const DiagnosticRow& r : study.rows) {
        out += std::to_string(r.nx) + "," + std::to_string(r.nt);
        out += "," + cell(r.ratio_u_deriv) + "," + cell(r.ratio_u_jump);
        out += "," + cell(r.ratio_eta_deriv) + "," + cell(r.ratio_eta_jump);
        out += "\n";
    }
    return out;
}

void write_diagnostic_table(const DiagnosticStudy& study, const std::string& path) {
    write_text(path, render_diagnostic_table(study));
}

std::string render_source_comparison(const SourceComparison& cmp) {
    return "component,max_deviation\ns1," + format_sci(cmp.max_dev_s1) + "\ns2," +
           format_sci(cmp.max_dev_s2) + "\n";
}

void write_source_comparison(const SourceComparison& cmp, const std::string& path) {
    write_text(path, render_source_comparison(cmp));
}

std::string dt_rule_description(const DtRule& rule) {
    if (rule.kind == DtRule::Kind::FixedCount)
        return "fixed_count(" + std::to_string(rule.n_steps) + ")";
    std::string out = "factor_schedule(";
    for (std::size_t i = 0; i < rule.segments.size(); ++i) {
        if (i > 0) out += ", ";
        out += "(" + printf_str("%g", rule.segments[i].first) + ", " +
               printf_str("%g", rule.segments[i].second) + ")";
    }
    return out + ")";
}

std::string render_metadata(const RunMetadata& meta) {
    nlohmann::json doc;
    doc["case"] = meta.case_name;
    doc["a"] = meta.params.a;
    doc["b"] = meta.params.b;
    doc["c"] = meta.params.c;
    doc["d"] = meta.params.d;
    doc["degree"] = meta.degree;
    doc["lambda"] = meta.params.lambda;
    doc["alpha_policy"] = alpha_policy_name(meta.policy);
    doc["dt_rule"] = meta.dt_rule;
    if (meta.nx.has_value()) doc["nx"] = *meta.nx;
    if (meta.nt.has_value()) doc["nt"] = *meta.nt;
    doc["wall_seconds"] = meta.wall_seconds;
    return doc.dump(2) + "\n";
}

void write_metadata(const RunMetadata& meta, const std::string& path) {
    write_text(path, render_metadata(meta));
}

std::string metadata_path_for(const std::string& table_path) {
    const std::string suffix = ".csv";
    if (table_path.size() > suffix.size() &&
        table_path.compare(table_path.size() - suffix.size(), suffix.size(), suffix) == 0)
        return table_path.substr(0, table_path.size() - suffix.size()) + ".meta.json";
    return table_path + ".meta.json";
}

} // namespace ldg
