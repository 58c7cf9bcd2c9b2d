// Copyright 2026 The Ramancat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: single protocol runs, parameter sweeps, validity
// and feasibility reports. JSON config in, JSON or CSV out. Exit codes:
// 0 success, 2 configuration error, 3 numerical error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ramancat/csv.hpp"
#include "ramancat/run_config.hpp"

namespace {

using namespace ramancat;
using ordered_json = nlohmann::ordered_json;

struct CommonFlags {
    std::string config_path;
    std::string outcome;
    std::optional<double> alpha;
    std::optional<double> lambda;
    std::optional<double> delta;
    std::optional<double> t;
    std::optional<int> n_max;
    std::string format;
    std::string out;
    bool with_full_model = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags* flags) {
    cmd->add_option("--config", flags->config_path, "JSON config file");
    cmd->add_option("--outcome", flags->outcome, "detection outcome")
        ->check(CLI::IsMember({"g", "e"}));
    cmd->add_option("--alpha", flags->alpha, "coherent amplitude (real)");
    cmd->add_option("--lambda", flags->lambda, "transition coupling, kHz");
    cmd->add_option("--delta", flags->delta, "detuning, kHz");
    cmd->add_option("--t", flags->t, "interaction time, ms");
    cmd->add_option("--n-max", flags->n_max, "Fock cutoff")->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", flags->format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", flags->out, "output file (default stdout)");
    cmd->add_flag("--with-full-model", flags->with_full_model,
                  "attach the three-level model comparison");
}

// Flags override config-file values, which override defaults.
RunConfig assemble_config(const CommonFlags& flags) {
    RunConfig cfg =
        flags.config_path.empty() ? RunConfig{} : load_run_config(flags.config_path);
    if (flags.alpha) cfg.protocol.params.alpha = *flags.alpha;
    if (flags.lambda) cfg.protocol.params.lambda_coupling = *flags.lambda;
    if (flags.delta) cfg.protocol.params.delta = *flags.delta;
    if (flags.t) {
        cfg.protocol.t_override = *flags.t;
        cfg.t_defaulted = false;
    }
    if (flags.n_max) {
        cfg.protocol.n_max = *flags.n_max;
        cfg.n_max_defaulted = false;
    }
    if (!flags.outcome.empty()) {
        cfg.protocol.outcome = flags.outcome == "e" ? AtomLevel::e : AtomLevel::g;
        cfg.outcome_defaulted = false;
    }
    if (flags.with_full_model) cfg.protocol.with_full_model = true;
    if (!flags.format.empty()) cfg.output.format = flags.format;
    if (!flags.out.empty()) cfg.output.path = flags.out;
    return cfg;
}

void write_output(const std::string& text, const OutputOptions& output) {
    if (output.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(output.path, std::ios::binary);
    if (!file) throw ValidationError("cannot open output file: " + output.path);
    file << text;
    if (!file) throw ValidationError("failed writing output file: " + output.path);
}

ordered_json json_complex(Complex c) {
    return ordered_json::array({c.real(), c.imag()});
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) out += sep;
        out += parts[i];
    }
    return out;
}

int effective_cutoff(const RunConfig& cfg) {
    return cfg.protocol.n_max.value_or(default_cutoff(cfg.protocol.params.alpha));
}

int cmd_run(const RunConfig& cfg) {
    enforce_nmax_cap(effective_cutoff(cfg));
    const ProtocolResult r = run_protocol(cfg.protocol);
    const auto& p = cfg.protocol;

    std::string text;
    if (cfg.output.format == "json") {
        ordered_json j;
        j["command"] = "run";
        j["qubit"] = {{"c_g", json_complex(p.c_g)},
                      {"c_e", json_complex(p.c_e)},
                      {"defaulted", cfg.qubit_defaulted}};
        j["params"] = {{"lambda", p.params.lambda_coupling},
                       {"delta", p.params.delta},
                       {"alpha", json_complex(p.params.alpha)},
                       {"beta", p.params.beta()}};
        j["gate"] = to_string(r.gate);
        j["outcome"] = to_string(r.outcome);
        j["outcome_defaulted"] = cfg.outcome_defaulted;
        j["t_ms"] = r.t;
        j["t_defaulted"] = cfg.t_defaulted;
        j["n_max"] = r.n_max;
        j["n_max_defaulted"] = cfg.n_max_defaulted;
        j["probability"] = r.probability;
        j["cat"] = {{"a", json_complex(r.cat.a)},
                    {"b", json_complex(r.cat.b)},
                    {"s", r.cat.gram_overlap()}};
        j["residual"] = r.residual;
        j["fidelity_to_target"] = r.fidelity_to_target;
        j["target_infidelity"] = r.target_infidelity;
        j["margins"] = {{"margin1", r.margins.margin1},
                        {"margin2", r.margins.margin2},
                        {"degenerate", r.margins.degenerate},
                        {"regime_ok", r.margins.satisfied()}};
        if (r.model_infidelity)
            j["model_infidelity"] = *r.model_infidelity;
        else
            j["model_infidelity"] = nullptr;
        if (r.f_leakage)
            j["f_leakage"] = *r.f_leakage;
        else
            j["f_leakage"] = nullptr;
        j["field_after_gate"] = {{"n_max", r.field_after_gate.n_max()},
                                 {"norm_sq", r.field_after_gate.norm_sq()},
                                 {"mean_photon_number",
                                  r.field_after_gate.mean_photon_number()}};
        j["warnings"] = r.warnings;
        text = j.dump(2) + "\n";
    } else {
        const int prec = cfg.output.precision;
        auto num = [prec](double v) { return csv::format_number(v, prec); };
        csv::Table table;
        table.header = {"outcome", "probability", "t_ms", "t_defaulted", "n_max",
                        "n_max_defaulted", "gate", "alpha_re", "alpha_im", "lambda",
                        "delta", "beta", "c_g_re", "c_g_im", "c_e_re", "c_e_im",
                        "cat_a_re", "cat_a_im", "cat_b_re", "cat_b_im", "cat_s",
                        "residual", "fidelity_to_target", "target_infidelity",
                        "margin1", "margin2", "regime_ok", "model_infidelity",
                        "f_leakage", "warnings"};
        table.rows.push_back(
            {to_string(r.outcome), num(r.probability), num(r.t),
             bool_str(cfg.t_defaulted), std::to_string(r.n_max),
             bool_str(cfg.n_max_defaulted), to_string(r.gate),
             num(p.params.alpha.real()), num(p.params.alpha.imag()),
             num(p.params.lambda_coupling), num(p.params.delta), num(p.params.beta()),
             num(p.c_g.real()), num(p.c_g.imag()), num(p.c_e.real()), num(p.c_e.imag()),
             num(r.cat.a.real()), num(r.cat.a.imag()), num(r.cat.b.real()),
             num(r.cat.b.imag()), num(r.cat.gram_overlap()), num(r.residual),
             num(r.fidelity_to_target), num(r.target_infidelity),
             num(r.margins.margin1), num(r.margins.margin2),
             bool_str(r.margins.satisfied()),
             r.model_infidelity ? num(*r.model_infidelity) : "",
             r.f_leakage ? num(*r.f_leakage) : "", join(r.warnings, "; ")});
        text = csv::emit(table);
    }
    write_output(text, cfg.output);
    return 0;
}

int cmd_sweep(const RunConfig& cfg) {
    std::vector<std::string> metrics = cfg.metrics;
    if (metrics.empty())
        metrics = {"probability", "fidelity_to_target", "target_infidelity",
                   "overlap",     "log10_overlap",      "margin1",
                   "margin2"};
    int needed = effective_cutoff(cfg);
    if (!cfg.protocol.n_max)
        for (double a : cfg.grid.alphas) needed = std::max(needed, default_cutoff(a));
    enforce_nmax_cap(needed);

    const SweepTable table = sweep(cfg.protocol, cfg.grid, metrics);
    for (const std::string& warning : table.warnings)
        std::cerr << "warning: " << warning << "\n";

    std::string text;
    if (cfg.output.format == "csv") {
        const int prec = cfg.output.precision;
        auto num = [prec](double v) { return csv::format_number(v, prec); };
        csv::Table out;
        out.header = {"alpha", "delta", "lambda", "t"};
        out.header.insert(out.header.end(), metrics.begin(), metrics.end());
        out.header.push_back("error");
        for (const SweepRow& row : table.rows) {
            std::vector<std::string> cells = {num(row.alpha), num(row.delta),
                                              num(row.lambda),
                                              std::isnan(row.t) ? "" : num(row.t)};
            for (double v : row.values) cells.push_back(std::isnan(v) ? "" : num(v));
            cells.push_back(row.error);
            out.rows.push_back(std::move(cells));
        }
        text = csv::emit(out);
    } else {
        ordered_json j;
        j["command"] = "sweep";
        j["metrics"] = metrics;
        j["warnings"] = table.warnings;
        ordered_json rows = ordered_json::array();
        for (const SweepRow& row : table.rows) {
            ordered_json item;
            item["alpha"] = row.alpha;
            item["delta"] = row.delta;
            item["lambda"] = row.lambda;
            if (std::isnan(row.t))
                item["t"] = nullptr;
            else
                item["t"] = row.t;
            ordered_json values;
            for (std::size_t m = 0; m < metrics.size(); ++m) {
                if (std::isnan(row.values[m]))
                    values[metrics[m]] = nullptr;
                else
                    values[metrics[m]] = row.values[m];
            }
            item["values"] = values;
            item["error"] = row.error;
            rows.push_back(item);
        }
        j["rows"] = rows;
        text = j.dump(2) + "\n";
    }
    write_output(text, cfg.output);
    return 0;
}

int cmd_validate(const RunConfig& cfg) {
    const RamanParams& p = cfg.protocol.params;
    const double t =
        cfg.protocol.t_override ? *cfg.protocol.t_override : default_interaction_time(p);
    const ValidityMargins m = check_validity(p, t);

    std::string text;
    if (cfg.output.format == "json") {
        ordered_json j;
        j["command"] = "validate";
        j["lambda"] = p.lambda_coupling;
        j["delta"] = p.delta;
        j["alpha"] = json_complex(p.alpha);
        j["t_ms"] = t;
        j["t_defaulted"] = cfg.t_defaulted;
        j["margin1"] = m.margin1;
        j["margin2"] = m.margin2;
        j["degenerate"] = m.degenerate;
        j["margin1_satisfied"] = m.degenerate || m.margin1 >= 10.0;
        j["margin2_satisfied"] = m.degenerate || m.margin2 >= 10.0;
        j["regime_ok"] = m.satisfied();
        text = j.dump(2) + "\n";
    } else {
        const int prec = cfg.output.precision;
        auto num = [prec](double v) { return csv::format_number(v, prec); };
        csv::Table out;
        out.header = {"lambda", "delta", "alpha_re", "alpha_im", "t_ms", "t_defaulted",
                      "margin1", "margin2", "degenerate", "regime_ok"};
        out.rows.push_back({num(p.lambda_coupling), num(p.delta), num(p.alpha.real()),
                            num(p.alpha.imag()), num(t), bool_str(cfg.t_defaulted),
                            num(m.margin1), num(m.margin2), bool_str(m.degenerate),
                            bool_str(m.satisfied())});
        text = csv::emit(out);
    }
    write_output(text, cfg.output);
    return 0;
}

ExperimentPreset preset_from_config(const RunConfig& cfg) {
    ExperimentPreset preset;
    preset.lambda_coupling = cfg.protocol.params.lambda_coupling;
    preset.delta = cfg.protocol.params.delta;
    return preset;
}

int cmd_feasibility(const RunConfig& cfg) {
    const FeasibilityReport rep = feasibility_report(preset_from_config(cfg));

    std::string text;
    if (cfg.output.format == "csv") {
        const int prec = cfg.output.precision;
        auto num = [prec](double v) { return csv::format_number(v, prec); };
        csv::Table out;
        out.header = {"alpha", "overlap", "log10_overlap", "interaction_time_ms",
                      "within_cavity_lifetime", "hadamard_gate_time_s",
                      "cavity_lifetime_s", "gate_within_lifetime"};
        for (const FeasibilityRow& row : rep.rows) {
            out.rows.push_back({num(row.alpha), num(row.overlap), num(row.log10_overlap),
                                num(row.interaction_time_ms),
                                bool_str(row.within_cavity_lifetime),
                                num(rep.hadamard_gate_time_s), num(rep.cavity_lifetime_s),
                                bool_str(rep.gate_within_lifetime)});
        }
        text = csv::emit(out);
    } else {
        ordered_json j;
        j["command"] = "feasibility";
        j["lambda"] = rep.lambda_coupling;
        j["delta"] = rep.delta;
        j["quality_factor"] = rep.quality_factor;
        j["hadamard_gate_time_s"] = rep.hadamard_gate_time_s;
        j["cavity_lifetime_s"] = rep.cavity_lifetime_s;
        j["gate_within_lifetime"] = rep.gate_within_lifetime;
        ordered_json rows = ordered_json::array();
        for (const FeasibilityRow& row : rep.rows) {
            rows.push_back({{"alpha", row.alpha},
                            {"overlap", row.overlap},
                            {"log10_overlap", row.log10_overlap},
                            {"interaction_time_ms", row.interaction_time_ms},
                            {"within_cavity_lifetime", row.within_cavity_lifetime}});
        }
        j["rows"] = rows;
        text = j.dump(2) + "\n";
    }
    write_output(text, cfg.output);
    return 0;
}

int cmd_presets(const RunConfig& cfg) {
    const ExperimentPreset preset;
    std::string text;
    if (cfg.output.format == "csv") {
        const int prec = cfg.output.precision;
        auto num = [prec](double v) { return csv::format_number(v, prec); };
        csv::Table out;
        out.header = {"lambda", "delta", "quality_factor", "cavity_lifetime_s",
                      "hadamard_gate_time_s", "atomic_velocity_m_s", "alphas"};
        std::vector<std::string> alphas;
        for (double a : preset.alphas) alphas.push_back(num(a));
        out.rows.push_back({num(preset.lambda_coupling), num(preset.delta),
                            num(preset.quality_factor), num(preset.cavity_lifetime_s),
                            num(preset.hadamard_gate_time_s),
                            num(preset.atomic_velocity_m_s), join(alphas, "; ")});
        text = csv::emit(out);
    } else {
        ordered_json j;
        j["command"] = "presets";
        j["lambda"] = preset.lambda_coupling;
        j["delta"] = preset.delta;
        j["quality_factor"] = preset.quality_factor;
        j["cavity_lifetime_s"] = preset.cavity_lifetime_s;
        j["hadamard_gate_time_s"] = preset.hadamard_gate_time_s;
        j["atomic_velocity_m_s"] = preset.atomic_velocity_m_s;
        j["alphas"] = preset.alphas;
        text = j.dump(2) + "\n";
    }
    write_output(text, cfg.output);
    return 0;
}

void emit_error(const char* category, const std::string& message) {
    ordered_json j;
    j["error"] = {{"category", category}, {"message", message}};
    std::cerr << j.dump() << "\n";
}

template <typename Body>
int guarded(Body&& body) {
    try {
        return body();
    } catch (const ValidationError& e) {
        emit_error("config", e.what());
        return 2;
    } catch (const NumericalError& e) {
        emit_error("numerical", e.what());
        return 3;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Atom-to-cat-qubit state transfer simulator"};
    app.require_subcommand(1);

    CommonFlags run_flags, sweep_flags, validate_flags, feas_flags, preset_flags;
    CLI::App* run = app.add_subcommand("run", "run a single protocol instance");
    add_common_flags(run, &run_flags);
    CLI::App* swp = app.add_subcommand("sweep", "run a parameter sweep from a config grid");
    add_common_flags(swp, &sweep_flags);
    CLI::App* val = app.add_subcommand("validate", "report large-detuning validity margins");
    add_common_flags(val, &validate_flags);
    CLI::App* feas = app.add_subcommand("feasibility", "report the experimental feasibility table");
    add_common_flags(feas, &feas_flags);
    CLI::App* pre = app.add_subcommand("presets", "print the experimental preset values");
    add_common_flags(pre, &preset_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (run->parsed()) return guarded([&] { return cmd_run(assemble_config(run_flags)); });
    if (swp->parsed()) return guarded([&] { return cmd_sweep(assemble_config(sweep_flags)); });
    if (val->parsed())
        return guarded([&] { return cmd_validate(assemble_config(validate_flags)); });
    if (feas->parsed())
        return guarded([&] { return cmd_feasibility(assemble_config(feas_flags)); });
    if (pre->parsed())
        return guarded([&] { return cmd_presets(assemble_config(preset_flags)); });
    return 2;
}
