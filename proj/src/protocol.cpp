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

#include "ramancat/protocol.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

namespace ramancat {

namespace {

const double kPi = std::acos(-1.0);
const double kNaN = std::numeric_limits<double>::quiet_NaN();

// margin >= 10 counts as "much greater than"; margin <= 1 is an outright
// violation of the inequality.
void append_margin_warnings(const ValidityMargins& m, std::vector<std::string>* out) {
    if (m.degenerate) return;
    const struct { const char* name; double value; } margins[] = {
        {"margin1", m.margin1}, {"margin2", m.margin2}};
    for (const auto& margin : margins) {
        if (margin.value <= 1.0) {
            std::ostringstream msg;
            msg << margin.name << " = " << margin.value
                << ": large-detuning inequality violated";
            out->push_back(msg.str());
        } else if (margin.value < 10.0) {
            std::ostringstream msg;
            msg << margin.name << " = " << margin.value
                << ": large-detuning inequality only marginally satisfied";
            out->push_back(msg.str());
        }
    }
}

std::vector<double> prepare_axis(std::vector<double> values, double fallback,
                                 const char* name, std::vector<std::string>* warnings) {
    if (values.empty()) return {fallback};
    std::sort(values.begin(), values.end());
    auto last = std::unique(values.begin(), values.end());
    if (last != values.end()) {
        std::ostringstream msg;
        msg << "duplicate " << name << " values removed from the sweep grid";
        warnings->push_back(msg.str());
        values.erase(last, values.end());
    }
    return values;
}

double metric_value(const std::string& metric, const ProtocolResult& r, double alpha) {
    if (metric == "probability") return r.probability;
    if (metric == "fidelity_to_target") return r.fidelity_to_target;
    if (metric == "target_infidelity") return r.target_infidelity;
    if (metric == "residual") return r.residual;
    if (metric == "margin1") return r.margins.margin1;
    if (metric == "margin2") return r.margins.margin2;
    if (metric == "overlap") return std::exp(coherent_overlap(alpha, -alpha).log_abs);
    if (metric == "log10_overlap") return coherent_overlap(alpha, -alpha).log10_abs();
    if (metric == "gate_error") return gate_error(alpha);
    if (metric == "model_infidelity") return r.model_infidelity.value_or(kNaN);
    if (metric == "f_leakage") return r.f_leakage.value_or(kNaN);
    return kNaN;
}

}  // namespace

const char* to_string(GateMode mode) {
    return mode == GateMode::literal ? "literal" : "ideal";
}

RamanParams ExperimentPreset::params(Complex alpha) const {
    RamanParams p;
    p.lambda_coupling = lambda_coupling;
    p.delta = delta;
    p.alpha = alpha;
    return p;
}

double default_interaction_time(const RamanParams& p) {
    p.validate();
    const double beta = p.beta();
    if (beta == 0.0)
        throw ValidationError("effective coupling beta is zero; no finite protocol time");
    return kPi / (2.0 * std::abs(beta));
}

ValidityMargins check_validity(const RamanParams& p, double t) {
    p.validate();
    if (!(t > 0.0) || !std::isfinite(t))
        throw ValidationError("validity check requires a positive finite time");
    const double alpha_sq = std::norm(p.alpha);
    if (alpha_sq == 0.0) {
        const double inf = std::numeric_limits<double>::infinity();
        return {inf, inf, true};
    }
    const double lam_sq = p.lambda_coupling * p.lambda_coupling;
    ValidityMargins m;
    m.degenerate = false;
    m.margin1 = p.delta * p.delta / (2.0 * 4.0 * lam_sq * alpha_sq);
    m.margin2 = 3.0 * std::pow(std::abs(p.delta), 3) /
                (4.0 * lam_sq * lam_sq * alpha_sq * alpha_sq) / t;
    return m;
}

ProtocolResult run_protocol(const ProtocolConfig& cfg) {
    cfg.params.validate();
    if (std::abs(std::norm(cfg.c_g) + std::norm(cfg.c_e) - 1.0) > 1e-9)
        throw ValidationError("input qubit must satisfy |c_g|^2 + |c_e|^2 = 1");
    if (cfg.t_override && !(*cfg.t_override > 0.0))
        throw ValidationError("interaction time override must be positive");

    const double t = cfg.t_override ? *cfg.t_override : default_interaction_time(cfg.params);
    const int n_max = cfg.n_max.value_or(default_cutoff(cfg.params.alpha));
    const Complex alpha = cfg.params.alpha;

    ProtocolResult result;
    result.outcome = cfg.outcome;
    result.t = t;
    result.n_max = n_max;
    result.gate = cfg.gate;
    result.margins = check_validity(cfg.params, t);
    append_margin_warnings(result.margins, &result.warnings);

    // Step 1: Raman evolution and selective detection.
    const JointState evolved = evolve_closed_form(cfg.c_g, cfg.c_e, cfg.params, t, n_max);
    Projection detection = project_atom(evolved, cfg.outcome);
    result.probability = detection.probability;

    // Step 2: cat Hadamard on the projected field.
    FieldState after_gate;
    if (cfg.gate == GateMode::literal) {
        after_gate = hadamard_literal(detection.field, alpha);
    } else {
        const Decomposition pre = decompose(detection.field, alpha);
        after_gate = embed(hadamard_ideal(pre.q), n_max);
    }
    const double gate_norm = after_gate.amps.norm();
    if (gate_norm <= 0.0)
        throw NumericalError("cat Hadamard annihilated the post-measurement state");
    after_gate.amps /= gate_norm;

    Decomposition d = decompose(after_gate, alpha);
    result.field_after_gate = std::move(after_gate);
    result.cat = d.q;
    result.residual = d.residual;

    // Transferred target: outcome g keeps (c_g, c_e), outcome e swaps them.
    const Complex target_a = (cfg.outcome == AtomLevel::g) ? cfg.c_g : cfg.c_e;
    const Complex target_b = (cfg.outcome == AtomLevel::g) ? cfg.c_e : cfg.c_g;
    const FieldState target = embed({alpha, target_a, target_b}, n_max);
    result.target_infidelity = fidelity_defect(result.field_after_gate, target);
    result.fidelity_to_target = std::clamp(1.0 - result.target_infidelity, 0.0, 1.0);

    if (cfg.with_full_model) {
        const ModelDeviationReport rep = compare_models(cfg.params, cfg.c_g, cfg.c_e, t);
        result.model_infidelity = rep.infidelity;
        result.f_leakage = rep.f_leakage;
    }
    return result;
}

FeasibilityReport feasibility_report(const ExperimentPreset& preset) {
    FeasibilityReport report;
    report.lambda_coupling = preset.lambda_coupling;
    report.delta = preset.delta;
    report.quality_factor = preset.quality_factor;
    report.hadamard_gate_time_s = preset.hadamard_gate_time_s;
    report.cavity_lifetime_s = preset.cavity_lifetime_s;
    report.gate_within_lifetime = preset.hadamard_gate_time_s < preset.cavity_lifetime_s;

    const double lifetime_ms = preset.cavity_lifetime_s * 1e3;
    for (double alpha : preset.alphas) {
        const CoherentOverlap overlap = coherent_overlap(alpha, -alpha);
        FeasibilityRow row;
        row.alpha = alpha;
        row.overlap = std::exp(overlap.log_abs);
        row.log10_overlap = overlap.log10_abs();
        row.interaction_time_ms = default_interaction_time(preset.params(alpha));
        row.within_cavity_lifetime = row.interaction_time_ms < lifetime_ms;
        report.rows.push_back(row);
    }
    return report;
}

const std::vector<std::string>& known_sweep_metrics() {
    static const std::vector<std::string> metrics = {
        "probability",   "fidelity_to_target", "target_infidelity", "residual",
        "overlap",       "log10_overlap",      "margin1",           "margin2",
        "gate_error",    "model_infidelity",   "f_leakage"};
    return metrics;
}

SweepTable sweep(const ProtocolConfig& base, const SweepGrid& grid,
                 const std::vector<std::string>& metrics) {
    if (metrics.empty())
        throw ValidationError("sweep requires at least one metric");
    const auto& known = known_sweep_metrics();
    for (const std::string& metric : metrics) {
        if (std::find(known.begin(), known.end(), metric) == known.end())
            throw ValidationError("unknown sweep metric: " + metric);
    }
    const bool needs_full_model =
        std::find(metrics.begin(), metrics.end(), "model_infidelity") != metrics.end() ||
        std::find(metrics.begin(), metrics.end(), "f_leakage") != metrics.end();

    SweepTable table;
    table.metrics = metrics;
    const std::vector<double> alphas =
        prepare_axis(grid.alphas, base.params.alpha.real(), "alpha", &table.warnings);
    const std::vector<double> deltas =
        prepare_axis(grid.deltas, base.params.delta, "delta", &table.warnings);
    const std::vector<double> lambdas =
        prepare_axis(grid.lambdas, base.params.lambda_coupling, "lambda", &table.warnings);
    // NaN marks "use the per-point default interaction time".
    const double t_fallback = base.t_override.value_or(kNaN);
    const std::vector<double> ts = prepare_axis(grid.ts, t_fallback, "t", &table.warnings);

    table.rows.resize(alphas.size() * deltas.size() * lambdas.size() * ts.size());
    std::size_t index = 0;
    for (double a : alphas)
        for (double d : deltas)
            for (double l : lambdas)
                for (double t : ts) {
                    SweepRow& row = table.rows[index++];
                    row.alpha = a;
                    row.delta = d;
                    row.lambda = l;
                    row.t = t;
                }

    auto evaluate = [&](SweepRow& row) {
        ProtocolConfig cfg = base;
        cfg.params.alpha = row.alpha;
        cfg.params.delta = row.delta;
        cfg.params.lambda_coupling = row.lambda;
        cfg.with_full_model = needs_full_model;
        if (std::isnan(row.t))
            cfg.t_override.reset();
        else
            cfg.t_override = row.t;
        row.values.assign(metrics.size(), kNaN);
        try {
            const ProtocolResult r = run_protocol(cfg);
            row.t = r.t;
            for (std::size_t m = 0; m < metrics.size(); ++m)
                row.values[m] = metric_value(metrics[m], r, row.alpha);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    };

    // Points are pure and independent; rows are addressed by index, so the
    // result is identical for any scheduling.
    const std::size_t workers = std::min<std::size_t>(
        std::max(1u, std::thread::hardware_concurrency()), table.rows.size());
    if (workers <= 1) {
        for (SweepRow& row : table.rows) evaluate(row);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                for (std::size_t i = next.fetch_add(1); i < table.rows.size();
                     i = next.fetch_add(1))
                    evaluate(table.rows[i]);
            });
        }
        for (std::thread& worker : pool) worker.join();
    }
    return table;
}

}  // namespace ramancat
