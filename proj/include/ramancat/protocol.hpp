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

#ifndef RAMANCAT_PROTOCOL_HPP
#define RAMANCAT_PROTOCOL_HPP

#include <string>
#include <vector>

#include "ramancat/catgate.hpp"
#include "ramancat/dynamics.hpp"
#include "ramancat/measurement.hpp"

namespace ramancat {

/// Which Hadamard implementation the protocol applies to the projected
/// field: the literal outer-product operator (default; its deviation from
/// the ideal map is what the transfer fidelity measures) or the ideal
/// coefficient matrix.
enum class GateMode { literal, ideal };

const char* to_string(GateMode mode);

struct ProtocolConfig {
    Complex c_g{1.0, 0.0};
    Complex c_e{0.0, 0.0};
    RamanParams params;
    AtomLevel outcome = AtomLevel::g;  // detection level, g by default
    GateMode gate = GateMode::literal;
    std::optional<double> t_override;  // ms; defaults to pi / (2|beta|)
    std::optional<int> n_max;
    bool with_full_model = false;  // three-level comparison is the slow path
};

/// Large-detuning validity margins. margin > 1 means the inequality holds
/// at all; margin >= 10 is the conventional reading of "much greater than"
/// used for regime warnings.
struct ValidityMargins {
    double margin1;   // delta^2 / (2 |2 lambda alpha|^2)
    double margin2;   // [3 delta^3 / (4 |lambda alpha|^4)] / t
    bool degenerate;  // alpha = 0: both inequalities are vacuous (infinite)

    bool satisfied(double threshold = 10.0) const {
        return degenerate || (margin1 >= threshold && margin2 >= threshold);
    }
};

struct ProtocolResult {
    AtomLevel outcome;
    double probability;
    double t;   // interaction time actually used, ms
    int n_max;  // cutoff actually used
    GateMode gate;
    FieldState field_after_gate;  // normalized
    CatQubit cat;                 // decomposition of field_after_gate
    double residual;              // out-of-span component of the decomposition
    double fidelity_to_target;
    double target_infidelity;  // 1 - fidelity, cancellation-free
    ValidityMargins margins;
    std::optional<double> model_infidelity;  // only with with_full_model
    std::optional<double> f_leakage;         // only with with_full_model
    std::vector<std::string> warnings;
};

/// Experimental orders of magnitude for the cavity-QED realization.
struct ExperimentPreset {
    double lambda_coupling = 10.0;      // kHz
    double delta = 1e3;                 // kHz
    double quality_factor = 1e11;
    double cavity_lifetime_s = 1e-1;    // s
    double hadamard_gate_time_s = 1e-2; // s
    double atomic_velocity_m_s = 1e3;   // m/s
    std::vector<double> alphas{2.0, 3.0, 5.0, 10.0};

    RamanParams params(Complex alpha) const;
};

/// pi / (2 |beta|), the interaction time that maps |alpha> to |-alpha> on
/// the Stark-shifted branch. ms.
double default_interaction_time(const RamanParams& p);

/// Margins of the two large-detuning inequalities at time t. alpha = 0 is
/// reported as degenerate (infinite margins); t <= 0 is a ValidationError.
ValidityMargins check_validity(const RamanParams& p, double t);

/// Runs the two-step transfer: closed-form Raman evolution to t (default
/// pi/(2|beta|)), selective detection of cfg.outcome, cat Hadamard,
/// normalization, decomposition, and fidelity against the transferred
/// target (outcome g -> c_g|-alpha> + c_e|alpha>, outcome e -> the swapped
/// coefficients, both normalized).
ProtocolResult run_protocol(const ProtocolConfig& cfg);

struct FeasibilityRow {
    double alpha;
    double overlap;        // exp(-2 alpha^2)
    double log10_overlap;
    double interaction_time_ms;        // pi/(2|beta|) at the preset coupling
    bool within_cavity_lifetime;       // interaction time vs cavity lifetime
};

struct FeasibilityReport {
    std::vector<FeasibilityRow> rows;
    double lambda_coupling;
    double delta;
    double quality_factor;
    double hadamard_gate_time_s;
    double cavity_lifetime_s;
    bool gate_within_lifetime;
};

FeasibilityReport feasibility_report(const ExperimentPreset& preset = {});

/// Cartesian sweep grid. Empty axes fall back to the base config's value;
/// an empty t axis uses the per-point default interaction time. Axes are
/// sorted ascending and deduplicated (duplicates reported in warnings).
struct SweepGrid {
    std::vector<double> alphas;
    std::vector<double> deltas;
    std::vector<double> lambdas;
    std::vector<double> ts;
};

struct SweepRow {
    double alpha;
    double delta;
    double lambda;
    double t;
    std::vector<double> values;  // one per metric; NaN on per-point error
    std::string error;           // empty on success
};

struct SweepTable {
    std::vector<std::string> metrics;
    std::vector<SweepRow> rows;
    std::vector<std::string> warnings;
};

const std::vector<std::string>& known_sweep_metrics();

/// One protocol run per grid point, lexicographic in (alpha, delta, lambda,
/// t). Points are independent and evaluated on a small worker pool; row
/// order is deterministic regardless of scheduling. Per-point failures are
/// recorded in the row and never abort the sweep. Empty or unknown metric
/// selections are ValidationErrors.
SweepTable sweep(const ProtocolConfig& base, const SweepGrid& grid,
                 const std::vector<std::string>& metrics);

}  // namespace ramancat

#endif  // RAMANCAT_PROTOCOL_HPP
