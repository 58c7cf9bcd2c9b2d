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

// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exits non-zero if any fail.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ramancat/bloch.hpp"
#include "ramancat/protocol.hpp"

using namespace ramancat;

namespace {

const double kPi = std::acos(-1.0);

int failures = 0;

void report(int number, const std::string& title, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << title;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

void run_criterion(int number, const std::string& title,
                   const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [ok, detail] = body();
        report(number, title, ok, detail);
    } catch (const std::exception& e) {
        report(number, title, false, std::string("exception: ") + e.what());
    }
}

RamanParams preset_params(double alpha) {
    RamanParams p;
    p.lambda_coupling = 10.0;
    p.delta = 1e3;
    p.alpha = alpha;
    return p;
}

ProtocolConfig protocol_config(Complex c_g, Complex c_e, double alpha,
                               AtomLevel outcome) {
    ProtocolConfig cfg;
    cfg.c_g = c_g;
    cfg.c_e = c_e;
    cfg.params = preset_params(alpha);
    cfg.outcome = outcome;
    return cfg;
}

// 1. log10 |<alpha|-alpha>| = -2 alpha^2 / ln 10 for alpha = 2, 3, 5, 10,
//    within 1e-9, matching the quoted orders 1e-4, 1e-8, 1e-22, 1e-87.
std::pair<bool, std::string> overlap_table() {
    const double quoted[] = {-3.47, -7.82, -21.71, -86.86};
    const double alphas[] = {2.0, 3.0, 5.0, 10.0};
    std::ostringstream detail;
    for (int i = 0; i < 4; ++i) {
        const double got = coherent_overlap(alphas[i], -alphas[i]).log10_abs();
        const double expected = -2.0 * alphas[i] * alphas[i] / std::log(10.0);
        if (std::abs(got - expected) > 1e-9)
            return {false, "log10 overlap off the closed form at alpha = " +
                               std::to_string(alphas[i])};
        if (std::abs(got - quoted[i]) > 5e-3)
            return {false, "log10 overlap disagrees with the quoted order at alpha = " +
                               std::to_string(alphas[i])};
        detail << (i ? ", " : "") << got;
    }
    return {true, "log10 overlaps " + detail.str()};
}

// 2. Numeric effective-Hamiltonian evolution matches the closed form with
//    fidelity >= 1 - 1e-8 over 17 Bloch qubits and alpha in {1, 2, 3}.
std::pair<bool, std::string> closed_form_equivalence() {
    double worst = 0.0;
    for (double a : {1.0, 2.0, 3.0}) {
        RamanParams p = preset_params(a);
        const double t = kPi / (2.0 * std::abs(p.beta()));
        Operator h = effective_hamiltonian(p, default_cutoff(p.alpha));
        for (const Qubit& q : bloch_grid_17()) {
            JointState psi0 = evolve_closed_form(q.c_g, q.c_e, p, 0.0);
            JointState numeric = evolve_numeric(h, psi0, t);
            JointState closed = evolve_closed_form(q.c_g, q.c_e, p, t);
            worst = std::max(worst, fidelity_defect(FieldState{numeric.amps},
                                                    FieldState{closed.amps}));
        }
    }
    std::ostringstream detail;
    detail << "worst infidelity " << worst;
    return {worst <= 1e-8, detail.str()};
}

// 3. Evolving |g> and |e> to 2|beta|t = pi reproduces the even/odd cat
//    branch coefficients (+-1/2) within 1e-9, via the numeric propagator.
std::pair<bool, std::string> special_case_states() {
    RamanParams p = preset_params(2.0);
    const double t = kPi / (2.0 * std::abs(p.beta()));
    Operator h = effective_hamiltonian(p, default_cutoff(p.alpha));
    double worst = 0.0;
    const struct {
        Complex c_g, c_e;
        Complex expected_g[2];  // (|-a>, |a>) coefficients of the g branch
        Complex expected_e[2];
    } cases[] = {
        {1.0, 0.0, {0.5, 0.5}, {0.5, -0.5}},
        {0.0, 1.0, {0.5, -0.5}, {0.5, 0.5}},
    };
    for (const auto& c : cases) {
        JointState psi0 = evolve_closed_form(c.c_g, c.c_e, p, 0.0);
        JointState evolved = evolve_numeric(h, psi0, t);
        const Decomposition g_branch = decompose(evolved.atom_row(0), p.alpha);
        const Decomposition e_branch = decompose(evolved.atom_row(1), p.alpha);
        worst = std::max({worst, std::abs(g_branch.q.a - c.expected_g[0]),
                          std::abs(g_branch.q.b - c.expected_g[1]),
                          std::abs(e_branch.q.a - c.expected_e[0]),
                          std::abs(e_branch.q.b - c.expected_e[1]),
                          static_cast<double>(g_branch.residual),
                          static_cast<double>(e_branch.residual)});
    }
    std::ostringstream detail;
    detail << "worst branch-coefficient error " << worst;
    return {worst < 1e-9, detail.str()};
}

// 4. P(e) = (1 - exp(-2 alpha^2))/2 for the initial ground state, alpha in
//    {1, 2, 3}, reproduced by the numeric pipeline within 1e-9.
std::pair<bool, std::string> detection_probabilities() {
    double worst = 0.0;
    for (double a : {1.0, 2.0, 3.0}) {
        RamanParams p = preset_params(a);
        const double t = kPi / (2.0 * std::abs(p.beta()));
        Operator h = effective_hamiltonian(p, default_cutoff(p.alpha));
        JointState psi0 = evolve_closed_form(1.0, 0.0, p, 0.0);
        JointState evolved = evolve_numeric(h, psi0, t);
        const double expected = 0.5 * (1.0 - std::exp(-2.0 * a * a));
        worst = std::max(worst, std::abs(project_atom(evolved, AtomLevel::e).probability -
                                         expected));
    }
    std::ostringstream detail;
    detail << "worst probability error " << worst;
    return {worst < 1e-9, detail.str()};
}

// 5. End-to-end transfer fidelity >= 1 - 1e-6 at alpha = 3 and >= 1 - 1e-2
//    at alpha = 2 over 17 qubits and both outcomes, with strictly monotone
//    improvement over alpha in {1.5, 2, 3, 5}.
std::pair<bool, std::string> end_to_end_transfer() {
    const struct { double alpha; double tolerance; } stages[] = {{3.0, 1e-6}, {2.0, 1e-2}};
    double worst3 = 0.0;
    for (const auto& stage : stages) {
        double worst = 0.0;
        for (const Qubit& q : bloch_grid_17())
            for (AtomLevel outcome : {AtomLevel::g, AtomLevel::e}) {
                ProtocolResult r =
                    run_protocol(protocol_config(q.c_g, q.c_e, stage.alpha, outcome));
                worst = std::max(worst, r.target_infidelity);
            }
        if (stage.alpha == 3.0) worst3 = worst;
        if (worst > stage.tolerance) {
            std::ostringstream detail;
            detail << "worst infidelity " << worst << " at alpha = " << stage.alpha;
            return {false, detail.str()};
        }
    }
    double previous = 2.0;
    for (double a : {1.5, 2.0, 3.0, 5.0}) {
        ProtocolResult r = run_protocol(protocol_config(0.6, 0.8, a, AtomLevel::g));
        if (!(r.target_infidelity < previous)) {
            std::ostringstream detail;
            detail << "infidelity not strictly decreasing at alpha = " << a;
            return {false, detail.str()};
        }
        previous = r.target_infidelity;
    }
    std::ostringstream detail;
    detail << "worst infidelity at alpha = 3: " << worst3 << "; alpha trend strict";
    return {true, detail.str()};
}

// 6. Gate algebra: ideal involution exact to 1e-15; the literal coefficient
//    map equals [[1, 1], [1, -1]] within 1e-9 once the overlap is
//    negligible; gate_error(10) < 1e-12.
std::pair<bool, std::string> gate_algebra() {
    const CatQubit q{5.0, Complex(0.31, -0.44), Complex(-0.62, 0.2)};
    const CatQubit twice = hadamard_ideal(hadamard_ideal(q));
    if (std::abs(twice.a - q.a) > 1e-15 || std::abs(twice.b - q.b) > 1e-15)
        return {false, "ideal Hadamard is not an exact involution"};

    double worst_map = 0.0;
    const Complex samples[][2] = {{1.0, 0.0}, {0.0, 1.0}, {0.6, 0.8},
                                  {Complex(0.3, 0.5), Complex(-0.4, 0.1)}};
    for (const auto& ab : samples) {
        const CatQubit in{5.0, ab[0], ab[1]};
        const Decomposition d = decompose(hadamard_literal(embed(in), 5.0), 5.0);
        worst_map = std::max({worst_map, std::abs(d.q.a - (in.a + in.b)),
                              std::abs(d.q.b - (in.a - in.b))});
    }
    if (worst_map > 1e-9) {
        std::ostringstream detail;
        detail << "literal coefficient map error " << worst_map;
        return {false, detail.str()};
    }

    const double err10 = gate_error(10.0);
    if (!(err10 < 1e-12)) {
        std::ostringstream detail;
        detail << "gate_error(10) = " << err10;
        return {false, detail.str()};
    }
    std::ostringstream detail;
    detail << "coefficient-map error " << worst_map << ", gate_error(10) = " << err10;
    return {true, detail.str()};
}

// 7. Preset margins at alpha = 3, t = pi/(2|beta|): margin1 = 138.9 and
//    margin2 = 58.95 within 0.1%.
std::pair<bool, std::string> regime_margins() {
    RamanParams p = preset_params(3.0);
    const double t = default_interaction_time(p);
    const ValidityMargins m = check_validity(p, t);
    std::ostringstream detail;
    detail << "margin1 = " << m.margin1 << ", margin2 = " << m.margin2;
    const bool ok = std::abs(m.margin1 / 138.9 - 1.0) < 1e-3 &&
                    std::abs(m.margin2 / 58.95 - 1.0) < 1e-3;
    return {ok, detail.str()};
}

// 8. Effective-vs-full model at alpha = 2, n_max = 40: finite infidelity
//    that strictly decreases as delta is multiplied by 10 (with |beta| t
//    fixed); |f> leakage within an order of 1/margin1 at the preset.
std::pair<bool, std::string> model_comparison() {
    double previous = 1.0;
    std::ostringstream detail;
    for (double delta : {1e2, 1e3, 1e4}) {
        RamanParams p = preset_params(2.0);
        p.delta = delta;
        const double t = kPi / (2.0 * std::abs(p.beta()));
        const ModelDeviationReport r = compare_models(p, 0.6, 0.8, t, 40);
        if (!std::isfinite(r.infidelity) || r.infidelity <= 0.0)
            return {false, "infidelity not finite and positive"};
        if (!(r.infidelity < previous)) {
            std::ostringstream fail;
            fail << "infidelity did not decrease at delta = " << delta;
            return {false, fail.str()};
        }
        previous = r.infidelity;
        detail << "delta = " << delta << ": infidelity " << r.infidelity << "; ";
        if (delta == 1e3 && !(r.f_leakage < 10.0 / r.margin1)) {
            std::ostringstream fail;
            fail << "f leakage " << r.f_leakage << " above the 1/margin1 order "
                 << 10.0 / r.margin1;
            return {false, fail.str()};
        }
    }
    return {true, detail.str()};
}

// 9. Feasibility: the Hadamard gate time 1e-2 s fits the cavity lifetime
//    1e-1 s and the report covers all four preset alphas.
std::pair<bool, std::string> feasibility() {
    const FeasibilityReport rep = feasibility_report();
    if (rep.rows.size() != 4) return {false, "report does not cover the four alphas"};
    const double expected[] = {2.0, 3.0, 5.0, 10.0};
    for (int i = 0; i < 4; ++i) {
        if (rep.rows[i].alpha != expected[i]) return {false, "alpha rows out of order"};
        if (!rep.rows[i].within_cavity_lifetime)
            return {false, "interaction time exceeds the cavity lifetime"};
    }
    if (!rep.gate_within_lifetime)
        return {false, "gate time does not fit the cavity lifetime"};
    std::ostringstream detail;
    detail << "gate " << rep.hadamard_gate_time_s << " s < lifetime "
           << rep.cavity_lifetime_s << " s; interaction "
           << rep.rows[0].interaction_time_ms << " ms";
    return {true, detail.str()};
}

// 10. Identical CLI configs produce byte-identical CSV output twice in a row.
std::pair<bool, std::string> cli_determinism() {
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / ("ramancat_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const fs::path cfg_path = dir / "sweep.json";
    {
        std::ofstream cfg(cfg_path);
        cfg << R"({
  "qubit": {"c_g": 0.6, "c_e": 0.8},
  "params": {"lambda": 10.0, "delta": 1000.0, "alpha": 3.0},
  "grid": {"alpha": [2.0, 3.0, 5.0], "delta": [500.0, 1000.0]},
  "output": {"format": "csv"}
})";
    }
    auto run_once = [&](const fs::path& out) {
        const std::string command = std::string(RAMANCAT_CLI_BIN) + " sweep --config " +
                                    cfg_path.string() + " --out " + out.string() +
                                    " 2> /dev/null";
        const int status = std::system(command.c_str());
        return WIFEXITED(status) && WEXITSTATUS(status) == 0;
    };
    auto slurp = [](const fs::path& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    const fs::path out1 = dir / "a.csv";
    const fs::path out2 = dir / "b.csv";
    if (!run_once(out1) || !run_once(out2)) return {false, "CLI sweep did not exit 0"};
    const std::string first = slurp(out1);
    if (first.empty()) return {false, "CLI produced no output"};
    if (first != slurp(out2)) return {false, "outputs differ between runs"};
    std::ostringstream detail;
    detail << first.size() << " identical bytes across two runs";
    return {true, detail.str()};
}

}  // namespace

int main() {
    run_criterion(1, "coherent-state overlap table", overlap_table);
    run_criterion(2, "closed-form oracle equivalence", closed_form_equivalence);
    run_criterion(3, "even/odd cat branch structure", special_case_states);
    run_criterion(4, "post-measurement probabilities", detection_probabilities);
    run_criterion(5, "end-to-end coefficient transfer", end_to_end_transfer);
    run_criterion(6, "cat Hadamard gate algebra", gate_algebra);
    run_criterion(7, "large-detuning regime margins", regime_margins);
    run_criterion(8, "effective-vs-full model deviation", model_comparison);
    run_criterion(9, "experimental feasibility numbers", feasibility);
    run_criterion(10, "CLI output determinism", cli_determinism);

    if (failures == 0) {
        std::cout << "all 10 acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
