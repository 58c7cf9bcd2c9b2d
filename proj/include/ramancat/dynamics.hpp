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

#ifndef RAMANCAT_DYNAMICS_HPP
#define RAMANCAT_DYNAMICS_HPP

#include <optional>

#include "ramancat/fock.hpp"

namespace ramancat {

// Unit convention: frequencies and couplings in kHz, times in ms, so every
// phase omega*t is dimensionless. beta() is negative for delta > 0; the
// protocol time "pi/(2 beta)" is therefore realized as pi/(2|beta|), which
// gives exp(-2i beta t) = -1 for either sign of delta.

/// Physical parameters of the degenerate Raman coupling.
struct RamanParams {
    double lambda_coupling = 10.0;  // lower->upper transition coupling, kHz
    double delta = 1e3;             // detuning, kHz
    Complex alpha{3.0, 0.0};        // initial coherent amplitude

    // Optional absolute frequencies (kHz). Inert except for the resonance
    // consistency check omega_f - omega0 = delta + omega.
    std::optional<double> omega0;
    std::optional<double> omega_f;
    std::optional<double> omega;

    /// Effective atom-field coupling beta = -lambda^2 / delta, kHz.
    double beta() const { return -lambda_coupling * lambda_coupling / delta; }

    /// Throws ValidationError on delta = 0 or an inconsistent frequency set.
    void validate() const;
};

/// Dense operator on the joint atom (x) field space, level-major:
/// index(level, n) = level * (n_max + 1) + n.
struct Operator {
    int atom_levels = 2;
    int n_max = 0;
    Eigen::MatrixXcd mat;

    int dim() const { return static_cast<int>(mat.rows()); }
};

/// Joint atom (x) field state with the same level-major indexing.
/// Levels: 0 = g, 1 = e (and 2 = f for three-level states).
struct JointState {
    int atom_levels = 2;
    Eigen::VectorXcd amps;

    int n_max() const { return static_cast<int>(amps.size()) / atom_levels - 1; }
    int dim() const { return static_cast<int>(amps.size()); }
    Complex& amp(int level, int n) { return amps[level * (n_max() + 1) + n]; }
    Complex amp(int level, int n) const { return amps[level * (n_max() + 1) + n]; }
    double norm_sq() const { return amps.squaredNorm(); }
    /// Field amplitudes conditioned on (not renormalized) one atomic level.
    FieldState atom_row(int level) const;
    double level_population(int level) const;
};

/// Effective two-level Hamiltonian with Stark shifts,
///   H = n_hat beta (|g><g| + |e><e|) + n_hat beta (|e><g| + |g><e|).
/// Block-diagonal in photon number; block n has eigenvalues {0, 2 n beta}.
Operator effective_hamiltonian(const RamanParams& p, int n_max);

/// Reconstructed rotating-frame three-level Lambda Hamiltonian,
///   H = delta |f><f| + lambda [a (|f><g| + |f><e|) + h.c.].
/// The underlying microscopic model is quoted, not printed, by the
/// literature this follows; this is the standard reconstruction whose
/// adiabatic elimination at large delta reproduces effective_hamiltonian.
/// Conserves total excitation number n_hat + |f><f|.
Operator full_hamiltonian(const RamanParams& p, int n_max);

/// Closed-form evolution of (c_g|g> + c_e|e>) |alpha> under the effective
/// Hamiltonian:
///   |psi(t)> = (c+ |a'> - c- |alpha>)|g> + (c+ |a'> + c- |alpha>)|e>,
/// with c+- = (c_e +- c_g)/2 and a' = exp(-2i beta t) alpha.
/// The input qubit must be normalized within 1e-9.
JointState evolve_closed_form(Complex c_g, Complex c_e, const RamanParams& p,
                              double t, std::optional<int> n_max = {});

/// Fixed-step unitary propagation exp(-i h t) psi0 via the spectral
/// decomposition of h, applied one step at a time. The result is checked
/// against a run with doubled step count; a difference above 1e-9 in norm
/// raises ConvergenceError. Throws ValidationError for non-Hermitian h,
/// mismatched dimensions, or steps < 1.
JointState evolve_numeric(const Operator& h, const JointState& psi0, double t,
                          int steps = 64);

/// Deviation of the effective two-level model from the full three-level one.
struct ModelDeviationReport {
    double margin1;     // delta^2 / (2 |2 lambda alpha|^2)
    double margin2;     // [3 delta^3 / (4 |lambda alpha|^4)] / t
    double infidelity;  // 1 - |<psi_eff (embedded) | psi_full>|^2
    double f_leakage;   // |f> population of the full-model state at t
};

/// Evolves the same initial qubit (x) |alpha> under both Hamiltonians for a
/// time t (the two-level state embedded with zero |f> amplitude) and reports
/// the direct-overlap infidelity, the leaked |f> population, and the
/// large-detuning validity margins.
ModelDeviationReport compare_models(const RamanParams& p, Complex c_g,
                                    Complex c_e, double t,
                                    std::optional<int> n_max = {});

}  // namespace ramancat

#endif  // RAMANCAT_DYNAMICS_HPP
