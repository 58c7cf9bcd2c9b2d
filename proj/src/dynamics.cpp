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

#include "ramancat/dynamics.hpp"

#include <cmath>
#include <sstream>

namespace ramancat {

namespace {

constexpr int kLevelG = 0;
constexpr int kLevelE = 1;
constexpr int kLevelF = 2;

void check_hermitian(const Operator& h) {
    const double scale = std::max(1.0, h.mat.cwiseAbs().maxCoeff());
    const double defect = (h.mat - h.mat.adjoint()).cwiseAbs().maxCoeff();
    if (defect > 1e-10 * scale)
        throw ValidationError("evolve_numeric requires a Hermitian operator");
}

// One spectral propagation pass: psi advanced by `steps` equal steps of
// exp(-i h dt), with the per-step phases applied in the eigenbasis.
Eigen::VectorXcd propagate(const Eigen::MatrixXcd& eigenvectors,
                           const Eigen::VectorXd& eigenvalues,
                           const Eigen::VectorXcd& psi0, double t, int steps) {
    const double dt = t / steps;
    Eigen::VectorXcd y = eigenvectors.adjoint() * psi0;
    Eigen::VectorXcd step_phase(eigenvalues.size());
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
        step_phase[i] = std::polar(1.0, -eigenvalues[i] * dt);
    for (int s = 0; s < steps; ++s) y = y.cwiseProduct(step_phase);
    return eigenvectors * y;
}

}  // namespace

void RamanParams::validate() const {
    if (delta == 0.0 || !std::isfinite(delta))
        throw ValidationError("detuning delta must be finite and non-zero");
    if (!std::isfinite(lambda_coupling))
        throw ValidationError("coupling lambda must be finite");
    if (!std::isfinite(beta()))
        throw ValidationError("effective coupling beta = -lambda^2/delta is not finite");
    if (omega0 && omega_f && omega) {
        const double mismatch = *omega_f - *omega0 - (delta + *omega);
        if (std::abs(mismatch) > 1e-9) {
            std::ostringstream msg;
            msg << "resonance relation omega_f - omega0 = delta + omega violated by "
                << mismatch << " kHz";
            throw ValidationError(msg.str());
        }
    }
}

FieldState JointState::atom_row(int level) const {
    FieldState f;
    f.amps = amps.segment(level * (n_max() + 1), n_max() + 1);
    return f;
}

double JointState::level_population(int level) const {
    return amps.segment(level * (n_max() + 1), n_max() + 1).squaredNorm();
}

Operator effective_hamiltonian(const RamanParams& p, int n_max) {
    p.validate();
    if (n_max < 0) throw ValidationError("cutoff must be non-negative");
    const int block = n_max + 1;
    Operator h{2, n_max, Eigen::MatrixXcd::Zero(2 * block, 2 * block)};
    const double beta = p.beta();
    for (int n = 0; n <= n_max; ++n) {
        const double v = beta * n;
        h.mat(kLevelG * block + n, kLevelG * block + n) = v;
        h.mat(kLevelE * block + n, kLevelE * block + n) = v;
        h.mat(kLevelG * block + n, kLevelE * block + n) = v;
        h.mat(kLevelE * block + n, kLevelG * block + n) = v;
    }
    return h;
}

Operator full_hamiltonian(const RamanParams& p, int n_max) {
    p.validate();
    if (n_max < 0) throw ValidationError("cutoff must be non-negative");
    const int block = n_max + 1;
    Operator h{3, n_max, Eigen::MatrixXcd::Zero(3 * block, 3 * block)};
    for (int n = 0; n <= n_max; ++n)
        h.mat(kLevelF * block + n, kLevelF * block + n) = p.delta;
    // lambda [ a (|f><g| + |f><e|) + a^dag (|g><f| + |e><f|) ];
    // <f, n-1| H |g, n> = lambda sqrt(n).
    for (int n = 1; n <= n_max; ++n) {
        const double v = p.lambda_coupling * std::sqrt(static_cast<double>(n));
        for (int lower : {kLevelG, kLevelE}) {
            h.mat(kLevelF * block + (n - 1), lower * block + n) = v;
            h.mat(lower * block + n, kLevelF * block + (n - 1)) = v;
        }
    }
    return h;
}

JointState evolve_closed_form(Complex c_g, Complex c_e, const RamanParams& p,
                              double t, std::optional<int> n_max) {
    p.validate();
    if (std::abs(std::norm(c_g) + std::norm(c_e) - 1.0) > 1e-9)
        throw ValidationError("input qubit must satisfy |c_g|^2 + |c_e|^2 = 1");
    const int cutoff = n_max.value_or(default_cutoff(p.alpha));
    const Complex rotated = std::polar(1.0, -2.0 * p.beta() * t) * p.alpha;
    const FieldState moving = make_coherent(rotated, cutoff);
    const FieldState still = make_coherent(p.alpha, cutoff);
    const Complex c_plus = 0.5 * (c_e + c_g);
    const Complex c_minus = 0.5 * (c_e - c_g);

    JointState psi;
    psi.atom_levels = 2;
    psi.amps = Eigen::VectorXcd(2 * (cutoff + 1));
    psi.amps.segment(0, cutoff + 1) = c_plus * moving.amps - c_minus * still.amps;
    psi.amps.segment(cutoff + 1, cutoff + 1) = c_plus * moving.amps + c_minus * still.amps;
    return psi;
}

JointState evolve_numeric(const Operator& h, const JointState& psi0, double t,
                          int steps) {
    if (steps < 1) throw ValidationError("evolve_numeric needs steps >= 1");
    if (!std::isfinite(t)) throw ValidationError("evolution time must be finite");
    if (h.dim() != psi0.dim() || h.atom_levels != psi0.atom_levels)
        throw DimensionError("operator and state dimensions do not match");
    check_hermitian(h);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.mat);
    if (es.info() != Eigen::Success)
        throw NumericalError("eigendecomposition of the Hamiltonian failed");

    JointState out = psi0;
    out.amps = propagate(es.eigenvectors(), es.eigenvalues(), psi0.amps, t, steps);
    const Eigen::VectorXcd refined =
        propagate(es.eigenvectors(), es.eigenvalues(), psi0.amps, t, 2 * steps);
    const double step_change = (refined - out.amps).norm();
    if (step_change >= 1e-9) {
        std::ostringstream msg;
        msg << "time stepping did not converge: halving dt moved the state by "
            << step_change;
        throw ConvergenceError(msg.str());
    }
    out.amps = refined;
    return out;
}

ModelDeviationReport compare_models(const RamanParams& p, Complex c_g, Complex c_e,
                                    double t, std::optional<int> n_max) {
    p.validate();
    if (t <= 0.0) throw ValidationError("comparison time must be positive");
    // The full model scatters population across neighbouring photon numbers,
    // so pad the coherent-state cutoff a little.
    const int cutoff = n_max.value_or(default_cutoff(p.alpha) + 10);
    const int block = cutoff + 1;

    JointState eff0 = evolve_closed_form(c_g, c_e, p, 0.0, cutoff);
    Operator h_eff = effective_hamiltonian(p, cutoff);
    JointState eff = evolve_numeric(h_eff, eff0, t);

    JointState full0;
    full0.atom_levels = 3;
    full0.amps = Eigen::VectorXcd::Zero(3 * block);
    full0.amps.segment(0, 2 * block) = eff0.amps;
    Operator h_full = full_hamiltonian(p, cutoff);
    JointState full = evolve_numeric(h_full, full0, t);

    // Direct overlap of the zero-|f> embedding against the full state; the
    // leaked |f> population is reported on its own.
    const Complex overlap = eff.amps.dot(full.amps.segment(0, 2 * block));
    ModelDeviationReport report;
    const double alpha_sq = std::norm(p.alpha);
    const double lam_sq = p.lambda_coupling * p.lambda_coupling;
    report.margin1 = p.delta * p.delta / (2.0 * 4.0 * lam_sq * alpha_sq);
    report.margin2 =
        3.0 * std::pow(std::abs(p.delta), 3) / (4.0 * lam_sq * lam_sq * alpha_sq * alpha_sq) / t;
    report.infidelity = std::clamp(1.0 - std::norm(overlap), 0.0, 1.0);
    report.f_leakage = full.level_population(2);
    return report;
}

}  // namespace ramancat
