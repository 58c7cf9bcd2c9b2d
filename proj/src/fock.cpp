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

#include "ramancat/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ramancat {

double FieldState::mean_photon_number() const {
    const double nsq = norm_sq();
    if (nsq <= 0.0) throw DegenerateStateError("mean photon number of a zero-norm state");
    double acc = 0.0;
    for (int n = 0; n <= n_max(); ++n) acc += n * std::norm(amps[n]);
    return acc / nsq;
}

int default_cutoff(Complex alpha) {
    const double a = std::abs(alpha);
    return static_cast<int>(std::ceil(a * a + 13.0 * std::max(a, 1.0)));
}

FieldState make_coherent(Complex alpha, int n_max) {
    if (n_max < 0) throw ValidationError("coherent-state cutoff must be non-negative");
    FieldState f;
    f.amps = Eigen::VectorXcd::Zero(n_max + 1);
    const double a2 = std::norm(alpha);
    if (a2 == 0.0) {
        f.amps[0] = 1.0;
        return f;
    }
    if (a2 <= 600.0) {
        // c_n = c_{n-1} alpha / sqrt(n): stays exactly real for real alpha
        // and never materializes a factorial.
        Complex c = std::exp(-0.5 * a2);
        f.amps[0] = c;
        for (int n = 1; n <= n_max; ++n) {
            c *= alpha / std::sqrt(static_cast<double>(n));
            f.amps[n] = c;
        }
    } else {
        // The recurrence seed exp(-|a|^2/2) would underflow here; assemble
        // the amplitudes in the log domain instead (lgamma(n+1) = log n!).
        const double log_a = std::log(std::abs(alpha));
        const double phase = std::arg(alpha);
        for (int n = 0; n <= n_max; ++n) {
            const double log_mag = -0.5 * a2 + n * log_a - 0.5 * std::lgamma(n + 1.0);
            f.amps[n] = std::polar(std::exp(log_mag), phase * n);
        }
    }
    const double leakage = 1.0 - f.norm_sq();
    if (leakage > 1e-6) {
        std::ostringstream msg;
        msg << "cutoff n_max = " << n_max << " truncates |alpha| = " << std::abs(alpha)
            << " with leakage " << leakage;
        throw TruncationError(msg.str(), leakage);
    }
    return f;
}

FieldState make_coherent(Complex alpha) {
    return make_coherent(alpha, default_cutoff(alpha));
}

Complex inner(const FieldState& f, const FieldState& g) {
    if (f.amps.size() != g.amps.size()) {
        std::ostringstream msg;
        msg << "inner product of mismatched cutoffs " << f.n_max() << " and " << g.n_max();
        throw DimensionError(msg.str());
    }
    return f.amps.dot(g.amps);  // Eigen conjugates the first factor
}

double CoherentOverlap::log10_abs() const {
    return log_abs / std::log(10.0);
}

CoherentOverlap coherent_overlap(Complex alpha, Complex beta) {
    const Complex exponent =
        -0.5 * std::norm(alpha) - 0.5 * std::norm(beta) + std::conj(alpha) * beta;
    return {std::exp(exponent), exponent.real()};
}

FieldState apply_number_phase(const FieldState& f, double theta) {
    if (!std::isfinite(theta)) throw ValidationError("number-phase angle must be finite");
    FieldState out;
    out.amps = f.amps;
    for (int n = 0; n <= out.n_max(); ++n)
        out.amps[n] *= std::polar(1.0, -theta * n);
    return out;
}

double fidelity(const FieldState& f, const FieldState& g) {
    const double nf = f.norm_sq();
    const double ng = g.norm_sq();
    if (nf <= 0.0 || ng <= 0.0)
        throw DegenerateStateError("fidelity of a zero-norm state");
    const double raw = std::norm(inner(f, g)) / (nf * ng);
    return std::clamp(raw, 0.0, 1.0);
}

double fidelity_defect(const FieldState& f, const FieldState& g) {
    const double nf = f.amps.norm();
    const double ng = g.amps.norm();
    if (nf <= 0.0 || ng <= 0.0)
        throw DegenerateStateError("fidelity of a zero-norm state");
    if (f.amps.size() != g.amps.size())
        throw DimensionError("fidelity of states with mismatched cutoffs");
    const Eigen::VectorXcd u = f.amps / nf;
    const Eigen::VectorXcd v = g.amps / ng;
    // ||u - v <v|u>||^2 = 1 - |<v|u>|^2, with no cancellation of tiny defects.
    const Eigen::VectorXcd r = u - v * v.dot(u);
    return std::clamp(r.squaredNorm(), 0.0, 1.0);
}

}  // namespace ramancat
