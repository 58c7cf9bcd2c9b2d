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

#ifndef RAMANCAT_FOCK_HPP
#define RAMANCAT_FOCK_HPP

#include <complex>

#include <Eigen/Dense>

#include "ramancat/errors.hpp"

namespace ramancat {

using Complex = std::complex<double>;

/// Single-mode cavity field over a truncated Fock basis.
///
/// amps[n] is the amplitude of the n-photon number state; the cutoff
/// n_max() is inclusive, so the vector has n_max()+1 entries.
struct FieldState {
    Eigen::VectorXcd amps;

    int n_max() const { return static_cast<int>(amps.size()) - 1; }
    double norm_sq() const { return amps.squaredNorm(); }
    double mean_photon_number() const;
};

/// Cutoff rule n_max = ceil(|alpha|^2 + 13 max(|alpha|, 1)). Keeps the
/// Poisson tail of a coherent state below 1e-12 for |alpha| <= 10 (the
/// worst tail, 8e-14, sits near |alpha| = 1; a margin factor of 10 would
/// leak up to 3e-10 there).
int default_cutoff(Complex alpha);

/// Coherent state |alpha>: c_n = exp(-|alpha|^2/2) alpha^n / sqrt(n!).
/// No factorial is ever materialized, so cutoffs beyond n = 150 cannot
/// overflow. Throws TruncationError if the cutoff leaves more than 1e-6
/// of the norm outside the basis.
FieldState make_coherent(Complex alpha, int n_max);
FieldState make_coherent(Complex alpha);

/// <f|g>, conjugate-linear in the first argument.
Complex inner(const FieldState& f, const FieldState& g);

/// Analytic coherent-state overlap
///   <alpha|beta> = exp(-|alpha|^2/2 - |beta|^2/2 + conj(alpha) beta).
/// log_abs carries the magnitude in the log domain; overlaps of order
/// 1e-87 (alpha = 10 against -10) underflow `value` but not log_abs.
struct CoherentOverlap {
    Complex value;
    double log_abs;  // ln |<alpha|beta>|

    double log10_abs() const;
};

CoherentOverlap coherent_overlap(Complex alpha, Complex beta);

/// exp(-i theta n_hat): multiplies amplitude n by exp(-i theta n), which
/// sends |alpha> to |exp(-i theta) alpha>. Norm is preserved exactly.
FieldState apply_number_phase(const FieldState& f, double theta);

/// F = |<f|g>|^2 / (||f||^2 ||g||^2), in [0, 1]. Invariant under scaling
/// of either argument; throws DegenerateStateError on zero-norm input.
double fidelity(const FieldState& f, const FieldState& g);

/// 1 - fidelity, computed from the orthogonal residual of f against g so
/// that defects far below machine epsilon of 1 are still resolved
/// (fidelity() would round them to exactly 0).
double fidelity_defect(const FieldState& f, const FieldState& g);

}  // namespace ramancat

#endif  // RAMANCAT_FOCK_HPP
