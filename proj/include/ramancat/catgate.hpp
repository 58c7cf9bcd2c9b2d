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

#ifndef RAMANCAT_CATGATE_HPP
#define RAMANCAT_CATGATE_HPP

#include "ramancat/fock.hpp"

namespace ramancat {

/// Logical qubit in the ordered non-orthogonal basis (|-alpha>, |alpha>):
/// index 0 is |-alpha> with coefficient a, index 1 is |alpha> with
/// coefficient b. The basis vectors are unit but not orthogonal; their
/// overlap <-alpha|alpha> = exp(-2|alpha|^2) is real for every complex
/// alpha, since conj(-alpha)*alpha = -|alpha|^2.
struct CatQubit {
    Complex alpha;
    Complex a;  // coefficient of |-alpha>
    Complex b;  // coefficient of |alpha>

    /// Gram overlap s = exp(-2|alpha|^2).
    double gram_overlap() const { return std::exp(-2.0 * std::norm(alpha)); }

    /// Physical squared norm |a|^2 + |b|^2 + 2 s Re(conj(a) b).
    double gram_norm_sq() const;
};

/// Coefficient-level Hadamard (1/sqrt 2) [[1, 1], [1, -1]] on (a, b).
/// Exact involution.
CatQubit hadamard_ideal(const CatQubit& q);

/// Literal outer-product Hadamard with exact coherent-state bras and the
/// sqrt(2) dropped:
///   h_c = |-a><-a| - |a><a| + |a><-a| + |-a><a|,
///   h_c f = |-alpha>(<-alpha|f> + <alpha|f>) + |alpha>(<-alpha|f> - <alpha|f>).
/// The output is NOT normalized (the operator as written is not unitary).
/// On a cat qubit (a, b) it acts as (a, b) -> ((a+b)(1+s), (a-b)(1-s)); the
/// (1 +- s) factors vanish only in the negligible-overlap limit.
FieldState hadamard_literal(const FieldState& f, Complex alpha);

/// a |-alpha> + b |alpha> as a Fock vector.
FieldState embed(const CatQubit& q, int n_max);
FieldState embed(const CatQubit& q);

struct Decomposition {
    CatQubit q;
    double residual;  // ||f - embed(q)||, the component outside the cat span
};

/// Least-squares coefficients of f in (|-alpha>, |alpha>): solves the 2x2
/// Gram system G (a, b)^T = (<-alpha|f>, <alpha|f>)^T with the numeric Gram
/// overlap of the truncated basis vectors. Raises IllConditionedBasisError
/// (carrying the condition number (1+s)/(1-s)) when it reaches 1e12, which
/// happens only for |alpha| of order 1e-6 and below.
Decomposition decompose(const FieldState& f, Complex alpha);

/// Worst case over a 17-point Bloch grid of cat qubits of the fidelity
/// defect between the normalized literal-gate output and the ideal-gate
/// target. Decays like s^2, so it vanishes in the large-|alpha| limit.
double gate_error(Complex alpha);

}  // namespace ramancat

#endif  // RAMANCAT_CATGATE_HPP
