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

#include "ramancat/catgate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ramancat/bloch.hpp"

namespace ramancat {

namespace {

constexpr double kMaxCondition = 1e12;

// Condition number (1+s)/(1-s) of the 2x2 Gram matrix [[1, s], [s, 1]].
double gram_condition(Complex alpha) {
    const double s = std::exp(-2.0 * std::norm(alpha));
    if (s >= 1.0) return std::numeric_limits<double>::infinity();
    return (1.0 + s) / (1.0 - s);
}

void require_well_conditioned(Complex alpha) {
    const double cond = gram_condition(alpha);
    if (!(cond < kMaxCondition)) {
        std::ostringstream msg;
        msg << "cat basis at |alpha| = " << std::abs(alpha)
            << " is ill-conditioned (condition number " << cond << ")";
        throw IllConditionedBasisError(msg.str(), cond);
    }
}

}  // namespace

double CatQubit::gram_norm_sq() const {
    return std::norm(a) + std::norm(b) +
           2.0 * gram_overlap() * (std::conj(a) * b).real();
}

CatQubit hadamard_ideal(const CatQubit& q) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return {q.alpha, inv_sqrt2 * (q.a + q.b), inv_sqrt2 * (q.a - q.b)};
}

FieldState hadamard_literal(const FieldState& f, Complex alpha) {
    const FieldState minus = make_coherent(-alpha, f.n_max());
    const FieldState plus = make_coherent(alpha, f.n_max());
    const Complex p = inner(minus, f);
    const Complex q = inner(plus, f);
    FieldState out;
    out.amps = (p + q) * minus.amps + (p - q) * plus.amps;
    return out;
}

FieldState embed(const CatQubit& q, int n_max) {
    FieldState f;
    f.amps = q.a * make_coherent(-q.alpha, n_max).amps +
             q.b * make_coherent(q.alpha, n_max).amps;
    return f;
}

FieldState embed(const CatQubit& q) {
    return embed(q, default_cutoff(q.alpha));
}

Decomposition decompose(const FieldState& f, Complex alpha) {
    require_well_conditioned(alpha);
    const FieldState minus = make_coherent(-alpha, f.n_max());
    const FieldState plus = make_coherent(alpha, f.n_max());

    // Least squares against the truncated basis vectors: the numeric Gram
    // entries (norms slightly below 1, real overlap) make embed(decompose(f))
    // the exact in-span projection.
    const double nm = minus.norm_sq();
    const double np = plus.norm_sq();
    const double s = inner(minus, plus).real();
    const Complex p = inner(minus, f);
    const Complex q = inner(plus, f);
    const double det = nm * np - s * s;

    CatQubit cat;
    cat.alpha = alpha;
    cat.a = (np * p - s * q) / det;
    cat.b = (nm * q - s * p) / det;

    FieldState reconstructed = embed(cat, f.n_max());
    const double residual = (f.amps - reconstructed.amps).norm();
    return {cat, residual};
}

double gate_error(Complex alpha) {
    require_well_conditioned(alpha);
    const int n_max = default_cutoff(alpha);
    double worst = 0.0;
    for (const Qubit& point : bloch_grid_17()) {
        const CatQubit q{alpha, point.c_g, point.c_e};
        const FieldState literal = hadamard_literal(embed(q, n_max), alpha);
        const FieldState ideal = embed(hadamard_ideal(q), n_max);
        worst = std::max(worst, fidelity_defect(literal, ideal));
    }
    return worst;
}

}  // namespace ramancat
