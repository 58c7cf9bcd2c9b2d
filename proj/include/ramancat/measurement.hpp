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

#ifndef RAMANCAT_MEASUREMENT_HPP
#define RAMANCAT_MEASUREMENT_HPP

#include <cstdint>
#include <optional>

#include "ramancat/dynamics.hpp"

namespace ramancat {

enum class AtomLevel : int { g = 0, e = 1, f = 2 };

const char* to_string(AtomLevel level);

/// Result of a selective atomic detection: the outcome probability and the
/// renormalized field state conditioned on it.
struct Projection {
    double probability;
    FieldState field;
};

/// Projects a (normalized) joint state onto atomic level g or e. The
/// probability is the squared norm of the selected atomic row. A
/// three-level input is accepted only while its |f> population stays below
/// 1e-6 (InvalidSubspaceError otherwise); outcomes with probability below
/// 1e-15 raise ImpossibleOutcomeError.
Projection project_atom(const JointState& psi, AtomLevel level);

/// Analytic post-measurement cat state at the protocol time 2|beta|t = pi:
///   |phi+-> = c+ |-alpha> +- c- |alpha>   (+ for outcome e, - for g),
/// returned normalized. c+- = (c_e +- c_g)/2; the input qubit must be
/// normalized within 1e-9.
FieldState post_measurement_cat(Complex c_g, Complex c_e, Complex alpha,
                                AtomLevel outcome,
                                std::optional<int> n_max = {});

/// Seeded sampling helper for Monte Carlo runs: draws g or e with the Born
/// probabilities of `psi`. Detection in the protocol itself is always
/// selective (the caller picks the outcome); this is never used there.
AtomLevel sample_outcome(const JointState& psi, std::uint64_t seed);

}  // namespace ramancat

#endif  // RAMANCAT_MEASUREMENT_HPP
