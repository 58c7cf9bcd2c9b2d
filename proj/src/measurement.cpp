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

#include "ramancat/measurement.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace ramancat {

namespace {

constexpr double kImpossibleOutcome = 1e-15;
constexpr double kMaxFPopulation = 1e-6;

}  // namespace

const char* to_string(AtomLevel level) {
    switch (level) {
        case AtomLevel::g: return "g";
        case AtomLevel::e: return "e";
        case AtomLevel::f: return "f";
    }
    return "?";
}

Projection project_atom(const JointState& psi, AtomLevel level) {
    if (level != AtomLevel::g && level != AtomLevel::e)
        throw ValidationError("atomic detection level must be g or e");
    if (psi.atom_levels != 2 && psi.atom_levels != 3)
        throw ValidationError("projection expects a 2- or 3-level joint state");
    if (psi.atom_levels == 3) {
        const double f_pop = psi.level_population(2);
        if (f_pop >= kMaxFPopulation) {
            std::ostringstream msg;
            msg << "|f> population " << f_pop << " too large for a two-level projection";
            throw InvalidSubspaceError(msg.str());
        }
    }

    FieldState row = psi.atom_row(static_cast<int>(level));
    const double probability = row.norm_sq();
    if (probability < kImpossibleOutcome) {
        std::ostringstream msg;
        msg << "detection outcome " << to_string(level) << " has probability "
            << probability;
        throw ImpossibleOutcomeError(msg.str());
    }
    row.amps /= std::sqrt(probability);
    return {probability, row};
}

FieldState post_measurement_cat(Complex c_g, Complex c_e, Complex alpha,
                                AtomLevel outcome, std::optional<int> n_max) {
    if (outcome != AtomLevel::g && outcome != AtomLevel::e)
        throw ValidationError("detection outcome must be g or e");
    if (std::abs(std::norm(c_g) + std::norm(c_e) - 1.0) > 1e-9)
        throw ValidationError("input qubit must satisfy |c_g|^2 + |c_e|^2 = 1");
    const int cutoff = n_max.value_or(default_cutoff(alpha));
    const Complex c_plus = 0.5 * (c_e + c_g);
    const Complex c_minus = 0.5 * (c_e - c_g);
    const double sign = (outcome == AtomLevel::e) ? 1.0 : -1.0;

    FieldState cat;
    cat.amps = c_plus * make_coherent(-alpha, cutoff).amps +
               sign * c_minus * make_coherent(alpha, cutoff).amps;
    const double weight = cat.norm_sq();
    if (weight < kImpossibleOutcome) {
        std::ostringstream msg;
        msg << "post-measurement branch for outcome " << to_string(outcome)
            << " has probability " << weight;
        throw ImpossibleOutcomeError(msg.str());
    }
    cat.amps /= std::sqrt(weight);
    return cat;
}

AtomLevel sample_outcome(const JointState& psi, std::uint64_t seed) {
    const double pg = psi.atom_row(0).norm_sq() / psi.norm_sq();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    return unit(rng) < pg ? AtomLevel::g : AtomLevel::e;
}

}  // namespace ramancat
