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

#ifndef RAMANCAT_BLOCH_HPP
#define RAMANCAT_BLOCH_HPP

#include <cmath>
#include <vector>

#include "ramancat/fock.hpp"

namespace ramancat {

struct Qubit {
    Complex c_g;
    Complex c_e;
};

/// 17 qubits covering the Bloch sphere: both poles plus three parallels
/// (theta = pi/4, pi/2, 3pi/4) sampled at five azimuths. Parametrized as
/// c_g = cos(theta/2), c_e = sin(theta/2) exp(i phi).
inline std::vector<Qubit> bloch_grid_17() {
    std::vector<Qubit> grid;
    grid.reserve(17);
    grid.push_back({1.0, 0.0});
    grid.push_back({0.0, 1.0});
    const double pi = std::acos(-1.0);
    for (double theta : {pi / 4.0, pi / 2.0, 3.0 * pi / 4.0}) {
        for (int k = 0; k < 5; ++k) {
            const double phi = 2.0 * pi * k / 5.0;
            grid.push_back({std::cos(theta / 2.0),
                            std::polar(std::sin(theta / 2.0), phi)});
        }
    }
    return grid;
}

}  // namespace ramancat

#endif  // RAMANCAT_BLOCH_HPP
