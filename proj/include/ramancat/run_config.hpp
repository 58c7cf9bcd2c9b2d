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

#ifndef RAMANCAT_RUN_CONFIG_HPP
#define RAMANCAT_RUN_CONFIG_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "ramancat/protocol.hpp"

namespace ramancat {

struct OutputOptions {
    std::string format = "json";  // "json" | "csv"
    std::string path;             // empty: stdout
    int precision = 9;            // digits after the decimal in CSV numbers
};

/// Parsed and validated CLI configuration. The *_defaulted flags record
/// which values nobody chose explicitly, so reports can echo the effective
/// configuration.
struct RunConfig {
    ProtocolConfig protocol;
    SweepGrid grid;
    std::vector<std::string> metrics;  // empty: command-specific default
    OutputOptions output;

    bool qubit_defaulted = true;
    bool outcome_defaulted = true;
    bool t_defaulted = true;
    bool n_max_defaulted = true;
};

/// Complex values in config files are either plain numbers or [re, im].
Complex parse_complex(const nlohmann::json& j, const std::string& context);

/// Schema validation rejects unknown keys at every level and throws
/// ValidationError with the offending path.
RunConfig parse_run_config(const nlohmann::json& j);

/// Loads and parses a JSON config file; a missing or malformed file is a
/// ValidationError.
RunConfig load_run_config(const std::string& path);

/// Safety cap on the Fock-space dimension from the RAMANSIM_NMAX_CAP
/// environment variable. Throws ValidationError when `needed` exceeds the
/// cap (or the variable does not parse).
void enforce_nmax_cap(int needed);

}  // namespace ramancat

#endif  // RAMANCAT_RUN_CONFIG_HPP
