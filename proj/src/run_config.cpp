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

#include "ramancat/run_config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ramancat {

namespace {

using nlohmann::json;

void require_known_keys(const json& obj, const std::string& context,
                        std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) known = true;
        if (!known)
            throw ValidationError("unknown config key \"" + context + item.key() + "\"");
    }
}

double require_number(const json& j, const std::string& context) {
    if (!j.is_number())
        throw ValidationError("config value \"" + context + "\" must be a number");
    return j.get<double>();
}

std::vector<double> require_number_array(const json& j, const std::string& context) {
    if (!j.is_array())
        throw ValidationError("config value \"" + context + "\" must be an array of numbers");
    std::vector<double> values;
    values.reserve(j.size());
    for (const auto& item : j) values.push_back(require_number(item, context));
    return values;
}

}  // namespace

Complex parse_complex(const json& j, const std::string& context) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return Complex(j[0].get<double>(), j[1].get<double>());
    throw ValidationError("config value \"" + context +
                          "\" must be a number or a [re, im] pair");
}

RunConfig parse_run_config(const json& j) {
    if (!j.is_object()) throw ValidationError("config root must be a JSON object");
    require_known_keys(j, "", {"qubit", "params", "outcome", "gate", "t", "n_max",
                               "with_full_model", "grid", "metrics", "output"});
    RunConfig cfg;

    if (j.contains("qubit")) {
        const json& q = j.at("qubit");
        if (!q.is_object()) throw ValidationError("config value \"qubit\" must be an object");
        require_known_keys(q, "qubit.", {"c_g", "c_e"});
        if (!q.contains("c_g") || !q.contains("c_e"))
            throw ValidationError("config \"qubit\" needs both c_g and c_e");
        cfg.protocol.c_g = parse_complex(q.at("c_g"), "qubit.c_g");
        cfg.protocol.c_e = parse_complex(q.at("c_e"), "qubit.c_e");
        cfg.qubit_defaulted = false;
    }

    if (j.contains("params")) {
        const json& p = j.at("params");
        if (!p.is_object()) throw ValidationError("config value \"params\" must be an object");
        require_known_keys(p, "params.",
                           {"lambda", "delta", "alpha", "omega0", "omega_f", "omega"});
        if (p.contains("lambda"))
            cfg.protocol.params.lambda_coupling = require_number(p.at("lambda"), "params.lambda");
        if (p.contains("delta"))
            cfg.protocol.params.delta = require_number(p.at("delta"), "params.delta");
        if (p.contains("alpha"))
            cfg.protocol.params.alpha = parse_complex(p.at("alpha"), "params.alpha");
        if (p.contains("omega0"))
            cfg.protocol.params.omega0 = require_number(p.at("omega0"), "params.omega0");
        if (p.contains("omega_f"))
            cfg.protocol.params.omega_f = require_number(p.at("omega_f"), "params.omega_f");
        if (p.contains("omega"))
            cfg.protocol.params.omega = require_number(p.at("omega"), "params.omega");
    }

    if (j.contains("outcome")) {
        const std::string outcome = j.at("outcome").is_string()
                                        ? j.at("outcome").get<std::string>()
                                        : std::string();
        if (outcome == "g")
            cfg.protocol.outcome = AtomLevel::g;
        else if (outcome == "e")
            cfg.protocol.outcome = AtomLevel::e;
        else
            throw ValidationError("config value \"outcome\" must be \"g\" or \"e\"");
        cfg.outcome_defaulted = false;
    }

    if (j.contains("gate")) {
        const std::string gate =
            j.at("gate").is_string() ? j.at("gate").get<std::string>() : std::string();
        if (gate == "literal")
            cfg.protocol.gate = GateMode::literal;
        else if (gate == "ideal")
            cfg.protocol.gate = GateMode::ideal;
        else
            throw ValidationError("config value \"gate\" must be \"literal\" or \"ideal\"");
    }

    if (j.contains("t")) {
        cfg.protocol.t_override = require_number(j.at("t"), "t");
        cfg.t_defaulted = false;
    }

    if (j.contains("n_max")) {
        if (!j.at("n_max").is_number_integer())
            throw ValidationError("config value \"n_max\" must be an integer");
        const long long n = j.at("n_max").get<long long>();
        if (n < 0) throw ValidationError("config value \"n_max\" must be non-negative");
        cfg.protocol.n_max = static_cast<int>(n);
        cfg.n_max_defaulted = false;
    }

    if (j.contains("with_full_model")) {
        if (!j.at("with_full_model").is_boolean())
            throw ValidationError("config value \"with_full_model\" must be a boolean");
        cfg.protocol.with_full_model = j.at("with_full_model").get<bool>();
    }

    if (j.contains("grid")) {
        const json& g = j.at("grid");
        if (!g.is_object()) throw ValidationError("config value \"grid\" must be an object");
        require_known_keys(g, "grid.", {"alpha", "delta", "lambda", "t"});
        if (g.contains("alpha")) cfg.grid.alphas = require_number_array(g.at("alpha"), "grid.alpha");
        if (g.contains("delta")) cfg.grid.deltas = require_number_array(g.at("delta"), "grid.delta");
        if (g.contains("lambda"))
            cfg.grid.lambdas = require_number_array(g.at("lambda"), "grid.lambda");
        if (g.contains("t")) cfg.grid.ts = require_number_array(g.at("t"), "grid.t");
    }

    if (j.contains("metrics")) {
        if (!j.at("metrics").is_array())
            throw ValidationError("config value \"metrics\" must be an array of strings");
        for (const auto& item : j.at("metrics")) {
            if (!item.is_string())
                throw ValidationError("config value \"metrics\" must be an array of strings");
            cfg.metrics.push_back(item.get<std::string>());
        }
    }

    if (j.contains("output")) {
        const json& o = j.at("output");
        if (!o.is_object()) throw ValidationError("config value \"output\" must be an object");
        require_known_keys(o, "output.", {"format", "path", "precision"});
        if (o.contains("format")) {
            const std::string format =
                o.at("format").is_string() ? o.at("format").get<std::string>() : std::string();
            if (format != "json" && format != "csv")
                throw ValidationError("config value \"output.format\" must be \"csv\" or \"json\"");
            cfg.output.format = format;
        }
        if (o.contains("path")) {
            if (!o.at("path").is_string())
                throw ValidationError("config value \"output.path\" must be a string");
            cfg.output.path = o.at("path").get<std::string>();
        }
        if (o.contains("precision")) {
            if (!o.at("precision").is_number_integer())
                throw ValidationError("config value \"output.precision\" must be an integer");
            const long long p = o.at("precision").get<long long>();
            if (p < 0 || p > 17)
                throw ValidationError("config value \"output.precision\" must be in [0, 17]");
            cfg.output.precision = static_cast<int>(p);
        }
    }

    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("config file not found or unreadable: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("config file " + path + " is not valid JSON: " + e.what());
    }
    return parse_run_config(j);
}

void enforce_nmax_cap(int needed) {
    const char* raw = std::getenv("RAMANSIM_NMAX_CAP");
    if (raw == nullptr || *raw == '\0') return;
    char* end = nullptr;
    const long cap = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || cap < 0)
        throw ValidationError(std::string("RAMANSIM_NMAX_CAP is not a non-negative integer: ") +
                              raw);
    if (needed > cap) {
        std::ostringstream msg;
        msg << "required cutoff n_max = " << needed << " exceeds RAMANSIM_NMAX_CAP = " << cap;
        throw ValidationError(msg.str());
    }
}

}  // namespace ramancat
