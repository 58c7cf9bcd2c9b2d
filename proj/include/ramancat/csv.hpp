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

#ifndef RAMANCAT_CSV_HPP
#define RAMANCAT_CSV_HPP

#include <string>
#include <vector>

namespace ramancat::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// RFC-4180-style quoting: fields containing commas, quotes or line breaks
/// are wrapped in double quotes with embedded quotes doubled.
std::string escape(const std::string& field);

/// Scientific notation with `precision` digits after the decimal point,
/// C locale ('.' separator) regardless of the process locale.
std::string format_number(double value, int precision);

/// Serializes with '\n' line endings. emit(parse(emit(t))) == emit(t).
std::string emit(const Table& table);

/// Parses quoted and unquoted fields; accepts '\n' and '\r\n' row breaks.
Table parse(const std::string& text);

}  // namespace ramancat::csv

#endif  // RAMANCAT_CSV_HPP
