/*
   Copyright 2026 The ramastir authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ramastir/rat.hpp"
#include "ramastir/sqrt2rat.hpp"

namespace ramastir::render {

/// One emitted table entry. Values are rendered losslessly: "p/q" for
/// rationals (bare integer when q = 1) and "a+b*sqrt2" for quadratic values.
struct OutputRecord {
    long n = 0;
    std::optional<long> k;
    std::string value;
    std::optional<std::string> method;
};

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records);
void write_json(std::ostream& out, const std::vector<OutputRecord>& records);

/// Parses lines of the write_csv output back into records.
std::optional<std::vector<OutputRecord>> parse_csv(const std::string& text, bool with_k);

/// Parses the write_json output back into records.
std::optional<std::vector<OutputRecord>> parse_json(const std::string& text);

}  // namespace ramastir::render
