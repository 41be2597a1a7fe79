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

#include "ramastir/render.hpp"

#include <json.hpp>
#include <ostream>
#include <sstream>

namespace ramastir::render {

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records) {
    for (const auto& r : records) {
        out << r.n;
        if (r.k) out << ',' << *r.k;
        out << ',' << r.value;
        if (r.method) out << ',' << *r.method;
        out << '\n';
    }
}

void write_json(std::ostream& out, const std::vector<OutputRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json obj;
        obj["n"] = r.n;
        if (r.k) obj["k"] = *r.k;
        obj["value"] = r.value;
        if (r.method) obj["method"] = *r.method;
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

std::optional<std::vector<OutputRecord>> parse_csv(const std::string& text, bool with_k) {
    std::vector<OutputRecord> records;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        size_t start = 0;
        while (true) {
            size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        size_t want = with_k ? 3 : 2;
        if (fields.size() < want) return std::nullopt;
        OutputRecord r;
        try {
            r.n = std::stol(fields[0]);
            if (with_k) r.k = std::stol(fields[1]);
        } catch (const std::exception&) {
            return std::nullopt;
        }
        r.value = fields[want - 1];
        if (fields.size() > want) r.method = fields[want];
        records.push_back(std::move(r));
    }
    return records;
}

std::optional<std::vector<OutputRecord>> parse_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text, nullptr, false);
    if (arr.is_discarded() || !arr.is_array()) return std::nullopt;
    std::vector<OutputRecord> records;
    for (const auto& obj : arr) {
        if (!obj.contains("n") || !obj.contains("value")) return std::nullopt;
        OutputRecord r;
        r.n = obj["n"].get<long>();
        if (obj.contains("k")) r.k = obj["k"].get<long>();
        r.value = obj["value"].get<std::string>();
        if (obj.contains("method")) r.method = obj["method"].get<std::string>();
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace ramastir::render
