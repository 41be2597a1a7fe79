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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramastir/rat.hpp"
#include "ramastir/sequences.hpp"

namespace ramastir::verifier {

using algebra::Rat;

/// Value source used by the checks. By default it forwards to the sequence
/// library; individual gamma values can be overridden, which exists so tests
/// can prove the registry actually notices corrupted inputs.
struct SequencePool {
    std::map<int, Rat> gamma_override;

    Rat gamma(int r) const;
    Rat rho_hat(int r) const;
    Rat rho(int r) const;
    Rat tau(int r) const;
    /// Triangular solve of sum_j psi_j gamma_{r-j} = tau_r through this pool,
    /// so an overridden gamma propagates into psi.
    Rat psi(int r) const;
};

struct CheckFailure {
    long index = 0;        // least failing outer index
    std::string where;     // sub-coordinates, e.g. "n=5 k=3"
    std::string lhs;       // exact rendered value
    std::string rhs;
};

struct IdentityCheck {
    std::string id;
    std::string description;
    int default_range;
    std::function<std::optional<CheckFailure>(int max_index, const SequencePool&)> run;
};

struct CheckReport {
    std::string id;
    std::string description;
    int range = 0;
    bool passed = false;
    std::optional<CheckFailure> failure;
    double seconds = 0.0;
};

/// All registered identity checks, ordered by id.
const std::vector<IdentityCheck>& registry();

bool has_check(const std::string& id);

/// Runs one check; max_index < 0 selects the check's default range.
CheckReport run_check(const std::string& id, int max_index = -1, const SequencePool& pool = {});

/// Runs every check in registry order.
std::vector<CheckReport> run_all(int max_index = -1, const SequencePool& pool = {});

}  // namespace ramastir::verifier
