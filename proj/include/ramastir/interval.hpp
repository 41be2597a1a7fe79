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

#include <string>

#include "ramastir/rat.hpp"

namespace ramastir::numeric {

using algebra::Rat;

/// Closed interval with rational endpoints. Endpoint arithmetic is exact, so
/// combining enclosures yields enclosures with no rounding step anywhere.
struct RatInterval {
    Rat lo;
    Rat hi;

    RatInterval() = default;
    RatInterval(Rat point) : lo(point), hi(std::move(point)) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo) throw std::domain_error("RatInterval: lo > hi");
    }

    Rat width() const { return hi - lo; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }

    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
RatInterval operator/(const RatInterval& a, const RatInterval& b);  // 0 not in b
RatInterval abs(const RatInterval& a);

/// Enclosure of e^n of width <= eps, from the exact Taylor partial sum with a
/// geometric tail bound (summation continues past k = 2n so the term ratio
/// stays below 1/2 and the tail is at most twice the next term).
RatInterval exp_nat(long n, const Rat& eps);

/// Enclosure of pi via arctangent series with alternating-tail bounds.
RatInterval pi_interval(const Rat& eps);

/// Enclosure of sqrt(q) for rational q >= 0, width <= eps; exact for perfect
/// squares of rationals.
RatInterval sqrt_interval(const Rat& q, const Rat& eps);

/// Outward square root of an interval with nonnegative lower endpoint.
RatInterval sqrt_interval(const RatInterval& x, const Rat& eps);

/// Enclosure of theta_n, defined through the exact partial sum of e^n:
/// theta_n = (e^n/2 - sum_{k<n} n^k/k!) n!/n^n. Width <= eps.
RatInterval theta_exact(long n, const Rat& eps);

/// Enclosure of n! e^n / (sqrt(2 pi n) n^n), the ratio whose expansion has
/// the Stirling series coefficients. Width <= eps.
RatInterval stirling_ratio(long n, const Rat& eps);

enum class ExpansionTarget { Stirling, Theta };

enum class ExpansionVerdict { Pass, Fail, Undecided };

struct ExpansionReport {
    ExpansionTarget target;
    long n = 0;
    int terms = 0;               // number of series terms summed (R)
    RatInterval error;           // enclosure of |exact - partial sum|
    Rat bound;                   // 2 |coef_R| n^{-R}
    Rat eps;                     // working precision actually used
    ExpansionVerdict verdict = ExpansionVerdict::Undecided;
};

/// Compares the exact (enclosed) value against the partial sum of the first R
/// expansion terms and tests |exact - partial| <= 2 |coef_R| n^{-R}. Refines
/// the working precision a few times before giving up as Undecided.
ExpansionReport validate_expansion(ExpansionTarget target, long n, int terms, const Rat& eps);

/// Accepts "p/q", plain integers, and integer-mantissa scientific notation
/// such as "1e-40".
std::optional<Rat> parse_eps(const std::string& text);

}  // namespace ramastir::numeric
