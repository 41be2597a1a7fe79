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

#include <mutex>
#include <utility>
#include <vector>

#include "ramastir/poly.hpp"
#include "ramastir/rat.hpp"

namespace ramastir::triangles {

using algebra::BigInt;
using algebra::Rat;

/// n!! with 0!! = (-1)!! = 1; n >= -1.
BigInt double_factorial(long n);

/// Ordinary binomial coefficient, zero outside 0 <= k <= n.
BigInt binomial_int(long n, long k);

/// Generalized binomial alpha(alpha-1)...(alpha-k+1)/k! for rational alpha.
Rat binomial_rat(const Rat& alpha, long k);

/// Half-integer column extension C(n, k-1/2) = (2n)!! / ((2k-1)!! (2n-2k-1)!!),
/// defined for 0 <= k <= n.
Rat binomial_half(long n, long k);

enum class TriangleKind {
    StirlingCycle,
    StirlingCycleStar,
    Eulerian2,
    Eulerian2Star,
    AssocCycleGe3,
    AssocSetGe3,
};

/// Lazily filled combinatorial triangle. Entries are exact; any integer k is
/// accepted and indices outside the support return exact zeros. Rows are
/// computed once under a lock and then immutable, so concurrent readers are
/// safe and never observe a partially filled row.
class Triangle {
  public:
    explicit Triangle(TriangleKind kind) : kind_(kind) {}

    TriangleKind kind() const { return kind_; }

    Rat at(long n, long k) const;

    /// Column range [k_min, k_max] worth displaying for row n (the support,
    /// clamped to k <= n for the star triangle whose support is unbounded).
    std::pair<long, long> display_range(long n) const;

  private:
    void ensure_rows(long n, long width) const;
    std::vector<Rat> make_row(long n, long width, const std::vector<Rat>* prev) const;

    TriangleKind kind_;
    mutable std::mutex mu_;
    // rows_[n][k - k_base(n)]; row widths grow on demand for the star kind.
    mutable std::vector<std::vector<Rat>> rows_;
};

/// Process-wide shared triangle of the given kind.
const Triangle& shared_triangle(TriangleKind kind);

Rat stirling_cycle(long n, long k);
Rat stirling_cycle_star(long n, long k);
Rat eulerian2(long n, long k);
Rat eulerian2_star(long n, long k);  // n >= 1

/// Numerator polynomial E_n of the rational function F_n = E_n/(x-1)^{2n}
/// generated by (x/(1-x) F_n)' = F_{n+1}, F_0 = 1. Its coefficients are the
/// row-n second-order Eulerian numbers, but computed purely by polynomial
/// arithmetic; the agreement is a checked identity, not an assumption.
algebra::Poly eulerian2_via_ratfun(long n);

enum class AssocKind { Cycle, Set };

/// 3-associated Stirling numbers: arrangements of n elements into k cycles
/// (resp. partitions into k sets) with every part of size >= 3.
Rat assoc_stirling(AssocKind kind, long n, long k);

enum class ATMode { Divide, Multiply };

/// Triangular difference array on 1, 1/2, 1/3, ...: row transitions are
/// a_{n+1,m} = (a_{n,m} - a_{n,m+1}) / (m+1)   (Divide)
/// a_{n+1,m} = (a_{n,m} - a_{n,m+1}) * (m+1)   (Multiply)
class ATArray {
  public:
    explicit ATArray(ATMode mode) : mode_(mode) {}
    ATMode mode() const { return mode_; }
    Rat at(long n, long m) const;

  private:
    void ensure(long n, long m) const;
    ATMode mode_;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<Rat>> rows_;
};

/// B_n with the B_1 = +1/2 convention (head column of the Multiply array).
Rat bernoulli(long n);

/// Head column of the Divide array.
Rat omega(long n);

}  // namespace ramastir::triangles
