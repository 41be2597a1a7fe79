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

#include "ramastir/power_series.hpp"

#include <numeric>

namespace ramastir::algebra {

namespace {

PowerSeries<Rat> stream_series(long order, const CoeffStream& a) {
    PowerSeries<Rat> s(static_cast<int>(order));
    for (long j = 1; j <= order; ++j) s.set(static_cast<int>(j), a(j));
    return s;
}

}  // namespace

Rat demoivre(long n, long k, const CoeffStream& a) {
    if (n < 0 || k < 0) throw std::domain_error("demoivre: negative index");
    if (n < k) return Rat(0);
    if (k == 0) return Rat(n == 0 ? 1 : 0);
    PowerSeries<Rat> s = stream_series(n, a);
    return pow(s, k).at(static_cast<int>(n));
}

std::vector<Rat> demoivre_row(long n, long k_max, const CoeffStream& a) {
    if (n < 0 || k_max < 0) throw std::domain_error("demoivre_row: negative index");
    std::vector<Rat> row(static_cast<size_t>(k_max) + 1);
    row[0] = Rat(n == 0 ? 1 : 0);
    if (n == 0) return row;  // [x^0] of a positive power of a zero-constant series is 0
    PowerSeries<Rat> s = stream_series(n, a);
    PowerSeries<Rat> p = PowerSeries<Rat>::one(static_cast<int>(n));
    for (long k = 1; k <= std::min(k_max, n); ++k) {
        p = p * s;
        row[static_cast<size_t>(k)] = p.at(static_cast<int>(n));
    }
    return row;
}

namespace {

void multinomial_walk(long n, long k, long max_part, long part, std::vector<long>& counts, const CoeffStream& a,
                      Rat& total) {
    if (part > max_part) {
        if (n != 0 || k != 0) return;
        Rat term(multinomial(std::accumulate(counts.begin(), counts.end(), 0L), counts));
        for (long j = 1; j <= max_part; ++j) {
            long c = counts[static_cast<size_t>(j - 1)];
            if (c > 0) term *= a(j).pow(c);
        }
        total += term;
        return;
    }
    for (long c = 0; c * part <= n && c <= k; ++c) {
        counts[static_cast<size_t>(part - 1)] = c;
        multinomial_walk(n - c * part, k - c, max_part, part + 1, counts, a, total);
    }
    counts[static_cast<size_t>(part - 1)] = 0;
}

}  // namespace

Rat demoivre_multinomial(long n, long k, const CoeffStream& a) {
    if (n < 0 || k < 0) throw std::domain_error("demoivre_multinomial: negative index");
    if (n < k) return Rat(0);
    if (k == 0) return Rat(n == 0 ? 1 : 0);
    long max_part = n - k + 1;
    std::vector<long> counts(static_cast<size_t>(max_part), 0);
    Rat total(0);
    multinomial_walk(n, k, max_part, 1, counts, a, total);
    return total;
}

}  // namespace ramastir::algebra
