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

#include "ramastir/triangles.hpp"

#include <algorithm>

namespace ramastir::triangles {

BigInt double_factorial(long n) {
    if (n < -1) throw std::domain_error("double_factorial: argument must be >= -1");
    BigInt r = 1;
    for (long v = n; v >= 2; v -= 2) r *= v;
    return r;
}

BigInt binomial_int(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rat binomial_rat(const Rat& alpha, long k) {
    if (k < 0) throw std::domain_error("binomial_rat: negative k");
    Rat r(1);
    for (long j = 0; j < k; ++j) r *= alpha - Rat(j);
    return r / Rat(algebra::factorial(k));
}

Rat binomial_half(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("binomial_half: requires 0 <= k <= n");
    return Rat(double_factorial(2 * n)) / Rat(double_factorial(2 * k - 1) * double_factorial(2 * n - 2 * k - 1));
}

namespace {

// Column index of the first stored entry of row n.
long k_base(TriangleKind kind) {
    return kind == TriangleKind::Eulerian2Star ? -1 : 0;
}

long first_row(TriangleKind kind) {
    return kind == TriangleKind::Eulerian2Star ? 1 : 0;
}

// Rows of every kind except StirlingCycleStar have a fixed width; the star
// triangle extends arbitrarily far to the right and grows on demand.
long natural_width(TriangleKind kind, long n) {
    switch (kind) {
        case TriangleKind::StirlingCycle:
        case TriangleKind::Eulerian2:
            return n + 1;
        case TriangleKind::Eulerian2Star:
            return std::max<long>(n, 1);  // k = -1 .. n-2
        case TriangleKind::AssocCycleGe3:
        case TriangleKind::AssocSetGe3:
            return n / 3 + 1;
        case TriangleKind::StirlingCycleStar:
            return -1;
    }
    return -1;
}

Rat assoc_stream_coeff(TriangleKind kind, long j) {
    if (j < 3) return Rat(0);
    if (kind == TriangleKind::AssocCycleGe3) return Rat(1, j);
    return Rat(BigInt(1), algebra::factorial(j));
}

}  // namespace

Rat Triangle::at(long n, long k) const {
    if (n < first_row(kind_)) throw std::domain_error("Triangle::at: row index below the first defined row");
    long width;
    switch (kind_) {
        case TriangleKind::AssocCycleGe3:
            return k < 0 ? Rat(0) : assoc_stirling(AssocKind::Cycle, n, k);
        case TriangleKind::AssocSetGe3:
            return k < 0 ? Rat(0) : assoc_stirling(AssocKind::Set, n, k);
        case TriangleKind::StirlingCycle:
        case TriangleKind::Eulerian2:
        case TriangleKind::Eulerian2Star:
            width = natural_width(kind_, n);
            if (k < k_base(kind_) || k >= k_base(kind_) + width) return Rat(0);
            break;
        case TriangleKind::StirlingCycleStar:
            if (k <= (n >= 1 ? 1 : 0)) return Rat(0);  // row 0 vanishes for k <= 0, rows n >= 1 for k <= 1
            width = k + 1;
            break;
    }
    std::lock_guard<std::mutex> lock(mu_);
    ensure_rows(n, width);
    return rows_[static_cast<size_t>(n - first_row(kind_))][static_cast<size_t>(k - k_base(kind_))];
}

std::pair<long, long> Triangle::display_range(long n) const {
    switch (kind_) {
        case TriangleKind::StirlingCycle:
        case TriangleKind::Eulerian2:
            return {0, n};
        case TriangleKind::StirlingCycleStar:
            return {2, n};
        case TriangleKind::Eulerian2Star:
            return {-1, n - 2};
        case TriangleKind::AssocCycleGe3:
        case TriangleKind::AssocSetGe3:
            return {0, n / 3};
    }
    return {0, -1};
}

void Triangle::ensure_rows(long n, long width) const {
    size_t need_rows = static_cast<size_t>(n - first_row(kind_)) + 1;
    long fixed = natural_width(kind_, n);
    if (rows_.size() >= need_rows && fixed >= 0) return;
    if (rows_.size() >= need_rows && static_cast<long>(rows_[need_rows - 1].size()) >= width) return;
    // (Re)build bottom-up so each row sees a wide-enough predecessor. For the
    // star kind row n needs row n-1 up to the same column.
    std::vector<std::vector<Rat>> fresh;
    fresh.reserve(std::max(need_rows, rows_.size()));
    size_t total_rows = std::max(need_rows, rows_.size());
    for (size_t i = 0; i < total_rows; ++i) {
        long row_n = first_row(kind_) + static_cast<long>(i);
        long w = natural_width(kind_, row_n);
        if (w < 0) {
            w = std::max<long>(width, rows_.size() > i ? static_cast<long>(rows_[i].size()) : 0);
        }
        if (rows_.size() > i && static_cast<long>(rows_[i].size()) >= w) {
            fresh.push_back(std::move(rows_[i]));
            continue;
        }
        const std::vector<Rat>* prev = i == 0 ? nullptr : &fresh[i - 1];
        fresh.push_back(make_row(row_n, w, prev));
    }
    rows_ = std::move(fresh);
}

std::vector<Rat> Triangle::make_row(long n, long width, const std::vector<Rat>* prev) const {
    std::vector<Rat> row(static_cast<size_t>(width));
    auto prev_at = [&](long k) -> Rat {
        long idx = k - k_base(kind_);
        if (!prev || idx < 0 || idx >= static_cast<long>(prev->size())) return Rat(0);
        return (*prev)[static_cast<size_t>(idx)];
    };
    switch (kind_) {
        case TriangleKind::StirlingCycle:
            if (n == 0) {
                row[0] = Rat(1);
            } else {
                for (long k = 0; k < width; ++k) row[static_cast<size_t>(k)] = prev_at(k - 1) + Rat(n - 1) * prev_at(k);
            }
            break;
        case TriangleKind::StirlingCycleStar:
            if (n == 0) {
                // Row 0 of the star triangle is the alternating omega sequence.
                for (long k = 1; k < width; ++k)
                    row[static_cast<size_t>(k)] = (k % 2 == 1 ? omega(k) : -omega(k));
            } else {
                for (long k = 0; k < width; ++k) row[static_cast<size_t>(k)] = prev_at(k - 1) + Rat(n - 1) * prev_at(k);
            }
            break;
        case TriangleKind::Eulerian2:
        case TriangleKind::Eulerian2Star: {
            long base = k_base(kind_);
            if (n == first_row(kind_)) {
                // Eulerian2 starts at <<0,0>> = 1, the star variant at <<1,-1>> = 1.
                row[0] = Rat(1);
            } else {
                for (long i = 0; i < width; ++i) {
                    long k = base + i;
                    row[static_cast<size_t>(i)] =
                        Rat(k + 1) * prev_at(k) + Rat(2 * (n - 1) + 1 - k) * prev_at(k - 1);
                }
            }
            break;
        }
        case TriangleKind::AssocCycleGe3:
        case TriangleKind::AssocSetGe3:
            // never reached: at() routes these kinds to the power-sum table
            break;
    }
    return row;
}

namespace {

// Dynamic program for [x^n] (sum_{j>=3} a_j x^j)^k shared by both 3-associated
// kinds; table[n][k], with k <= n/3.
class AssocTable {
  public:
    explicit AssocTable(TriangleKind kind) : kind_(kind) {}

    Rat value(long n, long k) {
        if (n < 0 || k < 0) return Rat(0);
        if (k == 0) return Rat(n == 0 ? 1 : 0);
        if (n < 3 * k) return Rat(0);
        std::lock_guard<std::mutex> lock(mu_);
        ensure(n);
        Rat a = power_[static_cast<size_t>(n)][static_cast<size_t>(k)];
        return Rat(algebra::factorial(n)) / Rat(algebra::factorial(k)) * a;
    }

  private:
    void ensure(long n) {
        for (long m = static_cast<long>(power_.size()); m <= n; ++m) {
            std::vector<Rat> row(static_cast<size_t>(m / 3) + 1);
            if (m == 0) row[0] = Rat(1);
            for (long k = 1; k <= m / 3; ++k) {
                Rat acc(0);
                for (long j = 3; j <= m - 3 * (k - 1); ++j) {
                    const auto& prev = power_[static_cast<size_t>(m - j)];
                    if (k - 1 < static_cast<long>(prev.size()))
                        acc += assoc_stream_coeff(kind_, j) * prev[static_cast<size_t>(k - 1)];
                }
                row[static_cast<size_t>(k)] = std::move(acc);
            }
            power_.push_back(std::move(row));
        }
    }

    TriangleKind kind_;
    std::mutex mu_;
    std::vector<std::vector<Rat>> power_;
};

AssocTable& assoc_table(TriangleKind kind) {
    static AssocTable cycle(TriangleKind::AssocCycleGe3);
    static AssocTable set(TriangleKind::AssocSetGe3);
    return kind == TriangleKind::AssocCycleGe3 ? cycle : set;
}

}  // namespace

const Triangle& shared_triangle(TriangleKind kind) {
    static Triangle stirling(TriangleKind::StirlingCycle);
    static Triangle stirling_star(TriangleKind::StirlingCycleStar);
    static Triangle eulerian(TriangleKind::Eulerian2);
    static Triangle eulerian_star(TriangleKind::Eulerian2Star);
    static Triangle assoc_cycle(TriangleKind::AssocCycleGe3);
    static Triangle assoc_set(TriangleKind::AssocSetGe3);
    switch (kind) {
        case TriangleKind::StirlingCycle: return stirling;
        case TriangleKind::StirlingCycleStar: return stirling_star;
        case TriangleKind::Eulerian2: return eulerian;
        case TriangleKind::Eulerian2Star: return eulerian_star;
        case TriangleKind::AssocCycleGe3: return assoc_cycle;
        case TriangleKind::AssocSetGe3: return assoc_set;
    }
    throw std::invalid_argument("shared_triangle: unknown kind");
}

Rat stirling_cycle(long n, long k) { return shared_triangle(TriangleKind::StirlingCycle).at(n, k); }
Rat stirling_cycle_star(long n, long k) { return shared_triangle(TriangleKind::StirlingCycleStar).at(n, k); }
Rat eulerian2(long n, long k) { return shared_triangle(TriangleKind::Eulerian2).at(n, k); }

Rat eulerian2_star(long n, long k) {
    if (n < 1) throw std::domain_error("eulerian2_star: undefined for n = 0");
    return shared_triangle(TriangleKind::Eulerian2Star).at(n, k);
}

Rat assoc_stirling(AssocKind kind, long n, long k) {
    if (n < 0 || k < 0) throw std::domain_error("assoc_stirling: negative index");
    return assoc_table(kind == AssocKind::Cycle ? TriangleKind::AssocCycleGe3 : TriangleKind::AssocSetGe3)
        .value(n, k);
}

algebra::Poly eulerian2_via_ratfun(long n) {
    if (n < 0) throw std::domain_error("eulerian2_via_ratfun: negative row");
    // E_{n+1} = (2n+1) x E_n - (x-1)(E_n + x E_n'), from differentiating
    // x/(1-x) * E_n/(x-1)^{2n} and collecting over (x-1)^{2n+2}.
    algebra::Poly e = algebra::Poly::constant(Rat(1));
    algebra::Poly x = algebra::Poly::x();
    algebra::Poly x_minus_1 = x - algebra::Poly::constant(Rat(1));
    for (long m = 0; m < n; ++m) {
        e = Rat(2 * m + 1) * (x * e) - x_minus_1 * (e + x * e.derivative());
    }
    return e;
}

Rat ATArray::at(long n, long m) const {
    if (n < 0 || m < 0) throw std::domain_error("ATArray::at: negative index");
    std::lock_guard<std::mutex> lock(mu_);
    ensure(n, m);
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(m)];
}

void ATArray::ensure(long n, long m) const {
    // Row r must be m + (n - r) + 1 entries wide to support entry (n, m).
    long width0 = n + m + 1;
    if (rows_.empty() || static_cast<long>(rows_[0].size()) < width0 ||
        static_cast<long>(rows_.size()) <= n) {
        std::vector<std::vector<Rat>> fresh;
        long total = std::max<long>(n + 1, static_cast<long>(rows_.size()));
        long head_width = std::max<long>(width0, rows_.empty() ? 0 : static_cast<long>(rows_[0].size()));
        for (long r = 0; r <= total - 1; ++r) {
            long w = head_width - r;
            std::vector<Rat> row(static_cast<size_t>(std::max<long>(w, 1)));
            if (r == 0) {
                for (long j = 0; j < static_cast<long>(row.size()); ++j) row[static_cast<size_t>(j)] = Rat(1, j + 1);
            } else {
                const auto& prev = fresh[static_cast<size_t>(r - 1)];
                for (long j = 0; j + 1 < static_cast<long>(prev.size()); ++j) {
                    Rat diff = prev[static_cast<size_t>(j)] - prev[static_cast<size_t>(j + 1)];
                    row[static_cast<size_t>(j)] =
                        mode_ == ATMode::Divide ? diff / Rat(j + 1) : diff * Rat(j + 1);
                }
            }
            fresh.push_back(std::move(row));
        }
        rows_ = std::move(fresh);
    }
}

Rat bernoulli(long n) {
    if (n < 0) throw std::domain_error("bernoulli: negative index");
    static ATArray table(ATMode::Multiply);
    return table.at(n, 0);
}

Rat omega(long n) {
    if (n < 0) throw std::domain_error("omega: negative index");
    static ATArray table(ATMode::Divide);
    return table.at(n, 0);
}

}  // namespace ramastir::triangles
