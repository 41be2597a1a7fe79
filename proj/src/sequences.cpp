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

#include "ramastir/sequences.hpp"

#include <array>
#include <mutex>
#include <vector>

#include "ramastir/triangles.hpp"

namespace ramastir::sequences {

using algebra::BigInt;
using algebra::CoeffStream;
using algebra::demoivre_row;
using triangles::binomial_int;
using triangles::binomial_rat;
using triangles::double_factorial;

namespace {

Rat sign_pow(long k) { return Rat((k % 2 + 2) % 2 == 0 ? 1 : -1); }

const CoeffStream& reciprocal_stream() {
    static CoeffStream s = [](long j) { return Rat(1, j + 2); };
    return s;
}

const CoeffStream& factorial_reciprocal_stream() {
    static CoeffStream s = [](long j) { return Rat(BigInt(1), algebra::factorial(j + 2)); };
    return s;
}

// Odd-position stream B_2/(2*1), 0, B_4/(4*3), 0, ... feeding the log-series
// exponentiation formula.
const CoeffStream& log_gamma_stream() {
    static CoeffStream s = [](long j) {
        if (j % 2 == 0) return Rat(0);
        return triangles::bernoulli(j + 1) / Rat((j + 1) * j);
    };
    return s;
}

// Grow-only cache of a rational sequence; compute(i) may use lower indices of
// the vector being built.
class RatSeqCache {
  public:
    template <typename F>
    Rat get(int i, F&& compute) {
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<int>(v_.size()) <= i) v_.push_back(compute(static_cast<int>(v_.size()), v_));
        return v_[static_cast<size_t>(i)];
    }

  private:
    std::mutex mu_;
    std::vector<Rat> v_;
};

PowerSeries<Rat> build_S(int order) {
    PowerSeries<Rat> s(order);
    for (int j = 1; j <= order; ++j) s.set(j, Rat(1, j + 2));
    return s;
}

// Cached prefix of a series rebuilt whenever a larger order is requested.
class SeriesCache {
  public:
    template <typename F>
    PowerSeries<Rat> get(int order, F&& build) {
        std::lock_guard<std::mutex> lock(mu_);
        if (!s_ || s_->order() < order) s_.emplace(build(order));
        return s_->truncated(order);
    }

  private:
    std::mutex mu_;
    std::optional<PowerSeries<Rat>> s_;
};

SeriesCache& v_cache() {
    static SeriesCache c;
    return c;
}

SeriesCache& v_star_cache() {
    static SeriesCache c;
    return c;
}

// c_0, c_1, ... by the quadratic recurrence; the canonical cached route.
// Returns a copy: the vector may reallocate under later growth.
Sqrt2Rat c_recurrence(int n) {
    static std::mutex mu;
    static std::vector<Sqrt2Rat> c = {Sqrt2Rat(1), Sqrt2Rat::sqrt2()};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(c.size()) <= n) {
        // c_{m+1} = sqrt2/(m+2) c_m - sqrt2/4 sum_{j=2..m} c_j c_{m+2-j}
        long m = static_cast<long>(c.size()) - 1;
        Sqrt2Rat acc(0);
        for (long j = 2; j <= m; ++j) acc += c[static_cast<size_t>(j)] * c[static_cast<size_t>(m + 2 - j)];
        Sqrt2Rat next = Sqrt2Rat(Rat(0), Rat(1, m + 2)) * c[static_cast<size_t>(m)] -
                        Sqrt2Rat(Rat(0), Rat(1, 4)) * acc;
        c.push_back(next);
    }
    return c[static_cast<size_t>(n)];
}

Sqrt2Rat c_reversion(int n) {
    if (n == 0) return Sqrt2Rat(1);
    // c_j = (sqrt2)^j (-1)^{j-1} [x^{j-1}] V*
    PowerSeries<Rat> vs = series_V_star(n - 1);
    Rat v = vs.at(n - 1);
    if (n % 2 == 0) v = -v;
    return Sqrt2Rat::sqrt2_pow(n) * Sqrt2Rat(v);
}

}  // namespace

PowerSeries<Rat> series_S(int order) { return build_S(order); }

PowerSeries<Rat> series_V(int order) {
    return v_cache().get(order, [](int n) {
        PowerSeries<Rat> base = PowerSeries<Rat>::one(n) + Rat(2) * build_S(n);
        return pow(base, Rat(1, 2));
    });
}

PowerSeries<Rat> series_V_star(int order) {
    return v_star_cache().get(order, [](int n) {
        PowerSeries<Rat> v = series_V(n);
        PowerSeries<Rat> xv(n + 1);
        xv.set(0, Rat(0));
        for (int i = 0; i <= n; ++i) xv.set(i + 1, v.at(i));
        return revert(xv).shifted_down(1);
    });
}

std::span<const GammaMethod> gamma_methods() {
    static constexpr std::array<GammaMethod, 10> m = {
        GammaMethod::WrenchRecurrence, GammaMethod::DeMoivreBinomial, GammaMethod::PerronDeMoivre,
        GammaMethod::BrassescoDeMoivre, GammaMethod::AssocCycle, GammaMethod::AssocSet,
        GammaMethod::ExpOfLog, GammaMethod::FromC, GammaMethod::VPower, GammaMethod::VStarCoeff};
    return m;
}

std::span<const RhoMethod> rho_methods() {
    static constexpr std::array<RhoMethod, 9> m = {
        RhoMethod::DeMoivreBinomial, RhoMethod::PerronDeMoivre, RhoMethod::BrassescoDeMoivre,
        RhoMethod::AssocCycle, RhoMethod::AssocSet, RhoMethod::AlphaStarRecurrence,
        RhoMethod::FromC, RhoMethod::VPower, RhoMethod::VStarCoeff};
    return m;
}

std::span<const TauMethod> tau_methods() {
    static constexpr std::array<TauMethod, 4> m = {TauMethod::DeMoivreBinomial, TauMethod::VPower,
                                                   TauMethod::VStarLogDeriv, TauMethod::FromC};
    return m;
}

std::span<const AlphaMethod> alpha_methods() {
    static constexpr std::array<AlphaMethod, 3> m = {AlphaMethod::DoubleSum, AlphaMethod::Eulerian,
                                                     AlphaMethod::Bernoulli};
    return m;
}

std::span<const AlphaStarMethod> alpha_star_methods() {
    static constexpr std::array<AlphaStarMethod, 3> m = {
        AlphaStarMethod::DoubleSum, AlphaStarMethod::EulerianStar, AlphaStarMethod::EulerianPlain};
    return m;
}

std::span<const BetaMethod> beta_methods() {
    static constexpr std::array<BetaMethod, 2> m = {BetaMethod::DoubleSum, BetaMethod::Eulerian};
    return m;
}

std::span<const CMethod> c_methods() {
    static constexpr std::array<CMethod, 2> m = {CMethod::Recurrence, CMethod::Reversion};
    return m;
}

std::string method_name(GammaMethod m) {
    switch (m) {
        case GammaMethod::WrenchRecurrence: return "wrench_recurrence";
        case GammaMethod::DeMoivreBinomial: return "demoivre_binomial";
        case GammaMethod::PerronDeMoivre: return "perron_demoivre";
        case GammaMethod::BrassescoDeMoivre: return "brassesco_demoivre";
        case GammaMethod::AssocCycle: return "assoc_cycle";
        case GammaMethod::AssocSet: return "assoc_set";
        case GammaMethod::ExpOfLog: return "exp_of_log";
        case GammaMethod::FromC: return "from_c";
        case GammaMethod::VPower: return "v_power";
        case GammaMethod::VStarCoeff: return "v_star_coeff";
    }
    return "?";
}

std::string method_name(RhoMethod m) {
    switch (m) {
        case RhoMethod::DeMoivreBinomial: return "demoivre_binomial";
        case RhoMethod::PerronDeMoivre: return "perron_demoivre";
        case RhoMethod::BrassescoDeMoivre: return "brassesco_demoivre";
        case RhoMethod::AssocCycle: return "assoc_cycle";
        case RhoMethod::AssocSet: return "assoc_set";
        case RhoMethod::AlphaStarRecurrence: return "alpha_star_recurrence";
        case RhoMethod::FromC: return "from_c";
        case RhoMethod::VPower: return "v_power";
        case RhoMethod::VStarCoeff: return "v_star_coeff";
    }
    return "?";
}

std::string method_name(TauMethod m) {
    switch (m) {
        case TauMethod::DeMoivreBinomial: return "demoivre_binomial";
        case TauMethod::VPower: return "v_power";
        case TauMethod::VStarLogDeriv: return "v_star_log_deriv";
        case TauMethod::FromC: return "from_c";
    }
    return "?";
}

std::string method_name(AlphaMethod m) {
    switch (m) {
        case AlphaMethod::DoubleSum: return "double_sum";
        case AlphaMethod::Eulerian: return "eulerian";
        case AlphaMethod::Bernoulli: return "bernoulli";
    }
    return "?";
}

std::string method_name(AlphaStarMethod m) {
    switch (m) {
        case AlphaStarMethod::DoubleSum: return "double_sum";
        case AlphaStarMethod::EulerianStar: return "eulerian_star";
        case AlphaStarMethod::EulerianPlain: return "eulerian_plain";
    }
    return "?";
}

std::string method_name(BetaMethod m) {
    switch (m) {
        case BetaMethod::DoubleSum: return "double_sum";
        case BetaMethod::Eulerian: return "eulerian";
    }
    return "?";
}

std::string method_name(CMethod m) {
    switch (m) {
        case CMethod::Recurrence: return "recurrence";
        case CMethod::Reversion: return "reversion";
    }
    return "?";
}

Rat gamma_r(int r, GammaMethod m) {
    if (r < 0) throw std::domain_error("gamma_r: negative index");
    switch (m) {
        case GammaMethod::WrenchRecurrence: {
            static RatSeqCache cache;
            return cache.get(r, [](int i, const std::vector<Rat>& g) {
                if (i == 0) return Rat(1);
                Rat acc(0);
                for (int j = 0; j <= i - 1; ++j)
                    acc += triangles::bernoulli(j + 2) / Rat(j + 2) * g[static_cast<size_t>(i - 1 - j)];
                return acc / Rat(i);
            });
        }
        case GammaMethod::DeMoivreBinomial: {
            auto row = demoivre_row(2 * r, 2 * r, reciprocal_stream());
            Rat acc(0);
            Rat two_k(1);
            for (int k = 0; k <= 2 * r; ++k, two_k *= Rat(2))
                acc += binomial_rat(Rat(-(2 * r + 1), 2), k) * two_k * row[static_cast<size_t>(k)];
            return Rat(double_factorial(2 * r - 1)) * acc;
        }
        case GammaMethod::PerronDeMoivre:
        case GammaMethod::BrassescoDeMoivre: {
            const auto& stream = m == GammaMethod::PerronDeMoivre ? reciprocal_stream()
                                                                  : factorial_reciprocal_stream();
            auto row = demoivre_row(2 * r, 2 * r, stream);
            Rat acc(0);
            for (int k = 0; k <= 2 * r; ++k)
                acc += Rat(double_factorial(2 * r + 2 * k - 1)) * sign_pow(k) /
                       Rat(algebra::factorial(k)) * row[static_cast<size_t>(k)];
            return acc;
        }
        case GammaMethod::AssocCycle:
        case GammaMethod::AssocSet: {
            auto kind = m == GammaMethod::AssocCycle ? triangles::AssocKind::Cycle : triangles::AssocKind::Set;
            Rat acc(0);
            for (int k = 0; k <= 2 * r; ++k)
                acc += sign_pow(k) / Rat(double_factorial(2 * r + 2 * k)) *
                       triangles::assoc_stirling(kind, 2 * r + 2 * k, k);
            return acc;
        }
        case GammaMethod::ExpOfLog: {
            auto row = demoivre_row(r, r, log_gamma_stream());
            Rat acc(0);
            for (int k = 0; k <= r; ++k) acc += row[static_cast<size_t>(k)] / Rat(algebra::factorial(k));
            return acc;
        }
        case GammaMethod::FromC: {
            Sqrt2Rat v = Sqrt2Rat(Rat(double_factorial(2 * r + 1))) * c_n(2 * r + 1) /
                         Sqrt2Rat::sqrt2_pow(2 * r + 1);
            return v.rational_part();
        }
        case GammaMethod::VPower: {
            PowerSeries<Rat> v = series_V(2 * r);
            return Rat(double_factorial(2 * r - 1)) * pow(v, Rat(-(2 * r + 1))).at(2 * r);
        }
        case GammaMethod::VStarCoeff:
            return Rat(double_factorial(2 * r + 1)) * series_V_star(2 * r).at(2 * r);
    }
    throw std::invalid_argument("gamma_r: unknown method");
}

Rat rho_hat_r(int r, RhoMethod m) {
    if (r < 0) throw std::domain_error("rho_hat_r: negative index");
    switch (m) {
        case RhoMethod::DeMoivreBinomial: {
            static RatSeqCache cache;
            return cache.get(r, [](int i, const std::vector<Rat>&) {
                auto row = demoivre_row(2 * i + 1, 2 * i + 1, reciprocal_stream());
                Rat acc(0);
                Rat two_k(1);
                for (int k = 0; k <= 2 * i + 1; ++k, two_k *= Rat(2))
                    acc += binomial_rat(Rat(-(i + 1)), k) * two_k * row[static_cast<size_t>(k)];
                return Rat(double_factorial(2 * i)) * acc;
            });
        }
        case RhoMethod::PerronDeMoivre:
        case RhoMethod::BrassescoDeMoivre: {
            bool perron = m == RhoMethod::PerronDeMoivre;
            const auto& stream = perron ? reciprocal_stream() : factorial_reciprocal_stream();
            auto row = demoivre_row(2 * r + 1, 2 * r + 1, stream);
            Rat acc(0);
            for (int k = 0; k <= 2 * r + 1; ++k)
                acc += Rat(double_factorial(2 * r + 2 * k)) * sign_pow(k) / Rat(algebra::factorial(k)) *
                       row[static_cast<size_t>(k)];
            // The reciprocal-factorial stream computes rho_r with a global
            // minus sign; shift to rho^ by removing the r = 0 delta.
            if (perron) return acc;
            return -acc - Rat(r == 0 ? 1 : 0);
        }
        case RhoMethod::AssocCycle: {
            Rat acc(0);
            for (int k = 0; k <= 2 * r + 1; ++k)
                acc += sign_pow(k) / Rat(double_factorial(2 * r + 2 * k + 1)) *
                       triangles::assoc_stirling(triangles::AssocKind::Cycle, 2 * r + 2 * k + 1, k);
            return acc;
        }
        case RhoMethod::AssocSet: {
            Rat acc(0);
            for (int k = 0; k <= 2 * r + 1; ++k)
                acc += sign_pow(k) / Rat(double_factorial(2 * r + 2 * k + 1)) *
                       triangles::assoc_stirling(triangles::AssocKind::Set, 2 * r + 2 * k + 1, k);
            return -acc - Rat(r == 0 ? 1 : 0);
        }
        case RhoMethod::AlphaStarRecurrence: {
            // (i+1/2) rho^_i = alpha*(i+1) - B_{i+2}/(i+2) + sum_j B_{j+2}/(j+2) rho^_{i-1-j}
            std::vector<Rat> rh;
            for (int i = 0; i <= r; ++i) {
                Rat acc = alpha_star(i + 1) - triangles::bernoulli(i + 2) / Rat(i + 2);
                for (int j = 0; j <= i - 1; ++j)
                    acc += triangles::bernoulli(j + 2) / Rat(j + 2) * rh[static_cast<size_t>(i - 1 - j)];
                rh.push_back(acc / Rat(2 * i + 1, 2));
            }
            return rh.back();
        }
        case RhoMethod::FromC: {
            Sqrt2Rat v = Sqrt2Rat(Rat(double_factorial(2 * r + 2))) * c_n(2 * r + 2) /
                         Sqrt2Rat::sqrt2_pow(2 * r + 2);
            return -v.rational_part();
        }
        case RhoMethod::VPower: {
            PowerSeries<Rat> v = series_V(2 * r + 1);
            return Rat(double_factorial(2 * r)) * pow(v, Rat(-(2 * r + 2))).at(2 * r + 1);
        }
        case RhoMethod::VStarCoeff:
            return Rat(double_factorial(2 * r + 2)) * series_V_star(2 * r + 1).at(2 * r + 1);
    }
    throw std::invalid_argument("rho_hat_r: unknown method");
}

Rat rho_r(int r, RhoMethod m) { return rho_hat_r(r, m) + Rat(r == 0 ? 1 : 0); }

Rat tau_r(int r, TauMethod m) {
    if (r < 0) throw std::domain_error("tau_r: negative index");
    switch (m) {
        case TauMethod::DeMoivreBinomial: {
            static RatSeqCache cache;
            return cache.get(r, [](int i, const std::vector<Rat>&) {
                auto row = demoivre_row(2 * i + 1, 2 * i + 1, reciprocal_stream());
                Rat acc(0);
                Rat two_k(1);
                for (int k = 0; k <= 2 * i + 1; ++k, two_k *= Rat(2))
                    acc += binomial_rat(Rat(-(2 * i + 1), 2), k) * two_k * row[static_cast<size_t>(k)];
                return Rat(double_factorial(2 * i - 1)) * acc;
            });
        }
        case TauMethod::VPower: {
            PowerSeries<Rat> v = series_V(2 * r + 1);
            return Rat(double_factorial(2 * r - 1)) * pow(v, Rat(-(2 * r + 1))).at(2 * r + 1);
        }
        case TauMethod::VStarLogDeriv: {
            PowerSeries<Rat> vs = series_V_star(2 * r + 1);
            PowerSeries<Rat> logderiv = derivative(vs) / vs.truncated(2 * r);
            return Rat(double_factorial(2 * r - 1)) * logderiv.at(2 * r);
        }
        case TauMethod::FromC: {
            Sqrt2Rat acc(0);
            for (int x = 0; x <= 2 * r + 3; ++x) {
                int y = 2 * r + 3 - x;
                acc += Sqrt2Rat(Rat(x)) * c_n(x) * Sqrt2Rat(Rat(y)) * c_n(y);
            }
            Sqrt2Rat correction = Sqrt2Rat(Rat(double_factorial(2 * r - 1))) /
                                  Sqrt2Rat::sqrt2_pow(2 * r - 1) * Sqrt2Rat(Rat(1, 4)) * acc;
            return gamma_r(r, GammaMethod::FromC) - correction.rational_part();
        }
    }
    throw std::invalid_argument("tau_r: unknown method");
}

Rat psi_r(int r) {
    if (r < 0) throw std::domain_error("psi_r: negative index");
    static RatSeqCache cache;
    return cache.get(r, [](int i, const std::vector<Rat>& psi) {
        Rat acc = tau_r(i);
        for (int j = 0; j <= i - 1; ++j) acc -= psi[static_cast<size_t>(j)] * gamma_r(i - j);
        return acc;  // gamma_0 = 1
    });
}

Sqrt2Rat c_n(int n, CMethod m) {
    if (n < 0) throw std::domain_error("c_n: negative index");
    switch (m) {
        case CMethod::Recurrence: return c_recurrence(n);
        case CMethod::Reversion: return c_reversion(n);
    }
    throw std::invalid_argument("c_n: unknown method");
}

Sqrt2Rat d_n(int n) {
    if (n < 0) return Sqrt2Rat(0);
    return Sqrt2Rat(Rat(double_factorial(n))) * c_n(n);
}

Sqrt2Rat s_n_k(int n, int k) {
    if (k < 1) throw std::domain_error("s_n_k: k must be >= 1");
    if (n < 0) return Sqrt2Rat(0);
    static std::mutex mu;
    // powers[k-1][n] = S_n(k); grown jointly in k and n.
    static std::vector<std::vector<Sqrt2Rat>> powers;
    std::lock_guard<std::mutex> lock(mu);
    size_t need_n = static_cast<size_t>(n) + 1;
    if (powers.empty()) powers.emplace_back();
    if (powers[0].size() < need_n)
        for (size_t i = powers[0].size(); i < need_n; ++i) powers[0].push_back(c_n(static_cast<int>(i)));
    for (size_t kk = 1; kk < static_cast<size_t>(k); ++kk) {
        if (powers.size() <= kk) powers.emplace_back();
        auto& row = powers[kk];
        const auto& prev = powers[kk - 1];
        for (size_t i = row.size(); i < need_n; ++i) {
            Sqrt2Rat acc(0);
            for (size_t j = 0; j <= i; ++j) acc += powers[0][j] * prev[i - j];
            row.push_back(acc);
        }
    }
    return powers[static_cast<size_t>(k - 1)][static_cast<size_t>(n)];
}

namespace {

// Shared double-sum shape of the four Stirling-cycle component sequences.
// alpha-style: ell = 2..2j+2, inner k = 1..ell with C(ell-1, k-1);
// beta-style:  ell = 2..2j+3, inner k = 2..ell with C(ell-2, k-2).
Rat component_double_sum(int j, bool starred, bool beta_shape) {
    auto entry = [&](long n, long k) {
        return starred ? triangles::stirling_cycle_star(n, k) : triangles::stirling_cycle(n, k);
    };
    long ell_max = beta_shape ? 2 * j + 3 : 2 * j + 2;
    long k_min = beta_shape ? 2 : 1;
    Rat total(0);
    for (long ell = 2; ell <= ell_max; ++ell) {
        Rat inner(0);
        for (long k = k_min; k <= ell; ++k) {
            Rat weight = Rat(binomial_int(ell - k_min, k - k_min));
            if (weight.is_zero()) continue;
            inner += sign_pow(k) * Rat(k) * entry(k, k - j) * weight;
        }
        total += inner / Rat(ell);
    }
    return total;
}

}  // namespace

Rat alpha(int j, AlphaMethod m) {
    if (j < 0) throw std::domain_error("alpha: negative index");
    switch (m) {
        case AlphaMethod::DoubleSum:
            return component_double_sum(j, false, false);
        case AlphaMethod::Eulerian: {
            if (j == 0) return Rat(1, 2);
            Rat acc(0);
            for (long k = 0; k <= j; ++k)
                acc += sign_pow(k) * triangles::eulerian2(j + 1, k) / Rat(binomial_int(2 * j + 1, k + 1));
            return acc / Rat(-2 * (j + 1));
        }
        case AlphaMethod::Bernoulli:
            return triangles::bernoulli(j + 1) / Rat(j + 1);
    }
    throw std::invalid_argument("alpha: unknown method");
}

Rat alpha_star(int j, AlphaStarMethod m) {
    if (j < 0) throw std::domain_error("alpha_star: negative index");
    switch (m) {
        case AlphaStarMethod::DoubleSum:
            return component_double_sum(j, true, false);
        case AlphaStarMethod::EulerianStar: {
            if (j == 0) return Rat(1, 2);
            Rat acc(0);
            for (long k = 0; k <= j; ++k)
                acc += sign_pow(k) * triangles::eulerian2_star(j + 1, k) / Rat(binomial_int(2 * j + 1, k + 1));
            return acc / Rat(-2 * (j + 1));
        }
        case AlphaStarMethod::EulerianPlain: {
            if (j == 0) return Rat(1, 2);
            Rat acc(0);
            for (long k = 0; k <= j - 1; ++k)
                acc += sign_pow(k) * triangles::eulerian2(j, k) / Rat(binomial_int(2 * j + 1, k));
            return sign_pow(j) * acc / Rat(2 * (j + 1));
        }
    }
    throw std::invalid_argument("alpha_star: unknown method");
}

namespace {

Rat beta_eulerian(int j, bool starred) {
    if (j == 0) return starred ? Rat(1, 6) : Rat(2, 3);
    Rat acc(0);
    for (long k = 0; k <= j; ++k) {
        Rat t = starred ? triangles::eulerian2_star(j + 1, k) : triangles::eulerian2(j + 1, k);
        acc += sign_pow(k) * t / Rat(binomial_int(2 * j + 2, k + 2));
    }
    return acc / Rat(-(2 * j + 3));
}

}  // namespace

Rat beta(int j, BetaMethod m) {
    if (j < 0) throw std::domain_error("beta: negative index");
    switch (m) {
        case BetaMethod::DoubleSum: return component_double_sum(j, false, true);
        case BetaMethod::Eulerian: return beta_eulerian(j, false);
    }
    throw std::invalid_argument("beta: unknown method");
}

Rat beta_star(int j, BetaMethod m) {
    if (j < 0) throw std::domain_error("beta_star: negative index");
    switch (m) {
        case BetaMethod::DoubleSum: return component_double_sum(j, true, true);
        case BetaMethod::Eulerian: return beta_eulerian(j, true);
    }
    throw std::invalid_argument("beta_star: unknown method");
}

Rat beta_integral_F(int a, int b, int n, bool starred) {
    if (a < 0) throw std::domain_error("beta_integral_F: requires a >= 0");
    if (n < (starred ? 2 : 1)) throw std::domain_error("beta_integral_F: row index too small");
    if (n + b + 1 < 0) throw std::domain_error("beta_integral_F: requires n + b + 1 >= 0");
    if (starred && a < 1) throw std::domain_error("beta_integral_F: starred integrand needs a >= 1");
    auto beta_fn = [](long p, long q) {
        if (p < 1 || q < 1) throw std::domain_error("beta_integral_F: divergent beta term");
        return Rat(algebra::factorial(p - 1) * algebra::factorial(q - 1)) /
               Rat(algebra::factorial(p + q - 1));
    };
    long k_lo = starred ? -1 : 0;
    long k_hi = starred ? n - 2 : n - 1;
    Rat acc(0);
    for (long k = k_lo; k <= k_hi; ++k) {
        Rat t = starred ? triangles::eulerian2_star(n, k) : triangles::eulerian2(n, k);
        if (t.is_zero()) continue;
        acc += sign_pow(a + k) * t * beta_fn(a + k + 1, b - k + 2 * n + 1);
    }
    return acc;
}

}  // namespace ramastir::sequences
