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

#include <span>
#include <string>

#include "ramastir/power_series.hpp"
#include "ramastir/rat.hpp"
#include "ramastir/sqrt2rat.hpp"

namespace ramastir::sequences {

using algebra::PowerSeries;
using algebra::Rat;
using algebra::Sqrt2Rat;

// Every named coefficient sequence can be computed by several independent
// formulas; each formula gets one method tag, and all methods of a sequence
// must agree exactly at every index. The cross-method audit enforces this.

enum class GammaMethod {
    WrenchRecurrence,    // Bernoulli-driven recurrence r g_r = sum B_{j+2}/(j+2) g_{r-1-j}
    DeMoivreBinomial,    // (2r-1)!! sum_k C(-r-1/2,k) 2^k A_{2r,k}(1/3,1/4,...)
    PerronDeMoivre,      // sum_k (2r+2k-1)!!/((-1)^k k!) A_{2r,k}(1/3,1/4,...)
    BrassescoDeMoivre,   // same weights, stream 1/3!, 1/4!, ...
    AssocCycle,          // sum_k (-1)^k [2r+2k,k]_{>=3} / (2r+2k)!!
    AssocSet,            // sum_k (-1)^k {2r+2k,k}_{>=3} / (2r+2k)!!
    ExpOfLog,            // sum_k A_{r,k}(B_2/(2*1), 0, B_4/(4*3), 0, ...) / k!
    FromC,               // (2r+1)!! c_{2r+1} / 2^{(2r+1)/2}
    VPower,              // (2r-1)!! [x^{2r}] V(x)^{-2r-1}
    VStarCoeff,          // (2r+1)!! [x^{2r}] V*(x)
};

enum class RhoMethod {
    DeMoivreBinomial,     // (2r)!! sum_k C(-r-1,k) 2^k A_{2r+1,k}(1/3,1/4,...)
    PerronDeMoivre,       // sum_k (2r+2k)!!/((-1)^k k!) A_{2r+1,k}(1/3,1/4,...)
    BrassescoDeMoivre,    // -delta - sum_k (2r+2k)!!/((-1)^k k!) A_{2r+1,k}(1/3!,...)
    AssocCycle,           // sum_k (-1)^k [2r+2k+1,k]_{>=3} / (2r+2k+1)!!
    AssocSet,             // -delta - sum_k (-1)^k {2r+2k+1,k}_{>=3} / (2r+2k+1)!!
    AlphaStarRecurrence,  // (r+1/2) rho^_r = alpha*(r+1) - B_{r+2}/(r+2) + sum ...
    FromC,                // -(2r+2)!! c_{2r+2} / 2^{(2r+2)/2}
    VPower,               // (2r)!! [x^{2r+1}] V(x)^{-2r-2}
    VStarCoeff,           // (2r+2)!! [x^{2r+1}] V*(x)
};

enum class TauMethod {
    DeMoivreBinomial,  // (2r-1)!! sum_k C(-r-1/2,k) 2^k A_{2r+1,k}(1/3,1/4,...)
    VPower,            // (2r-1)!! [x^{2r+1}] V(x)^{-2r-1}
    VStarLogDeriv,     // (2r-1)!! [x^{2r}] V*'(x)/V*(x)
    FromC,             // g_r - (2r-1)!!/2^{(2r-1)/2} * (1/4) sum_{x+y=2r+3} x c_x y c_y
};

enum class AlphaMethod {
    DoubleSum,  // defining Stirling-cycle/binomial double sum
    Eulerian,   // -1/(2(j+1)) sum_r (-1)^r <<j+1,r>> / C(2j+1,r+1)
    Bernoulli,  // B_{j+1}/(j+1)
};

enum class AlphaStarMethod {
    DoubleSum,      // defining double sum over the star Stirling triangle
    EulerianStar,   // -1/(2(j+1)) sum_r (-1)^r <<j+1,r>>* / C(2j+1,r+1)
    EulerianPlain,  // (-1)^j/(2(j+1)) sum_k (-1)^k <<j,k>> / C(2j+1,k)   (j >= 1)
};

enum class BetaMethod {
    DoubleSum,  // defining double sum
    Eulerian,   // closed form over row j+1 of the (star) Eulerian triangle
};

enum class CMethod {
    Recurrence,  // c_{n+1} = sqrt2/(n+2) c_n - sqrt2/4 sum_{j=2..n} c_j c_{n+2-j}
    Reversion,   // read off the reverted series x V*(x); c_j = (sqrt2)^j (-1)^{j-1} [x^{j-1}] V*
};

std::span<const GammaMethod> gamma_methods();
std::span<const RhoMethod> rho_methods();
std::span<const TauMethod> tau_methods();
std::span<const AlphaMethod> alpha_methods();
std::span<const AlphaStarMethod> alpha_star_methods();
std::span<const BetaMethod> beta_methods();
std::span<const CMethod> c_methods();

std::string method_name(GammaMethod);
std::string method_name(RhoMethod);
std::string method_name(TauMethod);
std::string method_name(AlphaMethod);
std::string method_name(AlphaStarMethod);
std::string method_name(BetaMethod);
std::string method_name(CMethod);

/// Stirling series coefficients: 1, 1/12, 1/288, -139/51840, ...
Rat gamma_r(int r, GammaMethod m = GammaMethod::WrenchRecurrence);

/// rho^_r = rho_r - delta_{r,0}; starts -2/3, 4/135, -8/2835, ...
Rat rho_hat_r(int r, RhoMethod m = RhoMethod::DeMoivreBinomial);

/// Expansion coefficients of the e^n/2 partial-sum fraction: 1/3, 4/135, ...
Rat rho_r(int r, RhoMethod m = RhoMethod::DeMoivreBinomial);

Rat tau_r(int r, TauMethod m = TauMethod::DeMoivreBinomial);

/// Solves the triangular system sum_{j<=r} psi_j gamma_{r-j} = tau_r.
Rat psi_r(int r);

/// Coefficients of the half-power expansion solving W + W' = W W', W(0) = 1;
/// c_n = v_n (sqrt 2)^n with rational v_n.
Sqrt2Rat c_n(int n, CMethod m = CMethod::Recurrence);

/// d_n = n!! c_n, zero for n < 0.
Sqrt2Rat d_n(int n);

/// S_n(k): coefficient of t^{n/2} in the k-th power of the c-series.
Sqrt2Rat s_n_k(int n, int k);

Rat alpha(int j, AlphaMethod m = AlphaMethod::Eulerian);
Rat alpha_star(int j, AlphaStarMethod m = AlphaStarMethod::EulerianStar);
Rat beta(int j, BetaMethod m = BetaMethod::Eulerian);
Rat beta_star(int j, BetaMethod m = BetaMethod::Eulerian);

/// Exact value of the convergent integral of t^a (1-t)^{-a-b-2} F_n(t) over
/// (-inf, 0], where F_n = E_n/(x-1)^{2n} (starred: F*_n). Evaluated as a
/// finite rational sum of beta-function terms, each a factorial quotient.
/// Requires a >= 0, n + b + 1 >= 0, n >= 1 (starred: n >= 2, a >= 1).
Rat beta_integral_F(int a, int b, int n, bool starred = false);

/// Building-block series, exposed for tests and checks. All orders exact.
PowerSeries<Rat> series_S(int order);       // x/3 + x^2/4 + x^3/5 + ...
PowerSeries<Rat> series_V(int order);       // (1 + 2 S)^{1/2}
PowerSeries<Rat> series_V_star(int order);  // reversion partner: x V*(x) inverts x V(x)

}  // namespace ramastir::sequences
