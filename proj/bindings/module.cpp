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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ramastir/interval.hpp"
#include "ramastir/poly.hpp"
#include "ramastir/sequences.hpp"
#include "ramastir/triangles.hpp"
#include "ramastir/verifier.hpp"

namespace py = pybind11;

namespace {

using ramastir::algebra::Rat;
using ramastir::algebra::Sqrt2Rat;
namespace seq = ramastir::sequences;
namespace tri = ramastir::triangles;
namespace num = ramastir::numeric;
namespace ver = ramastir::verifier;

py::object fraction_type() {
    static py::object type = py::module_::import("fractions").attr("Fraction");
    return type;
}

py::object to_py(const Rat& r) { return fraction_type()(r.str()); }

py::object to_py(const Sqrt2Rat& v) { return py::make_tuple(to_py(v.a()), to_py(v.b())); }

template <typename Method>
Method pick_method(std::span<const Method> methods, const std::string& name) {
    if (name.empty()) return methods[0];
    for (auto m : methods)
        if (seq::method_name(m) == name) return m;
    throw std::invalid_argument("unknown method '" + name + "'");
}

template <typename Method>
std::vector<std::string> method_names(std::span<const Method> methods) {
    std::vector<std::string> out;
    for (auto m : methods) out.push_back(seq::method_name(m));
    return out;
}

py::dict report_to_dict(const ver::CheckReport& rep) {
    py::dict d;
    d["id"] = rep.id;
    d["description"] = rep.description;
    d["range"] = rep.range;
    d["passed"] = rep.passed;
    d["seconds"] = rep.seconds;
    if (rep.failure) {
        py::dict f;
        f["index"] = rep.failure->index;
        f["where"] = rep.failure->where;
        f["lhs"] = rep.failure->lhs;
        f["rhs"] = rep.failure->rhs;
        d["failure"] = f;
    }
    return d;
}

Rat eps_arg(const std::string& text) {
    auto eps = num::parse_eps(text);
    if (!eps || eps->sign() <= 0) throw std::invalid_argument("bad eps '" + text + "'");
    return *eps;
}

}  // namespace

PYBIND11_MODULE(_ramastir, m) {
    m.doc() = "Exact coefficient sequences, combinatorial triangles, identity checks and "
              "rational-interval validation for the Stirling-series family";

    // Sequences; rationals come back as fractions.Fraction, values in Q(sqrt2)
    // as a pair (a, b) meaning a + b*sqrt(2).
    m.def(
        "gamma", [](int r, const std::string& method) { return to_py(seq::gamma_r(r, pick_method(seq::gamma_methods(), method))); },
        py::arg("r"), py::arg("method") = "");
    m.def(
        "rho", [](int r, const std::string& method) { return to_py(seq::rho_r(r, pick_method(seq::rho_methods(), method))); },
        py::arg("r"), py::arg("method") = "");
    m.def(
        "rho_hat", [](int r, const std::string& method) { return to_py(seq::rho_hat_r(r, pick_method(seq::rho_methods(), method))); },
        py::arg("r"), py::arg("method") = "");
    m.def(
        "tau", [](int r, const std::string& method) { return to_py(seq::tau_r(r, pick_method(seq::tau_methods(), method))); },
        py::arg("r"), py::arg("method") = "");
    m.def("psi", [](int r) { return to_py(seq::psi_r(r)); }, py::arg("r"));
    m.def(
        "c", [](int n, const std::string& method) { return to_py(seq::c_n(n, pick_method(seq::c_methods(), method))); },
        py::arg("n"), py::arg("method") = "");
    m.def(
        "alpha", [](int j, const std::string& method) { return to_py(seq::alpha(j, pick_method(seq::alpha_methods(), method))); },
        py::arg("j"), py::arg("method") = "");
    m.def(
        "alpha_star",
        [](int j, const std::string& method) { return to_py(seq::alpha_star(j, pick_method(seq::alpha_star_methods(), method))); },
        py::arg("j"), py::arg("method") = "");
    m.def(
        "beta", [](int j, const std::string& method) { return to_py(seq::beta(j, pick_method(seq::beta_methods(), method))); },
        py::arg("j"), py::arg("method") = "");
    m.def(
        "beta_star", [](int j, const std::string& method) { return to_py(seq::beta_star(j, pick_method(seq::beta_methods(), method))); },
        py::arg("j"), py::arg("method") = "");
    m.def("s_n_k", [](int n, int k) { return to_py(seq::s_n_k(n, k)); }, py::arg("n"), py::arg("k"));
    m.def(
        "beta_integral_f",
        [](int a, int b, int n, bool starred) { return to_py(seq::beta_integral_F(a, b, n, starred)); },
        py::arg("a"), py::arg("b"), py::arg("n"), py::arg("starred") = false);

    m.def("gamma_methods", [] { return method_names(seq::gamma_methods()); });
    m.def("rho_methods", [] { return method_names(seq::rho_methods()); });
    m.def("tau_methods", [] { return method_names(seq::tau_methods()); });
    m.def("alpha_methods", [] { return method_names(seq::alpha_methods()); });
    m.def("alpha_star_methods", [] { return method_names(seq::alpha_star_methods()); });
    m.def("beta_methods", [] { return method_names(seq::beta_methods()); });
    m.def("c_methods", [] { return method_names(seq::c_methods()); });

    // Triangles.
    m.def("stirling_cycle", [](long n, long k) { return to_py(tri::stirling_cycle(n, k)); });
    m.def("stirling_cycle_star", [](long n, long k) { return to_py(tri::stirling_cycle_star(n, k)); });
    m.def("eulerian2", [](long n, long k) { return to_py(tri::eulerian2(n, k)); });
    m.def("eulerian2_star", [](long n, long k) { return to_py(tri::eulerian2_star(n, k)); });
    m.def("eulerian2_via_ratfun", [](long n) {
        auto poly = tri::eulerian2_via_ratfun(n);
        std::vector<py::object> coeffs;
        for (const auto& c : poly.coeffs()) coeffs.push_back(to_py(c));
        return coeffs;
    });
    m.def(
        "assoc_stirling",
        [](const std::string& kind, long n, long k) {
            if (kind == "cycle") return to_py(tri::assoc_stirling(tri::AssocKind::Cycle, n, k));
            if (kind == "set") return to_py(tri::assoc_stirling(tri::AssocKind::Set, n, k));
            throw std::invalid_argument("assoc_stirling: kind must be 'cycle' or 'set'");
        },
        py::arg("kind"), py::arg("n"), py::arg("k"));
    m.def("bernoulli", [](long n) { return to_py(tri::bernoulli(n)); });
    m.def("omega", [](long n) { return to_py(tri::omega(n)); });
    m.def("double_factorial", [](long n) {
        return py::module_::import("builtins").attr("int")(tri::double_factorial(n).get_str());
    });
    m.def("binomial_half", [](long n, long k) { return to_py(tri::binomial_half(n, k)); });

    // Verifier.
    m.def("check_ids", [] {
        std::vector<std::string> ids;
        for (const auto& c : ver::registry()) ids.push_back(c.id);
        return ids;
    });
    m.def(
        "run_check", [](const std::string& id, int max_index) { return report_to_dict(ver::run_check(id, max_index)); },
        py::arg("id"), py::arg("max_index") = -1);
    m.def(
        "run_all",
        [](int max_index) {
            std::vector<py::dict> out;
            for (const auto& rep : ver::run_all(max_index)) out.push_back(report_to_dict(rep));
            return out;
        },
        py::arg("max_index") = -1);

    // Numeric validation.
    m.def(
        "theta_interval",
        [](long n, const std::string& eps) {
            auto iv = num::theta_exact(n, eps_arg(eps));
            return py::make_tuple(to_py(iv.lo), to_py(iv.hi));
        },
        py::arg("n"), py::arg("eps") = "1e-40");
    m.def(
        "stirling_ratio_interval",
        [](long n, const std::string& eps) {
            auto iv = num::stirling_ratio(n, eps_arg(eps));
            return py::make_tuple(to_py(iv.lo), to_py(iv.hi));
        },
        py::arg("n"), py::arg("eps") = "1e-40");
    m.def(
        "validate_expansion",
        [](const std::string& target, long n, int terms, const std::string& eps) {
            num::ExpansionTarget t;
            if (target == "stirling")
                t = num::ExpansionTarget::Stirling;
            else if (target == "theta")
                t = num::ExpansionTarget::Theta;
            else
                throw std::invalid_argument("target must be 'stirling' or 'theta'");
            auto rep = num::validate_expansion(t, n, terms, eps_arg(eps));
            py::dict d;
            d["target"] = target;
            d["n"] = rep.n;
            d["terms"] = rep.terms;
            d["error_lo"] = to_py(rep.error.lo);
            d["error_hi"] = to_py(rep.error.hi);
            d["bound"] = to_py(rep.bound);
            d["verdict"] = rep.verdict == num::ExpansionVerdict::Pass   ? "pass"
                           : rep.verdict == num::ExpansionVerdict::Fail ? "fail"
                                                                        : "undecided";
            return d;
        },
        py::arg("target"), py::arg("n"), py::arg("terms"), py::arg("eps") = "1e-40");

    m.attr("__version__") = "0.1.0";
}
