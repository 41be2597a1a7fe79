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

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "ramastir/interval.hpp"
#include "ramastir/render.hpp"
#include "ramastir/sequences.hpp"
#include "ramastir/triangles.hpp"
#include "ramastir/verifier.hpp"

namespace {

using ramastir::algebra::Rat;
using ramastir::algebra::Sqrt2Rat;
using ramastir::render::OutputRecord;
namespace seq = ramastir::sequences;
namespace tri = ramastir::triangles;
namespace num = ramastir::numeric;
namespace ver = ramastir::verifier;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

void emit(const std::vector<OutputRecord>& records, const std::string& format) {
    if (format == "json")
        ramastir::render::write_json(std::cout, records);
    else
        ramastir::render::write_csv(std::cout, records);
}

std::optional<Rat> table_value(const std::string& name, int i) {
    if (name == "gamma") return seq::gamma_r(i);
    if (name == "rho") return seq::rho_r(i);
    if (name == "rho_hat") return seq::rho_hat_r(i);
    if (name == "psi") return seq::psi_r(i);
    if (name == "tau") return seq::tau_r(i);
    if (name == "alpha") return seq::alpha(i);
    if (name == "alpha_star") return seq::alpha_star(i);
    if (name == "beta") return seq::beta(i);
    if (name == "beta_star") return seq::beta_star(i);
    if (name == "omega") return tri::omega(i);
    if (name == "bernoulli") return tri::bernoulli(i);
    return std::nullopt;
}

int cmd_table(const std::string& name, long from, long to, const std::string& format) {
    if (from < 0 || to < from) {
        std::cerr << "table: bad index range " << from << ".." << to << "\n";
        return kExitUsage;
    }
    static const std::vector<std::string> names = {"gamma", "rho",   "rho_hat", "psi",
                                                   "tau",   "c",     "alpha",   "alpha_star",
                                                   "beta",  "beta_star", "omega", "bernoulli"};
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::cerr << "table: unknown sequence '" << name << "'\n";
        return kExitUsage;
    }
    std::vector<OutputRecord> records;
    for (long i = from; i <= to; ++i) {
        OutputRecord r;
        r.n = i;
        if (name == "c")
            r.value = seq::c_n(static_cast<int>(i)).str();
        else
            r.value = table_value(name, static_cast<int>(i))->str();
        records.push_back(std::move(r));
    }
    emit(records, format);
    return kExitOk;
}

std::optional<tri::TriangleKind> triangle_kind(const std::string& name) {
    if (name == "stirling_cycle") return tri::TriangleKind::StirlingCycle;
    if (name == "stirling_cycle_star") return tri::TriangleKind::StirlingCycleStar;
    if (name == "eulerian2") return tri::TriangleKind::Eulerian2;
    if (name == "eulerian2_star") return tri::TriangleKind::Eulerian2Star;
    if (name == "assoc_cycle_ge3") return tri::TriangleKind::AssocCycleGe3;
    if (name == "assoc_set_ge3") return tri::TriangleKind::AssocSetGe3;
    return std::nullopt;
}

int cmd_triangle(const std::string& kind_name, long rows, const std::string& format) {
    auto kind = triangle_kind(kind_name);
    if (!kind) {
        std::cerr << "triangle: unknown kind '" << kind_name << "'\n";
        return kExitUsage;
    }
    if (rows < 0) {
        std::cerr << "triangle: negative row count\n";
        return kExitUsage;
    }
    const tri::Triangle& t = tri::shared_triangle(*kind);
    std::vector<OutputRecord> records;
    long n0 = *kind == tri::TriangleKind::Eulerian2Star ? 1 : 0;
    for (long n = n0; n <= rows; ++n) {
        auto [k_lo, k_hi] = t.display_range(n);
        for (long k = k_lo; k <= k_hi; ++k) {
            OutputRecord r;
            r.n = n;
            r.k = k;
            r.value = t.at(n, k).str();
            records.push_back(std::move(r));
        }
    }
    emit(records, format);
    return kExitOk;
}

int report_check(const ver::CheckReport& rep) {
    if (rep.passed) {
        std::cout << "PASS " << rep.id << " range=" << rep.range << " (" << rep.seconds << "s)\n";
        return kExitOk;
    }
    const auto& f = *rep.failure;
    std::cout << "FAIL " << rep.id << " index=" << f.index;
    if (!f.where.empty()) std::cout << " " << f.where;
    std::cout << " lhs=" << f.lhs << " rhs=" << f.rhs << "\n";
    return kExitFail;
}

int cmd_check(const std::string& id, int max_order) {
    if (id == "all") {
        int rc = kExitOk;
        for (const auto& rep : ver::run_all(max_order)) {
            int one = report_check(rep);
            if (one != kExitOk && rc == kExitOk) rc = one;
        }
        return rc;
    }
    if (!ver::has_check(id)) {
        std::cerr << "check: unknown id '" << id << "'\n";
        return kExitUsage;
    }
    return report_check(ver::run_check(id, max_order));
}

template <typename Method, typename Eval>
int cross_audit(const std::string& name, std::span<const Method> methods, int max_index, Eval eval) {
    for (int i = 0; i <= max_index; ++i) {
        auto reference = eval(i, methods[0]);
        for (size_t m = 1; m < methods.size(); ++m) {
            auto value = eval(i, methods[m]);
            if (value != reference) {
                std::cout << "DISAGREE " << name << " index=" << i << " "
                          << seq::method_name(methods[0]) << "=" << reference.str() << " "
                          << seq::method_name(methods[m]) << "=" << value.str() << "\n";
                return kExitFail;
            }
        }
    }
    std::cout << "AGREE " << name << " indices 0.." << max_index << " across " << methods.size()
              << " methods\n";
    return kExitOk;
}

int cmd_cross(const std::string& name, int max_index) {
    if (max_index < 0) max_index = name == "c" ? 50 : 25;
    if (name == "gamma")
        return cross_audit<seq::GammaMethod>(name, seq::gamma_methods(), max_index,
                                             [](int i, seq::GammaMethod m) { return seq::gamma_r(i, m); });
    if (name == "rho_hat" || name == "rho")
        return cross_audit<seq::RhoMethod>(name, seq::rho_methods(), max_index,
                                           [](int i, seq::RhoMethod m) { return seq::rho_hat_r(i, m); });
    if (name == "tau")
        return cross_audit<seq::TauMethod>(name, seq::tau_methods(), max_index,
                                           [](int i, seq::TauMethod m) { return seq::tau_r(i, m); });
    if (name == "alpha")
        return cross_audit<seq::AlphaMethod>(name, seq::alpha_methods(), max_index,
                                             [](int i, seq::AlphaMethod m) { return seq::alpha(i, m); });
    if (name == "alpha_star")
        return cross_audit<seq::AlphaStarMethod>(
            name, seq::alpha_star_methods(), max_index,
            [](int i, seq::AlphaStarMethod m) { return seq::alpha_star(i, m); });
    if (name == "beta")
        return cross_audit<seq::BetaMethod>(name, seq::beta_methods(), max_index,
                                            [](int i, seq::BetaMethod m) { return seq::beta(i, m); });
    if (name == "beta_star")
        return cross_audit<seq::BetaMethod>(name, seq::beta_methods(), max_index,
                                            [](int i, seq::BetaMethod m) { return seq::beta_star(i, m); });
    if (name == "c")
        return cross_audit<seq::CMethod>(name, seq::c_methods(), max_index,
                                         [](int i, seq::CMethod m) { return seq::c_n(i, m); });
    std::cerr << "cross: unknown sequence '" << name << "'\n";
    return kExitUsage;
}

int cmd_validate(const std::string& target_name, long n, int terms, const std::string& eps_text) {
    num::ExpansionTarget target;
    if (target_name == "stirling")
        target = num::ExpansionTarget::Stirling;
    else if (target_name == "theta")
        target = num::ExpansionTarget::Theta;
    else {
        std::cerr << "validate: unknown target '" << target_name << "'\n";
        return kExitUsage;
    }
    auto eps = num::parse_eps(eps_text);
    if (!eps || eps->sign() <= 0 || n < 1 || terms < 1) {
        std::cerr << "validate: bad arguments\n";
        return kExitUsage;
    }
    num::ExpansionReport rep = num::validate_expansion(target, n, terms, *eps);
    const char* verdict = rep.verdict == num::ExpansionVerdict::Pass       ? "PASS"
                          : rep.verdict == num::ExpansionVerdict::Fail    ? "FAIL"
                                                                          : "UNDECIDED";
    char approx[128];
    std::snprintf(approx, sizeof approx, "error~[%.12g, %.12g] width~%.3g", rep.error.lo.to_double(),
                  rep.error.hi.to_double(), rep.error.width().to_double());
    std::cout << verdict << " " << target_name << " n=" << n << " terms=" << terms << " " << approx
              << " bound=" << rep.bound.str() << "\n";
    switch (rep.verdict) {
        case num::ExpansionVerdict::Pass: return kExitOk;
        case num::ExpansionVerdict::Fail: return kExitFail;
        case num::ExpansionVerdict::Undecided: return kExitUndecided;
    }
    return kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tables, identity checks and interval validation for the Stirling-series "
                 "coefficient family"};
    app.require_subcommand(1);

    std::string format = "csv";

    auto* table = app.add_subcommand("table", "Print a coefficient sequence");
    std::string table_name;
    long table_from = 0, table_to = 0;
    table->add_option("name", table_name, "sequence name")->required();
    table->add_option("from", table_from, "first index")->required();
    table->add_option("to", table_to, "last index")->required();
    table->add_option("--format,format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* triangle = app.add_subcommand("triangle", "Print rows of a combinatorial triangle");
    std::string triangle_name;
    long triangle_rows = 0;
    triangle->add_option("kind", triangle_name, "triangle kind")->required();
    triangle->add_option("rows", triangle_rows, "last row index")->required();
    triangle->add_option("--format,format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* check = app.add_subcommand("check", "Run a registered identity check (or 'all')");
    std::string check_id;
    int max_order = -1;
    check->add_option("id", check_id, "check id or 'all'")->required();
    check->add_option("--max-order", max_order, "index range override");

    auto* cross = app.add_subcommand("cross", "Audit that all formulas for a sequence agree");
    std::string cross_name;
    int cross_max = -1;
    cross->add_option("name", cross_name, "sequence name")->required();
    cross->add_option("--max-index", cross_max, "last index to compare");

    auto* validate = app.add_subcommand("validate", "Interval validation of an asymptotic expansion");
    std::string validate_target;
    long validate_n = 0;
    int validate_terms = 0;
    std::string validate_eps = "1e-40";
    validate->add_option("target", validate_target, "stirling or theta")->required();
    validate->add_option("--n", validate_n, "evaluation point")->required();
    validate->add_option("--terms", validate_terms, "number of expansion terms")->required();
    validate->add_option("--eps", validate_eps, "working precision");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (table->parsed()) return cmd_table(table_name, table_from, table_to, format);
        if (triangle->parsed()) return cmd_triangle(triangle_name, triangle_rows, format);
        if (check->parsed()) {
            if (max_order < 0) {
                if (const char* env = std::getenv("RAMASTIR_MAX_ORDER")) max_order = std::atoi(env);
            }
            return cmd_check(check_id, max_order);
        }
        if (cross->parsed()) return cmd_cross(cross_name, cross_max);
        if (validate->parsed()) return cmd_validate(validate_target, validate_n, validate_terms, validate_eps);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
