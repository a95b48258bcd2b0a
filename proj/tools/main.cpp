#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "veronese/errors.hpp"
#include "veronese/expr.hpp"
#include "veronese/lift.hpp"
#include "veronese/mapfile.hpp"
#include "veronese/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitObstructed = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw veronese::InvalidInput("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Wall-clock timer plus the echo of the parsed input, attached to every
/// machine-readable report.
struct ReportContext {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    nlohmann::json input_echo;

    nlohmann::json finish(nlohmann::json report) const {
        report["input"] = input_echo;
        report["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return report;
    }
};

int report_obstruction(const veronese::VeroneseGeneratorSet& gens, const veronese::LiftOutcome& outcome,
                       bool json, const ReportContext& ctx) {
    if (json)
        std::cout << ctx.finish(veronese::lift_report(gens, outcome)).dump(2) << "\n";
    else
        std::cout << "obstructed: " << to_string(*outcome.reason) << "\n  " << outcome.witness << "\n";
    return kExitObstructed;
}

int report_violation(const veronese::VeroneseGeneratorSet& gens, const veronese::RelationViolation& violation,
                     bool json) {
    if (json) {
        nlohmann::json out{{"status", "obstructed"},
                           {"context", veronese::context_json(gens)},
                           {"obstruction",
                            {{"reason", "relation_inconsistent"}, {"witness", violation.describe(gens)}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "obstructed: relation_inconsistent\n  " << violation.describe(gens) << "\n";
    }
    return kExitObstructed;
}

void print_images(const veronese::VeroneseGeneratorSet& gens, const veronese::LiftOutcome& outcome) {
    std::cout << "lifted (normalization " << veronese::to_string(outcome.normalization) << ")\n";
    for (std::size_t k = 0; k < outcome.map.scope.size(); ++k)
        std::cout << "  " << gens.table()->name(outcome.map.scope[k]) << " -> "
                  << to_string(outcome.map.images[k]) << "\n";
    if (!outcome.out_of_scope.empty()) {
        std::cout << "  out of scope:";
        for (int var : outcome.out_of_scope) std::cout << " " << gens.table()->name(var);
        std::cout << "\n";
    }
}

int cmd_bracket(const std::string& expr, int n, int bound, bool json) {
    auto table = veronese::LyndonBasis::make(n, bound);
    const veronese::PoissonElement value = veronese::parse_poisson(expr, table);
    if (json) {
        nlohmann::json out{{"status", "ok"},
                           {"context", {{"context", "poisson"}, {"n", n}, {"bound", bound}}},
                           {"input", expr},
                           {"value", veronese::element_json(value)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << to_string(value) << "\n";
    }
    return kExitOk;
}

int cmd_grade(const std::string& expr, const std::string& context, int n, int d, int bound, bool json) {
    nlohmann::json parts_json = nlohmann::json::array();
    std::vector<std::string> parts_text;
    if (context == "poly") {
        const veronese::Polynomial p = veronese::parse_polynomial(expr, n);
        const veronese::GradedDecomposition parts = veronese::grade(p, d);
        for (const auto& part : parts.parts) {
            parts_text.push_back(to_string(part));
            parts_json.push_back(to_string(part));
        }
    } else {
        auto table = veronese::LyndonBasis::make(n, bound);
        const veronese::PoissonElement f = veronese::parse_poisson(expr, table);
        for (const auto& part : veronese::grade_poisson(f, d)) {
            parts_text.push_back(to_string(part));
            parts_json.push_back(to_string(part));
        }
    }
    if (json) {
        nlohmann::json out{{"status", "ok"},
                           {"context", {{"context", context}, {"n", n}, {"d", d}}},
                           {"input", expr},
                           {"parts", parts_json}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < parts_text.size(); ++i)
            std::cout << "degree " << i << " mod " << d << ": " << parts_text[i] << "\n";
    }
    return kExitOk;
}

int cmd_basis(int n, int max_degree, bool json) {
    auto table = veronese::LyndonBasis::make(n, max_degree);
    if (json) {
        nlohmann::json elems = nlohmann::json::array();
        for (const auto& e : table->elements()) {
            std::string word;
            for (auto letter : e.word) word += std::to_string(letter + 1);
            elems.push_back({{"index", e.index + 1},
                             {"degree", e.degree},
                             {"word", word},
                             {"bracket", table->name(e.index)}});
        }
        nlohmann::json out{{"status", "ok"}, {"n", n}, {"max_degree", max_degree}, {"elements", elems}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& e : table->elements())
            std::cout << "e" << e.index + 1 << "  degree " << e.degree << "  " << table->name(e.index) << "\n";
    }
    return kExitOk;
}

int cmd_restrict(const std::string& path, const std::string& kind, bool json) {
    const veronese::MapFile file = veronese::parse_map_file(read_file(path));
    auto gens = veronese::build_generator_set(file);
    const veronese::AmbientMap map = veronese::bind_ambient_map(file);
    if (kind == "derivation") {
        const veronese::VeroneseDerivation der = veronese::restrict_derivation(gens, map);
        if (json) {
            std::cout << veronese::input_json(der).dump(2) << "\n";
        } else {
            std::cout << veronese::write_derivation_file(der);
        }
    } else {
        const auto inverse = veronese::bind_inverse_ambient_map(file);
        const veronese::VeroneseAutomorphism aut = veronese::restrict_automorphism(gens, map, inverse);
        if (json) {
            std::cout << veronese::input_json(aut).dump(2) << "\n";
        } else {
            std::cout << veronese::write_automorphism_file(aut);
        }
    }
    return kExitOk;
}

int cmd_lift_derivation(const std::string& path, bool json) {
    const veronese::MapFile file = veronese::parse_map_file(read_file(path));
    const veronese::VeroneseDerivation der = veronese::bind_derivation(file);
    ReportContext ctx;
    ctx.input_echo = veronese::input_json(der);
    if (auto violation = veronese::check_relations(der)) return report_violation(*der.gens, *violation, json);
    const veronese::LiftOutcome outcome = veronese::lift_derivation(der);
    if (!outcome.lifted) return report_obstruction(*der.gens, outcome, json, ctx);
    if (json)
        std::cout << ctx.finish(veronese::lift_report(*der.gens, outcome)).dump(2) << "\n";
    else
        print_images(*der.gens, outcome);
    return kExitOk;
}

int cmd_lift_automorphism(const std::string& path, bool flip_sign, bool json) {
    const veronese::MapFile file = veronese::parse_map_file(read_file(path));
    const veronese::VeroneseAutomorphism aut = veronese::bind_automorphism(file);
    ReportContext ctx;
    ctx.input_echo = veronese::input_json(aut);
    if (auto violation = veronese::check_relations(aut)) return report_violation(*aut.gens, *violation, json);
    veronese::LiftOutcome outcome = veronese::lift_automorphism(aut);
    if (!outcome.lifted) return report_obstruction(*aut.gens, outcome, json, ctx);
    if (flip_sign) {
        if (aut.gens->d() % 2 != 0)
            throw veronese::InvalidInput("--flip-sign needs even d: -1 must be a d-th root of unity");
        outcome.map = veronese::flip_sign_normalization(outcome.map);
    }
    if (json)
        std::cout << ctx.finish(veronese::lift_report(*aut.gens, outcome)).dump(2) << "\n";
    else
        print_images(*aut.gens, outcome);
    return kExitOk;
}

int cmd_check_lnd(const std::string& path, int cap, bool json) {
    const veronese::MapFile file = veronese::parse_map_file(read_file(path));
    const veronese::VeroneseDerivation der = veronese::bind_derivation(file);
    ReportContext ctx;
    ctx.input_echo = veronese::input_json(der);
    if (auto violation = veronese::check_relations(der)) return report_violation(*der.gens, *violation, json);
    const veronese::LiftOutcome outcome = veronese::lift_derivation(der);
    if (!outcome.lifted) return report_obstruction(*der.gens, outcome, json, ctx);
    const veronese::LndReport report = veronese::check_locally_nilpotent(outcome.map, cap);
    if (json) {
        std::cout << ctx.finish(veronese::lnd_report_json(*der.gens, outcome, report)).dump(2) << "\n";
    } else {
        print_images(*der.gens, outcome);
        std::cout << "verdict: " << to_string(report.verdict) << "\n";
        for (std::size_t k = 0; k < report.indices.size(); ++k) {
            std::cout << "  " << der.gens->table()->name(outcome.map.scope[k]) << ": ";
            if (report.indices[k])
                std::cout << *report.indices[k] << " iterations\n";
            else
                std::cout << "no zero within cap\n";
        }
        if (!report.witness.empty()) std::cout << "  " << report.witness << "\n";
    }
    return kExitOk;
}

int cmd_verify_kernel(const std::string& path, bool json) {
    const veronese::MapFile file = veronese::parse_map_file(read_file(path));
    const veronese::VeroneseAutomorphism aut = veronese::bind_automorphism(file);
    if (!aut.inverse_images) throw veronese::InvalidInput("verify-kernel needs an 'inverse' section");
    ReportContext ctx;
    ctx.input_echo = veronese::input_json(aut);
    if (auto violation = veronese::check_relations(aut)) return report_violation(*aut.gens, *violation, json);
    const veronese::LiftOutcome forward = veronese::lift_automorphism(aut);
    if (!forward.lifted) return report_obstruction(*aut.gens, forward, json, ctx);
    const veronese::VeroneseAutomorphism inverse =
        veronese::make_automorphism(aut.gens, *aut.inverse_images);
    const veronese::LiftOutcome backward = veronese::lift_automorphism(inverse);
    if (!backward.lifted) return report_obstruction(*aut.gens, backward, json, ctx);
    const veronese::Rational lambda = veronese::verify_quotient_kernel(forward, backward, aut.gens->d());
    if (json)
        std::cout << ctx.finish(veronese::kernel_report_json(*aut.gens, lambda)).dump(2) << "\n";
    else
        std::cout << "composite is lambda * id with lambda = " << veronese::to_string(lambda) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"veronese: exact kernel for Veronese subalgebras of polynomial and free Poisson algebras"};
    app.require_subcommand(1);

    std::string expr, context = "poly", path, kind = "derivation";
    int n = 2, d = 2, bound = 8, max_degree = 5, cap = 64;
    bool json = false, flip_sign = false;
    std::uint64_t seed = 7;

    auto* bracket = app.add_subcommand("bracket", "evaluate a Poisson expression (use {f,g} for brackets)");
    bracket->add_option("expr", expr)->required();
    bracket->add_option("--n", n, "number of variables")->check(CLI::PositiveNumber);
    bracket->add_option("--bound", bound, "basis degree bound")->check(CLI::PositiveNumber);
    bracket->add_flag("--json", json);

    auto* grade = app.add_subcommand("grade", "split an element by degree mod d");
    grade->add_option("expr", expr)->required();
    grade->add_option("--context", context)->check(CLI::IsMember({"poly", "poisson"}));
    grade->add_option("--n", n)->check(CLI::PositiveNumber);
    grade->add_option("--d", d)->check(CLI::Range(2, 1 << 20));
    grade->add_option("--bound", bound)->check(CLI::PositiveNumber);
    grade->add_flag("--json", json);

    auto* basis = app.add_subcommand("basis", "enumerate the Lyndon basis of the free Lie algebra");
    basis->add_option("--n", n)->check(CLI::PositiveNumber);
    basis->add_option("--max-degree", max_degree)->check(CLI::PositiveNumber);
    basis->add_flag("--json", json);

    auto* restrict_cmd = app.add_subcommand("restrict", "restrict a d-graded ambient map to the Veronese generators");
    restrict_cmd->add_option("--input", path)->required();
    restrict_cmd->add_option("--kind", kind)->check(CLI::IsMember({"derivation", "automorphism"}));
    restrict_cmd->add_flag("--json", json);

    auto* lift_der = app.add_subcommand("lift-derivation", "lift a Veronese derivation to a d-graded derivation");
    lift_der->add_option("--input", path)->required();
    lift_der->add_flag("--json", json);

    auto* lift_aut = app.add_subcommand("lift-automorphism", "lift a Veronese automorphism to a d-graded one");
    lift_aut->add_option("--input", path)->required();
    lift_aut->add_flag("--flip-sign", flip_sign, "compose with -id (even d) to exhibit the other coset");
    lift_aut->add_flag("--json", json);

    auto* lnd = app.add_subcommand("check-lnd", "lift a derivation and test local nilpotency");
    lnd->add_option("--input", path)->required();
    lnd->add_option("--cap", cap)->check(CLI::PositiveNumber);
    lnd->add_flag("--json", json);

    auto* kernel = app.add_subcommand("verify-kernel", "lift a map and its inverse; the composite must be scalar");
    kernel->add_option("--input", path)->required();
    kernel->add_flag("--json", json);

    auto* selftest = app.add_subcommand("selftest", "run the seeded property suites");
    selftest->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (bracket->parsed()) return cmd_bracket(expr, n, bound, json);
        if (grade->parsed()) return cmd_grade(expr, context, n, d, bound, json);
        if (basis->parsed()) return cmd_basis(n, max_degree, json);
        if (restrict_cmd->parsed()) return cmd_restrict(path, kind, json);
        if (lift_der->parsed()) return cmd_lift_derivation(path, json);
        if (lift_aut->parsed()) return cmd_lift_automorphism(path, flip_sign, json);
        if (lnd->parsed()) return cmd_check_lnd(path, cap, json);
        if (kernel->parsed()) return cmd_verify_kernel(path, json);
        if (selftest->parsed()) return veronese::run_selftest(seed, std::cout) == 0 ? kExitOk : kExitUsage;
    } catch (const veronese::OneVariableContext& e) {
        // A mathematically meaningful rejection, not a tool failure.
        std::cerr << "rejected: " << e.what() << "\n";
        return kExitObstructed;
    } catch (const veronese::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const veronese::KernelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
