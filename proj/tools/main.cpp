#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "exalg/checks.hpp"
#include "exalg/parse.hpp"
#include "exalg/report.hpp"

namespace {

exalg::MonomialOrder order_from_name(const std::string& name) {
    return name == "lex" ? exalg::MonomialOrder::lex() : exalg::MonomialOrder::grevlex();
}

int run_verify(const std::string& check_id, const exalg::CheckOptions& options, bool json) {
    std::vector<exalg::VerificationReport> reports;
    if (check_id == "all") {
        reports = exalg::run_all(options);
    } else {
        reports.push_back(exalg::run_verification(check_id, options));
    }
    if (json) {
        if (reports.size() == 1)
            std::cout << exalg::render_json(reports.front());
        else
            std::cout << exalg::render_json(reports);
    } else {
        for (const auto& r : reports) std::cout << exalg::render_text(r);
    }
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

int run_ideal(const std::string& expr_arg, const std::string& ring_spec,
              const exalg::MonomialOrder& order, bool json) {
    std::string src = expr_arg;
    if (src == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        src = buf.str();
    }
    exalg::VarSet ring = exalg::VarSet::split(ring_spec);
    exalg::IdealExprPtr ast = exalg::parse_ideal_expr(src, ring);
    exalg::IdealValue value = exalg::evaluate(*ast);

    std::string engine;
    std::vector<std::string> gens;
    if (std::holds_alternative<exalg::MonomialIdeal>(value)) {
        engine = "monomial";
        const auto& ideal = std::get<exalg::MonomialIdeal>(value);
        for (const auto& m : ideal.gens()) gens.push_back(m.to_string(ring));
    } else {
        engine = "groebner";
        const auto& ideal = std::get<exalg::PolyIdeal>(value);
        for (const auto& g : ideal.groebner_basis(order)) gens.push_back(g.to_string());
    }

    if (json) {
        nlohmann::ordered_json out{{"ring", ring.to_string()},
                                   {"engine", engine},
                                   {"order", order.to_string()},
                                   {"generators", gens}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "ring: " << ring.to_string() << "\n";
        if (engine == "monomial") {
            std::cout << "minimal generators:";
        } else {
            std::cout << "reduced groebner basis (" << order.to_string() << "):";
        }
        if (gens.empty()) std::cout << " (0)";
        std::cout << "\n";
        for (const auto& g : gens) std::cout << "  " << g << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of ideal identities, blow-up charts and cycle relations"};
    app.require_subcommand(1);

    bool verify_json = false, ideal_json = false;
    std::string order_name = "grevlex";
    long long bound = 3;
    uint64_t seed = 0;
    std::vector<std::string> check_tokens;

    CLI::App* verify = app.add_subcommand("verify", "run a scripted verification check");
    verify->add_option("check", check_tokens, "check id (see --list), or 'all'")
        ->expected(-1);
    bool list_checks = false;
    verify->add_flag("--list", list_checks, "list the known check ids");
    verify->add_flag("--json", verify_json, "emit a machine-readable report");
    verify->add_option("--order", order_name, "monomial order for non-elimination work")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    verify->add_option("--bound", bound, "effective-zero search bound")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "seed for randomized property cross-checks");

    std::string expr_arg, ring_spec = "x1,x2,x3";
    CLI::App* ideal = app.add_subcommand("ideal", "evaluate an ideal expression");
    ideal->add_option("expression", expr_arg, "expression, or '-' to read standard input")
        ->required();
    ideal->add_option("--ring", ring_spec, "comma-separated variable names");
    ideal->add_flag("--json", ideal_json, "emit machine-readable output");
    ideal->add_option("--order", order_name, "monomial order for the groebner engine")
        ->check(CLI::IsMember({"grevlex", "lex"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (list_checks) {
                for (const auto& id : exalg::known_checks()) std::cout << id << "\n";
                return 0;
            }
            if (check_tokens.empty()) {
                std::cerr << "error: missing check id (try --list)\n";
                return 2;
            }
            std::string check_id;
            for (const auto& tok : check_tokens) {
                if (!check_id.empty()) check_id += " ";
                check_id += tok;
            }
            exalg::CheckOptions options;
            options.order = order_from_name(order_name);
            options.bound = bound;
            options.seed = seed;
            return run_verify(check_id, options, verify_json);
        }
        return run_ideal(expr_arg, ring_spec, order_from_name(order_name), ideal_json);
    } catch (const exalg::UnknownCheck& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "known checks:";
        for (const auto& id : exalg::known_checks()) std::cerr << " '" << id << "'";
        std::cerr << " or 'all'\n";
        return 2;
    } catch (const exalg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
