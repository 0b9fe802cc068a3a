#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "condsup/commands.hpp"

namespace {

using namespace condsup;
using namespace condsup::cli;

void add_format(CLI::App* cmd, Format& format) {
    cmd->add_option("--format", format, "Report format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}}));
}

Rational rational_option(const std::string& text, const char* flag) {
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw ParseError(flag, e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conditional supremum toolkit: conditional operators, AIP/NA checks, superhedging prices and "
                 "max-ergodic checks on finite scenario files"};
    app.require_subcommand(1);

    std::string file;
    CondopsOptions condops;
    auto* c_condops = app.add_subcommand("condops", "Conditional expectation, supremum, infimum, delta, nearest "
                                                    "point and L^p limit of a named vector");
    c_condops->add_option("file", file, "Scenario file")->required();
    c_condops->add_option("vector", condops.vector, "Name from the vectors section")->required();
    c_condops->add_option("--time", condops.time, "Filtration time whose partition is used");
    c_condops->add_option("--p-max", condops.p_max, "Largest p on the doubling grid");
    add_format(c_condops, condops.format);

    std::string check_kind;
    Format check_format = Format::text;
    auto* c_check = app.add_subcommand("check", "Absence of immediate profit (aip) or no arbitrage (na)");
    c_check->add_option("file", file, "Scenario file")->required();
    c_check->add_option("condition", check_kind, "aip or na")->required()->check(CLI::IsMember({"aip", "na"}));
    add_format(c_check, check_format);

    PriceOptions price;
    std::string eps_text = "1/1000";
    auto* c_price = app.add_subcommand("price", "Minimal superhedging price of a named claim");
    c_price->add_option("file", file, "Scenario file")->required();
    c_price->add_option("claim", price.claim, "Name from the claims section")->required();
    c_price->add_option("--time", price.time, "Pricing time");
    c_price->add_option("--eps", eps_text, "Minimality probe, an exact rational p/q");
    add_format(c_price, price.format);

    ErgodicOptions ergodic;
    auto* c_ergodic = app.add_subcommand("ergodic", "Ergodicity, max-ergodic check and Cesaro means");
    c_ergodic->add_option("file", file, "Scenario file")->required();
    c_ergodic->add_option("--trials", ergodic.trials, "Random probes for the max-ergodic check");
    c_ergodic->add_option("--seed", ergodic.seed, "Seed for the random probes");
    add_format(c_ergodic, ergodic.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseError;
    }

    try {
        if (c_price->parsed()) price.eps = rational_option(eps_text, "--eps");
        const Scenario scenario = load_scenario(file);
        if (c_condops->parsed()) return run_condops(scenario, condops, std::cout);
        if (c_check->parsed())
            return run_check(scenario, check_kind == "aip" ? CheckKind::aip : CheckKind::na, check_format, std::cout);
        if (c_price->parsed()) return run_price(scenario, price, std::cout);
        if (c_ergodic->parsed()) return run_ergodic(scenario, ergodic, std::cout);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const UnboundedPriceError&) {
        return kConditionFails;
    } catch (const Error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidationError;
    }
    return kParseError;
}
