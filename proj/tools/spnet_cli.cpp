#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "spnet/cli/commands.hpp"
#include "spnet/errors.hpp"

using namespace spnet::cli;

int main(int argc, char** argv) {
    CLI::App app{"Series-parallel resistor network enumeration and verification"};
    RunConfig config;
    unsigned max_n = 0;
    unsigned budget = 0;

    const std::map<std::string, Mode> modes{{"exact", Mode::exact}, {"float", Mode::float_}};
    const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}, {"text", Format::text}};

    app.add_option("command", config.command, "Command to run")->required()->check(CLI::IsMember(command_names()));
    auto* max_n_opt = app.add_option("--max-n", max_n, "Largest n (per-command default when omitted)")
                          ->check(CLI::PositiveNumber);
    app.add_option("--mode", config.mode, "Distribution arithmetic")->transform(CLI::CheckedTransformer(modes));
    app.add_option("--format", config.format, "Output format")->transform(CLI::CheckedTransformer(formats));
    app.add_option("--out", config.out, "Output path (stdout when omitted)");
    app.add_option("--precision", config.precision, "Working precision in bits")->check(CLI::Range(64, 1 << 16));
    app.add_option("--k", config.k, "Comma-separated k values for kresistance")->delimiter(',');
    app.add_option("--suite", config.suite, "verify suite: identities, oracle, biscuits, bounds, gf, all");
    auto* budget_opt = app.add_option("--budget-override", budget, "Raise the size limit of the command")
                           ->check(CLI::PositiveNumber);
    app.add_option("--root-order", config.root_order, "Truncation order of the root method")
        ->check(CLI::Range(100, 100000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (*max_n_opt) config.max_n = max_n;
    if (*budget_opt) config.budget_override = budget;
    config = resolve_defaults(config);

    std::cerr << "config: " << config.describe() << '\n';
    try {
        const CommandResult result = run_command(config);
        for (const std::string& note : result.notes) std::cerr << note << '\n';
        const std::string text = render(result.table, config.format);
        if (config.out.empty())
            std::cout << text;
        else
            write_atomically(config.out, text);
        return result.exit_code;
    } catch (const spnet::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const spnet::PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
}
