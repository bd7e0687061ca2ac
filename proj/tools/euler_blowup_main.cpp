#include <cstdint>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "eulerblowup/commands.hpp"
#include "eulerblowup/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Localized-moment blowup certificates for compressible Euler flows"};
    app.set_version_flag("--version", std::string(eb::kVersion));
    app.require_subcommand(1);

    struct Args {
        std::string config;
        std::optional<std::string> out;
        std::optional<std::uint64_t> seed;
    };

    std::string chosen;
    Args args;
    for (const char* name : {"constants", "analyze", "figures", "phantom"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", args.config, "Scenario JSON file")->required();
        sub->add_option("--out", args.out, "Output directory (overrides the config)");
        sub->add_option("--seed", args.seed, "RNG seed (overrides the config)");
        sub->callback([&chosen, name] { chosen = name; });
    }
    app.get_subcommand("constants")->description("Print and write the derived constants");
    app.get_subcommand("analyze")->description("Run the certificate checkers for the scenario");
    app.get_subcommand("figures")->description("Emit the phase-portrait and dynamics CSV data");
    app.get_subcommand("phantom")->description("Search for data meeting the open singularity condition");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        // CLI11's own codes are remapped onto the documented contract:
        // anything wrong with the invocation is a configuration error.
        return rc == 0 ? 0 : eb::kExitBadConfig;
    }

    return eb::run_command(chosen, args.config, args.out, args.seed);
}
