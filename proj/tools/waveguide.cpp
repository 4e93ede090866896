#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "waveguide/cli/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Spectra of curved magnetic waveguides"};
    app.require_subcommand(1);

    wg::cli::RunOptions opts;
    std::string out_dir;
    std::uint64_t seed = 0;
    auto* out_opt = app.add_option("--out", out_dir, "Output directory (overrides the config)");
    auto* seed_opt = app.add_option("--seed", seed, "RNG seed (overrides the config)");
    app.add_option("--config", opts.config_path, "YAML run configuration")->check(CLI::ExistingFile);
    app.add_flag("--force", opts.force, "Recompute even if an identical run exists");
    app.add_option("--gauge-shift", opts.gauge_shift,
                   "Add grad chi to the potential: bump:<amp>:<x0>:<x1>:<y0>:<y1> or linear:<cx>:<cy>");
    const std::map<std::string, std::string> help{
        {"geometry", "Frame, Jacobian and validity checks of the strip chart"},
        {"spectrum", "Lowest eigenvalues and bound states below the transverse threshold"},
        {"certify", "Absence-of-bound-states certificate and beta*"},
        {"hardy", "Magnetic Hardy constant at the configured lengths"},
        {"weyl", "Residual decay of a Weyl sequence and its magnetic windowed bound"},
        {"identity", "Integration-by-parts identity and perturbation cross-check"},
        {"scan", "Bound-state count and certification over a parameter grid"},
    };
    for (const auto& name : wg::cli::subcommands()) {
        const auto it = help.find(name);
        app.add_subcommand(name, it == help.end() ? std::string{} : it->second)->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : wg::cli::kConfigError;
    }
    opts.command = app.get_subcommands().front()->get_name();
    if (*out_opt) opts.out_dir = out_dir;
    if (*seed_opt) opts.seed = seed;
    return wg::cli::run(opts, std::cout, std::cerr).exit_code;
}
