#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "waveguide/cli/config.hpp"
#include "waveguide/cli/manifest.hpp"
#include "waveguide/cli/persist.hpp"

namespace wg::cli {

enum ExitCode : int { kOk = 0, kNumericFailure = 1, kConfigError = 2 };

/// Subcommand names in dispatch order.
const std::vector<std::string>& subcommands();

/// Documented header of each CSV table (see docs/config_schema.md).
const std::vector<std::string>& csv_header(std::string_view table);

/// Table names a subcommand emits.
const std::vector<std::string>& command_tables(std::string_view command);

struct CommandOutput {
    std::vector<CsvTable> tables;
    std::string summary;
    std::string failure;  // non-empty: artifacts written but the run is a numeric failure
};

/// Runs one subcommand without touching the filesystem. Stage wall times are
/// appended to `stages`.
CommandOutput execute(std::string_view command, const RunConfig& cfg, const std::string& gauge_shift,
                      std::vector<StageTime>& stages);

struct RunOptions {
    std::string command;
    std::string config_path;  // empty: all defaults
    std::optional<std::string> out_dir;
    std::optional<std::uint64_t> seed;
    bool force = false;
    std::string gauge_shift;
};

struct RunOutcome {
    int exit_code = kOk;
    bool duplicate = false;
    std::vector<std::string> files;  // absolute or out-dir relative paths written
    std::string manifest_path;
    std::string summary;
};

/// Parse, execute, persist. Never throws; errors map to exit codes and are
/// recorded in the manifest when the output directory is usable.
RunOutcome run(const RunOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace wg::cli
