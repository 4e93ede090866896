#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "waveguide/cli/config.hpp"

namespace wg::cli {

std::string sha256_hex(std::string_view data);

/// Hash of the canonical serialization (output directory excluded) plus the
/// subcommand and any gauge-shift flag.
std::string config_hash(const RunConfig& cfg, std::string_view command, std::string_view gauge_shift);

struct StageTime {
    std::string name;
    double seconds = 0.0;
};

struct ErrorRecord {
    std::string kind;  // config | numeric | io
    std::string message;
    std::string key;
    int line = 0;
    int exit_code = 0;
};

struct RunManifest {
    std::string command;
    std::optional<RunConfig> config;
    std::string config_text;  // canonical form, or the raw file when parsing failed
    std::string config_hash;
    std::string gauge_shift;
    std::string version;
    std::string simd;
    std::string started, finished;
    double wall_seconds = 0.0;
    std::vector<StageTime> stages;
    std::vector<std::string> files;
    std::string summary;
    std::optional<ErrorRecord> error;

    nlohmann::ordered_json to_json() const;
};

nlohmann::ordered_json config_to_json(const RunConfig& cfg);

/// UTC time as ISO 8601 with milliseconds.
std::string utc_timestamp();

}  // namespace wg::cli
