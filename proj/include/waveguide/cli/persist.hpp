#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace wg::cli {

/// Comma-separated table; cells are pre-formatted, LF line endings.
struct CsvTable {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row);
    std::string render() const;
};

/// Shortest round-trip decimal form ("nan", "inf" for non-finite values).
std::string cell(double v);
std::string cell(std::size_t v);
std::string cell(bool v);
/// Quoted when it contains a comma, quote or newline.
std::string cell_text(std::string_view v);

/// Writes to a sibling temporary file and renames it over `path`.
/// Throws ConfigError (key "output") when the directory is not writable.
void atomic_write(const std::filesystem::path& path, std::string_view content);

/// Creates `dir` if needed and checks it is writable.
void prepare_output_dir(const std::filesystem::path& dir);

std::string short_hash(const std::string& hash);
std::string table_filename(const std::string& table, const std::string& hash);
std::string manifest_filename(const std::string& command, const std::string& hash);

}  // namespace wg::cli
