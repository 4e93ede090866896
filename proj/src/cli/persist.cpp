#include "waveguide/cli/persist.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>
#include <unistd.h>

#include "waveguide/error.hpp"

namespace wg::cli {

void CsvTable::add(std::vector<std::string> row) {
    if (row.size() != header.size()) throw NumericError("CSV row width does not match header of " + name);
    rows.push_back(std::move(row));
}

std::string CsvTable::render() const {
    std::string out;
    auto emit = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) out += ',';
            out += r[i];
        }
        out += '\n';
    };
    emit(header);
    for (const auto& r : rows) emit(r);
    return out;
}

std::string cell(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return fmt::format("{}", v);
}

std::string cell(std::size_t v) { return std::to_string(v); }
std::string cell(bool v) { return v ? "true" : "false"; }

std::string cell_text(std::string_view v) {
    if (v.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(v);
    std::string out = "\"";
    for (char c : v) {
        if (c == '"') out += '"';
        out += (c == '\n' || c == '\r') ? ' ' : c;
    }
    return out + "\"";
}

void prepare_output_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw ConfigError("cannot create output directory '" + dir.string() + "'", "output");
    }
    if (::access(dir.c_str(), W_OK) != 0) throw ConfigError("output directory '" + dir.string() + "' is not writable", "output");
}

void atomic_write(const std::filesystem::path& path, std::string_view content) {
    const auto tmp = path.string() + fmt::format(".tmp.{}", static_cast<long>(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot write '" + tmp + "'", "output");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::filesystem::remove(tmp);
            throw ConfigError("write failed for '" + tmp + "'", "output");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw ConfigError("cannot rename into '" + path.string() + "': " + ec.message(), "output");
    }
}

std::string short_hash(const std::string& hash) { return hash.substr(0, 12); }

std::string table_filename(const std::string& table, const std::string& hash) {
    return table + "-" + short_hash(hash) + ".csv";
}

std::string manifest_filename(const std::string& command, const std::string& hash) {
    return command + "-" + short_hash(hash) + ".manifest.json";
}

}  // namespace wg::cli
