#include "waveguide/cli/manifest.hpp"

#include <chrono>
#include <ctime>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "waveguide/error.hpp"

namespace wg::cli {

std::string sha256_hex(std::string_view data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw NumericError("SHA-256 digest failed");
    }
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) out += fmt::format("{:02x}", md[i]);
    return out;
}

std::string config_hash(const RunConfig& cfg, std::string_view command, std::string_view gauge_shift) {
    RunConfig c = cfg;
    c.output.clear();
    std::string text = serialize(c);
    text += "command: ";
    text += command;
    text += "\ngauge_shift: ";
    text += gauge_shift;
    text += "\n";
    return sha256_hex(text);
}

nlohmann::ordered_json config_to_json(const RunConfig& c) {
    nlohmann::ordered_json j;
    j["geometry"] = {{"family", c.geometry.family},   {"amplitude", c.geometry.amplitude},
                     {"center", c.geometry.center},   {"scale", c.geometry.scale},
                     {"d", c.geometry.d},             {"L", c.geometry.L},
                     {"curve_step", c.geometry.curve_step}, {"beta", c.geometry.beta}};
    j["field"] = {{"family", c.field.family}, {"amplitude", c.field.amplitude}, {"box", c.field.box}};
    j["grid"] = {{"h", c.grid.h}};
    j["solver"] = {{"k", c.solver.k},
                   {"tol", c.solver.tol},
                   {"max_iter", c.solver.max_iter},
                   {"preconditioner", c.solver.preconditioner}};
    const auto& a = c.analysis;
    j["analysis"] = {{"hardy_safety", a.hardy_safety},       {"hardy_L", a.hardy_L},
                     {"quadrature_step", a.quadrature_step}, {"sweep_step", a.sweep_step},
                     {"beta_star", a.beta_star},             {"weyl_k", a.weyl_k},
                     {"weyl_n", a.weyl_n},                   {"identity_trials", a.identity_trials},
                     {"scan_curvature", a.scan_curvature},   {"scan_field", a.scan_field},
                     {"scan_d", a.scan_d},                   {"scan_L", a.scan_L},
                     {"scan_h", a.scan_h},                   {"threads", a.threads}};
    j["output"] = c.output;
    j["seed"] = c.seed;
    return j;
}

nlohmann::ordered_json RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["tool"] = "waveguide";
    j["version"] = version;
    j["command"] = command;
    j["status"] = error ? "error" : "ok";
    j["config_hash"] = config_hash;
    j["gauge_shift"] = gauge_shift;
    j["config"] = config ? config_to_json(*config) : nlohmann::ordered_json(nullptr);
    j["config_text"] = config_text;
    j["simd"] = simd;
    j["started"] = started;
    j["finished"] = finished;
    j["wall_seconds"] = wall_seconds;
    auto st = nlohmann::ordered_json::array();
    for (const auto& s : stages) st.push_back({{"name", s.name}, {"seconds", s.seconds}});
    j["stages"] = st;
    j["files"] = files;
    j["summary"] = summary;
    if (error) {
        j["error"] = {{"kind", error->kind},
                      {"message", error->message},
                      {"key", error->key},
                      {"line", error->line},
                      {"exit_code", error->exit_code}};
    } else {
        j["error"] = nullptr;
    }
    return j;
}

std::string utc_timestamp() {
    using namespace std::chrono;
    const auto now = system_clock::now();
    const auto ms = duration_cast<milliseconds>(now.time_since_epoch()).count() % 1000;
    const std::time_t t = system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
    return fmt::format("{}.{:03d}Z", buf, static_cast<int>(ms));
}

}  // namespace wg::cli
