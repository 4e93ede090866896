#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace wg::cli {

struct GeometryConfig {
    std::string family = "zero";
    double amplitude = 0.0;
    double center = 0.0;
    double scale = 1.0;
    double d = 1.0;
    double L = 30.0;  // default 30 d
    double curve_step = 1e-2;
    double beta = 1.0;
    bool operator==(const GeometryConfig&) const = default;
};

struct FieldConfig {
    std::string family = "zero";
    double amplitude = 0.0;
    std::array<double, 4> box{-1.0, 1.0, 0.0, 1.0};  // x0, x1, y0, y1
    bool operator==(const FieldConfig&) const = default;
};

struct GridConfig {
    double h = 1.0 / 32.0;  // default d/32
    bool operator==(const GridConfig&) const = default;
};

struct SolverConfig {
    std::size_t k = 4;
    double tol = 1e-8;
    std::size_t max_iter = 5000;
    std::string preconditioner = "shifted-cholesky";
    bool operator==(const SolverConfig&) const = default;
};

struct AnalysisConfig {
    double hardy_safety = 0.8;
    std::vector<double> hardy_L{20.0, 40.0};
    double quadrature_step = 0.0;  // 0: min(h_s, h_u)/2
    double sweep_step = 1.0 / 64.0;
    bool beta_star = true;
    double weyl_k = 1.0;
    std::vector<double> weyl_n{8.0, 16.0, 32.0, 64.0};
    std::size_t identity_trials = 20;
    std::vector<double> scan_curvature{0.0};
    std::vector<double> scan_field{0.0};
    std::vector<double> scan_d{};  // empty: geometry.d
    std::vector<double> scan_L{};  // empty: geometry.L
    std::vector<double> scan_h{};  // empty: grid h
    unsigned threads = 0;
    bool operator==(const AnalysisConfig&) const = default;
};

struct RunConfig {
    GeometryConfig geometry;
    FieldConfig field;
    GridConfig grid;
    SolverConfig solver;
    AnalysisConfig analysis;
    std::string output = "out";
    std::uint64_t seed = 42;
    bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config(const std::string& path);

/// Canonical YAML; parse_config_text(serialize(c)) == c and the text is a
/// fixed point of serialize . parse.
std::string serialize(const RunConfig& cfg);

/// Constraint checks (ConfigError naming the key on failure).
void validate(const RunConfig& cfg);

}  // namespace wg::cli
