#include "waveguide/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "waveguide/eigen/solve.hpp"
#include "waveguide/error.hpp"
#include "waveguide/geometry/curvature.hpp"
#include "waveguide/magnetic/field.hpp"

namespace wg::cli {
namespace {

int line_of(const YAML::Node& n) { return n.Mark().is_null() ? 0 : n.Mark().line + 1; }

void reject_unknown(const YAML::Node& map, const std::string& path, const std::set<std::string>& allowed) {
    if (!map.IsMap()) throw ConfigError("expected a mapping", path, line_of(map));
    for (const auto& kv : map) {
        const auto key = kv.first.as<std::string>();
        if (!allowed.count(key)) {
            const std::string full = path.empty() ? key : path + "." + key;
            throw ConfigError("unknown key '" + full + "'", full, line_of(kv.first));
        }
    }
}

template <class T>
void read(const YAML::Node& map, const std::string& path, const char* key, T& out) {
    const YAML::Node n = map[key];
    if (!n) return;
    const std::string full = path + "." + key;
    try {
        if constexpr (std::is_same_v<T, std::vector<double>>) {
            if (!n.IsSequence()) throw YAML::Exception(n.Mark(), "not a sequence");
        } else {
            if (!n.IsScalar()) throw YAML::Exception(n.Mark(), "not a scalar");
        }
        out = n.as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError("type mismatch for '" + full + "'", full, line_of(n));
    }
}

void read_box(const YAML::Node& map, const std::string& path, std::array<double, 4>& box) {
    std::vector<double> v;
    read(map, path, "box", v);
    if (!map["box"]) return;
    if (v.size() != 4) throw ConfigError("box needs [x0, x1, y0, y1]", path + ".box", line_of(map["box"]));
    std::copy(v.begin(), v.end(), box.begin());
}

int key_line(const YAML::Node& root, const std::string& key) {
    const auto dot = key.find('.');
    const YAML::Node section = root[key.substr(0, dot)];
    if (!section) return 0;
    if (dot == std::string::npos || !section.IsMap()) return line_of(section);
    const YAML::Node leaf = section[key.substr(dot + 1)];
    return leaf ? line_of(leaf) : line_of(section);
}

std::string num(double v) { return fmt::format("{}", v); }

std::string list(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + num(v[i]);
    return out + "]";
}

void require(bool ok, const std::string& msg, const std::string& key) {
    if (!ok) throw ConfigError(msg, key);
}

void positive_list(const std::vector<double>& v, const std::string& key) {
    for (double x : v) require(std::isfinite(x) && x > 0.0, "entries must be positive", key);
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw ConfigError(std::string("malformed configuration: ") + e.msg, "", e.mark.line + 1);
    }
    RunConfig c;
    if (root.IsNull()) {
        validate(c);
        return c;
    }
    reject_unknown(root, "", {"geometry", "field", "grid", "solver", "analysis", "output", "seed"});

    bool have_L = false, have_h = false;
    if (const auto g = root["geometry"]) {
        reject_unknown(g, "geometry", {"family", "amplitude", "center", "scale", "d", "L", "curve_step", "beta"});
        read(g, "geometry", "family", c.geometry.family);
        read(g, "geometry", "amplitude", c.geometry.amplitude);
        read(g, "geometry", "center", c.geometry.center);
        read(g, "geometry", "scale", c.geometry.scale);
        read(g, "geometry", "d", c.geometry.d);
        read(g, "geometry", "L", c.geometry.L);
        read(g, "geometry", "curve_step", c.geometry.curve_step);
        read(g, "geometry", "beta", c.geometry.beta);
        have_L = static_cast<bool>(g["L"]);
    }
    if (const auto f = root["field"]) {
        reject_unknown(f, "field", {"family", "amplitude", "box"});
        read(f, "field", "family", c.field.family);
        read(f, "field", "amplitude", c.field.amplitude);
        read_box(f, "field", c.field.box);
    }
    if (const auto g = root["grid"]) {
        reject_unknown(g, "grid", {"h"});
        read(g, "grid", "h", c.grid.h);
        have_h = static_cast<bool>(g["h"]);
    }
    if (const auto s = root["solver"]) {
        reject_unknown(s, "solver", {"k", "tol", "max_iter", "preconditioner"});
        read(s, "solver", "k", c.solver.k);
        read(s, "solver", "tol", c.solver.tol);
        read(s, "solver", "max_iter", c.solver.max_iter);
        read(s, "solver", "preconditioner", c.solver.preconditioner);
    }
    if (const auto a = root["analysis"]) {
        reject_unknown(a, "analysis",
                       {"hardy_safety", "hardy_L", "quadrature_step", "sweep_step", "beta_star", "weyl_k", "weyl_n",
                        "identity_trials", "scan_curvature", "scan_field", "scan_d", "scan_L", "scan_h", "threads"});
        read(a, "analysis", "hardy_safety", c.analysis.hardy_safety);
        read(a, "analysis", "hardy_L", c.analysis.hardy_L);
        read(a, "analysis", "quadrature_step", c.analysis.quadrature_step);
        read(a, "analysis", "sweep_step", c.analysis.sweep_step);
        read(a, "analysis", "beta_star", c.analysis.beta_star);
        read(a, "analysis", "weyl_k", c.analysis.weyl_k);
        read(a, "analysis", "weyl_n", c.analysis.weyl_n);
        read(a, "analysis", "identity_trials", c.analysis.identity_trials);
        read(a, "analysis", "scan_curvature", c.analysis.scan_curvature);
        read(a, "analysis", "scan_field", c.analysis.scan_field);
        read(a, "analysis", "scan_d", c.analysis.scan_d);
        read(a, "analysis", "scan_L", c.analysis.scan_L);
        read(a, "analysis", "scan_h", c.analysis.scan_h);
        read(a, "analysis", "threads", c.analysis.threads);
    }
    read(root, "", "output", c.output);
    read(root, "", "seed", c.seed);

    if (!have_L) c.geometry.L = 30.0 * c.geometry.d;
    if (!have_h) c.grid.h = c.geometry.d / 32.0;
    try {
        validate(c);
    } catch (const ConfigError& e) {
        throw ConfigError(e.what(), e.key(), key_line(root, e.key()));
    }
    return c;
}

RunConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read configuration file '" + path + "'", "config");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string serialize(const RunConfig& c) {
    std::string o;
    auto line = [&](const std::string& k, const std::string& v) { o += "  " + k + ": " + v + "\n"; };
    o += "geometry:\n";
    line("family", c.geometry.family);
    line("amplitude", num(c.geometry.amplitude));
    line("center", num(c.geometry.center));
    line("scale", num(c.geometry.scale));
    line("d", num(c.geometry.d));
    line("L", num(c.geometry.L));
    line("curve_step", num(c.geometry.curve_step));
    line("beta", num(c.geometry.beta));
    o += "field:\n";
    line("family", c.field.family);
    line("amplitude", num(c.field.amplitude));
    line("box", list({c.field.box.begin(), c.field.box.end()}));
    o += "grid:\n";
    line("h", num(c.grid.h));
    o += "solver:\n";
    line("k", std::to_string(c.solver.k));
    line("tol", num(c.solver.tol));
    line("max_iter", std::to_string(c.solver.max_iter));
    line("preconditioner", c.solver.preconditioner);
    o += "analysis:\n";
    const auto& a = c.analysis;
    line("hardy_safety", num(a.hardy_safety));
    line("hardy_L", list(a.hardy_L));
    line("quadrature_step", num(a.quadrature_step));
    line("sweep_step", num(a.sweep_step));
    line("beta_star", a.beta_star ? "true" : "false");
    line("weyl_k", num(a.weyl_k));
    line("weyl_n", list(a.weyl_n));
    line("identity_trials", std::to_string(a.identity_trials));
    line("scan_curvature", list(a.scan_curvature));
    line("scan_field", list(a.scan_field));
    line("scan_d", list(a.scan_d));
    line("scan_L", list(a.scan_L));
    line("scan_h", list(a.scan_h));
    line("threads", std::to_string(a.threads));
    o += "output: \"" + c.output + "\"\n";
    o += "seed: " + std::to_string(c.seed) + "\n";
    return o;
}

void validate(const RunConfig& c) {
    const auto& g = c.geometry;
    require(std::isfinite(g.d) && g.d > 0.0, "d must be positive", "geometry.d");
    require(std::isfinite(g.L) && g.L > 0.0, "L must be positive", "geometry.L");
    require(g.scale > 0.0, "scale must be positive", "geometry.scale");
    require(g.curve_step > 0.0, "curve_step must be positive", "geometry.curve_step");
    require(g.beta > 0.0, "beta must be positive", "geometry.beta");
    require(std::isfinite(g.amplitude), "amplitude must be finite", "geometry.amplitude");
    geometry::CurvatureProfile profile;
    try {
        profile.family = geometry::parse_curvature_family(g.family);
    } catch (const ConfigError& e) {
        throw ConfigError(e.what(), "geometry.family");
    }
    profile.amplitude = g.amplitude;
    profile.scale = g.scale;
    require(g.d * profile.sup_abs() < 1.0, "d * sup|gamma| >= 1: the strip chart is not invertible",
            "geometry.amplitude");

    magnetic::MagneticField field;
    field.family = magnetic::parse_field_family(c.field.family);
    field.amplitude = c.field.amplitude;
    field.box = {c.field.box[0], c.field.box[1], c.field.box[2], c.field.box[3]};
    magnetic::check_field(field);

    require(std::isfinite(c.grid.h) && c.grid.h > 0.0 && c.grid.h < g.d, "h must lie in (0, d)", "grid.h");
    require(c.solver.k >= 1, "k must be at least 1", "solver.k");
    require(c.solver.tol > 0.0, "tol must be positive", "solver.tol");
    require(c.solver.max_iter >= 1, "max_iter must be at least 1", "solver.max_iter");
    eigen::parse_preconditioner(c.solver.preconditioner);

    const auto& a = c.analysis;
    require(a.hardy_safety > 0.0 && a.hardy_safety <= 1.0, "hardy_safety must lie in (0, 1]", "analysis.hardy_safety");
    require(!a.hardy_L.empty(), "hardy_L must not be empty", "analysis.hardy_L");
    positive_list(a.hardy_L, "analysis.hardy_L");
    require(a.quadrature_step >= 0.0, "quadrature_step must be >= 0", "analysis.quadrature_step");
    require(a.sweep_step > 0.0, "sweep_step must be positive", "analysis.sweep_step");
    require(a.weyl_k >= 0.0, "weyl_k must be >= 0", "analysis.weyl_k");
    require(a.weyl_n.size() >= 2, "weyl_n needs at least two entries", "analysis.weyl_n");
    positive_list(a.weyl_n, "analysis.weyl_n");
    require(!a.scan_curvature.empty(), "scan_curvature must not be empty", "analysis.scan_curvature");
    require(!a.scan_field.empty(), "scan_field must not be empty", "analysis.scan_field");
    positive_list(a.scan_d, "analysis.scan_d");
    positive_list(a.scan_L, "analysis.scan_L");
    positive_list(a.scan_h, "analysis.scan_h");
    require(!c.output.empty(), "output must not be empty", "output");
}

}  // namespace wg::cli
