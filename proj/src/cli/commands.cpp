#include "waveguide/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "waveguide/analysis/bound_states.hpp"
#include "waveguide/analysis/constants.hpp"
#include "waveguide/analysis/hardy.hpp"
#include "waveguide/analysis/lemma.hpp"
#include "waveguide/analysis/perturbation.hpp"
#include "waveguide/analysis/scan.hpp"
#include "waveguide/analysis/test_function.hpp"
#include "waveguide/analysis/weyl.hpp"
#include "waveguide/assembly/grid.hpp"
#include "waveguide/eigen/solve.hpp"
#include "waveguide/error.hpp"
#include "waveguide/geometry/waveguide.hpp"
#include "waveguide/magnetic/potential.hpp"
#include "waveguide/magnetic/pullback.hpp"
#include "waveguide/simd/kernels.hpp"

namespace wg::cli {
namespace {

using Header = std::vector<std::string>;

const std::map<std::string, Header, std::less<>>& headers() {
    static const std::map<std::string, Header, std::less<>> h = {
        {"geometry", {"s", "a", "b", "gamma", "jac_min_over_u"}},
        {"geometry_validity",
         {"d", "L", "beta", "sup_d_gamma", "chart_invertible", "self_intersects", "min_boundary_separation", "margin",
          "valid", "r_ab", "r_adot", "r_id"}},
        {"spectrum",
         {"d", "L", "h", "threshold", "discrete_threshold", "lambda1", "gap", "count", "eigenvalues_below",
          "converged"}},
        {"spectrum_eigenvalues", {"index", "lambda", "lambda_2L", "gap", "eps_trunc", "bound_state"}},
        {"certify",
         {"curvature_amplitude", "field_amplitude", "d", "L", "C", "alpha1", "alpha2", "sup_gamma", "sup_a1", "sup_a2",
          "sup_rho1", "field_meets_strip", "possible", "pass", "margin", "margin_corrected", "margin_smoothed",
          "worst_s", "beta_star", "rho_limit"}},
        {"certify_profile",
         {"s", "rho1", "rho2", "rho1_dot", "rho1_ddot", "rho1_smooth", "rho1_dot_smooth", "rho1_ddot_smooth"}},
        {"hardy", {"L", "d", "h", "field_amplitude", "c", "shift", "converged"}},
        {"hardy_scaling", {"L", "d", "h", "c_d", "c_pi", "c_pi_exact", "rel_diff", "rel_diff_exact"}},
        {"weyl", {"n", "mu", "value", "norm", "slope"}},
        {"weyl_magnetic", {"n", "windowed", "sup_a1_sq", "grad_norm", "bound", "ratio"}},
        {"identity_lemma", {"trial", "lhs", "weighted", "ff2", "f2", "residual", "residual_literal"}},
        {"identity_perturbation", {"trial", "I_value", "I_imag", "bound_value", "difference", "satisfied"}},
        {"scan",
         {"curvature_amplitude", "field_amplitude", "d", "L", "h", "ok", "error", "lambda1", "discrete_threshold", "gap",
          "count", "C", "certification_possible", "certified", "margin"}},
    };
    return h;
}

const std::map<std::string, std::vector<std::string>, std::less<>>& tables_by_command() {
    static const std::map<std::string, std::vector<std::string>, std::less<>> t = {
        {"geometry", {"geometry", "geometry_validity"}},
        {"spectrum", {"spectrum", "spectrum_eigenvalues"}},
        {"certify", {"certify", "certify_profile"}},
        {"hardy", {"hardy", "hardy_scaling"}},
        {"weyl", {"weyl", "weyl_magnetic"}},
        {"identity", {"identity_lemma", "identity_perturbation"}},
        {"scan", {"scan"}},
    };
    return t;
}

CsvTable table(const std::string& name) { return CsvTable{name, csv_header(name), {}}; }

class StageClock {
public:
    StageClock(std::vector<StageTime>& out, std::string name)
        : out_(out), name_(std::move(name)), t0_(std::chrono::steady_clock::now()) {}
    ~StageClock() {
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0_;
        out_.push_back({name_, dt.count()});
    }

private:
    std::vector<StageTime>& out_;
    std::string name_;
    std::chrono::steady_clock::time_point t0_;
};

struct Setup {
    geometry::CurvatureProfile profile;
    magnetic::MagneticField field;
    magnetic::VectorPotential A;
    eigen::SolverOptions solver;
    double quad_step = 0.0;
};

Setup make_setup(const RunConfig& cfg, const std::string& gauge_shift) {
    Setup s;
    s.profile.family = geometry::parse_curvature_family(cfg.geometry.family);
    s.profile.amplitude = cfg.geometry.amplitude;
    s.profile.center = cfg.geometry.center;
    s.profile.scale = cfg.geometry.scale;
    s.field.family = magnetic::parse_field_family(cfg.field.family);
    s.field.amplitude = cfg.field.amplitude;
    s.field.box = {cfg.field.box[0], cfg.field.box[1], cfg.field.box[2], cfg.field.box[3]};
    s.A = magnetic::gauge_from_field(s.field);
    if (!gauge_shift.empty()) s.A = magnetic::gauge_shift(s.A, magnetic::parse_gauge_function(gauge_shift));
    s.solver.k = cfg.solver.k;
    s.solver.tol = cfg.solver.tol;
    s.solver.max_iter = cfg.solver.max_iter;
    s.solver.seed = cfg.seed;
    s.solver.preconditioner = eigen::parse_preconditioner(cfg.solver.preconditioner);
    s.quad_step = cfg.analysis.quadrature_step > 0.0 ? cfg.analysis.quadrature_step : cfg.grid.h / 2.0;
    return s;
}

geometry::WaveguideGeometry make_geometry(const RunConfig& cfg, const Setup& s, double L) {
    geometry::WaveguideGeometry geom(s.profile, cfg.geometry.d, L, cfg.geometry.curve_step);
    geometry::require_valid(geom);
    return geom;
}

CommandOutput cmd_geometry(const RunConfig& cfg, const Setup& s, std::vector<StageTime>& st) {
    CommandOutput out;
    auto t = table("geometry");
    auto v = table("geometry_validity");
    StageClock clock(st, "geometry");
    const geometry::WaveguideGeometry geom(s.profile, cfg.geometry.d, cfg.geometry.L, cfg.geometry.curve_step);
    const auto& c = geom.curve();
    const double d = cfg.geometry.d;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (std::abs(c.s[i]) > cfg.geometry.L * (1.0 + 1e-12)) continue;
        const double g = geom.curvature(c.s[i])[0];
        t.add({cell(c.s[i]), cell(c.a[i]), cell(c.b[i]), cell(g), cell(std::min(1.0, 1.0 + d * g))});
    }
    const auto r = geometry::validate(geom, cfg.geometry.beta);
    const auto fr = geometry::frame_residuals(c);
    v.add({cell(d), cell(cfg.geometry.L), cell(cfg.geometry.beta), cell(r.sup_d_gamma), cell(r.chart_invertible),
           cell(r.self_intersects), cell(r.min_boundary_separation), cell(r.margin), cell(r.valid()), cell(fr.r_ab),
           cell(fr.r_adot), cell(fr.r_id)});
    out.summary = fmt::format("valid={} sup_d_gamma={} margin={}", r.valid(), r.sup_d_gamma, r.margin);
    out.tables = {std::move(t), std::move(v)};
    return out;
}

CommandOutput cmd_spectrum(const RunConfig& cfg, const Setup& s, std::vector<StageTime>& st) {
    CommandOutput out;
    auto t = table("spectrum");
    auto e = table("spectrum_eigenvalues");
    const auto geom = make_geometry(cfg, s, cfg.geometry.L);
    const auto pot = magnetic::pullback(s.A, geom);
    const auto grid = assembly::make_grid(cfg.geometry.L, cfg.geometry.d, cfg.grid.h);
    analysis::SpectralReport rep;
    {
        StageClock clock(st, "find_bound_states");
        rep = analysis::find_bound_states(geom, pot, grid, s.solver);
    }
    const std::size_t below = rep.stability.empty() ? 0 : rep.stability.front().count_below;
    t.add({cell(cfg.geometry.d), cell(cfg.geometry.L), cell(cfg.grid.h), cell(rep.threshold),
           cell(rep.discrete_threshold), cell(rep.lambda1()), cell(rep.gap1()), cell(rep.bound_states.size()),
           cell(below), cell(rep.converged)});
    const double tail = std::pow(std::numbers::pi / (2.0 * cfg.geometry.L), 2);
    const auto* at2L = rep.stability.size() > 1 ? &rep.stability[1].eigenvalues : nullptr;
    for (std::size_t i = 0; i < rep.eigenvalues.size(); ++i) {
        const double lam = rep.eigenvalues[i];
        const double lam2 = at2L && i < at2L->size() ? (*at2L)[i] : std::nan("");
        bool bound = false;
        double eps = std::abs(lam - lam2) + tail;
        for (const auto& b : rep.bound_states) {
            if (b.index == i) {
                bound = true;
                eps = b.eps_trunc;
            }
        }
        e.add({cell(i), cell(lam), cell(lam2), cell(rep.discrete_threshold - lam), cell(eps), cell(bound)});
    }
    out.summary = fmt::format("lambda1={} gap={} count={}", rep.lambda1(), rep.gap1(), rep.bound_states.size());
    if (!rep.converged) out.failure = "eigensolver did not converge";
    out.tables = {std::move(t), std::move(e)};
    return out;
}

double certification_C(const RunConfig& cfg, const Setup& s, std::vector<StageTime>& st) {
    StageClock clock(st, "hardy_constant");
    return cfg.analysis.hardy_safety *
           analysis::hardy_constant(s.field, cfg.geometry.d, cfg.analysis.hardy_L.front(), cfg.grid.h, s.solver).c;
}

CommandOutput cmd_certify(const RunConfig& cfg, const Setup& s, std::vector<StageTime>& st) {
    CommandOutput out;
    auto t = table("certify");
    auto p = table("certify_profile");
    const double d = cfg.geometry.d;
    const double C = certification_C(cfg, s, st);
    const auto geom = make_geometry(cfg, s, cfg.geometry.L);
    const auto pot = magnetic::pullback(s.A, geom);
    analysis::ConstantsBundle b;
    analysis::Certification c;
    {
        StageClock clock(st, "certify");
        b = analysis::constants_bundle(pot, d, C, cfg.analysis.sweep_step);
        c = analysis::certify_beta0(b, d);
    }
    analysis::BetaStar bs{std::nan(""), std::nan(""), 0};
    if (cfg.analysis.beta_star && s.profile.family != geometry::CurvatureFamily::Zero) {
        StageClock clock(st, "beta_star");
        auto dir = s.profile;
        if (dir.amplitude == 0.0) dir.amplitude = 1.0;
        bs = analysis::find_beta_star(dir, s.A, d, cfg.geometry.L, C, cfg.geometry.curve_step,
                                      cfg.analysis.sweep_step);
    }
    const bool meets = magnetic::field_meets_strip(s.field, geom, cfg.grid.h);
    t.add({cell(cfg.geometry.amplitude), cell(cfg.field.amplitude), cell(d), cell(cfg.geometry.L), cell(C),
           cell(b.alpha1), cell(b.alpha2), cell(b.sup_gamma), cell(b.sup_a1), cell(b.sup_a2), cell(b.sup_rho1),
           cell(meets), cell(c.possible), cell(c.pass), cell(c.margin), cell(c.margin_corrected),
           cell(c.margin_smoothed), cell(c.worst_s), cell(bs.beta_star), cell(bs.rho_limit)});
    for (std::size_t i = 0; i < b.s.size(); ++i) {
        p.add({cell(b.s[i]), cell(b.rho1[i]), cell(b.rho2[i]), cell(b.rho1_dot[i]), cell(b.rho1_ddot[i]),
               cell(b.rho1_smooth[i]), cell(b.rho1_dot_smooth[i]), cell(b.rho1_ddot_smooth[i])});
    }
    out.summary = fmt::format("pass={} margin={} C={} beta_star={}", c.pass, c.margin, C, bs.beta_star);
    out.tables = {std::move(t), std::move(p)};
    return out;
}

CommandOutput cmd_hardy(const RunConfig& cfg, const Setup& s, std::vector<StageTime>& st) {
    CommandOutput out;
    auto t = table("hardy");
    auto sc = table("hardy_scaling");
    const double d = cfg.geometry.d, h = cfg.grid.h;
    std::string parts;
    for (double L : cfg.analysis.hardy_L) {
        StageClock clock(st, fmt::format("hardy_L{}", L));
        const auto r = analysis::hardy_constant(s.field, d, L, h, s.solver);
        t.add({cell(L), cell(d), cell(h), cell(cfg.field.amplitude), cell(r.c), cell(r.shift),
               cell(r.eig.all_converged())});
        parts += fmt::format(" c(L={})={}", L, r.c);
    }
    {
        StageClock clock(st, "hardy_scaling");
        const double L = cfg.analysis.hardy_L.front();
        const auto r = analysis::hardy_scaling(s.field, d, L, h, s.solver);
        sc.add({cell(L), cell(d), cell(h), cell(r.c_d), cell(r.c_pi), cell(r.c_pi_exact), cell(r.rel_diff),
                cell(r.rel_diff_exact)});
    }
    out.summary = fmt::format("hardy{}", parts);
    out.tables = {std::move(t), std::move(sc)};
    return out;
}

CommandOutput cmd_weyl(const RunConfig& cfg, const Setup& s, std::vector<StageTime>& st) {
    CommandOutput out;
    auto t = table("weyl");
    auto m = table("weyl_magnetic");
    analysis::WeylSequenceSpec spec;
    spec.k = cfg.analysis.weyl_k;
    spec.n = cfg.analysis.weyl_n;
    spec.d = cfg.geometry.d;
    spec.h = s.quad_step;
    const double nmax = *std::max_element(spec.n.begin(), spec.n.end());
    const double L = std::max(cfg.geometry.L, 2.0 * nmax + 1.0);
    const auto geom = make_geometry(cfg, s, L);
    analysis::WeylStudy w;
    {
        StageClock clock(st, "weyl");
        w = analysis::weyl_decay_study(geom, spec);
    }
    for (std::size_t i = 0; i < w.n.size(); ++i) {
        t.add({cell(w.n[i]), cell(w.mu), cell(w.values[i]), cell(w.norms[i]), cell(w.slope)});
    }
    {
        StageClock clock(st, "weyl_magnetic");
        for (const auto& r : analysis::weyl_magnetic_decay(magnetic::pullback(s.A, geom), spec)) {
            m.add({cell(r.n), cell(r.windowed), cell(r.sup_a1_sq), cell(r.grad_norm), cell(r.bound), cell(r.ratio)});
        }
    }
    out.summary = fmt::format("slope={} mu={}", w.slope, w.mu);
    out.tables = {std::move(t), std::move(m)};
    return out;
}

CommandOutput cmd_identity(const RunConfig& cfg, const Setup& s, std::vector<StageTime>& st) {
    CommandOutput out;
    auto l = table("identity_lemma");
    auto p = table("identity_perturbation");
    const double d = cfg.geometry.d;
    double worst_res = 0.0;
    {
        StageClock clock(st, "lemma");
        std::mt19937_64 rng(cfg.seed);
        for (std::size_t i = 0; i < cfg.analysis.identity_trials; ++i) {
            const auto f = analysis::SmoothWeight::random(rng);
            const auto g = analysis::TestFunction::random(rng, d, 3.0, analysis::Envelope::Bump);
            const auto A = analysis::random_potential(rng);
            const auto r = analysis::verify_lemma1_identity(f, g, A, s.quad_step);
            worst_res = std::max(worst_res, r.residual);
            l.add({cell(i), cell(r.lhs), cell(r.weighted), cell(r.ff2), cell(r.f2), cell(r.residual),
                   cell(r.residual_literal)});
        }
    }
    std::size_t satisfied = 0;
    {
        StageClock clock(st, "perturbation");
        const auto geom = make_geometry(cfg, s, cfg.geometry.L);
        const auto pot = magnetic::pullback(s.A, geom);
        const auto b = analysis::constants_bundle(pot, d, 0.0, cfg.analysis.sweep_step);
        const double range = std::max(0.0, std::min(5.0, cfg.geometry.L - 4.0));
        std::mt19937_64 rng(cfg.seed + 1);
        for (std::size_t i = 0; i < cfg.analysis.identity_trials; ++i) {
            const auto psi = analysis::TestFunction::random(rng, d, range, analysis::Envelope::Bump);
            const auto r = analysis::verify_perturbation_bound(pot, psi, b.alpha1, b.alpha2, s.quad_step);
            satisfied += r.satisfied ? 1 : 0;
            p.add({cell(i), cell(r.I_value), cell(r.I_imag), cell(r.bound_value), cell(r.difference),
                   cell(r.satisfied)});
        }
    }
    out.summary = fmt::format("max_lemma_residual={} bound_satisfied={}/{}", worst_res, satisfied,
                              cfg.analysis.identity_trials);
    out.tables = {std::move(l), std::move(p)};
    return out;
}

CommandOutput cmd_scan(const RunConfig& cfg, const Setup& s, std::vector<StageTime>& st) {
    CommandOutput out;
    auto t = table("scan");
    const auto& a = cfg.analysis;
    auto or_default = [](const std::vector<double>& v, double dflt) { return v.empty() ? std::vector<double>{dflt} : v; };
    const auto points = analysis::scan_grid(a.scan_curvature, a.scan_field, or_default(a.scan_d, cfg.geometry.d),
                                            or_default(a.scan_L, cfg.geometry.L), or_default(a.scan_h, cfg.grid.h));
    analysis::ScanSettings set;
    set.profile = s.profile;
    set.field = s.field;
    set.curve_h = cfg.geometry.curve_step;
    set.hardy_safety = a.hardy_safety;
    set.hardy_L = a.hardy_L.front();
    set.sweep_ds = a.sweep_step;
    set.solver = s.solver;
    set.threads = a.threads;
    std::vector<analysis::ScanRow> rows;
    {
        StageClock clock(st, "scan");
        rows = analysis::parameter_scan(points, set);
    }
    std::size_t failed = 0;
    for (const auto& r : rows) {
        failed += r.ok ? 0 : 1;
        const auto& q = r.point;
        t.add({cell(q.curvature_amplitude), cell(q.field_amplitude), cell(q.d), cell(q.L), cell(q.h), cell(r.ok),
               cell_text(r.error), cell(r.lambda1), cell(r.discrete_threshold), cell(r.gap), cell(r.count), cell(r.C),
               cell(r.certification_possible), cell(r.certified), cell(r.margin)});
    }
    out.summary = fmt::format("points={} failed={}", rows.size(), failed);
    out.tables = {std::move(t)};
    return out;
}

ErrorRecord record(const std::string& kind, const std::string& message, int code, const std::string& key = {},
                   int line = 0) {
    return ErrorRecord{kind, message, key, line, code};
}

void write_manifest(const std::filesystem::path& path, RunManifest& m, std::chrono::steady_clock::time_point t0) {
    m.finished = utc_timestamp();
    m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    atomic_write(path, m.to_json().dump(2) + "\n");
}

bool completed_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return false;
    try {
        const auto j = nlohmann::json::parse(in);
        return j.value("status", "") == "ok";
    } catch (const nlohmann::json::exception&) {
        return false;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names = {"geometry", "spectrum", "certify", "hardy",
                                                   "weyl",     "identity", "scan"};
    return names;
}

const std::vector<std::string>& csv_header(std::string_view name) {
    const auto it = headers().find(name);
    if (it == headers().end()) throw ConfigError("unknown table '" + std::string(name) + "'");
    return it->second;
}

const std::vector<std::string>& command_tables(std::string_view command) {
    const auto it = tables_by_command().find(command);
    if (it == tables_by_command().end()) throw ConfigError("unknown subcommand '" + std::string(command) + "'", "command");
    return it->second;
}

CommandOutput execute(std::string_view command, const RunConfig& cfg, const std::string& gauge_shift,
                      std::vector<StageTime>& stages) {
    const Setup s = make_setup(cfg, gauge_shift);
    if (command == "geometry") return cmd_geometry(cfg, s, stages);
    if (command == "spectrum") return cmd_spectrum(cfg, s, stages);
    if (command == "certify") return cmd_certify(cfg, s, stages);
    if (command == "hardy") return cmd_hardy(cfg, s, stages);
    if (command == "weyl") return cmd_weyl(cfg, s, stages);
    if (command == "identity") return cmd_identity(cfg, s, stages);
    if (command == "scan") return cmd_scan(cfg, s, stages);
    throw ConfigError("unknown subcommand '" + std::string(command) + "'", "command");
}

RunOutcome run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
    RunOutcome o;
    const auto t0 = std::chrono::steady_clock::now();
    RunManifest m;
    m.command = opts.command;
    m.version = WAVEGUIDE_VERSION;
    m.simd = std::string(simd::active_kernels().name);
    m.gauge_shift = opts.gauge_shift;
    m.started = utc_timestamp();

    if (std::find(subcommands().begin(), subcommands().end(), opts.command) == subcommands().end()) {
        err << "error: unknown subcommand '" << opts.command << "'\n";
        o.exit_code = kConfigError;
        return o;
    }

    RunConfig cfg;
    try {
        cfg = opts.config_path.empty() ? parse_config_text("") : parse_config(opts.config_path);
        if (opts.out_dir) cfg.output = *opts.out_dir;
        if (opts.seed) cfg.seed = *opts.seed;
        validate(cfg);
    } catch (const ConfigError& e) {
        err << "config error";
        if (!e.key().empty()) err << " [" << e.key() << "]";
        if (e.line() > 0) err << " (line " << e.line() << ")";
        err << ": " << e.what() << "\n";
        o.exit_code = kConfigError;
        m.error = record("config", e.what(), kConfigError, e.key(), e.line());
        m.config_text = opts.config_path.empty() ? "" : read_file(opts.config_path);
        m.config_hash = sha256_hex(m.config_text + "command: " + opts.command + "\n");
        try {
            const std::filesystem::path dir = opts.out_dir ? *opts.out_dir : RunConfig{}.output;
            prepare_output_dir(dir);
            const auto path = dir / manifest_filename(opts.command, m.config_hash);
            write_manifest(path, m, t0);
            o.manifest_path = path.string();
        } catch (const std::exception&) {
        }
        return o;
    }

    m.config = cfg;
    m.config_text = serialize(cfg);
    m.config_hash = config_hash(cfg, opts.command, opts.gauge_shift);
    const std::filesystem::path dir = cfg.output;
    const auto manifest_path = dir / manifest_filename(opts.command, m.config_hash);
    o.manifest_path = manifest_path.string();
    try {
        prepare_output_dir(dir);
    } catch (const ConfigError& e) {
        err << "config error [" << e.key() << "]: " << e.what() << "\n";
        o.exit_code = kConfigError;
        return o;
    }
    if (!opts.force && completed_manifest(manifest_path)) {
        out << "duplicate run: " << manifest_path.string() << " already exists (use --force to recompute)\n";
        o.duplicate = true;
        return o;
    }

    try {
        CommandOutput res = execute(opts.command, cfg, opts.gauge_shift, m.stages);
        for (const auto& t : res.tables) {
            const auto name = table_filename(t.name, m.config_hash);
            atomic_write(dir / name, t.render());
            m.files.push_back(name);
        }
        m.summary = res.summary;
        o.summary = res.summary;
        out << res.summary << "\n";
        if (!res.failure.empty()) {
            err << "numeric failure: " << res.failure << "\n";
            m.error = record("numeric", res.failure, kNumericFailure);
            o.exit_code = kNumericFailure;
        }
    } catch (const ConfigError& e) {
        err << "config error";
        if (!e.key().empty()) err << " [" << e.key() << "]";
        err << ": " << e.what() << "\n";
        m.error = record("config", e.what(), kConfigError, e.key(), e.line());
        o.exit_code = kConfigError;
    } catch (const GeometryError& e) {
        err << "geometry error: " << e.what() << "\n";
        m.error = record("config", e.what(), kConfigError, "geometry");
        o.exit_code = kConfigError;
    } catch (const std::exception& e) {
        err << "numeric failure: " << e.what() << "\n";
        m.error = record("numeric", e.what(), kNumericFailure);
        o.exit_code = kNumericFailure;
    }
    o.files = m.files;
    try {
        write_manifest(manifest_path, m, t0);
    } catch (const ConfigError& e) {
        err << "cannot write manifest: " << e.what() << "\n";
        if (o.exit_code == kOk) o.exit_code = kConfigError;
    }
    return o;
}

}  // namespace wg::cli
