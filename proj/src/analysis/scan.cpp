#include "waveguide/analysis/scan.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <thread>
#include <tuple>

#include "waveguide/analysis/bound_states.hpp"
#include "waveguide/analysis/constants.hpp"
#include "waveguide/analysis/hardy.hpp"
#include "waveguide/assembly/grid.hpp"
#include "waveguide/magnetic/potential.hpp"

namespace wg::analysis {

std::vector<ScanPoint> scan_grid(const std::vector<double>& curvature, const std::vector<double>& field,
                                 const std::vector<double>& d, const std::vector<double>& L,
                                 const std::vector<double>& h) {
    std::vector<ScanPoint> pts;
    for (double c : curvature)
        for (double f : field)
            for (double dd : d)
                for (double l : L)
                    for (double hh : h) pts.push_back({c, f, dd, l, hh});
    return pts;
}

double certification_constant(const ScanSettings& settings, double field_amplitude, double d, double h) {
    magnetic::MagneticField B = settings.field;
    B.amplitude = field_amplitude;
    return settings.hardy_safety * hardy_constant(B, d, settings.hardy_L, h, settings.solver).c;
}

ScanRow evaluate_point(const ScanPoint& pt, const ScanSettings& settings, double C) {
    ScanRow row;
    row.point = pt;
    row.C = C;
    try {
        geometry::CurvatureProfile prof = settings.profile;
        prof.amplitude = pt.curvature_amplitude;
        magnetic::MagneticField B = settings.field;
        B.amplitude = pt.field_amplitude;
        const geometry::WaveguideGeometry geom(prof, pt.d, pt.L, settings.curve_h);
        const auto pot = magnetic::pullback(magnetic::gauge_from_field(B), geom);
        const auto grid = assembly::make_grid(pt.L, pt.d, pt.h);
        eigen::SolverOptions opts = settings.solver;
        opts.want_vectors = false;
        const SpectralReport rep = find_bound_states(geom, pot, grid, opts);
        row.lambda1 = rep.lambda1();
        row.discrete_threshold = rep.discrete_threshold;
        row.gap = rep.gap1();
        row.count = rep.bound_states.size();

        const ConstantsBundle bundle = constants_bundle(pot, pt.d, C, settings.sweep_ds);
        const Certification cert = certify_beta0(bundle, pt.d);
        row.certification_possible = cert.possible;
        row.certified = cert.pass;
        row.margin = cert.margin;
        row.ok = rep.converged;
        if (!rep.converged) row.error = "eigensolver did not converge";
    } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
    }
    return row;
}

std::vector<ScanRow> parameter_scan(const std::vector<ScanPoint>& points, const ScanSettings& settings) {
    // certification constants, one per (field amplitude, d, h)
    std::map<std::tuple<double, double, double>, double> Cs;
    std::map<std::tuple<double, double, double>, std::string> C_errors;
    for (const auto& p : points) {
        const auto key = std::make_tuple(p.field_amplitude, p.d, p.h);
        if (Cs.count(key) || C_errors.count(key)) continue;
        try {
            Cs[key] = certification_constant(settings, p.field_amplitude, p.d, p.h);
        } catch (const std::exception& e) {
            C_errors[key] = e.what();
        }
    }

    std::vector<ScanRow> rows(points.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= points.size()) return;
            const auto key = std::make_tuple(points[i].field_amplitude, points[i].d, points[i].h);
            if (auto it = C_errors.find(key); it != C_errors.end()) {
                rows[i].point = points[i];
                rows[i].error = "certification constant: " + it->second;
                continue;
            }
            rows[i] = evaluate_point(points[i], settings, Cs.at(key));
        }
    };
    unsigned n = settings.threads ? settings.threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(points.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return rows;
}

}  // namespace wg::analysis
