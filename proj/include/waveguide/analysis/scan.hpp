#pragma once

#include <string>
#include <vector>

#include "waveguide/eigen/solve.hpp"
#include "waveguide/geometry/curvature.hpp"
#include "waveguide/magnetic/field.hpp"

namespace wg::analysis {

struct ScanPoint {
    double curvature_amplitude = 0.0;
    double field_amplitude = 0.0;
    double d = 1.0;
    double L = 30.0;
    double h = 1.0 / 32.0;
};

struct ScanSettings {
    geometry::CurvatureProfile profile;  // amplitude replaced per point
    magnetic::MagneticField field;       // amplitude replaced per point
    double curve_h = 1e-2;
    double hardy_safety = 0.8;
    double hardy_L = 20.0;
    double sweep_ds = 1.0 / 64.0;
    eigen::SolverOptions solver;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct ScanRow {
    ScanPoint point;
    bool ok = false;
    std::string error;
    double lambda1 = 0.0;
    double discrete_threshold = 0.0;
    double gap = 0.0;
    std::size_t count = 0;  // bound states passing the truncation test
    double C = 0.0;
    bool certification_possible = false;
    bool certified = false;
    double margin = 0.0;
};

/// Cartesian product in the order curvature, field, d, L, h (last fastest).
std::vector<ScanPoint> scan_grid(const std::vector<double>& curvature, const std::vector<double>& field,
                                 const std::vector<double>& d, const std::vector<double>& L,
                                 const std::vector<double>& h);

/// One row per point, evaluated concurrently and returned in input order.
/// Failures are recorded in the row.
std::vector<ScanRow> parameter_scan(const std::vector<ScanPoint>& points, const ScanSettings& settings);

/// Single point (also used by the scan workers).
ScanRow evaluate_point(const ScanPoint& point, const ScanSettings& settings, double C);

/// Certification constant for a field amplitude: safety * Hardy constant of
/// the straight strip.
double certification_constant(const ScanSettings& settings, double field_amplitude, double d, double h);

}  // namespace wg::analysis
