#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "waveguide/assembly/operator.hpp"

namespace wg::eigen {

enum class Preconditioner { ShiftedCholesky, Diagonal };

Preconditioner parse_preconditioner(const std::string& tag);
std::string to_string(Preconditioner p);

struct SolverOptions {
    std::size_t k = 4;
    double tol = 1e-8;
    std::size_t max_iter = 5000;
    std::uint64_t seed = 42;
    Preconditioner preconditioner = Preconditioner::ShiftedCholesky;
    /// Skip the dense route even for small pencils.
    bool force_iterative = false;
    std::size_t dense_limit = 500;
    bool want_vectors = true;
    /// Optional starting block (columns in the original, unscaled variables).
    Eigen::MatrixXcd initial;
};

struct EigenResult {
    std::vector<double> values;      // ascending
    Eigen::MatrixXcd vectors;        // M-orthonormal columns (if requested)
    std::vector<double> residuals;   // |K x - lambda M x| / |M x|
    std::vector<bool> converged;
    std::size_t iterations = 0;
    std::size_t factorizations = 0;
    std::string method;

    bool all_converged() const;
};

/// Lowest k eigenpairs of K x = lambda M x.
EigenResult lowest_eigenpairs(const assembly::OperatorPair& pair, const SolverOptions& opts);

/// Same with an explicit diagonal mass replacing pair.mass.
EigenResult lowest_eigenpairs(const assembly::OperatorPair& pair, const std::vector<double>& mass,
                              const SolverOptions& opts);

/// Full dense solve (reference route); returns the k lowest pairs. Without
/// vectors the residuals are reported as 0.
EigenResult dense_eigenpairs(const assembly::OperatorPair& pair, const std::vector<double>& mass, std::size_t k,
                             bool want_vectors = true);

struct CountResult {
    std::size_t count = 0;
    bool exhausted = false;
    bool converged = true;
    std::vector<double> values;
};

/// Number of eigenvalues below threshold - tol, doubling k = 4, 8, 16, ...
/// until the largest computed eigenvalue exceeds threshold + tol.
CountResult count_below(const assembly::OperatorPair& pair, double threshold, double tol,
                        const SolverOptions& base = {});

/// (4/h_u^2) sin^2(pi h_u / (2d)): lowest transverse eigenvalue of the grid,
/// the discrete counterpart of pi^2/d^2.
double discrete_transverse_threshold(const assembly::StripGrid& grid);

struct HardyResult {
    double c = 0.0;
    double shift = 0.0;
    EigenResult eig;
};

/// Smallest eigenvalue of the pencil (K - lambda_perp M, W), lambda_perp the
/// discrete transverse threshold. Throws PreconditionError if the shifted
/// stiffness fails the positive-semidefiniteness check.
HardyResult hardy_pencil_min(const assembly::OperatorPair& pair, const assembly::WeightOperator& weight, double d,
                             double tol, const SolverOptions& base = {});

}  // namespace wg::eigen
