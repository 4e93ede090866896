#include "waveguide/eigen/solve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "lobpcg.hpp"
#include "waveguide/eigen/banded_cholesky.hpp"
#include "waveguide/error.hpp"

namespace wg::eigen {

using cplx = std::complex<double>;
using Index = Eigen::Index;

Preconditioner parse_preconditioner(const std::string& tag) {
    if (tag == "shifted-cholesky") return Preconditioner::ShiftedCholesky;
    if (tag == "diagonal") return Preconditioner::Diagonal;
    throw ConfigError("unknown preconditioner '" + tag + "'", "solver.preconditioner");
}

std::string to_string(Preconditioner p) {
    return p == Preconditioner::ShiftedCholesky ? "shifted-cholesky" : "diagonal";
}

bool EigenResult::all_converged() const {
    return std::all_of(converged.begin(), converged.end(), [](bool b) { return b; });
}

EigenResult dense_eigenpairs(const assembly::OperatorPair& pair, const std::vector<double>& mass, std::size_t k,
                             bool want_vectors) {
    const auto n = static_cast<Index>(pair.size());
    if (n == 0) throw DomainError("eigenproblem of dimension 0");
    k = std::min<std::size_t>(k, pair.size());
    Eigen::VectorXd dis(n);
    for (Index p = 0; p < n; ++p) dis(p) = 1.0 / std::sqrt(mass[p]);
    const Eigen::MatrixXcd A = dis.asDiagonal() * pair.dense_K() * dis.asDiagonal();

    EigenResult res;
    res.method = "dense";
    Eigen::MatrixXcd Y;
    Eigen::VectorXd vals;
    const auto mode = want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
    if (pair.real) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A.real(), mode);
        if (es.info() != Eigen::Success) throw NumericError("dense eigensolve failed");
        vals = es.eigenvalues();
        if (want_vectors) Y = es.eigenvectors().cast<cplx>();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A, mode);
        if (es.info() != Eigen::Success) throw NumericError("dense eigensolve failed");
        vals = es.eigenvalues();
        if (want_vectors) Y = es.eigenvectors();
    }
    const auto kk = static_cast<Index>(k);
    res.values.assign(vals.data(), vals.data() + kk);
    if (!want_vectors) {
        res.residuals.assign(k, 0.0);
        res.converged.assign(k, true);
        return res;
    }
    res.vectors = dis.asDiagonal() * Y.leftCols(kk);
    res.residuals.resize(k);
    res.converged.assign(k, true);
    for (Index c = 0; c < kk; ++c) {
        const Eigen::VectorXcd x = res.vectors.col(c);
        std::vector<cplx> xv(x.data(), x.data() + n), kx(n);
        pair.apply(xv.data(), kx.data());
        double num = 0.0, den = 0.0;
        for (Index p = 0; p < n; ++p) {
            num += std::norm(kx[p] - vals(c) * mass[p] * xv[p]);
            den += std::norm(mass[p] * xv[p]);
        }
        res.residuals[c] = std::sqrt(num / den);
    }
    return res;
}

EigenResult lowest_eigenpairs(const assembly::OperatorPair& pair, const std::vector<double>& mass,
                              const SolverOptions& opts) {
    if (opts.k < 1) throw DomainError("k must be at least 1");
    if (!(opts.tol > 0.0)) throw DomainError("tolerance must be positive");
    if (pair.size() == 0) throw DomainError("eigenproblem of dimension 0");
    if (mass.size() != pair.size()) throw DomainError("mass size does not match the stiffness");
    if (!opts.force_iterative && pair.size() <= opts.dense_limit) {
        return dense_eigenpairs(pair, mass, opts.k, opts.want_vectors);
    }
    if (pair.real) return detail::lobpcg<double>(pair, mass, opts);
    return detail::lobpcg<cplx>(pair, mass, opts);
}

EigenResult lowest_eigenpairs(const assembly::OperatorPair& pair, const SolverOptions& opts) {
    return lowest_eigenpairs(pair, pair.mass, opts);
}

CountResult count_below(const assembly::OperatorPair& pair, double threshold, double tol, const SolverOptions& base) {
    if (!std::isfinite(threshold)) throw DomainError("threshold must be finite");
    CountResult out;
    const std::size_t n = pair.size();
    auto tally = [&](const EigenResult& r) {
        out.values = r.values;
        out.count = 0;
        out.converged = true;
        for (std::size_t i = 0; i < r.values.size(); ++i) {
            if (r.values[i] < threshold - tol) {
                ++out.count;
                out.converged = out.converged && r.converged[i];
            }
        }
    };
    if (!base.force_iterative && n <= base.dense_limit) {
        const EigenResult r = dense_eigenpairs(pair, pair.mass, n, false);
        tally(r);
        out.exhausted = r.values.back() <= threshold + tol;
        return out;
    }
    SolverOptions opts = base;
    opts.want_vectors = true;
    std::size_t k = 4;
    for (;;) {
        opts.k = std::min(k, n);
        const EigenResult r = lowest_eigenpairs(pair, opts);
        tally(r);
        if (r.values.back() > threshold + tol) return out;
        if (opts.k >= n || 2 * k + 3 > n) {
            out.exhausted = true;
            return out;
        }
        opts.initial = r.vectors;
        k *= 2;
    }
}

double discrete_transverse_threshold(const assembly::StripGrid& grid) {
    const double t = std::sin(std::numbers::pi * grid.h_u / (2.0 * grid.d));
    return 4.0 / (grid.h_u * grid.h_u) * t * t;
}

HardyResult hardy_pencil_min(const assembly::OperatorPair& pair, const assembly::WeightOperator& weight, double d,
                             double tol, const SolverOptions& base) {
    if (!(d > 0.0)) throw DomainError("strip width must be positive");
    if (weight.w.size() != pair.size()) throw DomainError("weight size does not match the pencil");
    HardyResult out;
    out.shift = discrete_transverse_threshold(pair.grid);
    const assembly::OperatorPair shifted = pair.shifted(out.shift);

    // positive semidefiniteness: factorization slightly below zero plus a
    // random Rayleigh-quotient spot check
    bool psd = false;
    if (shifted.real) {
        BandedCholesky<double> c;
        psd = c.factor(shifted, weight.w, -1e-10);
    } else {
        BandedCholesky<cplx> c;
        psd = c.factor(shifted, weight.w, -1e-10);
    }
    std::mt19937_64 rng(base.seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<cplx> x(pair.size()), y(pair.size());
    for (int trial = 0; trial < 20 && psd; ++trial) {
        for (auto& v : x) v = cplx(nd(rng), pair.real ? 0.0 : nd(rng));
        shifted.apply(x.data(), y.data());
        double num = 0.0, den = 0.0;
        for (std::size_t p = 0; p < x.size(); ++p) {
            num += (std::conj(x[p]) * y[p]).real();
            den += weight.w[p] * std::norm(x[p]);
        }
        psd = num / den >= -1e-12;
    }
    if (!psd) throw PreconditionError("K - lambda_perp M is not positive semidefinite");

    SolverOptions opts = base;
    opts.k = 1;
    opts.tol = tol;
    out.eig = lowest_eigenpairs(shifted, weight.w, opts);
    out.c = out.eig.values.front();
    return out;
}

}  // namespace wg::eigen
