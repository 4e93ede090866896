#include "lobpcg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <span>

#include "waveguide/eigen/banded_cholesky.hpp"
#include "waveguide/error.hpp"
#include "waveguide/simd/kernels.hpp"

namespace wg::eigen::detail {
namespace {

using cplx = std::complex<double>;
using Index = Eigen::Index;

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

inline double real_of(double v) { return v; }
inline double real_of(const cplx& v) { return v.real(); }

template <class T>
T from_complex(const cplx& v) {
    if constexpr (std::is_same_v<T, double>) {
        return v.real();
    } else {
        return v;
    }
}

template <class T>
std::span<const T> cspan(const Mat<T>& m, Index c) {
    return {m.col(c).data(), static_cast<std::size_t>(m.rows())};
}

template <class T>
std::span<T> span_of(Mat<T>& m, Index c) {
    return {m.col(c).data(), static_cast<std::size_t>(m.rows())};
}

template <class T>
double norm_of(const Mat<T>& m, Index c) {
    return std::sqrt(std::max(0.0, real_of(simd::dot(cspan(m, c), cspan(m, c)))));
}

// Orthonormalizes columns [start, m) of S against all earlier columns by two
// passes of classical Gram-Schmidt; nearly dependent columns are dropped.
// Returns the number of columns kept (packed to the front).
template <class T>
Index orthonormalize(Mat<T>& S, Index start, Index m) {
    Index kept = start;
    for (Index c = start; c < m; ++c) {
        if (c != kept) S.col(kept) = S.col(c);
        const double n0 = norm_of(S, kept);
        if (!(n0 > 0.0) || !std::isfinite(n0)) continue;
        for (int pass = 0; pass < 2; ++pass) {
            for (Index q = 0; q < kept; ++q) {
                const T coef = simd::dot(cspan(S, q), cspan(S, kept));
                simd::axpy(-coef, cspan(S, q), span_of(S, kept));
            }
        }
        const double n1 = norm_of(S, kept);
        if (n1 < 1e-8 * n0) continue;
        S.col(kept) /= n1;
        ++kept;
    }
    return kept;
}

template <class T>
void fill_random(Mat<T>& X, Index from, std::mt19937_64& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    for (Index c = from; c < X.cols(); ++c) {
        for (Index r = 0; r < X.rows(); ++r) {
            if constexpr (std::is_same_v<T, double>) {
                X(r, c) = nd(rng);
            } else {
                const double re = nd(rng);
                X(r, c) = cplx(re, nd(rng));
            }
        }
    }
}

}  // namespace

template <class T>
EigenResult lobpcg(const assembly::OperatorPair& K, const std::vector<double>& mass, const SolverOptions& opts) {
    const auto n = static_cast<Index>(K.size());
    if (n == 0) throw DomainError("eigenproblem of dimension 0");
    const auto k = static_cast<Index>(std::min<std::size_t>(opts.k, K.size()));
    const Index nb = std::min<Index>(k + 3, n);

    std::vector<double> ds(n), dis(n);
    for (Index p = 0; p < n; ++p) {
        if (!(mass[p] > 0.0)) throw DomainError("mass weights must be positive");
        ds[p] = std::sqrt(mass[p]);
        dis[p] = 1.0 / ds[p];
    }

    std::vector<T> tmp(n);
    auto applyA = [&](const T* y, T* out) {
        for (Index p = 0; p < n; ++p) tmp[p] = dis[p] * y[p];
        K.apply(tmp.data(), out);
        for (Index p = 0; p < n; ++p) out[p] *= dis[p];
    };

    EigenResult res;
    res.method = opts.preconditioner == Preconditioner::ShiftedCholesky ? "lobpcg/shifted-cholesky"
                                                                         : "lobpcg/diagonal";

    // preconditioner
    BandedCholesky<T> chol;
    double sigma = 0.0;
    std::vector<double> adiag(n);
    for (Index p = 0; p < n; ++p) adiag[p] = K.diag[p] / mass[p];
    if (opts.preconditioner == Preconditioner::ShiftedCholesky) {
        ++res.factorizations;
        if (!chol.factor(K, mass, 0.0)) {
            // Gershgorin lower bound of the scaled matrix
            double lo = std::numeric_limits<double>::infinity();
            const std::size_t nu = K.grid.n_u;
            for (Index p = 0; p < n; ++p) {
                const auto up = static_cast<std::size_t>(p);
                double off = 0.0;
                if (up + nu < K.size()) off += std::abs(K.east_at(up));
                if (up >= nu) off += std::abs(K.east_at(up - nu));
                if (up % nu + 1 < nu) off += std::abs(K.north_at(up));
                if (up % nu > 0) off += std::abs(K.north_at(up - 1));
                lo = std::min(lo, (K.diag[p] - off) / mass[p]);
            }
            sigma = lo - 0.01 * (1.0 + std::abs(lo));
            ++res.factorizations;
            if (!chol.factor(K, mass, sigma)) throw NumericError("could not factor the shifted stiffness");
        }
    }
    auto precondition = [&](T* r) {
        if (opts.preconditioner == Preconditioner::ShiftedCholesky) {
            for (Index p = 0; p < n; ++p) r[p] *= ds[p];
            chol.solve(r);
            for (Index p = 0; p < n; ++p) r[p] *= ds[p];
        } else {
            for (Index p = 0; p < n; ++p) r[p] /= adiag[p];
        }
    };

    // starting block
    Mat<T> X(n, nb);
    std::mt19937_64 rng(opts.seed);
    Index given = 0;
    if (opts.initial.size() > 0 && opts.initial.rows() == n) {
        given = std::min<Index>(opts.initial.cols(), nb);
        for (Index c = 0; c < given; ++c)
            for (Index p = 0; p < n; ++p) X(p, c) = from_complex<T>(opts.initial(p, c)) * ds[p];
    }
    fill_random(X, given, rng);
    Index m = orthonormalize<T>(X, 0, nb);
    while (m < nb) {
        fill_random(X, m, rng);
        m = orthonormalize<T>(X, m, nb);
    }

    Mat<T> AX(n, nb);
    for (Index c = 0; c < nb; ++c) applyA(X.col(c).data(), AX.col(c).data());
    std::vector<double> theta(nb);
    {
        Mat<T> G = X.adjoint() * AX;
        G = (0.5 * (G + G.adjoint())).eval();
        Eigen::SelfAdjointEigenSolver<Mat<T>> es(G);
        const Mat<T> C = es.eigenvectors();
        X = (X * C).eval();
        AX = (AX * C).eval();
        for (Index c = 0; c < nb; ++c) theta[c] = es.eigenvalues()(c);
    }

    Mat<T> P(n, 0);
    Mat<T> R(n, nb);
    std::vector<double> resid(nb, 0.0);
    int refinements = 0;

    std::size_t it = 0;
    for (; it < opts.max_iter; ++it) {
        for (Index c = 0; c < nb; ++c) {
            R.col(c) = AX.col(c) - theta[c] * X.col(c);
            double num = 0.0, den = 0.0;
            for (Index p = 0; p < n; ++p) {
                num += mass[p] * std::norm(R(p, c));
                den += mass[p] * std::norm(X(p, c));
            }
            resid[c] = std::sqrt(num / den);
        }
        bool done = true;
        for (Index c = 0; c < k; ++c) done = done && resid[c] <= opts.tol;
        if (done) break;

        if (opts.preconditioner == Preconditioner::ShiftedCholesky && refinements < 8 && it >= 1) {
            const double r0 = norm_of(R, 0);
            const double gap = std::max(0.1 * (theta[nb - 1] - theta[0]), 2.0 * r0);
            double proposal = theta[0] - gap;
            if (proposal > sigma + 0.5 * (theta[0] - sigma)) {
                BandedCholesky<T> trial;
                for (int attempt = 0; attempt < 4; ++attempt) {
                    ++res.factorizations;
                    ++refinements;
                    if (trial.factor(K, mass, proposal)) {
                        chol = std::move(trial);
                        sigma = proposal;
                        break;
                    }
                    proposal = 0.5 * (sigma + proposal);
                }
            }
        }

        // S = [X | W | P]
        std::vector<Index> active;
        for (Index c = 0; c < nb; ++c)
            if (resid[c] > opts.tol) active.push_back(c);
        const auto nw = static_cast<Index>(active.size());
        Mat<T> S(n, nb + nw + P.cols());
        S.leftCols(nb) = X;
        for (Index a = 0; a < nw; ++a) {
            S.col(nb + a) = R.col(active[a]);
            precondition(S.col(nb + a).data());
        }
        if (P.cols() > 0) S.rightCols(P.cols()) = P;
        const Index ms = orthonormalize<T>(S, nb, S.cols());
        if (ms == nb) break;  // no new directions
        S.conservativeResize(n, ms);

        Mat<T> AS(n, ms);
        AS.leftCols(nb) = AX;
        for (Index c = nb; c < ms; ++c) applyA(S.col(c).data(), AS.col(c).data());
        Mat<T> G(ms, ms);
        for (Index a = 0; a < ms; ++a)
            for (Index b = a; b < ms; ++b) {
                const T v = simd::dot(cspan(S, a), cspan(AS, b));
                G(a, b) = v;
                if constexpr (std::is_same_v<T, double>) {
                    G(b, a) = v;
                } else {
                    G(b, a) = std::conj(v);
                }
            }
        for (Index a = 0; a < ms; ++a) G(a, a) = real_of(G(a, a));
        Eigen::SelfAdjointEigenSolver<Mat<T>> es(G);
        if (es.info() != Eigen::Success) throw NumericError("Rayleigh-Ritz eigensolve failed");
        const Mat<T> C = es.eigenvectors().leftCols(nb);

        X = S * C;
        AX = AS * C;
        P = S.rightCols(ms - nb) * C.bottomRows(ms - nb);
        for (Index c = 0; c < nb; ++c) theta[c] = es.eigenvalues()(c);
    }

    // final residuals
    for (Index c = 0; c < nb; ++c) {
        R.col(c) = AX.col(c) - theta[c] * X.col(c);
        double num = 0.0, den = 0.0;
        for (Index p = 0; p < n; ++p) {
            num += mass[p] * std::norm(R(p, c));
            den += mass[p] * std::norm(X(p, c));
        }
        resid[c] = std::sqrt(num / den);
    }

    res.iterations = it;
    res.values.assign(theta.begin(), theta.begin() + k);
    res.residuals.assign(resid.begin(), resid.begin() + k);
    res.converged.resize(k);
    for (Index c = 0; c < k; ++c) res.converged[c] = resid[c] <= opts.tol && std::isfinite(theta[c]);
    if (opts.want_vectors) {
        res.vectors.resize(n, k);
        for (Index c = 0; c < k; ++c)
            for (Index p = 0; p < n; ++p) res.vectors(p, c) = cplx(X(p, c)) * dis[p];
    }
    return res;
}

template EigenResult lobpcg<double>(const assembly::OperatorPair&, const std::vector<double>&, const SolverOptions&);
template EigenResult lobpcg<cplx>(const assembly::OperatorPair&, const std::vector<double>&, const SolverOptions&);

}  // namespace wg::eigen::detail
