#ifndef SKEWCANON_LINALG_HPP
#define SKEWCANON_LINALG_HPP

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "skewcanon/context.hpp"
#include "skewcanon/errors.hpp"
#include "skewcanon/matrix.hpp"

namespace skewcanon {

namespace detail {

inline Eigen::MatrixXd to_eigen(const Matrix<double>& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
}

inline Matrix<double> from_eigen(const Eigen::MatrixXd& e) {
    Matrix<double> m(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = e(i, j);
    return m;
}

inline Eigen::MatrixXcd to_eigen(const Matrix<Complex<double>>& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) e(i, j) = std::complex<double>(m(i, j).re, m(i, j).im);
    return e;
}

inline Matrix<Complex<double>> from_eigen(const Eigen::MatrixXcd& e) {
    Matrix<Complex<double>> m(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = Complex<double>(e(i, j).real(), e(i, j).imag());
    return m;
}

template <typename S>
constexpr bool is_float_scalar = std::is_same_v<S, double> || std::is_same_v<S, Complex<double>>;

/// Row echelon reduction for exact fields. Pivots are the first nonzero
/// entry of each column, scanned in order, which keeps the output (and thus
/// every kernel basis and chain built on top of it) deterministic.
template <typename S>
struct Rref {
    Matrix<S> m;
    std::vector<int> pivot_cols;              // one per pivot row
    std::vector<int> pivot_row_of_col;        // -1 for free columns
    int rank = 0;

    explicit Rref(Matrix<S> a) : m(std::move(a)), pivot_row_of_col(m.cols(), -1) {
        int row = 0;
        for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
            int piv = -1;
            for (int i = row; i < m.rows(); ++i) {
                if (!ScalarTraits<S>::is_zero(m(i, col))) { piv = i; break; }
            }
            if (piv < 0) continue;
            if (piv != row)
                for (int j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(piv, j));
            S inv = ScalarTraits<S>::one() / m(row, col);
            for (int j = col; j < m.cols(); ++j) m(row, j) = inv * m(row, j);
            for (int i = 0; i < m.rows(); ++i) {
                if (i == row || ScalarTraits<S>::is_zero(m(i, col))) continue;
                S f = m(i, col);
                for (int j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
            }
            pivot_cols.push_back(col);
            pivot_row_of_col[static_cast<std::size_t>(col)] = row;
            ++row;
        }
        rank = row;
    }
};

} // namespace detail

template <typename S>
int rank(const Matrix<S>& m, const ScalarContext& ctx) {
    if constexpr (detail::is_float_scalar<S>) {
        if (m.empty()) return 0;
        auto svd = detail::to_eigen(m).jacobiSvd();
        double cutoff = ctx.rank_cutoff(std::max(m.rows(), m.cols()), svd.singularValues().size() ? svd.singularValues()(0) : 0.0);
        int r = 0;
        for (int i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > cutoff) ++r;
        return r;
    } else {
        (void)ctx;
        return detail::Rref<S>(m).rank;
    }
}

/// Basis of the null space as matrix columns; empty matrix (n x 0) when the
/// kernel is trivial. Float mode decides rank by the singular-value cutoff.
template <typename S>
Matrix<S> kernel_basis(const Matrix<S>& m, const ScalarContext& ctx) {
    if constexpr (detail::is_float_scalar<S>) {
        auto e = detail::to_eigen(m);
        auto svd = e.jacobiSvd(Eigen::ComputeFullV);
        double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
        double cutoff = ctx.rank_cutoff(std::max(m.rows(), m.cols()), smax);
        int r = 0;
        for (int i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > cutoff) ++r;
        auto v = svd.matrixV();
        return detail::from_eigen(v.rightCols(v.cols() - r).eval());
    } else {
        detail::Rref<S> rr(m);
        int nfree = m.cols() - rr.rank;
        Matrix<S> basis(m.cols(), nfree);
        int out = 0;
        for (int col = 0; col < m.cols(); ++col) {
            if (rr.pivot_row_of_col[static_cast<std::size_t>(col)] >= 0) continue;
            basis(col, out) = ScalarTraits<S>::one();
            for (std::size_t p = 0; p < rr.pivot_cols.size(); ++p)
                basis(rr.pivot_cols[p], out) = -rr.m(static_cast<int>(p), col);
            ++out;
        }
        return basis;
    }
}

/// Any solution of A x = b, or nullopt when the system is inconsistent
/// (float: residual above the rank cutoff). b may have several columns.
template <typename S>
std::optional<Matrix<S>> solve(const Matrix<S>& a, const Matrix<S>& b, const ScalarContext& ctx) {
    if (a.rows() != b.rows()) throw ValidationError("solve: row count mismatch");
    if constexpr (detail::is_float_scalar<S>) {
        auto ea = detail::to_eigen(a);
        auto eb = detail::to_eigen(b);
        auto x = ea.colPivHouseholderQr().solve(eb).eval();
        double resid = (ea * x - eb).cwiseAbs().maxCoeff();
        double scale = a.inf_norm() * std::max(1.0, x.cwiseAbs().maxCoeff()) + b.inf_norm();
        if (resid > ctx.rank_cutoff(std::max(a.rows(), a.cols()), scale)) return std::nullopt;
        return detail::from_eigen(x);
    } else {
        detail::Rref<S> rr(Matrix<S>::hcat(a, b));
        // any pivot in the b columns marks an inconsistent system
        for (int p : rr.pivot_cols)
            if (p >= a.cols()) return std::nullopt;
        Matrix<S> x(a.cols(), b.cols());
        for (std::size_t p = 0; p < rr.pivot_cols.size(); ++p)
            for (int j = 0; j < b.cols(); ++j)
                x(rr.pivot_cols[p], j) = rr.m(static_cast<int>(p), a.cols() + j);
        return x;
    }
}

template <typename S>
Matrix<S> invert(const Matrix<S>& m, const ScalarContext& ctx) {
    if (m.rows() != m.cols()) throw ValidationError("invert: matrix not square");
    if constexpr (detail::is_float_scalar<S>) {
        auto e = detail::to_eigen(m);
        auto lu = e.fullPivLu();
        double cutoff = ctx.rank_cutoff(m.rows(), m.max_abs());
        if (cutoff > 0) lu.setThreshold(cutoff);
        if (!lu.isInvertible()) throw SingularMatrix("invert: singular matrix");
        return detail::from_eigen(lu.inverse().eval());
    } else {
        detail::Rref<S> rr(Matrix<S>::hcat(m, Matrix<S>::identity(m.rows())));
        for (int p : rr.pivot_cols)
            if (p >= m.cols()) throw SingularMatrix("invert: singular matrix");
        if (rr.rank < m.rows()) throw SingularMatrix("invert: singular matrix");
        return rr.m.block(0, m.cols(), m.rows(), m.cols());
    }
}

/// Counts of positive and negative squares of a symmetric nonsingular form,
/// by Lagrange congruence diagonalization (exact) or eigenvalue signs
/// (float). Throws DegenerateForm when the form is singular.
template <typename S>
std::pair<int, int> signature(const Matrix<S>& g, const ScalarContext& ctx) {
    if (g.rows() != g.cols()) throw NotSymmetric("signature: matrix not square");
    const int n = g.rows();
    if constexpr (std::is_same_v<S, double>) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(detail::to_eigen(g));
        double scale = es.eigenvalues().cwiseAbs().maxCoeff();
        double cutoff = ctx.rank_cutoff(n, scale);
        int plus = 0, minus = 0;
        for (int i = 0; i < n; ++i) {
            double ev = es.eigenvalues()(i);
            if (std::fabs(ev) <= cutoff) throw DegenerateForm("signature: form is singular");
            (ev > 0 ? plus : minus)++;
        }
        return {plus, minus};
    } else if constexpr (std::is_same_v<S, Rational>) {
        (void)ctx;
        Matrix<S> a = g;
        int plus = 0, minus = 0;
        for (int k = 0; k < n; ++k) {
            if (ScalarTraits<S>::is_zero(a(k, k))) {
                int j = -1;
                for (int i = k + 1; i < n; ++i)
                    if (!ScalarTraits<S>::is_zero(a(i, i))) { j = i; break; }
                if (j >= 0) {
                    for (int c = 0; c < n; ++c) std::swap(a(k, c), a(j, c));
                    for (int r = 0; r < n; ++r) std::swap(a(r, k), a(r, j));
                } else {
                    for (int i = k + 1; i < n && j < 0; ++i)
                        if (!ScalarTraits<S>::is_zero(a(k, i))) j = i;
                    if (j < 0) throw DegenerateForm("signature: form is singular");
                    // congruence by (row_k += row_j) makes the diagonal entry 2*a(k,j)
                    for (int c = 0; c < n; ++c) a(k, c) += a(j, c);
                    for (int r = 0; r < n; ++r) a(r, k) += a(r, j);
                }
            }
            S d = a(k, k);
            (d > 0 ? plus : minus)++;
            for (int i = k + 1; i < n; ++i) {
                if (ScalarTraits<S>::is_zero(a(i, k))) continue;
                S f = a(i, k) / d;
                for (int c = 0; c < n; ++c) a(i, c) -= f * a(k, c);
                for (int r = 0; r < n; ++r) a(r, i) -= f * a(r, k);
            }
        }
        return {plus, minus};
    } else {
        static_assert(std::is_same_v<S, Rational> || std::is_same_v<S, double>,
                      "signature is defined for real scalar fields");
    }
}

/// true iff the columns of m are linearly independent
template <typename S>
bool columns_independent(const Matrix<S>& m, const ScalarContext& ctx) {
    return rank(m, ctx) == m.cols();
}

} // namespace skewcanon

#endif
