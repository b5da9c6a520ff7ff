#ifndef SKEWCANON_SPACE_HPP
#define SKEWCANON_SPACE_HPP

#include <string>
#include <utility>

#include "skewcanon/context.hpp"
#include "skewcanon/errors.hpp"
#include "skewcanon/linalg.hpp"
#include "skewcanon/matrix.hpp"

namespace skewcanon {

// Relative tolerance for the float-mode structural checks on (G, J):
// symmetry, nondegeneracy and skewadjointness of inputs assembled in binary
// arithmetic (matrix products against inverted scramble matrices) carry
// rounding well above the rank cutoff, so validation uses its own bound.
inline constexpr double kPairValidationTolerance = 1e-8;

template <typename S>
class SpacePair;

template <typename S>
SpacePair<S> validate_pair(const Matrix<S>& gram, const Matrix<S>& op, const ScalarContext& ctx);

/// A validated pair: symmetric nonsingular Gram matrix G and a matrix J
/// with J^T G + G J = 0. Construct through validate_pair.
template <typename S>
class SpacePair {
public:
    int dim() const { return gram_.rows(); }
    const Matrix<S>& gram() const { return gram_; }
    const Matrix<S>& op() const { return op_; }
    const ScalarContext& context() const { return ctx_; }

    /// bilinear form of two column vectors
    S inner(const Matrix<S>& v, const Matrix<S>& w) const { return form_value(gram_, v, w); }

private:
    friend SpacePair validate_pair<S>(const Matrix<S>&, const Matrix<S>&, const ScalarContext&);

    SpacePair(Matrix<S> gram, Matrix<S> op, ScalarContext ctx)
        : gram_(std::move(gram)), op_(std::move(op)), ctx_(ctx) {}

    Matrix<S> gram_;
    Matrix<S> op_;
    ScalarContext ctx_;
};

/// A subspace of an ambient coordinate space, by a basis of independent
/// column vectors.
template <typename S>
struct Subspace {
    int ambient = 0;
    Matrix<S> basis; // ambient x dim, independent columns

    int dim() const { return basis.cols(); }

    static Subspace whole(int n) { return Subspace{n, Matrix<S>::identity(n)}; }
};

template <typename S>
SpacePair<S> validate_pair(const Matrix<S>& gram, const Matrix<S>& op, const ScalarContext& ctx) {
    if (gram.rows() != gram.cols() || op.rows() != op.cols() || gram.rows() != op.rows())
        throw ValidationError("validate_pair: G and J must be square of equal dimension");
    if (gram.rows() == 0) throw ValidationError("validate_pair: dimension must be positive");

    Matrix<S> sym_defect = gram - gram.transpose();
    Matrix<S> skew_defect = op.transpose() * gram + gram * op;
    if constexpr (ScalarTraits<S>::is_exact) {
        if (!sym_defect.is_zero()) throw NotSymmetric("validate_pair: NotSymmetric: G != G^T");
        if (rank(gram, ctx) < gram.rows())
            throw DegenerateForm("validate_pair: DegenerateForm: det G = 0");
        if (!skew_defect.is_zero())
            throw NotSkewadjoint("validate_pair: NotSkewadjoint: J^T G + G J != 0");
    } else {
        double gscale = std::max(1.0, gram.inf_norm());
        double scale = gscale * std::max(1.0, op.inf_norm());
        if (sym_defect.inf_norm() > kPairValidationTolerance * gscale)
            throw NotSymmetric("validate_pair: NotSymmetric: G != G^T");
        if (rank(gram, ctx) < gram.rows())
            throw DegenerateForm("validate_pair: DegenerateForm: G singular within tolerance");
        if (skew_defect.inf_norm() > kPairValidationTolerance * scale)
            throw NotSkewadjoint("validate_pair: NotSkewadjoint: J^T G + G J != 0");
    }
    return SpacePair<S>(gram, op, ctx);
}

/// Gram matrix of the form restricted to the subspace basis: B^T G B.
template <typename S>
Matrix<S> restricted_gram(const SpacePair<S>& pair, const Subspace<S>& w) {
    return w.basis.transpose() * pair.gram() * w.basis;
}

/// Matrix of J restricted to an invariant subspace, in the coordinates of
/// its basis: the columnwise solutions of J B = B X. Throws NotInvariant
/// naming the first basis column that leaves the subspace.
template <typename S>
Matrix<S> restricted_operator(const SpacePair<S>& pair, const Subspace<S>& w) {
    const ScalarContext& ctx = pair.context();
    Matrix<S> jb = pair.op() * w.basis;
    for (int j = 0; j < w.basis.cols(); ++j) {
        auto x = solve(w.basis, jb.col(j), ctx);
        if (!x)
            throw NotInvariant("restrict_pair: NotInvariant: J * (basis column " +
                               std::to_string(j) + ") leaves the subspace");
    }
    auto x = solve(w.basis, jb, ctx);
    return *x;
}

/// (G|_W, J|_W) in the coordinates of W's basis.
template <typename S>
SpacePair<S> restrict_pair(const SpacePair<S>& pair, const Subspace<S>& w) {
    if (w.ambient != pair.dim() || w.basis.rows() != pair.dim())
        throw ValidationError("restrict_pair: subspace/pair dimension mismatch");
    if (w.dim() == 0) throw ValidationError("restrict_pair: empty subspace");
    const ScalarContext& ctx = pair.context();
    if (!columns_independent(w.basis, ctx))
        throw ValidationError("restrict_pair: basis columns are dependent");
    Matrix<S> g = restricted_gram(pair, w);
    if (rank(g, ctx) < g.rows())
        throw DegenerateRestriction("restrict_pair: DegenerateRestriction: restricted form singular");
    Matrix<S> j = restricted_operator(pair, w);
    return validate_pair(g, j, ctx);
}

/// G-orthogonal complement of a nondegenerate subspace: the kernel of
/// B^T G. If W is J-invariant the complement is J-invariant as well.
template <typename S>
Subspace<S> orthogonal_complement(const SpacePair<S>& pair, const Subspace<S>& w) {
    if (w.ambient != pair.dim()) throw ValidationError("orthogonal_complement: dimension mismatch");
    const ScalarContext& ctx = pair.context();
    if (!columns_independent(w.basis, ctx))
        throw ValidationError("orthogonal_complement: basis columns are dependent");
    Matrix<S> g = restricted_gram(pair, w);
    if (rank(g, ctx) < g.rows())
        throw DegenerateRestriction(
            "orthogonal_complement: DegenerateRestriction: subspace is degenerate");
    Matrix<S> comp = kernel_basis(w.basis.transpose() * pair.gram(), ctx);
    return Subspace<S>{pair.dim(), comp};
}

} // namespace skewcanon

#endif
