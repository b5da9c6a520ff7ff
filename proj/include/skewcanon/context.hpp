#ifndef SKEWCANON_CONTEXT_HPP
#define SKEWCANON_CONTEXT_HPP

#include "skewcanon/errors.hpp"

namespace skewcanon {

enum class Mode { exact, floating };

/// Arithmetic mode plus the two float-mode knobs. Exact mode carries no
/// tolerances: every comparison is literal equality of rationals.
///
/// rank_tolerance is relative: a singular value sigma counts as zero when
/// sigma <= rank_tolerance * n * sigma_max. cluster_tolerance is absolute
/// on the roots of the minimal polynomial.
struct ScalarContext {
    Mode mode = Mode::exact;
    double rank_tolerance = 0.0;
    double cluster_tolerance = 0.0;

    static constexpr double kDefaultRankTolerance = 1e-12;
    static constexpr double kDefaultClusterTolerance = 1e-8;

    static ScalarContext exact() { return ScalarContext{Mode::exact, 0.0, 0.0}; }

    static ScalarContext floating(double rank_tol = kDefaultRankTolerance,
                                  double cluster_tol = kDefaultClusterTolerance) {
        if (!(rank_tol > 0.0) || !(cluster_tol > 0.0))
            throw ValidationError("float tolerances must be strictly positive");
        return ScalarContext{Mode::floating, rank_tol, cluster_tol};
    }

    bool is_exact() const { return mode == Mode::exact; }

    /// Absolute singular-value cutoff for an n-dimensional problem of the
    /// given scale (largest singular value or infinity norm).
    double rank_cutoff(int n, double scale) const {
        double s = scale > 1.0 ? scale : 1.0;
        return rank_tolerance * static_cast<double>(n) * s;
    }
};

} // namespace skewcanon

#endif
