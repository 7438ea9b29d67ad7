#pragma once

#include <Eigen/Dense>
#include <optional>

#include "ncpoisson/projective.hpp"
#include "ncpoisson/random.hpp"

namespace ncp {

/// Tuple of N x N complex matrices, one per variable; inverses computed on
/// demand with condition screening.
class MatPoint {
public:
    MatPoint(std::vector<Eigen::MatrixXcd> mats, double cond_bound = 1e8);

    /// i.i.d. standard complex Gaussian entries.
    static MatPoint random(Rng& rng, int n_vars, int N);

    int n_vars() const { return static_cast<int>(mats_.size()); }
    int N() const { return N_; }

    const Eigen::MatrixXcd& mat(int sym) const;
    const Eigen::MatrixXcd& inv(int sym) const;  // throws when ill-conditioned

    /// Simultaneous conjugation: mats -> g mats g^-1.
    MatPoint conjugated(const Eigen::MatrixXcd& g) const;

private:
    int N_;
    std::vector<Eigen::MatrixXcd> mats_;
    mutable std::vector<std::optional<Eigen::MatrixXcd>> invs_;
    double cond_bound_;
};

Eigen::MatrixXcd eval_word(const Word& w, const MatPoint& pt);
Eigen::MatrixXcd eval_nc_poly(const NcPoly& f, const MatPoint& pt);
Complex eval_trace_poly(const TracePoly& f, const MatPoint& pt);

/// Bracket value at a representation point, by the symbolic route
/// (biv_apply, then evaluate) or the matrix route (evaluate partials and
/// theta entries as matrices, then trace). The two agree.
Complex bracket_value(const AffineBracket& b, const TracePoly& f, const TracePoly& g,
                      const MatPoint& pt);
Complex bracket_value_matrix(const AffineBracket& b, const TracePoly& f, const TracePoly& g,
                             const MatPoint& pt);

/// Max |Jacobiator evaluation| / scale over random points and random chart
/// trace-monomial triples of degree <= degree; scale is the largest
/// intermediate double-bracket magnitude at the point.
double jacobi_matrix_test(const AffineBracket& b, int N, int samples, int degree,
                          unsigned seed = 0);

}  // namespace ncp
