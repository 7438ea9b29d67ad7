#pragma once

#include <optional>

#include "ncpoisson/polyvec.hpp"

namespace ncp {

/// Chart bracket on the free algebra in u_j = x_chart^-1 x_j (j != chart).
/// The theta grid is indexed by x-generator labels; the chart row/column are
/// unused. Keeps the homogeneous RTensor it was descended from, when known.
struct AffineBracket {
    int n_total = 0;
    int chart = 0;
    Bivector theta;
    std::optional<RTensor> provenance;
};

TracePoly biv_apply(const AffineBracket& b, const TracePoly& f, const TracePoly& g);
TracePoly jacobiator(const AffineBracket& b, const TracePoly& f, const TracePoly& g,
                     const TracePoly& h);

/// Descends a homogeneous quadratic bivector to the given affine chart
/// (default: the last generator), substituting u_chart = 1. The chart grid
/// entry picks up four terms per r-coefficient.
AffineBracket descend(const RTensor& r, int chart = -1);

/// Re-descends the stored homogeneous tensor in another chart.
AffineBracket chart_transform(const AffineBracket& b, int new_chart);

/// Rewrites a chart expression into another chart's (Laurent) variables via
/// u_{i,from} = u_{from,to}^-1 u_{i,to}.
Word chart_substitute(const Word& w, int from_chart, int to_chart);
TracePoly chart_substitute(const TracePoly& f, int from_chart, int to_chart);

struct EquivReport {
    bool equivalent = false;
    double max_defect = 0.0;
};

/// Semantic equality: brackets agree on all pairs of chart trace monomials of
/// degree <= D plus `random_pairs` random higher-degree pairs.
EquivReport biv_equiv(const AffineBracket& b1, const AffineBracket& b2, int D,
                      double tol = 1e-9, int random_pairs = 100, unsigned seed = 0);

/// Max Jacobiator coefficient over all chart trace-monomial triples of
/// degree <= D plus `random_triples` random triples of degree <= D+2.
double jacobi_affine(const AffineBracket& b, int D, int random_triples = 50, unsigned seed = 0);

/// Independent verification path: evaluates the Jacobiator of the homogeneous
/// bivector directly in the Laurent x-algebra on homogeneous arguments
/// (chart trace monomials expanded through u_j = x_chart^-1 x_j); never
/// constructs the chart bracket.
double jacobi_homogeneous(const RTensor& r, int chart, int max_udeg, int random_triples = 10,
                          unsigned seed = 0);

}  // namespace ncp
