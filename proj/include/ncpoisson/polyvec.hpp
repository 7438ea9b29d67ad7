#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ncpoisson/calculus.hpp"
#include "ncpoisson/poly.hpp"

namespace ncp {

/// Nonabelian vector field, stored by the images a_i = D(x_i) of its lifted
/// derivation; acts on F by f -> tr(Σ a_i ∂f/∂x_i).
struct VectorField {
    std::vector<NcPoly> coeffs;

    int n() const { return static_cast<int>(coeffs.size()); }
    static VectorField zero(int n) { return {std::vector<NcPoly>(n)}; }
};

/// Nonabelian bivector in Poisson-tensor form: grid of Θ_{i,j} ∈ A⊗A^op,
///   μ(f,g) = tr(Σ_{i,j} ∂f/∂x_i Θ_{i,j}(∂g/∂x_j)).
struct Bivector {
    std::vector<std::vector<Tensor>> theta;

    int n() const { return static_cast<int>(theta.size()); }
    static Bivector zero(int n) {
        return {std::vector<std::vector<Tensor>>(n, std::vector<Tensor>(n))};
    }
    Tensor& at(int i, int j) { return theta[i][j]; }
    const Tensor& at(int i, int j) const { return theta[i][j]; }
};

/// Homogeneous quadratic bivector data r_{i,j}^{a,b}:
///   μ(f,g) = tr(Σ r_{i,j}^{a,b} x_a ∂f/∂x_i x_b ∂g/∂x_j).
struct RTensor {
    int n = 0;
    std::vector<Complex> r;  // n^4 entries, [((i*n+j)*n+a)*n+b]

    explicit RTensor(int n_ = 0) : n(n_), r(static_cast<std::size_t>(n_) * n_ * n_ * n_) {}
    Complex& at(int i, int j, int a, int b) {
        return r[((static_cast<std::size_t>(i) * n + j) * n + a) * n + b];
    }
    Complex at(int i, int j, int a, int b) const {
        return r[((static_cast<std::size_t>(i) * n + j) * n + a) * n + b];
    }

    /// Poisson-tensor form: the term x_a ∂f/∂x_i x_b ∂g/∂x_j contributes
    /// x_b ⊗ x_a to Θ_{i,j}.
    Bivector to_bivector() const;
};

TracePoly vf_apply(const VectorField& v, const TracePoly& f);

/// Commutator via lifted derivations: coeffs = D_v(w_i) - D_w(v_i).
VectorField vf_commutator(const VectorField& v, const VectorField& w);

TracePoly biv_apply(const Bivector& b, const TracePoly& f, const TracePoly& g);
TracePoly biv_apply(const RTensor& r, const TracePoly& f, const TracePoly& g);

/// ν(ν(f,g),h) + ν(ν(g,h),f) + ν(ν(h,f),g).
TracePoly jacobiator(const Bivector& b, const TracePoly& f, const TracePoly& g,
                     const TracePoly& h);

/// Fast path for quadratic bivectors: the expanded double-sum index formula
/// for the cyclic Jacobiator of an RTensor (no nested bracket evaluation).
TracePoly jacobiator_rtensor(const RTensor& r, const TracePoly& f, const TracePoly& g,
                             const TracePoly& h);

/// p-vector data for the Schouten bracket (only p = 1, 2 are populated).
struct PolyVec {
    int p = 0;
    std::function<TracePoly(std::span<const TracePoly>)> eval;

    static PolyVec from(const VectorField& v);
    static PolyVec from(const Bivector& b);
    static PolyVec from(const RTensor& r);
};

/// The signed permutation sum defining the Schouten bracket, evaluated on
/// p+q-1 arguments. Supports p, q in {1, 2}.
TracePoly schouten_eval(const PolyVec& mu, const PolyVec& nu, std::span<const TracePoly> args);

struct HomogeneityReport {
    bool homogeneous = false;
    double max_defect = 0.0;
};

/// Checks ν(f^a, g^a) = ν(f,g)^a on all monomial pairs of degree <= max_deg
/// plus `random_pairs` random pairs.
HomogeneityReport is_homogeneous_biv(const Bivector& b, int max_deg = 3, int random_pairs = 10,
                                     double tol = 1e-9, unsigned seed = 0);

/// All cyclic classes of words of degree 1..max_deg over the given generators
/// (non-Laurent), one representative each.
std::vector<TracePoly> trace_monomials(const std::vector<int>& syms, int max_deg);

}  // namespace ncp
