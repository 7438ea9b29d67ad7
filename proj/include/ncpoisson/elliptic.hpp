#pragma once

#include <map>
#include <span>
#include <vector>

#include "ncpoisson/projective.hpp"
#include "ncpoisson/theta.hpp"

namespace ncp {

struct EllipticParams {
    int n = 3;
    int k = 1;
    Complex tau{0.0, 1.0};
    double tol = 1e-9;
    int trunc_override = 0;

    void validate() const;  // coprimality, ranges, Im(tau) > 0
};

/// Theta-constant coefficient matrix c_{i,r}, indices mod n.
struct CoeffMatrix {
    int n = 0;
    std::vector<Complex> c;

    explicit CoeffMatrix(int n_ = 0) : n(n_), c(static_cast<std::size_t>(n_) * n_) {}
    Complex& at(int i, int r) { return c[idx(i, r)]; }
    Complex at(int i, int r) const { return c[idx(i, r)]; }
    std::size_t idx(int i, int r) const {
        auto m = [this](int v) { return ((v % n) + n) % n; };
        return static_cast<std::size_t>(m(i)) * n + m(r);
    }
    /// max |c_{-i,-r} + c_{i,r}|
    double antisymmetry_defect() const;
};

///   c_{i,r} = theta'_0(0) theta_{i+r(k-1)}(0) / (theta_{kr}(0) theta_{i-r}(0)),
/// with c_{0,0} = 0 and logarithmic-derivative diagonals c_{i,0}, c_{i,i}.
CoeffMatrix c_coeffs(const EllipticParams& params);

/// The elliptic quadratic bivector: r_{i,j}^{a,b} = delta_{i+j,a+b} c_{j-i,j-a},
/// normalized so its abelianization is q_commutative.
RTensor build_r_tensor(const EllipticParams& params);

/// Commutative quadratic bracket: coefficients of {x_i, x_j} on sorted
/// monomials x_a x_b, antisymmetric in (i,j).
struct CommBracket {
    int n = 0;
    std::vector<std::map<std::pair<int, int>, Complex>> b;  // n*n grid, [i*n+j]

    explicit CommBracket(int n_ = 0) : n(n_), b(static_cast<std::size_t>(n_) * n_) {}
    std::map<std::pair<int, int>, Complex>& at(int i, int j) { return b[i * n + j]; }
    const std::map<std::pair<int, int>, Complex>& at(int i, int j) const { return b[i * n + j]; }

    void add(int i, int j, int a, int bb, Complex c);  // accumulates on the sorted monomial
    double max_abs() const;
    double diff(const CommBracket& o) const;  // max coefficient difference
};

/// The Poisson brackets of q_{n,k}(tau).
CommBracket q_commutative(const EllipticParams& params);

/// Sends each theta-grid word pair to a sorted commutative monomial.
/// Throws if the tensor carries Laurent letters.
CommBracket abelianize(const RTensor& r);

/// Least-squares witness for the finite linear identity behind the theorem:
/// p, q such that the threefold c*c sums reduce to Kronecker-delta terms.
struct Jac2Certificate {
    int n = 0;
    std::vector<Complex> p, q;  // n*n each, [alpha*n + r]
    double residual = 0.0;      // max equation violation, re-evaluated after the solve
};

Jac2Certificate jac2_certificate(const CoeffMatrix& c);

/// Negative-regular continued fraction n/k = n1 - 1/(n2 - ...), all n_i >= 2.
std::vector<int> contfrac(int n, int k);

/// Tridiagonal determinant d(m_1..m_q) with -1 off-diagonals; d() = 1.
long long tridiag_det(std::span<const int> m);

/// Literal affine theta grids of the two n = 3 chart brackets, with the
/// symbolic parameter t substituted.
AffineBracket example_fixture(int k, Complex t);

struct FixtureMatch {
    Complex lambda;  // overall scale between descended bracket and fixture
    Complex t;       // matched fixture parameter
    double defect;   // max semantic defect at the verification degree
};

/// Matches descend(build_r_tensor(params)) against the n = 3 fixture family
/// lambda * fixture(k, t) by least squares on low-degree evaluations, then
/// verifies semantic agreement up to degree D.
FixtureMatch match_fixture(const EllipticParams& params, int D = 4);

}  // namespace ncp
