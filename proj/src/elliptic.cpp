#include "ncpoisson/elliptic.hpp"

#include <Eigen/Dense>
#include <numeric>

#include "ncpoisson/random.hpp"
#include <set>
#include <stdexcept>

namespace ncp {

void EllipticParams::validate() const {
    if (n < 2) throw std::invalid_argument("elliptic: n must be >= 2");
    if (k < 1 || k >= n) throw std::invalid_argument("elliptic: need 1 <= k < n");
    if (std::gcd(n, k) != 1) throw std::invalid_argument("elliptic: n and k must be coprime");
    if (tau.imag() <= 0.0) throw std::invalid_argument("elliptic: Im(tau) must be positive");
}

double CoeffMatrix::antisymmetry_defect() const {
    double d = 0.0;
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r) d = std::max(d, std::abs(at(-i, -r) + at(i, r)));
    return d;
}

CoeffMatrix c_coeffs(const EllipticParams& params) {
    params.validate();
    ThetaCtx ctx(params.tau, params.n, params.trunc_override);
    const int n = params.n;
    const int k = params.k;

    const double scale = [&] {
        double s = 0.0;
        for (int a = 1; a < n; ++a) s = std::max(s, std::abs(ctx.theta0(a)));
        return s;
    }();

    CoeffMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < n; ++r) {
            if (i == 0 && r == 0) {
                c.at(i, r) = 0.0;
            } else if (r == 0) {
                c.at(i, r) = ctx.theta0_prime(i) / ctx.theta0(i);
            } else if (r == i) {
                c.at(i, r) = ctx.theta0_prime(k * i) / ctx.theta0(k * i);
            } else {
                const Complex den = ctx.theta0(k * r) * ctx.theta0(i - r);
                if (std::abs(den) < 1e-10 * scale * scale)
                    throw std::runtime_error("c_coeffs: near-zero denominator at (i=" +
                                             std::to_string(i) + ", r=" + std::to_string(r) + ")");
                c.at(i, r) = ctx.theta0_prime(0) * ctx.theta0(i + r * (k - 1)) / den;
            }
        }
    }
    return c;
}

RTensor build_r_tensor(const EllipticParams& params) {
    CoeffMatrix c = c_coeffs(params);
    const int n = params.n;
    RTensor r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (((i + j - a - b) % n + n) % n == 0) r.at(i, j, a, b) = c.at(j - i, j - a);
    return r;
}

void CommBracket::add(int i, int j, int a, int bb, Complex c) {
    if (c == Complex(0.0)) return;
    auto key = std::minmax(a, bb);
    auto& m = at(i, j);
    m[key] += c;
    if (m[key] == Complex(0.0)) m.erase(key);
}

double CommBracket::max_abs() const {
    double m = 0.0;
    for (const auto& grid : b)
        for (const auto& [key, c] : grid) m = std::max(m, std::abs(c));
    return m;
}

double CommBracket::diff(const CommBracket& o) const {
    if (n != o.n) throw std::invalid_argument("CommBracket::diff: size mismatch");
    double d = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto keys = at(i, j);
            for (const auto& [key, c] : o.at(i, j)) keys[key] -= c;
            for (const auto& [key, c] : keys) d = std::max(d, std::abs(c));
        }
    return d;
}

CommBracket q_commutative(const EllipticParams& params) {
    CoeffMatrix c = c_coeffs(params);
    const int n = params.n;
    CommBracket out(n);
    auto m = [n](int v) { return ((v % n) + n) % n; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int r = 0; r < n; ++r) out.add(i, j, m(j - r), m(i + r), c.at(j - i, r));
        }
    const double scale = out.max_abs();  // drop theta-level dust
    for (auto& grid : out.b)
        for (auto it = grid.begin(); it != grid.end();)
            it = std::abs(it->second) < kZeroThreshold * scale ? grid.erase(it) : std::next(it);
    return out;
}

CommBracket abelianize(const RTensor& r) {
    const int n = r.n;
    CommBracket out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) out.add(i, j, a, b, r.at(i, j, a, b));
    const double scale = out.max_abs();
    for (auto& grid : out.b)
        for (auto it = grid.begin(); it != grid.end();)
            it = std::abs(it->second) < kZeroThreshold * scale ? grid.erase(it) : std::next(it);
    return out;
}

Jac2Certificate jac2_certificate(const CoeffMatrix& c) {
    const int n = c.n;
    const int n2 = n * n;
    const int rows = n2 * n2;
    const int cols = 2 * n2;
    auto m = [n](int v) { return ((v % n) + n) % n; };
    auto p_idx = [&](int alpha, int r) { return m(alpha) * n + m(r); };
    auto q_idx = [&](int alpha, int r) { return n2 + m(alpha) * n + m(r); };

    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(rows, cols);
    Eigen::VectorXcd rhs(rows);
    int row = 0;
    for (int A = 0; A < n; ++A)
        for (int B = 0; B < n; ++B)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s, ++row) {
                    rhs(row) = c.at(B - r, -r - s) * c.at(A, -r) +
                               c.at(-A - B - s, r) * c.at(B, -s) +
                               c.at(A + r + s, s) * c.at(-A - B, r + s);
                    if (m(r) == 0) M(row, p_idx(B, -r - s)) += 1.0;
                    if (m(s) == 0) M(row, p_idx(-A - B, r)) += 1.0;
                    if (m(r + s) == 0) M(row, p_idx(A, s)) += 1.0;
                    if (m(A + B + r + s) == 0) M(row, q_idx(B, A + B + r)) += 1.0;
                    if (m(A + r) == 0) M(row, q_idx(-A - B, s - A)) += 1.0;
                    if (m(B + s) == 0) M(row, q_idx(A, -B - r - s)) += 1.0;
                }

    Eigen::VectorXcd x = M.colPivHouseholderQr().solve(rhs);

    Jac2Certificate cert;
    cert.n = n;
    cert.p.assign(x.data(), x.data() + n2);
    cert.q.assign(x.data() + n2, x.data() + 2 * n2);
    // independent re-evaluation of every equation at the solution
    cert.residual = (M * x - rhs).cwiseAbs().maxCoeff();
    return cert;
}

std::vector<int> contfrac(int n, int k) {
    if (n < 2 || k < 1 || k >= n || std::gcd(n, k) != 1)
        throw std::invalid_argument("contfrac: need coprime 1 <= k < n");
    std::vector<int> out;
    while (true) {
        int q = (n + k - 1) / k;  // ceil(n/k)
        out.push_back(q);
        int k1 = q * k - n;
        if (k1 == 0) break;
        n = k;
        k = k1;
    }
    return out;
}

long long tridiag_det(std::span<const int> m) {
    long long next = 1, after = 0;  // d(m_{i+1}..), d(m_{i+2}..)
    for (std::size_t i = m.size(); i-- > 0;) {
        long long cur = m[i] * next - after;
        after = next;
        next = cur;
    }
    return next;
}

namespace {

Tensor parse_grid_entry(std::initializer_list<std::tuple<const char*, const char*, Complex>> terms) {
    Tensor t;
    for (const auto& [l, r, c] : terms) t.add_term({parse_word(l), parse_word(r)}, c);
    return t;
}

}  // namespace

AffineBracket example_fixture(int k, Complex t) {
    if (k != 1 && k != 2) throw std::invalid_argument("example_fixture: k must be 1 or 2");
    AffineBracket b;
    b.n_total = 3;
    b.chart = 2;
    b.theta = Bivector::zero(3);
    // generators: u1 -> x1 slot (sym 0), u2 -> x2 slot (sym 1)
    if (k == 1) {
        b.theta.at(0, 0) = parse_grid_entry({{"u1.u2", "u2", -1.0}, {"u2", "u1.u2", 1.0}});
        b.theta.at(0, 1) = parse_grid_entry({{"u1.u1", "u1", 1.0},
                                             {"u2", "u2.u2", 1.0},
                                             {"u2", "u1", t / 4.0},
                                             {"u1", "u2", t / 4.0},
                                             {"1", "1", 1.0}});
        b.theta.at(1, 0) = parse_grid_entry({{"u1", "u1.u1", -1.0},
                                             {"u2.u2", "u2", -1.0},
                                             {"u2", "u1", -t / 4.0},
                                             {"u1", "u2", -t / 4.0},
                                             {"1", "1", -1.0}});
        b.theta.at(1, 1) = parse_grid_entry({{"u2.u1", "u1", 1.0}, {"u1", "u2.u1", -1.0}});
    } else {
        b.theta.at(0, 0) = parse_grid_entry({{"u2.u1", "u1.u1", 1.0},
                                             {"u1.u1", "u2.u1", -1.0},
                                             {"1", "u2", 1.0},
                                             {"u2", "1", -1.0}});
        b.theta.at(0, 1) = parse_grid_entry({{"u2.u2", "u1.u1", 1.0},
                                             {"u1.u2", "u2.u1", -1.0},
                                             {"u1", "u2", t / 2.0},
                                             {"u2", "u1", -t / 2.0}});
        // the t-coefficient of u1 (x) u2 here is forced by antisymmetry
        // (this grid entry must be minus the star of its transpose)
        b.theta.at(1, 0) = parse_grid_entry({{"u2.u1", "u1.u2", 1.0},
                                             {"u1.u1", "u2.u2", -1.0},
                                             {"u1", "u2", t / 2.0},
                                             {"u2", "u1", -t / 2.0}});
        b.theta.at(1, 1) = parse_grid_entry({{"u2.u2", "u1.u2", 1.0},
                                             {"u1.u2", "u2.u2", -1.0},
                                             {"u1", "1", 1.0},
                                             {"1", "u1", -1.0}});
    }
    return b;
}

FixtureMatch match_fixture(const EllipticParams& params, int D) {
    if (params.n != 3) throw std::invalid_argument("match_fixture: fixtures exist for n = 3 only");
    params.validate();

    AffineBracket descended = descend(build_r_tensor(params));
    AffineBracket f0 = example_fixture(params.k, 0.0);
    AffineBracket f1 = example_fixture(params.k, 1.0);
    // t-linear part of the fixture grid
    AffineBracket ft = f1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ft.theta.at(i, j) -= f0.theta.at(i, j);

    // least squares for (lambda, mu = lambda*t) over bracket evaluations;
    // degree 4-5 arguments are needed because for k = 2 the bracket acts as
    // zero on everything of lower degree
    auto battery = trace_monomials(chart_gens(3, 2), 3);
    Rng rng(1);
    for (int t = 0; t < 12; ++t)
        battery.push_back(trace(random_word(rng, chart_gens(3, 2), 4 + t % 2)));
    std::vector<Complex> col0, col1, target;
    for (const auto& f : battery)
        for (const auto& g : battery) {
            TracePoly vd = biv_apply(descended, f, g);
            TracePoly v0 = biv_apply(f0, f, g);
            TracePoly v1 = biv_apply(ft, f, g);
            std::set<CycWord> keys;
            for (const auto& [w, c] : vd.terms()) keys.insert(w);
            for (const auto& [w, c] : v0.terms()) keys.insert(w);
            for (const auto& [w, c] : v1.terms()) keys.insert(w);
            for (const auto& w : keys) {
                target.push_back(vd.coeff(w));
                col0.push_back(v0.coeff(w));
                col1.push_back(v1.coeff(w));
            }
        }
    Eigen::MatrixXcd A(target.size(), 2);
    Eigen::VectorXcd rhs(target.size());
    for (std::size_t r = 0; r < target.size(); ++r) {
        A(r, 0) = col0[r];
        A(r, 1) = col1[r];
        rhs(r) = target[r];
    }
    Eigen::Vector2cd sol = A.colPivHouseholderQr().solve(rhs);

    FixtureMatch match;
    match.lambda = sol(0);
    match.t = sol(1) / sol(0);

    AffineBracket scaled = example_fixture(params.k, match.t);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) scaled.theta.at(i, j) *= match.lambda;
    match.defect = biv_equiv(descended, scaled, D).max_defect;
    return match;
}

}  // namespace ncp
