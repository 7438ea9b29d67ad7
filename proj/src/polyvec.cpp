#include "ncpoisson/polyvec.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ncpoisson/random.hpp"

namespace ncp {

Bivector RTensor::to_bivector() const {
    Bivector b = Bivector::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a)
                for (int bb = 0; bb < n; ++bb) {
                    Complex c = at(i, j, a, bb);
                    if (c != Complex(0.0)) b.at(i, j).add_term({Word::gen(bb), Word::gen(a)}, c);
                }
    return b;
}

TracePoly vf_apply(const VectorField& v, const TracePoly& f) {
    NcPoly acc;
    for (int i = 0; i < v.n(); ++i) {
        if (v.coeffs[i].is_zero()) continue;
        acc += v.coeffs[i] * cyclic_diff(f, i);
    }
    return trace(acc);
}

VectorField vf_commutator(const VectorField& v, const VectorField& w) {
    if (v.n() != w.n()) throw std::invalid_argument("vf_commutator: size mismatch");
    VectorField out = VectorField::zero(v.n());
    for (int i = 0; i < v.n(); ++i)
        out.coeffs[i] = apply_derivation(v.coeffs, w.coeffs[i]) -
                        apply_derivation(w.coeffs, v.coeffs[i]);
    return out;
}

TracePoly biv_apply(const Bivector& b, const TracePoly& f, const TracePoly& g) {
    const int n = b.n();
    Gradient gf = gradient(f, n);
    Gradient gg = gradient(g, n);
    NcPoly acc;
    for (int i = 0; i < n; ++i) {
        if (gf[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (gg[j].is_zero() || b.at(i, j).is_zero()) continue;
            acc += gf[i] * tensor_apply(b.at(i, j), gg[j]);
        }
    }
    TracePoly out = trace(acc);
    out.prune();
    return out;
}

TracePoly biv_apply(const RTensor& r, const TracePoly& f, const TracePoly& g) {
    return biv_apply(r.to_bivector(), f, g);
}

TracePoly jacobiator(const Bivector& b, const TracePoly& f, const TracePoly& g,
                     const TracePoly& h) {
    TracePoly out = biv_apply(b, biv_apply(b, f, g), h) + biv_apply(b, biv_apply(b, g, h), f) +
                    biv_apply(b, biv_apply(b, h, f), g);
    out.prune();
    return out;
}

TracePoly jacobiator_rtensor(const RTensor& r, const TracePoly& f, const TracePoly& g,
                             const TracePoly& h) {
    const int n = r.n;
    Gradient gf = gradient(f, n), gg = gradient(g, n), gh = gradient(h, n);

    // right-multiplied partials  P[i][i1] = ∂·/∂x_i x_{i1}
    auto times_gen = [&](const Gradient& gr) {
        std::vector<std::vector<NcPoly>> p(n, std::vector<NcPoly>(n));
        for (int i = 0; i < n; ++i)
            for (int i1 = 0; i1 < n; ++i1) p[i][i1] = gr[i] * NcPoly::gen(i1);
        return p;
    };
    auto pf = times_gen(gf), pg = times_gen(gg), ph = times_gen(gh);

    // RTensor stores the bracket as tr(r_{ij}^{ab} x_a df_i x_b dg_j); the
    // quadratic coefficients below are written for the cyclically equivalent
    // placement tr(rt_{ij}^{i1 j1} df_i x_{i1} dg_j x_{j1}), i.e. with the
    // upper index pair transposed.
    auto rt = [&](int a, int b, int u, int v) { return r.at(a, b, v, u); };
    NcPoly acc;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int i1 = 0; i1 < n; ++i1)
                    for (int j1 = 0; j1 < n; ++j1)
                        for (int k1 = 0; k1 < n; ++k1) {
                            Complex c1 = 0.0, c2 = 0.0;
                            for (int al = 0; al < n; ++al) {
                                c1 += rt(al, j, i1, j1) * rt(i, k, al, k1) +
                                      rt(al, k, j1, k1) * rt(j, i, al, i1) +
                                      rt(al, i, k1, i1) * rt(k, j, al, j1);
                                c2 += rt(al, k, j1, k1) * rt(i, j, i1, al) +
                                      rt(al, i, k1, i1) * rt(j, k, j1, al) +
                                      rt(al, j, i1, j1) * rt(k, i, k1, al);
                            }
                            if (c1 != Complex(0.0)) acc += c1 * (pf[i][i1] * ph[j][j1] * pg[k][k1]);
                            if (c2 != Complex(0.0)) acc += c2 * (pf[i][i1] * pg[j][j1] * ph[k][k1]);
                        }
    TracePoly out = trace(acc);
    out.prune();
    return out;
}

PolyVec PolyVec::from(const VectorField& v) {
    return {1, [v](std::span<const TracePoly> a) { return vf_apply(v, a[0]); }};
}

PolyVec PolyVec::from(const Bivector& b) {
    return {2, [b](std::span<const TracePoly> a) { return biv_apply(b, a[0], a[1]); }};
}

PolyVec PolyVec::from(const RTensor& r) { return PolyVec::from(r.to_bivector()); }

namespace {

// Signed sum over permutations of mu(nu(first q args), remaining p-1 args).
TracePoly perm_sum(const PolyVec& outer, const PolyVec& inner, std::span<const TracePoly> args) {
    const int m = static_cast<int>(args.size());
    TracePoly out;
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    do {
        int sign = 1;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        std::vector<TracePoly> in;
        for (int i = 0; i < inner.p; ++i) in.push_back(args[perm[i]]);
        std::vector<TracePoly> outargs;
        outargs.push_back(inner.eval(in));
        for (int i = inner.p; i < m; ++i) outargs.push_back(args[perm[i]]);
        out += Complex(sign) * outer.eval(outargs);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

TracePoly schouten_eval(const PolyVec& mu, const PolyVec& nu, std::span<const TracePoly> args) {
    if (mu.p < 1 || mu.p > 2 || nu.p < 1 || nu.p > 2)
        throw std::invalid_argument("schouten_eval: only p,q in {1,2} supported");
    const int m = mu.p + nu.p - 1;
    if (static_cast<int>(args.size()) != m)
        throw std::invalid_argument("schouten_eval: wrong argument count");
    double sgn = ((mu.p - 1) * (nu.p - 1)) % 2 ? -1.0 : 1.0;
    TracePoly out = perm_sum(mu, nu, args) - sgn * perm_sum(nu, mu, args);
    out.prune();
    return out;
}

std::vector<TracePoly> trace_monomials(const std::vector<int>& syms, int max_deg) {
    std::set<CycWord> seen;
    std::vector<TracePoly> out;
    std::vector<int> digits;
    for (int deg = 1; deg <= max_deg; ++deg) {
        digits.assign(deg, 0);
        while (true) {
            std::vector<Letter> ls;
            for (int d : digits) ls.push_back(Letter::gen(syms[d]));
            CycWord cw{Word(std::move(ls))};
            if (seen.insert(cw).second) out.emplace_back(cw);
            int pos = deg - 1;
            while (pos >= 0 && digits[pos] == static_cast<int>(syms.size()) - 1) digits[pos--] = 0;
            if (pos < 0) break;
            ++digits[pos];
        }
    }
    return out;
}

HomogeneityReport is_homogeneous_biv(const Bivector& b, int max_deg, int random_pairs, double tol,
                                     unsigned seed) {
    const int n = b.n();
    std::vector<TracePoly> battery = trace_monomials(all_gens(n), max_deg);
    std::vector<std::pair<TracePoly, TracePoly>> pairs;
    for (const auto& f : battery)
        for (const auto& g : battery) pairs.emplace_back(f, g);
    Rng rng(seed);
    for (int t = 0; t < random_pairs; ++t)
        pairs.emplace_back(random_trace_poly(rng, all_gens(n), 3, max_deg + 1),
                           random_trace_poly(rng, all_gens(n), 3, max_deg + 1));

    HomogeneityReport rep;
    for (const auto& [f, g] : pairs) {
        TracePoly lhs = biv_apply(b, dilate(f), dilate(g));
        TracePoly rhs = dilate(biv_apply(b, f, g));
        rep.max_defect = std::max(rep.max_defect, (lhs - rhs).max_abs());
    }
    rep.homogeneous = rep.max_defect <= tol;
    return rep;
}

}  // namespace ncp
