#include "ncpoisson/projective.hpp"

#include <stdexcept>

#include "ncpoisson/random.hpp"

namespace ncp {

TracePoly biv_apply(const AffineBracket& b, const TracePoly& f, const TracePoly& g) {
    return biv_apply(b.theta, f, g);
}

TracePoly jacobiator(const AffineBracket& b, const TracePoly& f, const TracePoly& g,
                     const TracePoly& h) {
    return jacobiator(b.theta, f, g, h);
}

AffineBracket descend(const RTensor& r, int chart) {
    const int n = r.n;
    if (n < 2) throw std::invalid_argument("descend: need n >= 2");
    if (chart < 0) chart = n - 1;
    if (chart >= n) throw std::out_of_range("descend: chart index");

    auto u_word = [&](int a) { return a == chart ? Word::one() : Word::gen(a); };

    AffineBracket out;
    out.n_total = n;
    out.chart = chart;
    out.theta = Bivector::zero(n);
    out.provenance = r;

    for (int i = 0; i < n; ++i) {
        if (i == chart) continue;
        for (int j = 0; j < n; ++j) {
            if (j == chart) continue;
            Tensor& th = out.theta.at(i, j);
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    const Word ua = u_word(a), ub = u_word(b);
                    const Word ui = Word::gen(i), uj = Word::gen(j);
                    if (Complex c = r.at(i, j, a, b); c != Complex(0.0))
                        th.add_term({ub, ua}, c);
                    if (Complex c = r.at(chart, j, a, b); c != Complex(0.0))
                        th.add_term({ub, ua * ui}, -c);
                    if (Complex c = r.at(i, chart, a, b); c != Complex(0.0))
                        th.add_term({ub * uj, ua}, -c);
                    if (Complex c = r.at(chart, chart, a, b); c != Complex(0.0))
                        th.add_term({ub * uj, ua * ui}, c);
                }
            }
            th.prune();
        }
    }
    return out;
}

AffineBracket chart_transform(const AffineBracket& b, int new_chart) {
    if (new_chart == b.chart) return b;
    if (!b.provenance)
        throw std::invalid_argument("chart_transform: bracket has no homogeneous provenance");
    if (new_chart < 0 || new_chart >= b.n_total)
        throw std::out_of_range("chart_transform: chart index");
    return descend(*b.provenance, new_chart);
}

Word chart_substitute(const Word& w, int from_chart, int to_chart) {
    if (from_chart == to_chart) return w;
    std::vector<Letter> out;
    out.reserve(2 * w.size());
    for (const Letter& l : w.letters()) {
        if (l.sym == Letter::kAux || l.sym == from_chart)
            throw std::invalid_argument("chart_substitute: not a chart-variable word");
        if (l.sym == to_chart) {
            // u_{to,from} = u_{from,to}^-1 in the target chart
            out.push_back(Letter(from_chart, -l.exp));
        } else if (l.exp > 0) {
            // u_{i,from} = u_{from,to}^-1 u_{i,to}
            out.push_back(Letter::gen_inv(from_chart));
            out.push_back(Letter::gen(l.sym));
        } else {
            out.push_back(Letter::gen_inv(l.sym));
            out.push_back(Letter::gen(from_chart));
        }
    }
    return Word(std::move(out));
}

TracePoly chart_substitute(const TracePoly& f, int from_chart, int to_chart) {
    TracePoly out;
    for (const auto& [w, c] : f.terms())
        out.add_term(CycWord(chart_substitute(w.rep(), from_chart, to_chart)), c);
    return out;
}

EquivReport biv_equiv(const AffineBracket& b1, const AffineBracket& b2, int D, double tol,
                      int random_pairs, unsigned seed) {
    if (b1.n_total != b2.n_total || b1.chart != b2.chart)
        throw std::invalid_argument("biv_equiv: size or chart mismatch");
    const auto gens = chart_gens(b1.n_total, b1.chart);
    auto battery = trace_monomials(gens, D);

    EquivReport rep;
    auto probe = [&](const TracePoly& f, const TracePoly& g) {
        TracePoly diff = biv_apply(b1, f, g) - biv_apply(b2, f, g);
        rep.max_defect = std::max(rep.max_defect, diff.max_abs());
    };
    for (const auto& f : battery)
        for (const auto& g : battery) probe(f, g);
    Rng rng(seed);
    for (int t = 0; t < random_pairs; ++t)
        probe(trace(random_word(rng, gens, D + 2)), trace(random_word(rng, gens, D + 2)));
    rep.equivalent = rep.max_defect <= tol;
    return rep;
}

double jacobi_affine(const AffineBracket& b, int D, int random_triples, unsigned seed) {
    const auto gens = chart_gens(b.n_total, b.chart);
    auto battery = trace_monomials(gens, D);
    double residual = 0.0;
    const std::size_t m = battery.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k)
                residual = std::max(
                    residual, jacobiator(b, battery[i], battery[j], battery[k]).max_abs());
    Rng rng(seed);
    for (int t = 0; t < random_triples; ++t) {
        TracePoly f = trace(random_word(rng, gens, D + 2));
        TracePoly g = trace(random_word(rng, gens, D + 2));
        TracePoly h = trace(random_word(rng, gens, D + 2));
        residual = std::max(residual, jacobiator(b, f, g, h).max_abs());
    }
    return residual;
}

double jacobi_homogeneous(const RTensor& r, int chart, int max_udeg, int random_triples,
                          unsigned seed) {
    const int n = r.n;
    if (chart < 0) chart = n - 1;
    const auto gens = chart_gens(n, chart);
    std::vector<TracePoly> battery;
    for (const auto& f : trace_monomials(gens, max_udeg)) battery.push_back(expand_u(f, chart));
    Bivector b = r.to_bivector();
    double residual = 0.0;
    const std::size_t m = battery.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k)
                residual = std::max(
                    residual, jacobiator(b, battery[i], battery[j], battery[k]).max_abs());
    Rng rng(seed);
    for (int t = 0; t < random_triples; ++t) {
        auto rnd = [&] { return expand_u(trace(random_word(rng, gens, max_udeg + 1)), chart); };
        residual = std::max(residual, jacobiator(b, rnd(), rnd(), rnd()).max_abs());
    }
    return residual;
}

}  // namespace ncp
