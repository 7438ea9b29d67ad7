#include "ncpoisson/calculus.hpp"

#include <stdexcept>

namespace ncp {

NcPoly cyclic_diff(const CycWord& w, int i) {
    if (i < 0) throw std::out_of_range("cyclic_diff: generator index");
    NcPoly out;
    const auto& ls = w.rep().letters();
    const std::size_t L = ls.size();
    for (std::size_t p = 0; p < L; ++p) {
        if (ls[p].sym != i) continue;
        // Rotation with position p last, then the letter removed:
        // suffix (p+1..L) followed by prefix (0..p).
        std::vector<Letter> rot;
        rot.reserve(L - 1);
        for (std::size_t q = p + 1; q < L; ++q) rot.push_back(ls[q]);
        for (std::size_t q = 0; q < p; ++q) rot.push_back(ls[q]);
        if (ls[p].exp > 0) {
            out.add_term(Word(std::move(rot)), 1.0);
        } else {
            // d(x^-1) = -x^-1 dx x^-1
            std::vector<Letter> word;
            word.reserve(L + 1);
            word.push_back(Letter::gen_inv(i));
            word.insert(word.end(), rot.begin(), rot.end());
            word.push_back(Letter::gen_inv(i));
            out.add_term(Word(std::move(word)), -1.0);
        }
    }
    return out;
}

NcPoly cyclic_diff(const TracePoly& f, int i) {
    NcPoly out;
    for (const auto& [w, c] : f.terms()) out += c * cyclic_diff(w, i);
    return out;
}

Gradient gradient(const TracePoly& f, int n) {
    Gradient g(n);
    for (int i = 0; i < n; ++i) g[i] = cyclic_diff(f, i);
    return g;
}

Tensor double_diff(const NcPoly& f, int i) {
    if (i < 0) throw std::out_of_range("double_diff: generator index");
    Tensor out;
    for (const auto& [w, c] : f.terms()) {
        const auto& ls = w.letters();
        const std::size_t L = ls.size();
        for (std::size_t p = 0; p < L; ++p) {
            if (ls[p].sym != i) continue;
            Word prefix = w.slice(0, p);
            Word suffix = w.slice(p + 1, L);
            if (ls[p].exp > 0) {
                out.add_term({prefix, suffix}, c);
            } else {
                out.add_term({prefix * Word::gen_inv(i), Word::gen_inv(i) * suffix}, -c);
            }
        }
    }
    return out;
}

NcPoly apply_derivation(const std::vector<NcPoly>& images, const NcPoly& f) {
    NcPoly out;
    for (const auto& [w, c] : f.terms()) {
        const auto& ls = w.letters();
        const std::size_t L = ls.size();
        for (std::size_t p = 0; p < L; ++p) {
            const Letter& l = ls[p];
            if (l.sym == Letter::kAux) continue;
            if (l.sym >= static_cast<int>(images.size()))
                throw std::out_of_range("apply_derivation: generator outside image table");
            NcPoly prefix(w.slice(0, p));
            NcPoly suffix(w.slice(p + 1, L));
            if (l.exp > 0) {
                out += c * (prefix * images[l.sym] * suffix);
            } else {
                NcPoly inv = NcPoly::gen_inv(l.sym);
                out -= c * (prefix * inv * images[l.sym] * inv * suffix);
            }
        }
    }
    return out;
}

Word expand_u(const Word& w, int chart) {
    std::vector<Letter> out;
    out.reserve(2 * w.size());
    for (const Letter& l : w.letters()) {
        if (l.sym == Letter::kAux || l.sym == chart)
            throw std::invalid_argument("expand_u: not a chart-variable word");
        if (l.exp > 0) {
            out.push_back(Letter::gen_inv(chart));
            out.push_back(Letter::gen(l.sym));
        } else {
            out.push_back(Letter::gen_inv(l.sym));
            out.push_back(Letter::gen(chart));
        }
    }
    return Word(std::move(out));
}

NcPoly expand_u(const NcPoly& f, int chart) {
    NcPoly out;
    for (const auto& [w, c] : f.terms()) out.add_term(expand_u(w, chart), c);
    return out;
}

TracePoly expand_u(const TracePoly& f, int chart) {
    TracePoly out;
    for (const auto& [w, c] : f.terms()) out.add_term(CycWord(expand_u(w.rep(), chart)), c);
    return out;
}

Gradient affine_partials(const TracePoly& f_u, int n, int chart) {
    if (chart < 0 || chart >= n) throw std::out_of_range("affine_partials: chart index");
    Gradient g(n);
    const NcPoly xc_inv = NcPoly::gen_inv(chart);
    for (int j = 0; j < n; ++j) {
        if (j == chart) continue;
        NcPoly dj = expand_u(cyclic_diff(f_u, j), chart);
        g[j] = dj * xc_inv;
        g[chart] -= xc_inv * NcPoly::gen(j) * dj * xc_inv;
    }
    return g;
}

}  // namespace ncp
