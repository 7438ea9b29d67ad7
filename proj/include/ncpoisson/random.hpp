#pragma once

#include <random>

#include "ncpoisson/poly.hpp"

namespace ncp {

using Rng = std::mt19937_64;

/// Random word of exactly `len` letters over generators drawn from `syms`
/// (Laurent letters allowed when `laurent` is set). May reduce to something
/// shorter.
Word random_word(Rng& rng, const std::vector<int>& syms, int len, bool laurent = false);

/// Random polynomial with `nterms` words of length <= max_len and small
/// integer coefficients (so symbolic identities stay exact).
NcPoly random_poly(Rng& rng, const std::vector<int>& syms, int nterms, int max_len,
                   bool laurent = false);

TracePoly random_trace_poly(Rng& rng, const std::vector<int>& syms, int nterms, int max_len,
                            bool laurent = false);

inline std::vector<int> all_gens(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

/// Generators of the chart algebra: 0..n-1 with `chart` removed.
inline std::vector<int> chart_gens(int n, int chart) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
        if (i != chart) v.push_back(i);
    return v;
}

}  // namespace ncp
