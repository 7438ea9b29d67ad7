#include "ncpoisson/random.hpp"

namespace ncp {

Word random_word(Rng& rng, const std::vector<int>& syms, int len, bool laurent) {
    std::uniform_int_distribution<std::size_t> pick(0, syms.size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Letter> letters;
    letters.reserve(len);
    for (int i = 0; i < len; ++i) {
        int exp = laurent && sign(rng) ? -1 : 1;
        letters.emplace_back(syms[pick(rng)], exp);
    }
    return Word(std::move(letters));
}

NcPoly random_poly(Rng& rng, const std::vector<int>& syms, int nterms, int max_len, bool laurent) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> coef(-3, 3);
    NcPoly out;
    for (int t = 0; t < nterms; ++t) {
        double c = coef(rng);
        if (c == 0.0) c = 1.0;
        out.add_term(random_word(rng, syms, len(rng), laurent), c);
    }
    return out;
}

TracePoly random_trace_poly(Rng& rng, const std::vector<int>& syms, int nterms, int max_len,
                            bool laurent) {
    return trace(random_poly(rng, syms, nterms, max_len, laurent));
}

}  // namespace ncp
