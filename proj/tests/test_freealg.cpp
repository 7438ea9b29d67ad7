#include <doctest.h>

#include "ncpoisson/poly.hpp"
#include "ncpoisson/polyvec.hpp"
#include "ncpoisson/random.hpp"

using namespace ncp;

TEST_CASE("word reduction cancels inverse pairs regardless of insertion point") {
    Rng rng(11);
    std::uniform_int_distribution<int> sym(0, 2), coin(0, 1);
    for (int t = 0; t < 200; ++t) {
        std::vector<Letter> letters;
        for (int i = 0; i < 8; ++i) letters.push_back(Letter(sym(rng), coin(rng) ? 1 : -1));
        Word w = reduce_word(letters);
        // re-insert an inverse pair at a random position: reduction must undo it
        std::uniform_int_distribution<std::size_t> pos(0, letters.size());
        std::size_t p = pos(rng);
        Letter l(sym(rng), coin(rng) ? 1 : -1);
        letters.insert(letters.begin() + p, {l, l.inverse()});
        CHECK(reduce_word(letters) == w);
        // a reduced word is a fixed point
        CHECK(reduce_word(w.letters()) == w);
    }
}

TEST_CASE("word product is associative and respects the unit") {
    Rng rng(3);
    auto syms = all_gens(3);
    for (int t = 0; t < 100; ++t) {
        Word a = random_word(rng, syms, 4, true);
        Word b = random_word(rng, syms, 4, true);
        Word c = random_word(rng, syms, 3, true);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * Word::one() == a);
        CHECK(Word::one() * a == a);
    }
}

TEST_CASE("cyclic class is invariant under rotation") {
    Rng rng(5);
    auto syms = all_gens(3);
    for (int t = 0; t < 200; ++t) {
        Word w = random_word(rng, syms, 6, true);
        if (w.is_one()) continue;
        CycWord canon(w);
        for (std::size_t r = 1; r < w.size(); ++r) {
            Word rot = w.slice(r, w.size()) * w.slice(0, r);
            CHECK(CycWord(rot) == canon);
        }
    }
}

TEST_CASE("trace is cyclic: trace(fg) = trace(gf)") {
    Rng rng(7);
    auto syms = all_gens(3);
    for (int t = 0; t < 50; ++t) {
        NcPoly f = random_poly(rng, syms, 3, 4, true);
        NcPoly g = random_poly(rng, syms, 3, 4, true);
        CHECK(trace(f * g) == trace(g * f));
    }
}

TEST_CASE("word text format round-trips") {
    CHECK(to_string(Word::one()) == "1");
    Word w = parse_word("x1.x2^-1.a");
    CHECK(to_string(w) == "x1.x2^-1.a");
    CHECK(w.size() == 3);
    CHECK(w.letters()[0] == Letter::gen(0));
    CHECK(w.letters()[1] == Letter::gen_inv(1));
    CHECK(w.letters()[2] == Letter::aux());
    CHECK(parse_word("1") == Word::one());
    CHECK(parse_word("u2.u1") == Word({Letter::gen(1), Letter::gen(0)}));
    CHECK_THROWS(parse_word("x0"));      // generators are printed 1-based
    CHECK_THROWS(parse_word("x1^2"));    // only unit exponents in the letter form
    CHECK_THROWS(parse_word(""));

    Rng rng(9);
    auto syms = all_gens(4);
    for (int t = 0; t < 100; ++t) {
        Word w2 = random_word(rng, syms, 6, true);
        CHECK(parse_word(to_string(w2)) == w2);
    }
}

TEST_CASE("letter order ranks positive powers before inverses before the auxiliary") {
    CHECK(Letter::gen(0) < Letter::gen(1));
    CHECK(Letter::gen(1) < Letter::gen_inv(0));
    CHECK(Letter::gen_inv(1) < Letter::aux());
    CHECK(Letter::aux() < Letter::aux_inv());
}

TEST_CASE("tensor algebra: product, star, and the trace transfer identity") {
    Rng rng(13);
    auto syms = all_gens(2);
    for (int t = 0; t < 50; ++t) {
        Tensor x(random_word(rng, syms, 3), random_word(rng, syms, 3));
        x += Tensor(random_word(rng, syms, 2), random_word(rng, syms, 2), Complex(0, 1));
        NcPoly a = random_poly(rng, syms, 2, 3);
        NcPoly b = random_poly(rng, syms, 2, 3);
        // tr(a * x(b)) = tr(x*(a) * b)
        CHECK(trace(a * tensor_apply(x, b)) == trace(tensor_apply(tensor_star(x), a) * b));
        // star is an anti-involution
        CHECK(tensor_star(tensor_star(x)) == x);
        // (x y)(f) = x(y(f))
        Tensor y(random_word(rng, syms, 2), random_word(rng, syms, 2));
        CHECK(tensor_apply(x * y, b) == tensor_apply(x, tensor_apply(y, b)));
    }
}

TEST_CASE("dilation x_i -> a x_i is an algebra homomorphism fixing a") {
    Rng rng(17);
    auto syms = all_gens(3);
    for (int t = 0; t < 50; ++t) {
        NcPoly f = random_poly(rng, syms, 3, 4, true);
        NcPoly g = random_poly(rng, syms, 3, 4, true);
        CHECK(dilate(f * g) == dilate(f) * dilate(g));
        CHECK(trace(dilate(f)) == dilate(trace(f)));
    }
    CHECK(dilate(Word::aux()) == Word::aux());
    CHECK(dilate(Word::gen(0)) == Word::aux() * Word::gen(0));
    // x_1^-1 -> x_1^-1 a^-1, so x_1^-1 x_1 still cancels after dilation
    CHECK(dilate(Word({Letter::gen_inv(0), Letter::gen(0)})) == Word::one());
}

TEST_CASE("trace monomial count matches the necklace formula") {
    // number of cyclic classes of degree d over m symbols: (1/d) sum_{e|d} phi(e) m^{d/e}
    auto battery = trace_monomials({0, 1}, 4);
    CHECK(battery.size() == 2 + 3 + 4 + 6);
    auto battery3 = trace_monomials({0, 1, 2}, 3);
    CHECK(battery3.size() == 3 + 6 + 11);
}

TEST_CASE("linear combination pruning drops relative dust only") {
    NcPoly f(Word::gen(0), 1.0);
    f.add_term(Word::gen(1), 1e-14);
    f.prune();
    CHECK(f.term_count() == 1);
    NcPoly g(Word::gen(0), 1e-14);  // nothing is dust relative to itself
    g.prune();
    CHECK(g.term_count() == 1);
}
