#include <doctest.h>

#include "ncpoisson/calculus.hpp"
#include "ncpoisson/random.hpp"

using namespace ncp;

namespace {

NcPoly P(const std::string& text) { return NcPoly(parse_word(text)); }

}  // namespace

TEST_CASE("cyclic derivative of tr(x1^2 x2 x1 x2)") {
    TracePoly f = trace(parse_word("x1.x1.x2.x1.x2"));

    NcPoly d1 = cyclic_diff(f, 0);
    CHECK(d1 == P("x1.x2.x1.x2") + P("x2.x1.x2.x1") + P("x2.x1.x1.x2"));

    NcPoly d2 = cyclic_diff(f, 1);
    CHECK(d2 == P("x1.x2.x1.x1") + P("x1.x1.x2.x1"));
}

TEST_CASE("double derivative of x1^2 x2 x1 x2") {
    NcPoly f = P("x1.x1.x2.x1.x2");

    Tensor d1 = double_diff(f, 0);
    Tensor e1;
    e1.add_term({parse_word("1"), parse_word("x1.x2.x1.x2")}, 1.0);
    e1.add_term({parse_word("x1"), parse_word("x2.x1.x2")}, 1.0);
    e1.add_term({parse_word("x1.x1.x2"), parse_word("x2")}, 1.0);
    CHECK(d1 == e1);

    Tensor d2 = double_diff(f, 1);
    Tensor e2;
    e2.add_term({parse_word("x1.x1"), parse_word("x1.x2")}, 1.0);
    e2.add_term({parse_word("x1.x1.x2.x1"), parse_word("1")}, 1.0);
    CHECK(d2 == e2);
}

TEST_CASE("Laurent rule: the derivative of an inverse occurrence") {
    // d(tr(x1^-1 x2))/dx1 = -x1^-1 x2 x1^-1
    TracePoly f = trace(parse_word("x1^-1.x2"));
    CHECK(cyclic_diff(f, 0) == -NcPoly(parse_word("x1^-1.x2.x1^-1")));
    // the x2 derivative is the plain rotation
    CHECK(cyclic_diff(f, 1) == P("x1^-1"));
    // inverse pair: tr(x1^-1 x2 x1 x3) w.r.t. x1 has one positive and one inverse occurrence
    TracePoly g = trace(parse_word("x1^-1.x2.x1.x3"));
    CHECK(cyclic_diff(g, 0) ==
          P("x3.x1^-1.x2") - NcPoly(parse_word("x1^-1.x2.x1.x3.x1^-1")));
}

TEST_CASE("commutator identity: sum_i [x_i, df/dx_i] vanishes") {
    Rng rng(21);
    const int n = 3;
    auto syms = all_gens(n);
    for (int t = 0; t < 200; ++t) {
        TracePoly f = random_trace_poly(rng, syms, 3, 8, t % 2 == 1);
        NcPoly acc;
        for (int i = 0; i < n; ++i) {
            NcPoly d = cyclic_diff(f, i);
            acc += NcPoly(Word::gen(i)) * d - d * NcPoly(Word::gen(i));
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("Euler identities for homogeneous Laurent elements") {
    Rng rng(23);
    for (int n : {2, 3, 4}) {
        const int chart = n - 1;
        auto ugens = chart_gens(n, chart);
        for (int t = 0; t < 34; ++t) {
            // homogeneous: any polynomial in u_j = x_chart^-1 x_j, expanded
            TracePoly fu = random_trace_poly(rng, ugens, 3, 4, true);
            TracePoly f = expand_u(fu, chart);
            NcPoly left, right;
            for (int i = 0; i < n; ++i) {
                NcPoly d = cyclic_diff(f, i);
                left += NcPoly(Word::gen(i)) * d;
                right += d * NcPoly(Word::gen(i));
            }
            CHECK(left.is_zero());
            CHECK(right.is_zero());
        }
    }
}

TEST_CASE("chain rule partials agree with direct differentiation of the expansion") {
    Rng rng(29);
    for (int n : {2, 3, 4}) {
        const int chart = n - 1;
        auto ugens = chart_gens(n, chart);
        for (int t = 0; t < 34; ++t) {
            TracePoly fu = random_trace_poly(rng, ugens, 3, 4, true);
            Gradient via_chain = affine_partials(fu, n, chart);
            TracePoly f = expand_u(fu, chart);
            for (int i = 0; i < n; ++i) CHECK(via_chain[i] == cyclic_diff(f, i));
        }
    }
}

TEST_CASE("tr(u1 u2) partials in homogeneous coordinates, n = 3") {
    TracePoly fu = trace(parse_word("u1.u2"));
    Gradient g = affine_partials(fu, 3, 2);
    TracePoly f = trace(parse_word("x3^-1.x1.x3^-1.x2"));
    for (int i = 0; i < 3; ++i) CHECK(g[i] == cyclic_diff(f, i));
}

TEST_CASE("derivation images determine the map; a is annihilated") {
    Rng rng(31);
    auto syms = all_gens(2);
    std::vector<NcPoly> images = {random_poly(rng, syms, 2, 3), random_poly(rng, syms, 2, 3)};
    // Leibniz rule on products
    for (int t = 0; t < 50; ++t) {
        NcPoly f = random_poly(rng, syms, 2, 3, true);
        NcPoly g = random_poly(rng, syms, 2, 3, true);
        CHECK(apply_derivation(images, f * g) ==
              apply_derivation(images, f) * g + f * apply_derivation(images, g));
    }
    CHECK(apply_derivation(images, NcPoly(Word::aux())).is_zero());
    // x_j^-1 image via the inverse rule: D(x x^-1) = 0
    NcPoly x_inv(Word::gen_inv(0));
    CHECK(apply_derivation(images, NcPoly(Word::gen(0)) * x_inv) .is_zero());
}

TEST_CASE("double derivative recovers the cyclic derivative under closure") {
    // for f in A, d tr(f)/dx_i = sum over splittings suffix*prefix of Df/Dx_i
    Rng rng(37);
    auto syms = all_gens(3);
    for (int t = 0; t < 50; ++t) {
        NcPoly f = random_poly(rng, syms, 3, 5, true);
        for (int i = 0; i < 3; ++i) {
            Tensor d = double_diff(f, i);
            NcPoly closed;
            for (const auto& [pair, c] : d.terms())
                closed.add_term(pair.second * pair.first, c);
            CHECK(closed == cyclic_diff(trace(f), i));
        }
    }
}
