#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidalex/alexander.hpp"
#include "braidalex/fox.hpp"
#include "oracles.hpp"

using namespace braidalex;
using testutil::Rng;

namespace {

LaurentPoly tv(int j, int e = 1) { return LaurentPoly::variable(VarId::t(j), e); }
LaurentPoly xv(int e = 1) { return LaurentPoly::variable(VarId::axis(), e); }

FreeWord x(int symbol, int sign = +1) { return FreeWord::generator(symbol, sign); }

// Applies F_w to an arbitrary free word, letterwise from the bottom of the
// braid, matching braid_automorphism's composition order.
FreeWord apply_braid(const BraidWord& w, FreeWord word) {
    for (std::size_t r = w.length(); r > 0; --r)
        word = apply_sigma(word, w.letters[r - 1].index, w.letters[r - 1].sign, w.strands);
    return word;
}

FreeWord random_free_word(Rng& rng, int symbols, int max_len) {
    FreeWord w;
    int len = testutil::rand_int(rng, 0, max_len);
    for (int i = 0; i < len; ++i)
        w.append(testutil::rand_int(rng, 0, symbols - 1), rng() % 2 ? +1 : -1);
    return w;
}

PhiMap random_phi(Rng& rng, int symbols) {
    PhiMap phi;
    for (int s = 0; s < symbols; ++s) {
        VarId v = rng() % 5 == 0 ? VarId::axis() : VarId::t(testutil::rand_int(rng, 1, 4));
        phi.emplace(s, LaurentPoly::variable(v, rng() % 2 ? 1 : -1));
    }
    return phi;
}

}  // namespace

TEST_CASE("free word reduction and inversion") {
    FreeWord w({{1, +1}, {2, +1}, {2, -1}, {1, -1}, {3, +1}});
    CHECK(w.reduced() == x(3));
    CHECK(w.inverse().reduced() == x(3, -1));
    CHECK(FreeWord().reduced().empty());
}

TEST_CASE("elementary automorphism rules") {
    CHECK(apply_sigma(x(1), 1, +1, 3) == x(2));
    CHECK(apply_sigma(x(2), 1, +1, 3) == FreeWord({{2, +1}, {1, +1}, {2, -1}}));
    CHECK(apply_sigma(x(3), 1, +1, 3) == x(3));
    CHECK_THROWS_AS(apply_sigma(x(1), 3, +1, 3), IndexOutOfRange);
}

TEST_CASE("inverse automorphism inverts") {
    Rng rng(73);
    for (int trial = 0; trial < 100; ++trial) {
        int n = testutil::rand_int(rng, 2, 5);
        int i = testutil::rand_int(rng, 1, n - 1);
        FreeWord w = random_free_word(rng, n + 1, 12);
        CHECK(apply_sigma(apply_sigma(w, i, +1, n), i, -1, n) == w.reduced());
        CHECK(apply_sigma(apply_sigma(w, i, -1, n), i, +1, n) == w.reduced());
    }
}

TEST_CASE("braid automorphism basics") {
    BraidWord empty = parse_word("", 3);
    for (int i = 1; i <= 3; ++i) CHECK(braid_automorphism(empty, i) == x(i));

    BraidWord cancel = parse_word("1 -1", 3);
    for (int i = 1; i <= 3; ++i) CHECK(braid_automorphism(cancel, i) == x(i));

    // F_{sigma1^2}(x1) = x2 x1 x2^-1
    CHECK(braid_automorphism(parse_word("1 1", 2), 1) ==
          FreeWord({{2, +1}, {1, +1}, {2, -1}}));

    CHECK_THROWS_AS(braid_automorphism(parse_word("1", 2), 3), IndexOutOfRange);
    CHECK_THROWS_AS(braid_automorphism(parse_word("1", 2), 0), IndexOutOfRange);
}

TEST_CASE("braid automorphism is a homomorphism on concatenation") {
    Rng rng(79);
    for (int trial = 0; trial < 60; ++trial) {
        int n = testutil::rand_int(rng, 2, 4);
        BraidWord a = testutil::random_word(rng, n, 6);
        BraidWord b = testutil::random_word(rng, n, 6);
        BraidWord ab = a;
        ab.letters.insert(ab.letters.end(), b.letters.begin(), b.letters.end());
        for (int g = 1; g <= n; ++g)
            CHECK(braid_automorphism(ab, g) == apply_braid(a, braid_automorphism(b, g)));
    }
}

TEST_CASE("fox derivative base cases") {
    PhiMap phi;
    phi.emplace(kAxisSymbol, xv());
    for (int j = 1; j <= 3; ++j) phi.emplace(j, tv(j));

    FreeWord w12({{1, +1}, {2, +1}});
    CHECK(fox_derivative_eval(w12, 2, phi) == tv(1));
    CHECK(fox_derivative_eval(w12, 1, phi) == LaurentPoly(1));
    CHECK(fox_derivative_eval(w12, 3, phi).is_zero());

    CHECK(fox_derivative_eval(x(1, -1), 1, phi) == -tv(1, -1));

    FreeWord conj({{2, +1}, {1, +1}, {2, -1}});
    CHECK(fox_derivative_eval(conj, 2, phi) == LaurentPoly(1) - tv(1));
    CHECK(fox_derivative_eval(conj, 1, phi) == tv(2));
}

TEST_CASE("product rule for the free derivative") {
    Rng rng(101);
    const int symbols = 4;
    for (int trial = 0; trial < 150; ++trial) {
        PhiMap phi = random_phi(rng, symbols);
        FreeWord u = random_free_word(rng, symbols, 10);
        FreeWord v = random_free_word(rng, symbols, 10);
        FreeWord uv = u;
        uv.append(v);
        for (int g = 0; g < symbols; ++g)
            CHECK(fox_derivative_eval(uv, g, phi) ==
                  fox_derivative_eval(u, g, phi) + phi_eval(u, phi) * fox_derivative_eval(v, g, phi));
    }
}

TEST_CASE("fundamental formula of the free calculus") {
    Rng rng(83);
    const int symbols = 5;
    for (int trial = 0; trial < 200; ++trial) {
        PhiMap phi = random_phi(rng, symbols);
        FreeWord w = random_free_word(rng, symbols, 16);
        LaurentPoly lhs = phi_eval(w, phi) - LaurentPoly(1);
        LaurentPoly rhs;
        for (int g = 0; g < symbols; ++g)
            rhs += fox_derivative_eval(w, g, phi) * (phi.at(g) - LaurentPoly(1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("oracle examples") {
    CHECK(units_equal(oracle_axis_polynomial(parse_word("1 1 1", 2)),
                      LaurentPoly(1) + xv() * tv(1, 3)));
    CHECK(units_equal(oracle_axis_polynomial(parse_word("1 1", 2)),
                      LaurentPoly(1) - xv() * tv(1) * tv(2)));
    CHECK(units_equal(oracle_axis_polynomial(parse_word("", 2)), LaurentPoly(1) - xv()));
    CHECK(units_equal(oracle_axis_polynomial(parse_word("", 1)), LaurentPoly(1)));
}

TEST_CASE("oracle agrees with the pipeline on non-commuting words") {
    // the composition-order witness: sigma1 sigma2 in B3, and a few relatives
    for (const char* text : {"1 2", "2 1", "1 2 1", "1 -2", "-1 2 -1 2"}) {
        BraidWord w = parse_word(text, 3);
        CHECK(units_equal(oracle_axis_polynomial(w), axis_link_polynomial(w)));
    }
}

TEST_CASE("oracle agrees with the pipeline on random words") {
    Rng rng(89);
    for (int trial = 0; trial < 40; ++trial) {
        int n = testutil::rand_int(rng, 2, 4);
        BraidWord w = testutil::random_word(rng, n, 8);
        CAPTURE(n);
        CHECK(units_equal(oracle_axis_polynomial(w), axis_link_polynomial(w)));
    }
}
