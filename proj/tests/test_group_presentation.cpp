#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linkconc/wirtinger.hpp"
#include "support/random_gen.hpp"

using namespace linkconc;

namespace {

FreeWord random_word(std::mt19937_64& rng, int n_gens, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(0, n_gens - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    FreeWord w;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) w.letters.push_back({gen(rng), sgn(rng) ? 1 : -1});
    return w;
}

std::map<int, int> unit_weights(int n) {
    std::map<int, int> w;
    for (int g = 0; g < n; ++g) w[g] = 1;
    return w;
}

} // namespace

TEST_CASE("fox derivative axioms") {
    FreeWord x = FreeWord::letter(0, 1);
    FreeWord xinv = FreeWord::letter(0, -1);

    auto dx = fox_derivative(x, 0);
    REQUIRE(dx.size() == 1);
    CHECK(dx[0].coeff == 1);
    CHECK(dx[0].word.letters.empty());

    CHECK(fox_derivative(x, 1).empty()); // dh/dg = 0

    auto dxinv = fox_derivative(xinv, 0);
    REQUIRE(dxinv.size() == 1);
    CHECK(dxinv[0].coeff == -1);
    CHECK(dxinv[0].word == xinv);

    // d(x y x^-1)/dx = 1 - x y x^-1
    FreeWord w;
    w.letters = {{0, 1}, {1, 1}, {0, -1}};
    auto dw = fox_derivative(w, 0);
    REQUIRE(dw.size() == 2);
    CHECK(dw[0].coeff == 1);
    CHECK(dw[0].word.letters.empty());
    CHECK(dw[1].coeff == -1);
    CHECK(dw[1].word == w);
}

TEST_CASE("abelianize examples") {
    auto weights = unit_weights(2);
    FreeWord w;
    w.letters = {{0, 1}, {1, 1}, {0, -1}};
    auto dw = fox_derivative(w, 0);
    CHECK(abelianize(dw, weights) == LaurentPoly::from_string("1-t"));
    CHECK(abelianize({}, weights).is_zero());

    GroupRingElement e{{Rational(1), FreeWord::letter(0, 1)}, {Rational(1), FreeWord::letter(1, -1)}};
    CHECK(abelianize(e, weights) == LaurentPoly::from_string("t+t^-1"));

    GroupRingElement bad{{Rational(1), FreeWord::letter(7, 1)}};
    CHECK_THROWS_AS(abelianize(bad, weights), Error);
}

TEST_CASE("product rule on random words") {
    for (int i = 0; i < 300; ++i) {
        auto rng = testgen::engine(10 + i);
        const int gens = 4;
        FreeWord u = random_word(rng, gens, 12);
        FreeWord v = random_word(rng, gens, 12);
        std::uniform_int_distribution<int> gd(0, gens - 1);
        const int g = gd(rng);
        // Random weights separate group-ring elements that unit weights
        // might collapse.
        std::map<int, int> weights;
        std::uniform_int_distribution<int> wd(-3, 3);
        for (int k = 0; k < gens; ++k) weights[k] = wd(rng);

        auto lhs = abelianize(fox_derivative(u.concat(v), g), weights);
        long eu = 0;
        for (const auto& [gg, s] : u.letters) eu += static_cast<long>(weights[gg]) * s;
        auto rhs = abelianize(fox_derivative(u, g), weights) +
                   LaurentPoly::t_power(static_cast<int>(eu)) * abelianize(fox_derivative(v, g), weights);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("abelianized fundamental identity") {
    // sum_g d(w)/dg * (t - 1) = t^eps(w) - 1 with all generators of weight 1
    const LaurentPoly tm1 = LaurentPoly::from_string("t-1");
    for (int i = 0; i < 1000; ++i) {
        auto rng = testgen::engine(500 + i);
        const int gens = 5;
        FreeWord w = random_word(rng, gens, 40);
        auto weights = unit_weights(gens);
        LaurentPoly sum;
        for (int g = 0; g < gens; ++g) sum += abelianize(fox_derivative(w, g), weights);
        LaurentPoly expect = LaurentPoly::t_power(w.exponent_sum()) - LaurentPoly(1);
        CHECK(sum * tm1 == expect);
    }
}

TEST_CASE("wirtinger of the unknot") {
    WirtingerData w = wirtinger(LinkDiagram::parse_pd("O(1)"), 1);
    CHECK(w.generator_count == 1);
    CHECK(w.relations.empty());
    CHECK_THROWS_AS(wirtinger(LinkDiagram::parse_pd("O(1)"), 2), Error);
}

TEST_CASE("wirtinger of the trefoil") {
    LinkDiagram t = LinkDiagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    WirtingerData w = wirtinger(t, 1);
    CHECK(w.generator_count == 3);
    REQUIRE(w.relations.size() == 3);
    for (const auto& r : w.relations) {
        // relator shape x_c^-1 x_b^e x_a x_b^-e with one conjugating letter
        REQUIRE(r.letters.size() == 4);
        CHECK(r.letters[0].second == -1);
        CHECK(r.letters[1].first == r.letters[3].first);
        CHECK(r.letters[1].second == -r.letters[3].second);
        CHECK(r.letters[2].second == 1);
        CHECK(r.exponent_sum() == 0);
    }
    CHECK(w.describe().find("gens: x1..x3") == 0);
}

TEST_CASE("peripheral word exponent sums match linking numbers") {
    LinkDiagram hopf = LinkDiagram::parse_pd("X(1,3,2,4) X(3,1,4,2)");
    for (int i : {1, 2}) {
        WirtingerData w = wirtinger(hopf, i);
        const int j = 3 - i;
        REQUIRE(w.peripheral_words.count(j) == 1);
        CHECK(w.peripheral_words.at(j).exponent_sum() == hopf.linking_number(i, j));
    }
    // Split link: both words empty.
    LinkDiagram split = LinkDiagram::parse_pd(
        "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) X(7,10,8,11) X(9,12,10,7) X(11,8,12,9)");
    CHECK(wirtinger(split, 1).peripheral_words.at(2).letters.empty());
}
