#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linkconc/module_algebra.hpp"
#include "support/oracle.hpp"
#include "support/random_gen.hpp"

using namespace linkconc;

namespace {

LaurentPoly P(const std::string& s) { return LaurentPoly::from_string(s); }

LaurentMatrix from_strings(const std::vector<std::vector<std::string>>& rows) {
    LaurentMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = P(rows[i][j]);
    return m;
}

LaurentMatrix random_matrix(std::mt19937_64& rng, int max_dim, int max_span) {
    std::uniform_int_distribution<int> dim(1, max_dim);
    const int r = dim(rng), c = dim(rng);
    LaurentMatrix m(r, c);
    std::uniform_int_distribution<int> fill(0, 2);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (fill(rng) != 0) m.at(i, j) = testgen::random_poly(rng, max_span, 5);
    return m;
}

} // namespace

TEST_CASE("snf examples") {
    auto r1 = snf(from_strings({{"1", "0"}, {"0", "t-1"}}));
    REQUIRE(r1.divisors.size() == 2);
    CHECK(r1.divisors[0] == P("1"));
    CHECK(r1.divisors[1] == P("t-1"));

    auto r2 = snf(from_strings({{"t-1", "0"}, {"0", "1"}}));
    REQUIRE(r2.divisors.size() == 2);
    CHECK(r2.divisors[0] == P("1"));
    CHECK(r2.divisors[1] == P("t-1"));

    auto rz = snf(LaurentMatrix(3, 2));
    CHECK(rz.rank == 0);
    CHECK(rz.divisors.empty());

    auto re = snf(LaurentMatrix(0, 0));
    CHECK(re.rank == 0);
}

TEST_CASE("snf correctness on random matrices") {
    for (int i = 0; i < 400; ++i) {
        auto rng = testgen::engine(7000 + i);
        LaurentMatrix a = random_matrix(rng, 5, 3);
        SNFResult s = snf(a);
        CHECK(s.U * a * s.V == s.D);
        CHECK(s.U.determinant().is_unit());
        CHECK(s.V.determinant().is_unit());
        for (int k = 0; k + 1 < s.rank; ++k) CHECK(divides(s.D.at(k, k), s.D.at(k + 1, k + 1)));
        for (const auto& d : s.divisors) CHECK(canonicalize(d) == d);
        // off-diagonal zero
        for (int r = 0; r < s.D.rows(); ++r)
            for (int c = 0; c < s.D.cols(); ++c)
                if (r != c) CHECK(s.D.at(r, c).is_zero());
    }
}

TEST_CASE("alexander polynomial of small knots") {
    LinkDiagram unknot = LinkDiagram::parse_pd("O(1)");
    auto wu = wirtinger(unknot, 1);
    auto mu = alexander_presentation(wu);
    CHECK(mu.generator_count() == 0);
    CHECK(alexander_polynomial(mu) == P("1"));

    LinkDiagram trefoil = LinkDiagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    auto wt = wirtinger(trefoil, 1);
    auto mt = alexander_presentation(wt);
    CHECK(alexander_polynomial(mt) == P("t^2-t+1"));
    CHECK(alexander_polynomial(mt) == oracle::seifert_delta(oracle::seifert_trefoil()));

    // 2x2 Fox minor: divisors [1, t^2-t+1]
    const auto& divisors = mt.smith().divisors;
    REQUIRE(divisors.size() == 2);
    CHECK(divisors[0] == P("1"));
    CHECK(divisors[1] == P("t^2-t+1"));
}

TEST_CASE("column deletion independence") {
    LinkDiagram trefoil = LinkDiagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    auto w = wirtinger(trefoil, 1);
    for (int g = 0; g < w.generator_count; ++g) {
        auto m = alexander_presentation(w, g);
        CHECK(alexander_polynomial(m) == P("t^2-t+1"));
    }
}

TEST_CASE("is_trivial and generates on a cyclic module") {
    // Q[t,t^-1] / <(1-2t)(2-t)>
    LaurentMatrix rel(1, 1);
    rel.at(0, 0) = P("1-2t") * P("2-t");
    ModulePresentation m(1, rel);
    ModuleElement gen{{P("1")}};
    ModuleElement zero = ModuleElement::zero(1);

    CHECK(is_trivial(m, zero));
    CHECK(is_trivial(m, alexander_polynomial(m) * gen));
    CHECK_FALSE(is_trivial(m, gen));

    CHECK(generates(m, {gen}));
    CHECK_FALSE(generates(m, {P("2-t") * gen}));
    CHECK_FALSE(generates(m, {}));

    // trivial module: empty generating set suffices
    ModulePresentation triv(0, LaurentMatrix(0, 0));
    CHECK(generates(triv, {}));
    CHECK(alexander_polynomial(triv) == P("1"));

    ModuleElement wrong{{P("1"), P("t")}};
    CHECK_THROWS_AS(is_trivial(m, wrong), Error);
    CHECK_THROWS_AS(generates(m, {wrong}), Error);
}

TEST_CASE("non torsion input is rejected") {
    // One generator, no relations: free rank 1.
    ModulePresentation m(1, LaurentMatrix(1, 0));
    CHECK_THROWS_WITH_AS(alexander_polynomial(m), "module has free rank > 0", Error);
}

TEST_CASE("annihilation property") {
    LinkDiagram trefoil = LinkDiagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    auto w = wirtinger(trefoil, 1);
    auto m = alexander_presentation(w);
    LaurentPoly delta = alexander_polynomial(m);
    for (int i = 0; i < 200; ++i) {
        auto rng = testgen::engine(8000 + i);
        ModuleElement v;
        for (int g = 0; g < m.generator_count(); ++g) v.coords.push_back(testgen::random_poly(rng, 3, 6));
        CHECK(is_trivial(m, delta * v));
    }
}

TEST_CASE("generates is invariant under units and unimodular recombination") {
    LaurentMatrix rel(2, 2);
    rel.at(0, 0) = P("1-2t");
    rel.at(1, 1) = P("2-t");
    ModulePresentation m(2, rel);
    ModuleElement e1{{P("1"), P("0")}};
    ModuleElement e2{{P("0"), P("1")}};
    REQUIRE(generates(m, {e1, e2}));
    CHECK_FALSE(generates(m, {e1}));
    for (int i = 0; i < 100; ++i) {
        auto rng = testgen::engine(9000 + i);
        LaurentPoly u1 = testgen::random_unit(rng), u2 = testgen::random_unit(rng);
        CHECK(generates(m, {u1 * e1, u2 * e2}));
        LaurentPoly q = testgen::random_poly(rng, 2, 4);
        // elementary recombination e1 += q * e2
        CHECK(generates(m, {e1 + q * e2, e2}));
    }
}
