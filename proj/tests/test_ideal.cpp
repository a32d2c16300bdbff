#include <doctest.h>

#include <set>

#include "mc/errors.hpp"
#include "support.hpp"

using namespace mc;
using support::e;

TEST_CASE("exponent basics")
{
    const auto a = e({2, 0, 3});
    CHECK(a.total_degree() == 5);
    CHECK(a.support() == set_of({1, 3}));
    CHECK_FALSE(a.is_squarefree());
    CHECK(e({1, 0, 1}).is_squarefree());
    CHECK(e({1, 0, 1}).divides(a));
    CHECK_FALSE(a.divides(e({1, 0, 1})));
    CHECK(lcm(e({1, 2}), e({2, 1})) == e({2, 2}));
    CHECK(gcd(e({1, 2}), e({2, 1})) == e({1, 1}));
    CHECK(e({3, 1}).colon(e({1, 2})) == e({2, 0}));
    CHECK(a.to_string() == "x1^2*x3^3");
    CHECK(Exponent(3).to_string() == "1");
    CHECK(Exponent::unit(3, 2) == e({0, 1, 0}));
    CHECK(Exponent::squarefree(3, set_of({1, 3})) == e({1, 0, 1}));
    CHECK(members(set_of({4, 1, 2})) == std::vector<std::size_t>{1, 2, 4});
    CHECK(cardinality(full_set(5)) == 5);
}

TEST_CASE("minimalize")
{
    CHECK(MonomialIdeal(3, {e({1, 1, 0}), e({2, 1, 0})}).gens() == std::vector{e({1, 1, 0})});
    CHECK(minimalize({}).is_zero());
    CHECK(MonomialIdeal(3, {e({1, 2, 0}), e({0, 1, 1}), e({1, 0, 0})}).gens()
          == support::naive_antichain({e({1, 2, 0}), e({0, 1, 1}), e({1, 0, 0})}));
    CHECK_THROWS_AS(MonomialIdeal(3, {e({1, 2, 0}), e({1, 0})}), DimensionMismatch);
    CHECK(MonomialIdeal::unit(3).is_unit());
    CHECK(MonomialIdeal::zero(3).to_string() == "0");
}

TEST_CASE("antichain invariant on random input")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Exponent> gens;
        const std::size_t count = std::uniform_int_distribution<std::size_t>(0, 8)(rng);
        for (std::size_t i = 0; i < count; ++i) {
            gens.push_back(support::random_exponent(rng, 4, 3));
        }
        const MonomialIdeal ideal(4, gens);
        CHECK(ideal.gens() == support::naive_antichain(gens));
        for (const auto &g : gens) {
            CHECK(ideal.contains(g));
        }
    }
}

TEST_CASE("colon")
{
    const auto I = support::triangle_ideal();
    CHECK(colon(I, e({0, 2, 0})) == MonomialIdeal(3, {e({1, 1, 0}), e({0, 0, 5}), e({6, 0, 1})}));
    CHECK(colon(I, Exponent(3)) == I);
    CHECK(colon(MonomialIdeal(2, {e({1, 1})}), e({1, 0})) == MonomialIdeal(2, {e({0, 1})}));
    CHECK_THROWS_AS(colon(I, e({1, 1})), DimensionMismatch);
}

TEST_CASE("colon agrees with brute-force membership and composes")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto I = support::random_ideal(rng, 3, 4, 5);
        const auto a = support::random_exponent(rng, 3, 3);
        const auto b = support::random_exponent(rng, 3, 3);
        // Generators of I : x^a lie in the box prod [0, rho_j(I)].
        std::vector<Exponent> members;
        for (const auto &p : support::box_points(support::max_exponents(I.gens(), 3))) {
            if (support::naive_contains(I.gens(), p + a)) {
                members.push_back(p);
            }
        }
        CHECK(colon(I, a).gens() == support::naive_antichain(members));
        CHECK(colon(colon(I, a), b) == colon(I, a + b));
    }
}

TEST_CASE("radical")
{
    CHECK(radical(support::triangle_ideal())
          == MonomialIdeal(3, {e({1, 1, 0}), e({0, 1, 1}), e({1, 0, 1})}));
    CHECK(radical(MonomialIdeal(2, {e({2, 0}), e({1, 4})})) == MonomialIdeal(2, {e({1, 0})}));
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto I = support::random_ideal(rng, 4, 3, 4);
        const auto J = support::random_ideal(rng, 4, 3, 4);
        CHECK(radical(radical(I)) == radical(I));
        CHECK(radical(sum(I, J)) == sum(radical(I), radical(J)));
        CHECK(radical(intersect(I, J)) == intersect(radical(I), radical(J)));
    }
}

TEST_CASE("sum and intersection")
{
    CHECK(intersect(MonomialIdeal::variables(2, set_of({1})), MonomialIdeal::variables(2, set_of({2})))
          == MonomialIdeal(2, {e({1, 1})}));
    const auto I = support::triangle_ideal();
    CHECK(sum(I, MonomialIdeal::zero(3)) == I);
    CHECK(intersect(I, MonomialIdeal::unit(3)) == I);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const auto A = support::random_ideal(rng, 3, 3, 4);
        const auto B = support::random_ideal(rng, 3, 3, 4);
        auto bound = support::max_exponents(A.gens(), 3);
        const auto bb = support::max_exponents(B.gens(), 3);
        for (std::size_t j = 0; j < 3; ++j) {
            bound[j] = std::max(bound[j], bb[j]) + 1;
        }
        for (const auto &p : support::box_points(bound)) {
            CHECK(intersect(A, B).contains(p) == (A.contains(p) && B.contains(p)));
            CHECK(sum(A, B).contains(p) == (A.contains(p) || B.contains(p)));
        }
    }
}

TEST_CASE("in-neighbour ideals compose by intersection")
{
    const auto n7 = MonomialIdeal::variables(10, set_of({2, 3, 4}));
    const auto n8 = MonomialIdeal::variables(10, set_of({4, 5}));
    const auto n9 = MonomialIdeal::variables(10, set_of({5}));
    const auto n10 = MonomialIdeal::variables(10, set_of({2, 6}));
    const auto composed = sum(intersect(intersect(n7, n8), n9), intersect(n7, n10));
    CHECK(sum(composed, intersect(intersect(n8, n9), n10))
          == MonomialIdeal::from_squarefree(10, {set_of({2}), set_of({5, 3}), set_of({3, 6}), set_of({4, 5}),
                                                 set_of({4, 6}), set_of({5, 6})}));
}

TEST_CASE("restrict")
{
    const MonomialIdeal I(3, {e({1, 1, 0}), e({0, 1, 1})});
    CHECK(restrict(I, set_of({1, 2})) == MonomialIdeal(3, {e({1, 1, 0})}));
    CHECK(restrict(I, full_set(3)) == I);
    CHECK_THROWS_AS(restrict(I, set_of({4})), DomainError);

    const auto ten = edge_ideal(support::ten_vertex_graph());
    Exponent x2x7(10), x2x10(10);
    x2x7[1] = 1;
    x2x7[6] = 4;
    x2x10[1] = 1;
    x2x10[9] = 6;
    CHECK(restrict(ten, set_of({2, 7, 10})) == MonomialIdeal(10, {x2x7, x2x10}));
}

TEST_CASE("rho and the Gamma box")
{
    const auto I = support::triangle_ideal();
    CHECK(rho(I, 1) == 6);
    CHECK(rho(I, 2) == 3);
    CHECK(rho(I, 3) == 5);
    CHECK_THROWS_AS(rho(I, 4), DomainError);
    const auto box = gamma_box(I);
    CHECK(box.cardinality() == 90);
    CHECK(box.points().size() == 90);
    CHECK(box.contains(e({5, 2, 4})));
    CHECK_FALSE(box.contains(e({6, 0, 0})));
    CHECK(generator_box(I).cardinality() == 7 * 4 * 6);

    const auto zero = gamma_box(MonomialIdeal::zero(3));
    CHECK(zero.cardinality() == 1);
    CHECK(zero.points() == std::vector{Exponent(3)});

    // A variable absent from every generator pins that coordinate to 0.
    const auto partial = gamma_box(MonomialIdeal(3, {e({2, 0, 0}), e({0, 3, 0})}));
    CHECK(partial.cardinality() == 6);
    for (const auto &p : partial.points()) {
        CHECK(p[2] == 0);
    }
}

TEST_CASE("Gamma box enumerates in lex order without repeats")
{
    const auto points = GammaBox({2, 3, 2}).points();
    CHECK(points.size() == 12);
    CHECK(std::is_sorted(points.begin(), points.end()));
    CHECK(std::set<Exponent>(points.begin(), points.end()).size() == points.size());
}
