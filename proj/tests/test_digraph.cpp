#include <doctest.h>

#include "mc/digraph.hpp"
#include "mc/errors.hpp"
#include "mc/regularity.hpp"
#include "support.hpp"

using namespace mc;
using support::e;

namespace {

Exponent monomial(std::size_t n, std::initializer_list<std::pair<std::size_t, Degree>> powers)
{
    Exponent a(n);
    for (auto [j, d] : powers) {
        a[j - 1] = d;
    }
    return a;
}

bool has_edge_inside(const WeightedOrientedGraph &g, VarSet u)
{
    for (auto [i, j] : g.edges()) {
        if ((u & var_bit(i)) && (u & var_bit(j))) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("edge ideal examples")
{
    CHECK(edge_ideal(support::triangle_graph()) == support::triangle_ideal());
    const WeightedOrientedGraph plain(3, {{1, 2}, {2, 3}, {3, 1}});
    CHECK(edge_ideal(plain) == underlying_edge_ideal(plain));
    CHECK(edge_ideal(plain) == MonomialIdeal(3, {e({1, 1, 0}), e({0, 1, 1}), e({1, 0, 1})}));

    const auto ten = support::ten_vertex_graph();
    const auto I = edge_ideal(ten);
    CHECK(I.size() == 13);
    CHECK(I.contains(monomial(10, {{2, 1}, {7, 4}})));
    CHECK(I.contains(monomial(10, {{4, 1}, {8, 7}})));
    CHECK(I.contains(monomial(10, {{5, 1}, {9, 4}})));
    CHECK(I.contains(monomial(10, {{6, 1}, {10, 6}})));
    CHECK_FALSE(I.contains(monomial(10, {{2, 1}, {7, 3}})));
    CHECK(ten.in_neighbors(7) == set_of({2, 3, 4}));
    CHECK(ten.in_neighbors(10) == set_of({2, 6}));
    CHECK(ten.sinks() == set_of({7, 8, 9, 10}));
    CHECK(ten.sources() == set_of({1}));
    CHECK(ten.total_weight() == 27);
    CHECK(ten.max_weight() == 7);
}

TEST_CASE("rho equals the weight on non-sources")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_weighted_oriented_graph(rng, 6, 0.5, 4);
        const auto I = edge_ideal(g);
        for (std::size_t j = 1; j <= 6; ++j) {
            if (g.sources() & var_bit(j)) {
                CHECK(rho(I, j) == 1);
            } else {
                CHECK(rho(I, j) == g.weight(j));
            }
        }
    }
}

TEST_CASE("graph validation")
{
    CHECK_THROWS_AS(WeightedOrientedGraph(2, {{1, 1}}), DomainError);
    CHECK_THROWS_AS(WeightedOrientedGraph(2, {{1, 2}, {1, 2}}), DomainError);
    CHECK_THROWS_AS(WeightedOrientedGraph(2, {{1, 2}, {2, 1}}), DomainError);
    CHECK_THROWS_AS(WeightedOrientedGraph(3, {{1, 2}}), DomainError);
    CHECK_THROWS_AS(WeightedOrientedGraph(2, {{1, 2}}, {1, 0}), DomainError);
    CHECK_THROWS_AS(WeightedOrientedGraph(2, {{1, 2}}, {3, 1}), DomainError);
    const WeightedOrientedGraph normalized(2, {{1, 2}}, {3, 2}, true);
    CHECK(normalized.weight(1) == 1);
    CHECK(normalized.warnings().size() == 1);
    CHECK(normalized == WeightedOrientedGraph(2, {{1, 2}}, {1, 2}));
}

TEST_CASE("induced weights")
{
    const auto g = support::triangle_graph();
    CHECK(induced_subgraph_with_weights(g, g.vertices()).graph == g);
    const auto sub = induced_subgraph_with_weights(g, set_of({2, 3})).graph;
    CHECK(sub.edges() == std::vector<Edge>{{2, 3}});
    CHECK(sub.weight(2) == 1);
    CHECK(sub.weight(3) == 5);
    CHECK_THROWS_AS(induced_subgraph_with_weights(g, 0), DomainError);
}

TEST_CASE("induced-weight ideal identity on random graphs")
{
    std::mt19937_64 rng(67);
    int checked = 0;
    while (checked < 100) {
        const auto g = random_weighted_oriented_graph(rng, 6, 0.5, 4);
        const VarSet u = std::uniform_int_distribution<VarSet>(1, full_set(6))(rng) & g.vertices();
        if (!has_edge_inside(g, u)) {
            continue;
        }
        const auto outside = MonomialIdeal::variables(6, g.vertices() & ~u);
        const auto sub = induced_subgraph_with_weights(g, u);
        CHECK(sum(edge_ideal(g), outside) == sum(edge_ideal(sub.graph), outside));
        ++checked;
    }
}

TEST_CASE("radical of a colon")
{
    const auto g = support::triangle_graph();
    CHECK(radical_colon_formula(g, e({0, 0, 4})) == MonomialIdeal(3, {e({1, 0, 0}), e({0, 1, 1})}));
    CHECK(radical_colon_formula(g, Exponent(3)) == underlying_edge_ideal(g));
    CHECK_THROWS_AS(radical_colon_formula(g, e({6, 0, 0})), DomainError);

    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const auto d = random_weighted_oriented_graph(rng, 6, 0.5, 4);
        Exponent a(6);
        for (std::size_t j = 1; j <= 6; ++j) {
            a[j - 1] = std::uniform_int_distribution<Degree>(0, d.weight(j) - 1)(rng);
        }
        CHECK(radical_colon_formula(d, a) == radical(colon(edge_ideal(d), a)));
    }
}

TEST_CASE("capacities on the ten-vertex graph")
{
    const auto g = support::ten_vertex_graph();
    const auto a = support::ten_vertex_a();
    CHECK(capacity(g, a, set_of({7, 10})) == 1);
    CHECK(capacity(g, a, set_of({7, 8})) == Rational(13, 14));
    CHECK(capacity(g, a, 0) == 0);
    const auto sets = minimal_capacity_sets(g, a);
    std::vector<VarSet> found;
    for (const auto &s : sets) {
        found.push_back(s.members);
        CHECK(s.capacity >= 1);
    }
    std::sort(found.begin(), found.end());
    std::vector<VarSet> expected = {set_of({7, 8, 9}), set_of({7, 10}), set_of({8, 9, 10})};
    std::sort(expected.begin(), expected.end());
    CHECK(found == expected);
    CHECK_THROWS_AS(capacity(g, a, set_of({1})), DomainError);
}

TEST_CASE("in-neighbour intersections")
{
    const auto g = support::ten_vertex_graph();
    CHECK(neighbor_intersection_ideal(g, set_of({7})) == MonomialIdeal::variables(10, set_of({2, 3, 4})));
    CHECK(neighbor_intersection_ideal(g, set_of({7, 10}))
          == MonomialIdeal::from_squarefree(10, {set_of({2}), set_of({3, 6}), set_of({4, 6})}));
    CHECK(neighbor_intersection_ideal(g, set_of({8, 9})) == MonomialIdeal::variables(10, set_of({5})));
    CHECK_THROWS_AS(neighbor_intersection_ideal(g, set_of({2})), DomainError);
}

TEST_CASE("closure radical on the ten-vertex graph")
{
    const auto g = support::ten_vertex_graph();
    const auto expected = sum(underlying_edge_ideal(g),
                              MonomialIdeal::from_squarefree(10, {set_of({2}), set_of({3, 5}), set_of({3, 6}),
                                                                  set_of({4, 5}), set_of({4, 6}), set_of({5, 6})}));
    CHECK(closure_radical_formula(g, support::ten_vertex_a()) == expected);
    CHECK(closure_radical_formula(g, Exponent(10)) == underlying_edge_ideal(g));
    const auto closed = integral_closure(edge_ideal(g));
    CHECK(radical(colon(closed, support::ten_vertex_a())) == expected);
    // Delta_a of the closure is the capacity-ideal complex, hence acyclic, and
    // no face disjoint from supp(a) has a link with homology: a is not critical.
    const auto delta = degree_complex(closed, support::ten_vertex_a());
    CHECK(is_acyclic(delta));
    for (auto face : delta.faces()) {
        if ((face & support::ten_vertex_a().support()) == 0) {
            CHECK(reduced_homology(link(delta, face)).is_acyclic());
        }
    }
}

TEST_CASE("acyclicity")
{
    const auto g = support::ten_vertex_graph();
    CHECK(acyclicity_check(g, set_of({7}), {set_of({7})}));
    const auto cone = stanley_reisner_complex(sum(underlying_edge_ideal(g), neighbor_intersection_ideal(g, set_of({7}))));
    CHECK(is_cone(cone, 7));
    CHECK(acyclicity_check(g, set_of({7, 8, 9, 10}), {set_of({7, 8, 9}), set_of({7, 10}), set_of({8, 9, 10})}));
    CHECK(acyclicity_check(g, set_of({7, 8, 9, 10}), {set_of({7, 8, 9}), set_of({7, 10}), set_of({8, 9, 10})},
                           Field(2)));
    CHECK_THROWS_AS(acyclicity_check(g, set_of({7}), {}), DomainError);
}

TEST_CASE("admissible vertices")
{
    // Transitive tournament on 4 vertices: the sink qualifies, and so does 2.
    const WeightedOrientedGraph transitive(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    const auto j = find_admissible_vertex(transitive);
    const auto rest = induced_subgraph_with_weights(transitive, transitive.vertices() & ~var_bit(j)).graph;
    CHECK((rest.sources() & ~transitive.sources()) == 0);
    CHECK(j == 2);
    const auto without_sink = induced_subgraph_with_weights(transitive, set_of({1, 2, 3})).graph;
    CHECK((without_sink.sources() & ~transitive.sources()) == 0);
    CHECK_THROWS_AS(find_admissible_vertex(support::triangle_graph()), DomainError);
    CHECK_THROWS_AS(find_admissible_vertex(support::ten_vertex_graph()), DomainError);
}

TEST_CASE("complete graph formulas on stated examples")
{
    const auto cyc = support::triangle_graph();
    CHECK_FALSE(is_type_one(cyc));
    CHECK(complete_graph_reg(cyc) == 12);
    CHECK(complete_closure_reg(cyc) == 7);
    CHECK(regularity(edge_ideal(cyc)).reg_ideal == 12);

    for (Degree t = 1; t <= 4; ++t) {
        const WeightedOrientedGraph transitive(3, {{1, 2}, {1, 3}, {2, 3}}, {1, 1, t});
        CHECK(is_type_one(transitive));
        CHECK(complete_graph_reg(transitive) == t + 1);
        CHECK(regularity(edge_ideal(transitive)).reg_ideal == t + 1);
    }

    for (Degree w = 1; w <= 4; ++w) {
        const WeightedOrientedGraph edge(2, {{1, 2}}, {1, w});
        CHECK(complete_graph_reg(edge) == w + 1);
        CHECK(complete_closure_reg(edge) == w + 1);
        CHECK(regularity(edge_ideal(edge)).reg_ideal == w + 1);
        CHECK(regularity(integral_closure(edge_ideal(edge))).reg_ideal == w + 1);
    }
    CHECK_THROWS_AS(complete_graph_reg(support::ten_vertex_graph()), DomainError);
}

TEST_CASE("complete formulas hold once every non-source weight is at least 2")
{
    // All 2^3 orientations of K3, non-source weights in [2, 4].
    for (std::uint64_t o = 0; o < 8; ++o) {
        const auto shape = tournament(3, o);
        std::vector<Degree> w(3, 1);
        for (Degree w1 = 2; w1 <= 4; ++w1) {
            for (Degree w2 = 2; w2 <= 4; ++w2) {
                for (Degree w3 = 2; w3 <= 4; ++w3) {
                    w = {w1, w2, w3};
                    for (std::size_t j = 1; j <= 3; ++j) {
                        if (shape.sources() & var_bit(j)) {
                            w[j - 1] = 1;
                        }
                    }
                    const auto g = tournament(3, o, w);
                    CAPTURE(o);
                    CAPTURE(w1);
                    CAPTURE(w2);
                    CAPTURE(w3);
                    CHECK(regularity(edge_ideal(g)).reg_ideal == complete_graph_reg(g));
                    CHECK(regularity(integral_closure(edge_ideal(g))).reg_ideal == complete_closure_reg(g));
                }
            }
        }
    }
}

TEST_CASE("weight-1 non-sources break the closed formula")
{
    // 1 -> 2 -> 3 -> 1 with w = (2, 1, 1): I = (x1 x2, x2 x3, x1^2 x3). The
    // upper Koszul complex at (2,1,1) is an edge plus a point, so
    // beta_{1,(2,1,1)} != 0 and reg(I) >= 3, one more than the formula.
    const WeightedOrientedGraph g(3, {{1, 2}, {2, 3}, {3, 1}}, {2, 1, 1});
    const auto I = edge_ideal(g);
    CHECK(reduced_homology(upper_koszul_complex(I, e({2, 1, 1}))).dim(0) == 1);
    CHECK(regularity(I).reg_ideal == 3);
    CHECK(regularity_oracle_koszul(I).reg_ideal == 3);
    CHECK(complete_graph_reg(g) == 2);
    CHECK(regularity(integral_closure(I)).reg_ideal == complete_closure_reg(g));
}

TEST_CASE("sufficient condition for closure membership")
{
    const auto g = support::triangle_graph();
    const auto r = membership_sufficient_condition(g, e({5, 1, 1}));
    CHECK(r.hypotheses_hold);
    CHECK(r.lp.member);
    CHECK(r.consistent());
    CHECK_FALSE(edge_ideal(g).contains(e({5, 1, 1})));

    const auto two = membership_sufficient_condition(g, e({5, 2, 0}));
    CHECK_FALSE(two.hypotheses_hold);
    CHECK(two.lp.member == np_membership(edge_ideal(g), e({5, 2, 0})).member);

    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 60; ++trial) {
        const auto k = random_complete_graph(rng, 4, 4);
        const auto a = support::random_exponent(rng, 4, 4);
        CHECK(membership_sufficient_condition(k, a).consistent());
    }
    CHECK_THROWS_AS(membership_sufficient_condition(support::ten_vertex_graph(), Exponent(10)), DomainError);
}

TEST_CASE("random generators")
{
    std::mt19937_64 a(5), b(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = random_weighted_oriented_graph(a, 5, 0.3, 4);
        CHECK(g == random_weighted_oriented_graph(b, 5, 0.3, 4));
        for (auto s : members(g.sources())) {
            CHECK(g.weight(s) == 1);
        }
        CHECK(random_complete_graph(a, 4, 3).is_complete());
        random_complete_graph(b, 4, 3);
    }
    CHECK(tournament(4, 0).is_complete());
}
