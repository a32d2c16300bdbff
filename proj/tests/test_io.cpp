#include <doctest.h>

#include "mc/errors.hpp"
#include "mc/io.hpp"
#include "support.hpp"

using namespace mc;
using support::e;

TEST_CASE("text ideals")
{
    const auto I = io::parse_ideal_text("x1*x2^3, x2*x3^5, x3*x1^6");
    CHECK(I.nvars() == 3);
    CHECK(I == support::triangle_ideal());
    CHECK(io::parse_ideal_text("x1 * x2 ^ 2", 4) == MonomialIdeal(4, {e({1, 2, 0, 0})}));
    CHECK(io::parse_ideal_text("1", 2).is_unit());
    CHECK(io::parse_ideal_text("", 2).is_zero());
    CHECK(io::parse_ideal_text("0", 2).is_zero());
    CHECK(io::parse_ideal_text(I.to_string()) == I);
}

TEST_CASE("text parse errors carry positions")
{
    CHECK_THROWS_AS(io::parse_ideal_text("x0*x1"), ParseError);
    try {
        io::parse_ideal_text("x1*x2,\n  x0");
        FAIL("expected a parse error");
    } catch (const ParseError &err) {
        CHECK(err.line() == 2);
        CHECK(err.column() == 4);
    }
    CHECK_THROWS_AS(io::parse_ideal_text("x1*y2"), ParseError);
    CHECK_THROWS_AS(io::parse_ideal_text("x1^"), ParseError);
    CHECK_THROWS_AS(io::parse_ideal_text("x3", 2), ParseError);
}

TEST_CASE("JSON ideals")
{
    const auto doc = nlohmann::json::parse(R"({"n": 3, "gens": [[1,3,0],[0,1,5],[6,0,1]]})");
    CHECK(io::parse_ideal_json(doc) == support::triangle_ideal());
    CHECK(io::parse_ideal(doc.dump()) == support::triangle_ideal());
    CHECK(io::parse_ideal_json(io::ideal_to_json(support::triangle_ideal())) == support::triangle_ideal());
    CHECK_THROWS(io::parse_ideal(R"({"n": 2, "gens": [[1,2,3]]})"));
    CHECK_THROWS_AS(io::parse_ideal(R"({"n": 2})"), ParseError);
    CHECK_THROWS_AS(io::parse_ideal("{\"n\": 2,"), ParseError);
}

TEST_CASE("exponents")
{
    CHECK(io::parse_exponent("5,1,1") == e({5, 1, 1}));
    CHECK(io::parse_exponent("[5, 1, 1]") == e({5, 1, 1}));
    CHECK(io::exponent_to_json(e({5, 1, 1})) == nlohmann::json::array({5, 1, 1}));
    CHECK_THROWS(io::parse_exponent("5,-1"));
}

TEST_CASE("graphs")
{
    const auto text = R"({"n": 10, "edges": [[1,2],[1,3],[1,4],[2,5],[2,6],[2,7],[2,10],[3,7],[4,7],[4,8],[5,8],[5,9],[6,10]],
                         "weights": {"7": 4, "8": 7, "9": 4, "10": 6}})";
    const auto g = io::parse_graph(text);
    CHECK(g == support::ten_vertex_graph());
    CHECK(g.edges().size() == 13);
    CHECK(io::parse_graph_json(io::graph_to_json(g)) == g);
    CHECK_THROWS_AS(io::parse_graph(R"({"n": 2, "edges": [[1,2]], "weights": {"1": 3}})"), DomainError);
    const auto normalized = io::parse_graph(R"({"n": 2, "edges": [[1,2]], "weights": {"1": 3}})", true);
    CHECK(normalized.weight(1) == 1);
    CHECK_FALSE(normalized.warnings().empty());
    CHECK_THROWS_AS(io::parse_graph(R"({"n": 2, "edges": [[1]]})"), ParseError);
    CHECK_THROWS_AS(io::parse_graph(R"({"n": 2, "edges": [[1,2]], "weights": [1,2]})"), ParseError);
}

TEST_CASE("complexes and homology JSON")
{
    CHECK(io::parse_complex("{\"n\": 3, \"facets\": []}").is_void());
    CHECK(io::parse_complex("{\"n\": 3, \"facets\": [[]]}").is_empty_complex());
    const auto hollow = io::parse_complex("{\"n\": 3, \"facets\": [[1,2],[2,3],[1,3]]}");
    CHECK(io::parse_complex_json(io::complex_to_json(hollow)) == hollow);
    const auto h = io::homology_to_json(reduced_homology(hollow));
    CHECK(h.at("field") == "QQ");
    CHECK(h.at("dims").at("1") == 1);
    CHECK(h.at("acyclic") == false);
    CHECK_THROWS_AS(io::parse_complex("{\"n\": 2, \"facets\": [[3]]}"), ParseError);
}

TEST_CASE("reports and certificates")
{
    const auto report = regularity(support::triangle_ideal());
    const auto doc = io::report_to_json(report);
    CHECK(doc.at("reg_ideal") == 12);
    CHECK(doc.at("reg_module") == 11);
    CHECK(doc.contains("witness"));
    CHECK_FALSE(io::report_to_json(report, false).contains("witness"));

    const MonomialIdeal I(2, {e({2, 0}), e({0, 2})});
    const auto cert = np_membership(I, e({1, 1})).certificate;
    REQUIRE(cert);
    const auto cj = io::certificate_to_json(*cert);
    CHECK(cj.at("total") == "1");
    CHECK(cj.at("coefficients").size() == 2);
    CHECK(cj.at("coefficients")[0].at("c") == "1/2");
}
