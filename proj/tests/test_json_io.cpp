#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "strandlab/exporters.hpp"
#include "strandlab/json_io.hpp"

using namespace strandlab;

TEST_CASE("round trips through JSON") {
    SUBCASE("quiver") {
        SignVector eps("++-+-");
        ExchangeMatrix b = mutate_sequence(framed_quiver(eps), {2, 3});
        json j = json_of_quiver(b, &eps);
        CHECK(quiver_of_json(j) == b);
        CHECK(epsilon_of_json(j) == eps);
    }
    SUBCASE("every record type over a small world") {
        SignVector eps("-+-+");
        for (const auto& seq : enumerate_exceptional_sequences(eps, 3)) {
            CHECK(sequence_of_json(json_of_sequence(seq)) == seq);
            LabeledDiagram ld = phi_tilde(seq, eps);
            CHECK(labeled_of_json(json_of_labeled(ld)).strands == ld.strands);
        }
        for (const auto& d : enumerate_diagrams(eps, 2))
            CHECK(diagram_of_json(json_of_diagram(d)).strands == d.strands);
        for (const auto& od : enumerate_oriented_diagrams(eps)) {
            CHECK(oriented_of_json(json_of_oriented(od)).strands == od.strands);
            MixedCobinaryTree t = realize(od);
            MixedCobinaryTree back = mct_of_json(json_of_mct(t));
            CHECK(back.heights == t.heights);
            CHECK(back.edges == t.edges);
        }
        for (const auto& c : enumerate_c_matrices(eps))
            CHECK(cmatrix_of_json(json_of_cmatrix(c)) == c);
    }
    SUBCASE("chains") {
        for (const auto& chain : enumerate_chains(3, 3))
            CHECK(chain_of_json(json_of_chain(chain)) == chain);
    }
    SUBCASE("rational heights serialize as fraction strings") {
        json j = json::parse(R"({"epsilon":"--","heights":["0","1/2"],"edges":[[0,1]]})");
        MixedCobinaryTree t = mct_of_json(j);
        CHECK(t.heights[1] == Rational(1, 2));
        CHECK(json_of_mct(t)["heights"][1] == "1/2");
    }
    SUBCASE("malformed records are rejected") {
        CHECK_THROWS_AS(diagram_of_json(json::parse(R"({"strands":[[0,1]]})")), validation_error);
        CHECK_THROWS_AS(quiver_of_json(json::parse(R"({"n":2,"matrix":[[0,1]]})")),
                        validation_error);
        CHECK_THROWS_AS(cmatrix_of_json(json::parse(R"({"matrix":[[1,0],[1]]})")),
                        validation_error);
    }
}

TEST_CASE("exporters emit deterministic documents") {
    SignVector eps("-+-++");
    Diagram d = make_diagram({{0, 1}, {0, 2}, {2, 3}, {2, 4}}, eps);
    SUBCASE("diagram svg") {
        std::string svg = svg_of_diagram(d);
        CHECK(svg.rfind("<svg", 0) == 0);
        CHECK(std::count(svg.begin(), svg.end(), '\n') > 4);
        CHECK(svg == svg_of_diagram(d));
        // one path per strand, one circle per point
        CHECK(static_cast<int>(svg.find("</svg>")) > 0);
        std::size_t paths = 0, pos = 0;
        while ((pos = svg.find("<path", pos)) != std::string::npos) {
            ++paths;
            pos += 5;
        }
        CHECK(paths == 4);
    }
    SUBCASE("labeled and oriented svg") {
        LabeledDiagram ld{{{{0, 1}, 1}, {{0, 2}, 2}, {{2, 3}, 3}, {{2, 4}, 4}}, eps};
        std::string svg = svg_of_labeled(ld);
        CHECK(svg.find(">1</text>") != std::string::npos);
        OrientedDiagram od{{{0, 1}, {0, 2}, {2, 3}, {2, 4}}, eps};
        std::string osvg = svg_of_oriented(od);
        CHECK(osvg.find("marker-end") != std::string::npos);
    }
    SUBCASE("mct svg") {
        OrientedDiagram od{{{0, 1}, {1, 2}}, SignVector("---")};
        std::string svg = svg_of_mct(realize(od));
        CHECK(svg.rfind("<svg", 0) == 0);
        CHECK(svg.find("<line") != std::string::npos);
    }
    SUBCASE("poset dot lists the chain of covers") {
        std::string dot = dot_of_poset(poset_of_diagram(d));
        CHECK(dot.rfind("digraph", 0) == 0);
        CHECK(dot.find("\"c(0,1)\" -> \"c(0,2)\"") != std::string::npos);
        CHECK(dot.find("\"c(0,2)\" -> \"c(2,3)\"") != std::string::npos);
        CHECK(dot.find("\"c(2,3)\" -> \"c(2,4)\"") != std::string::npos);
        CHECK(dot.find("\"c(0,1)\" -> \"c(2,3)\"") == std::string::npos);
    }
    SUBCASE("exchange graph dot") {
        ExchangeGraph g = explore_exchange_graph(SignVector("---"));
        std::string dot = dot_of_exchange_graph(g);
        CHECK(dot.rfind("graph", 0) == 0);
        CHECK(g.states.size() == 5);
        CHECK(g.edges.size() >= 4);
    }
}
