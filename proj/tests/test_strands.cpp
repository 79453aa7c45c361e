#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "strandlab/strands.hpp"
#include "strandlab/verify.hpp"

using namespace strandlab;

TEST_CASE("crossing rule") {
    SUBCASE("c(1,3) vs c(2,4) crosses exactly when the two inner signs agree") {
        for (const SignVector& eps : SignVector::all(4))
            CHECK(crosses({1, 3}, {2, 4}, eps) == (eps.at(2) == eps.at(3)));
    }
    SUBCASE("shared endpoints never cross") {
        for (const SignVector& eps : SignVector::all(4)) {
            CHECK_FALSE(crosses({0, 2}, {2, 4}, eps));
            CHECK_FALSE(crosses({0, 2}, {0, 3}, eps));
            CHECK_FALSE(crosses({1, 4}, {2, 4}, eps));
        }
    }
    SUBCASE("nested strands cross exactly when the inner signs differ") {
        for (const SignVector& eps : SignVector::all(4))
            CHECK(crosses({0, 4}, {1, 3}, eps) == (eps.at(1) != eps.at(3)));
    }
}

TEST_CASE("clockwise rule at shared points") {
    SUBCASE("opposite sides of the shared point") {
        CHECK(clockwise_from({2, 4}, {0, 2}, SignVector("++-++")));
        CHECK_FALSE(clockwise_from({2, 4}, {0, 2}, SignVector("+++++")));
        CHECK(clockwise_from({0, 2}, {2, 4}, SignVector("+++++")));
    }
    SUBCASE("exactly one direction holds for strands at a shared point") {
        for (const SignVector& eps : SignVector::all(5)) {
            auto ivs = all_intervals(5);
            for (std::size_t a = 0; a < ivs.size(); ++a)
                for (std::size_t b = a + 1; b < ivs.size(); ++b) {
                    Strand s = phi(ivs[a]), t = phi(ivs[b]);
                    int shared = (s.a == t.a) + (s.a == t.b) + (s.b == t.a) + (s.b == t.b);
                    if (shared == 1)
                        CHECK(clockwise_from(s, t, eps) != clockwise_from(t, s, eps));
                    else
                        CHECK((!clockwise_from(s, t, eps) && !clockwise_from(t, s, eps)));
                }
        }
    }
    SUBCASE("noncrossing strands at a common point are totally ordered, n <= 8") {
        // antisymmetry is the subcase above; transitivity on pairwise
        // noncrossing triples pins the strict total order in every diagram
        for (int n = 2; n <= 8; ++n) {
            for (const SignVector& eps : SignVector::all(n)) {
                for (int p = 0; p <= n; ++p) {
                    std::vector<Strand> at;
                    for (int other = 0; other <= n; ++other)
                        if (other != p) at.push_back(make_strand(p, other));
                    for (std::size_t x = 0; x < at.size(); ++x)
                        for (std::size_t y = 0; y < at.size(); ++y)
                            for (std::size_t z = 0; z < at.size(); ++z) {
                                if (x == y || y == z || x == z) continue;
                                if (crosses(at[x], at[y], eps) || crosses(at[y], at[z], eps) ||
                                    crosses(at[x], at[z], eps))
                                    continue;
                                if (clockwise_from(at[y], at[x], eps) &&
                                    clockwise_from(at[z], at[y], eps))
                                    CHECK(clockwise_from(at[z], at[x], eps));
                            }
                }
            }
        }
    }
}

TEST_CASE("diagram validation") {
    SignVector eps("-+-++");
    SUBCASE("two worked diagrams pass") {
        CHECK_FALSE(diagram_violation({{0, 1}, {0, 2}, {2, 3}, {2, 4}}, eps).has_value());
        CHECK_FALSE(diagram_violation({{0, 4}, {1, 3}, {2, 4}}, eps).has_value());
    }
    SUBCASE("a triangle closes a cycle") {
        auto v = diagram_violation({{0, 1}, {0, 2}, {1, 2}}, SignVector("---"));
        REQUIRE(v.has_value());
        CHECK(v->kind == DiagramViolation::Kind::cycle);
    }
    SUBCASE("a crossing pair is reported") {
        SignVector e("--++-"); // eps_2 == eps_3
        auto v = diagram_violation({{1, 3}, {2, 4}}, e);
        REQUIRE(v.has_value());
        CHECK(v->kind == DiagramViolation::Kind::crossing);
        CHECK(v->s1 == Strand{1, 3});
        CHECK(v->s2 == Strand{2, 4});
    }
}

TEST_CASE("good labelings") {
    SignVector eps("-+-++");
    SUBCASE("the worked good labeling") {
        LabeledDiagram ld{{{{0, 1}, 1}, {{0, 2}, 2}, {{2, 3}, 3}, {{2, 4}, 4}}, eps};
        CHECK(is_good_labeling(ld));
    }
    SUBCASE("the worked non-good labeling") {
        LabeledDiagram ld{{{{0, 4}, 1}, {{1, 3}, 3}, {{2, 4}, 2}}, eps};
        CHECK_FALSE(is_good_labeling(ld));
    }
    SUBCASE("single strand") {
        LabeledDiagram ld{{{{1, 2}, 1}}, SignVector("---")};
        CHECK(is_good_labeling(ld));
    }
}

TEST_CASE("index maps between intervals and strands") {
    CHECK(phi({0, 1}) == Strand{0, 1});
    CHECK(phi({2, 4}) == Strand{2, 4});
    for (IntervalRep r : all_intervals(8)) CHECK(phi_inverse(phi(r)) == r);
}

TEST_CASE("label maps between sequences and labeled diagrams") {
    SignVector eps("-+-++");
    SUBCASE("a single element gets label 1") {
        LabeledDiagram ld = phi_tilde({{1, 3}}, eps);
        REQUIRE(ld.strands.size() == 1);
        CHECK(ld.strands[0] == LabeledStrand{{1, 3}, 1});
    }
    SUBCASE("the worked labeled diagram inverts to its sequence") {
        LabeledDiagram ld{{{{0, 1}, 1}, {{0, 2}, 2}, {{2, 3}, 3}, {{2, 4}, 4}}, eps};
        ExceptionalSequence seq = phi_tilde_inverse(ld);
        CHECK(seq == ExceptionalSequence{{2, 4}, {2, 3}, {0, 2}, {0, 1}});
        CHECK(is_exceptional_sequence(seq, eps));
        CHECK(phi_tilde(seq, eps).strands == ld.strands);
    }
    SUBCASE("round trips across every sequence, n <= 4") {
        for (int n = 1; n <= 4; ++n)
            for (const SignVector& e : SignVector::all(n))
                for (const auto& seq : enumerate_exceptional_sequences(e, n)) {
                    LabeledDiagram ld = phi_tilde(seq, e);
                    CHECK(is_good_labeling(ld));
                    CHECK(phi_tilde_inverse(ld) == seq);
                }
    }
    SUBCASE("a non-sequence is rejected") {
        SignVector e("--++-");
        CHECK_THROWS_AS(phi_tilde({{1, 3}, {2, 4}}, e), validation_error);
    }
}

TEST_CASE("diagram enumeration") {
    SUBCASE("single strand world") {
        auto ds = enumerate_diagrams(SignVector("--"), 1);
        REQUIRE(ds.size() == 1);
        CHECK(ds[0].strands == std::vector<Strand>{{0, 1}});
    }
    SUBCASE("full labeled count at n=2") {
        CHECK(enumerate_labeled_diagrams(SignVector("---"), 2).size() == 3);
    }
    SUBCASE("the worked diagram shows up at n=4") {
        auto ds = enumerate_diagrams(SignVector("-+-++"), 4);
        std::vector<Strand> d1{{0, 1}, {0, 2}, {2, 3}, {2, 4}};
        bool found = false;
        for (const auto& d : ds) found = found || d.strands == d1;
        CHECK(found);
    }
    SUBCASE("every enumerated labeling is good") {
        for (const auto& ld : enumerate_labeled_diagrams(SignVector("-+-+"), 3))
            CHECK(is_good_labeling(ld));
    }
}

TEST_CASE("admissible oriented diagrams") {
    SUBCASE("the worked oriented diagram is admissible") {
        OrientedDiagram od{{{0, 2}, {3, 1}, {2, 3}, {3, 4}}, SignVector("++-+-")};
        std::sort(od.strands.begin(), od.strands.end(),
                  [](const OrientedStrand& l, const OrientedStrand& r) {
                      return l.underlying() < r.underlying();
                  });
        CHECK(is_in_D_arrow(od));
    }
    SUBCASE("the rightward path is admissible for every orientation") {
        for (const SignVector& eps : SignVector::all(4)) {
            OrientedDiagram od{{{0, 1}, {1, 2}, {2, 3}, {3, 4}}, eps};
            CHECK(is_in_D_arrow(od));
        }
    }
    SUBCASE("two strands into a plus point fail") {
        SignVector eps("-+-");
        OrientedDiagram od{{{0, 1}, {2, 1}}, eps};
        CHECK_FALSE(is_in_D_arrow(od));
    }
    SUBCASE("an outgoing strand nested under an incoming one at a minus point fails") {
        SignVector eps("---");
        OrientedDiagram od{{{0, 2}, {2, 1}}, eps};
        CHECK_FALSE(is_in_D_arrow(od));
        OrientedDiagram ok{{{1, 2}, {2, 0}}, eps};
        CHECK(is_in_D_arrow(ok));
    }
    SUBCASE("strand count must be n") {
        SignVector eps("---");
        OrientedDiagram od{{{0, 1}}, eps};
        CHECK_FALSE(is_in_D_arrow(od));
    }
}

TEST_CASE("verification suites over strand models") {
    SUBCASE("sequences match labeled diagrams for every length") {
        for (int n = 1; n <= 4; ++n) {
            Verdict v = verify_esbij(n);
            CHECK(v.ok);
            INFO(v.first_failure);
        }
    }
    SUBCASE("collections match diagrams for every size") {
        for (int n = 1; n <= 4; ++n) {
            Verdict v = verify_ecbij(n);
            CHECK(v.ok);
            INFO(v.first_failure);
        }
        // one mixed and one constant orientation at the next rank
        CHECK(verify_ecbij(5, SignVector("------")).ok);
        CHECK(verify_ecbij(5, SignVector("-+-+-+")).ok);
    }
}

TEST_CASE("c-matrix to oriented diagram and back") {
    SUBCASE("identity becomes the rightward path") {
        SignVector eps("-+-+");
        CMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        OrientedDiagram od = oriented_of_cmatrix(id, eps);
        CHECK(od.strands == std::vector<OrientedStrand>{{0, 1}, {1, 2}, {2, 3}});
        CHECK(cmatrix_of_oriented(od) == id);
    }
    SUBCASE("negated identity becomes the leftward path") {
        SignVector eps("-+-+");
        CMatrix nid{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
        OrientedDiagram od = oriented_of_cmatrix(nid, eps);
        CHECK(od.strands == std::vector<OrientedStrand>{{1, 0}, {2, 1}, {3, 2}});
    }
    SUBCASE("the worked matrix maps to the worked strands") {
        SignVector eps("++-+-");
        CMatrix c{{1, 1, 0, 0}, {0, 0, 1, 0}, {0, -1, -1, 0}, {0, 0, 0, 1}};
        OrientedDiagram od = oriented_of_cmatrix(c, eps);
        std::set<std::pair<int, int>> got;
        for (const auto& s : od.strands) got.emplace(s.from, s.to);
        std::set<std::pair<int, int>> want{{0, 2}, {2, 3}, {3, 1}, {3, 4}};
        CHECK(got == want);
        CHECK(is_in_D_arrow(od));
    }
    SUBCASE("a non-interval row is rejected") {
        SignVector eps("---");
        CHECK_THROWS_AS(oriented_of_cmatrix(CMatrix{{1, -1}, {0, 1}}, eps), invalid_input_error);
    }
}
