#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "strandlab/rep_theory.hpp"

using namespace strandlab;

TEST_CASE("euler form") {
    SUBCASE("an interval against itself gives 1 for every orientation") {
        for (int n = 1; n <= 5; ++n)
            for (const SignVector& eps : SignVector::all(n))
                for (IntervalRep r : all_intervals(n)) {
                    auto d = dimension_vector(r, n);
                    CHECK(euler_form(d, d, eps) == 1);
                }
    }
    SUBCASE("separated supports give 0") {
        SignVector eps("-+-+-");
        auto x = dimension_vector({0, 1}, 4);
        auto y = dimension_vector({2, 4}, 4);
        CHECK(euler_form(x, y, eps) == 0);
        CHECK(euler_form(y, x, eps) == 0);
    }
    SUBCASE("matches hom minus ext") {
        SignVector eps("-+-+-");
        IntervalRep u{0, 2}, v{1, 3};
        HomExtProfile p = hom_ext(u, v, eps);
        CHECK(euler_form(dimension_vector(u, 4), dimension_vector(v, 4), eps) == p.hom - p.ext);
    }
    SUBCASE("length mismatch is rejected") {
        SignVector eps("---");
        CHECK_THROWS_AS(euler_form({1}, {1, 0}, eps), invalid_input_error);
    }
}

TEST_CASE("hom/ext case table") {
    SUBCASE("equal intervals") {
        SignVector eps("----");
        CHECK(hom_ext({0, 2}, {0, 2}, eps) == HomExtProfile{1, 0});
    }
    SUBCASE("interlaced, both inner signs minus") {
        // u = (i,j) = (0,2), v = (k,l) = (1,3): hom(u,v)=1 iff eps_1=eps_2=-
        SignVector eps("+--+");
        CHECK(hom_ext({0, 2}, {1, 3}, eps).hom == 1);
        CHECK(hom_ext({0, 2}, {1, 3}, eps).ext == 0);
        SignVector flip("+++-");
        CHECK(hom_ext({0, 2}, {1, 3}, flip).hom == 0);
        CHECK(hom_ext({0, 2}, {1, 3}, flip).ext == 1);
    }
    SUBCASE("touching intervals never have hom") {
        for (const SignVector& eps : SignVector::all(3)) {
            CHECK(hom_ext({0, 1}, {1, 3}, eps).hom == 0);
            CHECK(hom_ext({1, 3}, {0, 1}, eps).hom == 0);
        }
    }
    SUBCASE("ext across a shared point follows its sign") {
        SignVector plus("-+-");
        CHECK(hom_ext({0, 1}, {1, 2}, plus).ext == 1);
        CHECK(hom_ext({1, 2}, {0, 1}, plus).ext == 0);
        SignVector minus("---");
        CHECK(hom_ext({0, 1}, {1, 2}, minus).ext == 0);
        CHECK(hom_ext({1, 2}, {0, 1}, minus).ext == 1);
    }
    SUBCASE("hom vanishes in at least one direction, exhaustively") {
        for (int n = 1; n <= 8; ++n)
            for (const SignVector& eps : SignVector::all(n)) {
                auto ivs = all_intervals(n);
                for (std::size_t a = 0; a < ivs.size(); ++a)
                    for (std::size_t b = a + 1; b < ivs.size(); ++b) {
                        bool fwd = hom_ext(ivs[a], ivs[b], eps).hom != 0;
                        bool bwd = hom_ext(ivs[b], ivs[a], eps).hom != 0;
                        CHECK_FALSE((fwd && bwd));
                    }
            }
    }
    SUBCASE("values stay within {0,1}") {
        for (const SignVector& eps : SignVector::all(4))
            for (IntervalRep u : all_intervals(4))
                for (IntervalRep v : all_intervals(4)) {
                    HomExtProfile p = hom_ext(u, v, eps);
                    CHECK(p.hom >= 0);
                    CHECK(p.hom <= 1);
                    CHECK(p.ext >= 0);
                    CHECK(p.ext <= 1);
                }
    }
    SUBCASE("mismatched interval is rejected") {
        SignVector eps("---");
        CHECK_THROWS_AS(hom_ext({0, 4}, {0, 1}, eps), invalid_input_error);
    }
}

TEST_CASE("exceptional pairs") {
    SignVector eps("----");
    SUBCASE("a representation is never an exceptional pair with itself") {
        CHECK_FALSE(is_exceptional_pair({0, 2}, {0, 2}, eps));
    }
    SUBCASE("separated intervals work in both orders") {
        for (const SignVector& e : SignVector::all(4)) {
            CHECK(is_exceptional_pair({0, 1}, {2, 4}, e));
            CHECK(is_exceptional_pair({2, 4}, {0, 1}, e));
        }
    }
    SUBCASE("shared point with minus sign orders the pair one way") {
        SignVector e("-----"); // eps_2 = -
        IntervalRep u{2, 4}, v{0, 2};
        CHECK(is_exceptional_pair(u, v, e));
        CHECK_FALSE(is_exceptional_pair(v, u, e));
    }
}

TEST_CASE("exceptional sequence enumeration") {
    SUBCASE("single vertex") {
        auto seqs = enumerate_exceptional_sequences(SignVector("--"), 1);
        REQUIRE(seqs.size() == 1);
        CHECK(seqs[0] == ExceptionalSequence{{0, 1}});
    }
    SUBCASE("counts match (n+1)^(n-1) for every orientation, n <= 4") {
        const unsigned long long expect[] = {0, 1, 3, 16, 125};
        for (int n = 1; n <= 4; ++n)
            for (const SignVector& eps : SignVector::all(n))
                CHECK(enumerate_exceptional_sequences(eps, n).size() == expect[n]);
    }
    SUBCASE("prefixes and suffixes of sequences are sequences") {
        SignVector eps("-+-+");
        for (const auto& seq : enumerate_exceptional_sequences(eps, 3)) {
            for (std::size_t cut = 1; cut < seq.size(); ++cut) {
                ExceptionalSequence prefix(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(cut));
                ExceptionalSequence suffix(seq.begin() + static_cast<std::ptrdiff_t>(cut), seq.end());
                CHECK(is_exceptional_sequence(prefix, eps));
                CHECK(is_exceptional_sequence(suffix, eps));
            }
        }
    }
    SUBCASE("rank bound is enforced") {
        CHECK_THROWS_AS(
            enumerate_exceptional_sequences(SignVector::constant(8), 8, SequenceLimits{7}),
            resource_limit_error);
    }
}

TEST_CASE("ordering a collection") {
    SUBCASE("singleton") {
        auto seq = order_collection({{1, 3}}, SignVector("----"));
        CHECK(seq == ExceptionalSequence{{1, 3}});
    }
    SUBCASE("a four-element collection orders into a sequence") {
        SignVector eps("-+-++");
        std::vector<IntervalRep> coll{{0, 1}, {0, 2}, {2, 3}, {2, 4}};
        ExceptionalSequence seq = order_collection(coll, eps);
        CHECK(seq.size() == 4);
        CHECK(is_exceptional_sequence(seq, eps));
        CHECK(std::set<IntervalRep>(seq.begin(), seq.end()) ==
              std::set<IntervalRep>(coll.begin(), coll.end()));
    }
    SUBCASE("a crossing pair is rejected with the pair attached") {
        SignVector eps("--++-"); // eps_2 == eps_3
        try {
            order_collection({{1, 3}, {2, 4}}, eps);
            FAIL("expected not_a_collection_error");
        } catch (const not_a_collection_error& e) {
            CHECK(e.first_i() == 1);
            CHECK(e.first_j() == 3);
            CHECK(e.second_i() == 2);
            CHECK(e.second_j() == 4);
        }
    }
    SUBCASE("deterministic greedy order") {
        SignVector eps("----");
        auto a = order_collection({{0, 1}, {1, 2}, {2, 3}}, eps);
        auto b = order_collection({{2, 3}, {0, 1}, {1, 2}}, eps);
        CHECK(a == b);
    }
}

TEST_CASE("row-order search over c-matrices") {
    SUBCASE("identity matrix") {
        SignVector eps("-+-");
        CMatrix id{{1, 0}, {0, 1}};
        auto v = verify_speyer_thomas(id, eps);
        CHECK(v.ok);
        CHECK(v.sigma.size() == 2);
    }
    SUBCASE("negated identity") {
        SignVector eps("-+-");
        CMatrix nid{{-1, 0}, {0, -1}};
        CHECK(verify_speyer_thomas(nid, eps).ok);
    }
    SUBCASE("the worked mixed-sign matrix") {
        SignVector eps("++-+-");
        CMatrix c{{1, 1, 0, 0}, {0, 0, 1, 0}, {0, -1, -1, 0}, {0, 0, 0, 1}};
        auto v = verify_speyer_thomas(c, eps);
        CHECK(v.ok);
        REQUIRE(v.sigma.size() == 4);
        // negative rows must precede positive rows along sigma
        bool seen_positive = false;
        for (int pos : v.sigma) {
            bool positive = pos != 3; // row 3 is the single negative row
            if (positive) seen_positive = true;
            else CHECK_FALSE(seen_positive);
        }
    }
    SUBCASE("a non-interval row is rejected") {
        SignVector eps("---");
        CHECK_THROWS_AS(verify_speyer_thomas(CMatrix{{1, -1}, {0, 1}}, eps),
                        invalid_input_error);
    }
}
