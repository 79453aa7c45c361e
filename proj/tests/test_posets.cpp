#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "strandlab/posets.hpp"

using namespace strandlab;

namespace {

Poset chain_poset(int m) {
    Poset p{m, std::vector<std::vector<bool>>(static_cast<std::size_t>(m),
                                              std::vector<bool>(static_cast<std::size_t>(m)))};
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) p.less[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    return p;
}

Poset antichain(int m) {
    return Poset{m, std::vector<std::vector<bool>>(static_cast<std::size_t>(m),
                                                   std::vector<bool>(static_cast<std::size_t>(m)))};
}

// reference count by filtering all permutations
unsigned long long linext_brute(const Poset& p) {
    std::vector<int> perm(static_cast<std::size_t>(p.size));
    std::iota(perm.begin(), perm.end(), 0);
    unsigned long long count = 0;
    do {
        std::vector<int> pos(static_cast<std::size_t>(p.size));
        for (int idx = 0; idx < p.size; ++idx) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(idx)])] = idx;
        bool ok = true;
        for (int a = 0; a < p.size && ok; ++a)
            for (int b = 0; b < p.size && ok; ++b)
                if (p.below(a, b) && pos[static_cast<std::size_t>(a)] > pos[static_cast<std::size_t>(b)]) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

} // namespace

TEST_CASE("poset of a diagram") {
    SUBCASE("single strand") {
        Diagram d = make_diagram({{1, 3}}, SignVector("----"));
        DiagramPoset p = poset_of_diagram(d);
        CHECK(p.order.size == 1);
        CHECK(p.order.covers().empty());
    }
    SUBCASE("the worked four-strand diagram is a chain") {
        Diagram d = make_diagram({{0, 1}, {0, 2}, {2, 3}, {2, 4}}, SignVector("-+-++"));
        DiagramPoset p = poset_of_diagram(d);
        CHECK(poset_isomorphic(p.order, chain_poset(4)));
        CHECK(count_linear_extensions(p.order) == 1);
    }
    SUBCASE("two different diagrams with the same chain poset") {
        SignVector eps("-----");
        Diagram fan = make_diagram({{0, 1}, {0, 2}, {0, 3}, {0, 4}}, eps);
        Diagram path = make_diagram({{0, 1}, {1, 2}, {2, 3}, {3, 4}}, eps);
        CHECK(poset_isomorphic(poset_of_diagram(fan).order, chain_poset(4)));
        CHECK(poset_isomorphic(poset_of_diagram(path).order, chain_poset(4)));
    }
}

TEST_CASE("linear extension counting") {
    CHECK(count_linear_extensions(antichain(3)) == 6);
    CHECK(count_linear_extensions(chain_poset(4)) == 1);
    SUBCASE("matches brute force on diagram posets") {
        for (int n = 1; n <= 4; ++n)
            for (const SignVector& eps : SignVector::all(n))
                for (const Diagram& d : enumerate_diagrams(eps, n)) {
                    Poset p = poset_of_diagram(d).order;
                    CHECK(count_linear_extensions(p) == linext_brute(p));
                }
    }
    SUBCASE("size bound enforced") {
        CHECK_THROWS_AS(count_linear_extensions(antichain(13)), resource_limit_error);
    }
}

TEST_CASE("rotation") {
    SignVector eps("----");
    SUBCASE("rotating n+1 times is the identity") {
        Diagram d = make_diagram({{0, 1}, {1, 3}, {2, 3}}, eps);
        Diagram r = d;
        for (int t = 0; t < 4; ++t) r = rotate(r);
        CHECK(r.strands == d.strands);
    }
    SUBCASE("a short strand wraps around") {
        Diagram d = make_diagram({{0, 1}}, eps);
        CHECK(rotate(d).strands == std::vector<Strand>{{0, 3}});
    }
    SUBCASE("poset type is preserved, n <= 4") {
        for (int n = 2; n <= 4; ++n) {
            SignVector e = SignVector::constant(n);
            for (const Diagram& d : enumerate_diagrams(e, n)) {
                Poset before = poset_of_diagram(d).order;
                Poset after = poset_of_diagram(rotate(d)).order;
                CHECK(poset_isomorphic(before, after));
            }
        }
    }
    SUBCASE("mixed sign vectors are rejected") {
        Diagram d = make_diagram({{0, 1}}, SignVector("-+--"));
        CHECK_THROWS_AS(rotate(d), unsupported_orientation_error);
    }
}

TEST_CASE("poset realization") {
    SUBCASE("one element") {
        RealizeResult r = realize_poset(chain_poset(1));
        CHECK(r.feasible);
        CHECK(r.diagram.strands == std::vector<Strand>{{0, 1}});
    }
    SUBCASE("the four-chain") {
        RealizeResult r = realize_poset(chain_poset(4));
        REQUIRE(r.feasible);
        CHECK(poset_isomorphic(poset_of_diagram(r.diagram).order, chain_poset(4)));
    }
    SUBCASE("plus-sign target reflects the construction") {
        RealizeResult r = realize_poset(chain_poset(3), '+');
        REQUIRE(r.feasible);
        CHECK(r.diagram.eps.str() == "++++");
        CHECK(poset_isomorphic(poset_of_diagram(r.diagram).order, chain_poset(3)));
    }
    SUBCASE("a four-cycle Hasse graph is infeasible") {
        // two minimal elements both under two maximal elements
        Poset p = antichain(4);
        p.less[0][2] = p.less[0][3] = p.less[1][2] = p.less[1][3] = true;
        RealizeResult r = realize_poset(p);
        CHECK_FALSE(r.feasible);
        CHECK(r.failed_condition.find("cycle") != std::string::npos);
    }
    SUBCASE("three covers are infeasible") {
        Poset p = antichain(4);
        p.less[0][3] = p.less[1][3] = p.less[2][3] = true;
        RealizeResult r = realize_poset(p);
        CHECK_FALSE(r.feasible);
        CHECK(r.failed_condition.find("two") != std::string::npos);
    }
    SUBCASE("a disconnected Hasse diagram is infeasible") {
        RealizeResult r = realize_poset(antichain(2));
        CHECK_FALSE(r.feasible);
        CHECK(r.failed_condition.find("disconnected") != std::string::npos);
    }
    SUBCASE("full diagrams over constant signs produce tree-shaped posets") {
        for (int n = 1; n <= 5; ++n) {
            SignVector eps = SignVector::constant(n);
            for (const Diagram& d : enumerate_diagrams(eps, n)) {
                Poset p = poset_of_diagram(d).order;
                auto covers = p.covers();
                CHECK(static_cast<int>(covers.size()) == p.size - 1);
                std::vector<int> up(static_cast<std::size_t>(p.size), 0),
                    down(static_cast<std::size_t>(p.size), 0);
                for (auto [lo, hi] : covers) {
                    CHECK(++up[static_cast<std::size_t>(lo)] <= 2);
                    CHECK(++down[static_cast<std::size_t>(hi)] <= 2);
                }
                // size-1 covers plus acyclicity of the order means the Hasse
                // graph is connected exactly when it is a tree
                CHECK(realize_poset(p).feasible);
            }
        }
    }
    SUBCASE("every tree-shaped poset with <= 6 elements is realized") {
        // build all posets whose Hasse diagram is a labeled tree with both
        // degrees bounded by two, then realize each
        for (int m = 2; m <= 6; ++m) {
            std::vector<std::pair<int, int>> edges;
            std::vector<int> choice(static_cast<std::size_t>(m - 1), 0);
            // iterate over all labeled trees via parent arrays on 1..m-1 with
            // parent[v] < v (this enumerates all increasing-parent trees;
            // orientations then cover all Hasse trees up to the degree caps)
            auto total = [&](auto&& self, int v) -> void {
                if (v == m) {
                    for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
                        Poset p = antichain(m);
                        std::vector<int> up(static_cast<std::size_t>(m), 0),
                            down(static_cast<std::size_t>(m), 0);
                        bool ok = true;
                        for (int v2 = 1; v2 < m && ok; ++v2) {
                            int a = choice[static_cast<std::size_t>(v2 - 1)], b = v2;
                            if (mask & (1u << (v2 - 1))) std::swap(a, b);
                            p.less[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
                            if (++up[static_cast<std::size_t>(a)] > 2 ||
                                ++down[static_cast<std::size_t>(b)] > 2)
                                ok = false;
                        }
                        if (!ok) continue;
                        // transitive closure
                        for (int k = 0; k < m; ++k)
                            for (int i = 0; i < m; ++i)
                                for (int j = 0; j < m; ++j)
                                    if (p.below(i, k) && p.below(k, j))
                                        p.less[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
                        RealizeResult r = realize_poset(p);
                        CHECK(r.feasible);
                    }
                    return;
                }
                for (int parent = 0; parent < v; ++parent) {
                    choice[static_cast<std::size_t>(v - 1)] = parent;
                    self(self, v + 1);
                }
            };
            total(total, 1);
        }
    }
}

TEST_CASE("tree counts by leaves") {
    CHECK(count_trees_with_leaves(3, 2) == 12);
    CHECK(count_trees_with_leaves(3, 3) == 4);
    SUBCASE("totals give (n+1)^(n-1), n <= 5") {
        const unsigned long long expect[] = {0, 1, 3, 16, 125, 1296};
        for (int n = 1; n <= 5; ++n) {
            unsigned long long total = 0;
            for (int r = 0; r <= n + 1; ++r) total += count_trees_with_leaves(n, r);
            CHECK(total == expect[n]);
        }
    }
    SUBCASE("the two-point world counts its doubled short chord") {
        CHECK(count_trees_with_leaves(1, 2) == 1);
        CHECK(count_trees_with_leaves(1, 1) == 0);
    }
}
