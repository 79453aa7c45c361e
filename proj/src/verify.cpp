#include "strandlab/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "strandlab/mct.hpp"
#include "strandlab/noncrossing.hpp"
#include "strandlab/posets.hpp"
#include "strandlab/quiver.hpp"
#include "strandlab/rep_theory.hpp"
#include "strandlab/strands.hpp"

namespace strandlab {

namespace {

std::vector<SignVector> targets(int n, const std::optional<SignVector>& eps) {
    if (eps) {
        if (eps->n() != n) throw invalid_input_error("sign vector length does not match n");
        return {*eps};
    }
    return SignVector::all(n);
}

std::string eps_tag(const SignVector& e) { return "[eps=" + e.str() + "] "; }

unsigned long long pow_ull(unsigned long long base, int exp) {
    unsigned long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// good labelings of one diagram, counted by the same incremental rule the
// enumerator uses
unsigned long long count_good_labelings(const Diagram& d) {
    const int k = static_cast<int>(d.strands.size());
    std::vector<int> label(d.strands.size(), 0);
    unsigned long long total = 0;
    auto assign = [&](auto&& self, int next) -> void {
        if (next > k) {
            ++total;
            return;
        }
        for (std::size_t idx = 0; idx < d.strands.size(); ++idx) {
            if (label[idx] != 0) continue;
            bool ok = true;
            for (std::size_t other = 0; other < d.strands.size(); ++other) {
                if (other == idx || label[other] == 0) continue;
                if (clockwise_from(d.strands[other], d.strands[idx], d.eps)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            label[idx] = next;
            self(self, next + 1);
            label[idx] = 0;
        }
    };
    assign(assign, 1);
    return total;
}

} // namespace

unsigned long long prufer_tree_count(int vertices, int leaves) {
    if (vertices < 1) throw invalid_input_error("need at least one vertex");
    if (vertices == 1) return leaves == 0 ? 1 : 0;
    if (vertices == 2) return leaves == 2 ? 1 : 0;
    const int slots = vertices - 2;
    unsigned long long count = 0;
    std::vector<int> seq(static_cast<std::size_t>(slots), 0);
    while (true) {
        std::vector<int> deg(static_cast<std::size_t>(vertices), 1);
        for (int x : seq) ++deg[static_cast<std::size_t>(x)];
        int lv = 0;
        for (int v = 0; v < vertices; ++v)
            if (deg[static_cast<std::size_t>(v)] == 1) ++lv;
        if (lv == leaves) ++count;
        int pos = slots - 1;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == vertices - 1) {
            seq[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++seq[static_cast<std::size_t>(pos)];
    }
    return count;
}

Verdict verify_maintech(int n, const std::optional<SignVector>& eps) {
    Verdict v;
    for (const SignVector& e : targets(n, eps)) {
        const auto ivs = all_intervals(n);
        for (std::size_t a = 0; a < ivs.size(); ++a)
            for (std::size_t b = a + 1; b < ivs.size(); ++b) {
                IntervalRep U = ivs[a], V = ivs[b];
                Strand su = phi(U), sv = phi(V);
                const bool uv = is_exceptional_pair(U, V, e);
                const bool vu = is_exceptional_pair(V, U, e);
                const bool cross = crosses(su, sv, e);
                const bool share = su.a == sv.a || su.a == sv.b || su.b == sv.a || su.b == sv.b;
                ++v.checked;
                if (cross != (!uv && !vu)) {
                    v.fail(eps_tag(e) + "crossing rule disagrees with the Hom/Ext side for c(" +
                           std::to_string(su.a) + "," + std::to_string(su.b) + "), c(" +
                           std::to_string(sv.a) + "," + std::to_string(sv.b) + ")");
                    return v;
                }
                if (clockwise_from(su, sv, e) != (share && uv && !vu) ||
                    clockwise_from(sv, su, e) != (share && vu && !uv)) {
                    v.fail(eps_tag(e) + "clockwise rule disagrees with the Hom/Ext side");
                    return v;
                }
                if ((!share && !cross) != (uv && vu)) {
                    v.fail(eps_tag(e) + "two-way exceptional pairs disagree with disjointness");
                    return v;
                }
            }
    }
    return v;
}

Verdict verify_esbij(int n, const std::optional<SignVector>& eps) {
    Verdict v;
    for (const SignVector& e : targets(n, eps)) {
        for (int k = 1; k <= n; ++k) {
            auto seqs = enumerate_exceptional_sequences(e, k, {.max_n = n});
            auto labeled = enumerate_labeled_diagrams(e, k, {.max_n = n});
            ++v.checked;
            if (seqs.size() != labeled.size()) {
                v.fail(eps_tag(e) + "k=" + std::to_string(k) + ": " +
                       std::to_string(seqs.size()) + " sequences vs " +
                       std::to_string(labeled.size()) + " labeled diagrams");
                return v;
            }
            std::set<std::vector<LabeledStrand>> images;
            for (const auto& seq : seqs) {
                LabeledDiagram ld = phi_tilde(seq, e);
                ++v.checked;
                if (!is_good_labeling(ld)) {
                    v.fail(eps_tag(e) + "label map produced a labeling that is not good");
                    return v;
                }
                if (phi_tilde_inverse(ld) != seq) {
                    v.fail(eps_tag(e) + "label map round trip lost a sequence");
                    return v;
                }
                images.insert(ld.strands);
            }
            std::set<std::vector<LabeledStrand>> expected;
            for (const auto& ld : labeled) expected.insert(ld.strands);
            if (images != expected) {
                v.fail(eps_tag(e) + "label map image differs from the labeled enumeration");
                return v;
            }
        }
    }
    return v;
}

Verdict verify_ecbij(int n, const std::optional<SignVector>& eps) {
    Verdict v;
    for (const SignVector& e : targets(n, eps)) {
        const auto ivs = all_intervals(n);
        for (int k = 1; k <= n; ++k) {
            // geometric side
            std::set<std::vector<Strand>> diagrams;
            for (const Diagram& d : enumerate_diagrams(e, k, {.max_n = n}))
                diagrams.insert(d.strands);
            // homological side: subsets admitting an exceptional order
            std::set<std::vector<Strand>> collections;
            std::vector<IntervalRep> pick;
            auto choose = [&](auto&& self, std::size_t start) -> void {
                if (static_cast<int>(pick.size()) == k) {
                    try {
                        ExceptionalSequence seq = order_collection(pick, e);
                        std::vector<Strand> ss;
                        for (IntervalRep r : pick) ss.push_back(phi(r));
                        std::sort(ss.begin(), ss.end());
                        collections.insert(std::move(ss));
                    } catch (const not_a_collection_error&) {
                    }
                    return;
                }
                for (std::size_t idx = start; idx < ivs.size(); ++idx) {
                    pick.push_back(ivs[idx]);
                    self(self, idx + 1);
                    pick.pop_back();
                }
            };
            choose(choose, 0);
            ++v.checked;
            if (diagrams != collections) {
                v.fail(eps_tag(e) + "k=" + std::to_string(k) +
                       ": diagrams and exceptional collections disagree (" +
                       std::to_string(diagrams.size()) + " vs " +
                       std::to_string(collections.size()) + ")");
                return v;
            }
        }
    }
    return v;
}

Verdict verify_cmat(int n, const std::optional<SignVector>& eps) {
    Verdict v;
    for (const SignVector& e : targets(n, eps)) {
        auto cmats = enumerate_c_matrices(e);
        auto oriented = enumerate_oriented_diagrams(e, {.max_n = n});
        std::set<CMatrix> from_oriented;
        for (const auto& od : oriented) from_oriented.insert(sorted_rows(cmatrix_of_oriented(od)));
        ++v.checked;
        if (from_oriented.size() != oriented.size()) {
            v.fail(eps_tag(e) + "two admissible oriented diagrams share a c-matrix");
            return v;
        }
        std::set<CMatrix> from_graph(cmats.begin(), cmats.end());
        if (from_graph != from_oriented) {
            v.fail(eps_tag(e) + "exchange graph yields " + std::to_string(from_graph.size()) +
                   " c-matrices but " + std::to_string(from_oriented.size()) +
                   " oriented diagrams pass");
            return v;
        }
        for (const CMatrix& c : cmats) {
            OrientedDiagram od = oriented_of_cmatrix(c, e);
            ++v.checked;
            if (!is_in_D_arrow(od)) {
                v.fail(eps_tag(e) + "c-matrix maps to an inadmissible oriented diagram");
                return v;
            }
            if (sorted_rows(cmatrix_of_oriented(od)) != c) {
                v.fail(eps_tag(e) + "c-matrix round trip through strands changed the matrix");
                return v;
            }
            for (const auto& row : c)
                if (!row_sign_coherent(row) || !interval_of_row(row)) {
                    v.fail(eps_tag(e) + "enumerated c-vector is not a signed interval");
                    return v;
                }
        }
    }
    return v;
}

Verdict verify_mct(int n, const std::optional<SignVector>& eps) {
    Verdict v;
    for (const SignVector& e : targets(n, eps)) {
        auto oriented = enumerate_oriented_diagrams(e, {.max_n = n});
        std::set<std::pair<std::vector<std::pair<int, int>>, std::vector<int>>> classes;
        for (const auto& od : oriented) {
            MixedCobinaryTree t = realize(od);
            ++v.checked;
            if (auto viol = mct_violation(t)) {
                v.fail(eps_tag(e) + "realized tree invalid: " + viol->detail);
                return v;
            }
            OrientedDiagram back = mct_to_oriented(t);
            if (back.strands != od.strands) {
                v.fail(eps_tag(e) + "flattening a realized tree changed the diagram");
                return v;
            }
            // isomorphism class = edge set plus slope signs
            std::vector<int> slopes;
            for (auto [a, b] : t.edges)
                slopes.push_back(t.heights[static_cast<std::size_t>(b)] >
                                         t.heights[static_cast<std::size_t>(a)]
                                     ? 1
                                     : -1);
            if (!classes.emplace(t.edges, slopes).second) {
                v.fail(eps_tag(e) + "two oriented diagrams realized isomorphic trees");
                return v;
            }
            CMatrix via_tree = sorted_rows(cmatrix_of_mct(t));
            CMatrix via_strands = sorted_rows(cmatrix_of_oriented(od));
            if (via_tree != via_strands) {
                v.fail(eps_tag(e) + "tree and strand c-matrix readings disagree");
                return v;
            }
        }
    }
    return v;
}

Verdict verify_linext(int n, const std::optional<SignVector>& eps) {
    Verdict v;
    for (const SignVector& e : targets(n, eps)) {
        for (const Diagram& d : enumerate_diagrams(e, n, {.max_n = n})) {
            unsigned long long direct = count_good_labelings(d);
            unsigned long long via_poset = count_linear_extensions(poset_of_diagram(d).order);
            ++v.checked;
            if (direct != via_poset) {
                v.fail(eps_tag(e) + "diagram has " + std::to_string(direct) +
                       " good labelings but " + std::to_string(via_poset) +
                       " linear extensions");
                return v;
            }
        }
    }
    return v;
}

Verdict verify_trees(int n) {
    Verdict v;
    unsigned long long total = 0;
    for (int r = 0; r <= n + 1; ++r) {
        unsigned long long ours = count_trees_with_leaves(n, r, {.max_n = n});
        unsigned long long oracle = prufer_tree_count(n + 1, r);
        ++v.checked;
        if (ours != oracle) {
            v.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " +
                   std::to_string(ours) + " vs Prufer " + std::to_string(oracle));
            return v;
        }
        total += ours;
    }
    if (total != pow_ull(static_cast<unsigned long long>(n) + 1, n - 1)) {
        v.fail("n=" + std::to_string(n) + ": totals do not sum to (n+1)^(n-1)");
        return v;
    }
    return v;
}

Verdict verify_chains(int n) {
    Verdict v;
    SignVector e = SignVector::constant(n);
    for (int k = 1; k <= n; ++k) {
        auto labeled = enumerate_labeled_diagrams(e, k, {.max_n = n});
        auto chains = enumerate_chains(n, k);
        ++v.checked;
        if (labeled.size() != chains.size()) {
            v.fail("k=" + std::to_string(k) + ": " + std::to_string(labeled.size()) +
                   " labeled diagrams vs " + std::to_string(chains.size()) + " chains");
            return v;
        }
        if (k == n && chains.size() != pow_ull(static_cast<unsigned long long>(n) + 1, n - 1)) {
            v.fail("maximal chain count differs from (n+1)^(n-1)");
            return v;
        }
        for (const auto& ld : labeled) {
            PartitionChain chain = chain_of_labeled_diagram(ld);
            ++v.checked;
            for (const auto& p : chain.partitions)
                if (!is_noncrossing(p)) {
                    v.fail("chain of a labeled diagram contains a crossing partition");
                    return v;
                }
            LabeledDiagram back = labeled_diagram_of_chain(chain, e);
            if (back.strands != ld.strands) {
                v.fail("chain map round trip lost a labeled diagram");
                return v;
            }
        }
        for (const auto& chain : chains) {
            LabeledDiagram ld = labeled_diagram_of_chain(chain, e);
            ++v.checked;
            if (!(chain_of_labeled_diagram(ld) == chain)) {
                v.fail("labeled diagram round trip lost a chain");
                return v;
            }
        }
    }
    return v;
}

Verdict verify_reddening(int n, const std::optional<SignVector>& eps) {
    Verdict v;
    for (const SignVector& e : targets(n, eps)) {
        ExchangeGraph g = explore_exchange_graph(e);
        int terminal_states = 0;
        for (const ExchangeMatrix& b : g.states) {
            bool all_red = true;
            for (int i = 1; i <= n && all_red; ++i)
                if (vertex_color(b, i) == VertexColor::green) all_red = false;
            if (!all_red) continue;
            ++terminal_states;
            ReddeningVerdict r = check_reddening_terminal(e, b);
            ++v.checked;
            if (!r.is_terminal || !r.consistent) {
                v.fail(eps_tag(e) + "all-red state fails the terminal checks: " + r.detail);
                return v;
            }
        }
        if (terminal_states != 1) {
            v.fail(eps_tag(e) + std::to_string(terminal_states) +
                   " all-red states in the exchange graph; expected exactly one");
            return v;
        }
    }
    return v;
}

} // namespace strandlab
