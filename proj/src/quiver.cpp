#include "strandlab/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace strandlab {

ExchangeMatrix framed_quiver(const SignVector& eps) {
    const int n = eps.n();
    ExchangeMatrix b(n, 2 * n);
    for (int i = 1; i < n; ++i) {
        if (eps.is_plus(i)) { // arrow i -> i+1
            b.at(i - 1, i) += 1;
            b.at(i, i - 1) -= 1;
        } else {              // arrow i+1 -> i
            b.at(i, i - 1) += 1;
            b.at(i - 1, i) -= 1;
        }
    }
    for (int i = 0; i < n; ++i) b.at(i, n + i) = 1;
    return b;
}

ExchangeMatrix coframed_quiver(const SignVector& eps) {
    ExchangeMatrix b = framed_quiver(eps);
    const int n = b.n();
    for (int i = 0; i < n; ++i) b.at(i, n + i) = -1;
    return b;
}

ExchangeMatrix mutate(const ExchangeMatrix& b, int k) {
    if (k < 1 || k > b.n())
        throw invalid_vertex_error("mutation vertex " + std::to_string(k) +
                                   " outside mutable range [1.." + std::to_string(b.n()) + "]");
    const int kk = k - 1;
    ExchangeMatrix out(b.n(), b.m());
    for (int i = 0; i < b.n(); ++i) {
        for (int j = 0; j < b.m(); ++j) {
            if (i == kk || j == kk) {
                out.at(i, j) = -b.at(i, j);
            } else {
                const int bik = b.at(i, kk);
                const int bkj = b.at(kk, j);
                out.at(i, j) = b.at(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
            }
        }
    }
    return out;
}

ExchangeMatrix mutate_sequence(ExchangeMatrix b, const std::vector<int>& ks) {
    for (int k : ks) b = mutate(b, k);
    return b;
}

CMatrix c_matrix(const ExchangeMatrix& b) {
    const int n = b.n();
    CMatrix c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = b.at(i, n + j);
    return c;
}

VertexColor vertex_color(const ExchangeMatrix& b, int i) {
    if (i < 1 || i > b.n())
        throw invalid_vertex_error("vertex " + std::to_string(i) + " is not mutable");
    for (int j = b.n(); j < b.m(); ++j)
        if (b.at(i - 1, j) < 0) return VertexColor::red;
    return VertexColor::green;
}

namespace {

ExchangeMatrix apply_permutation(const ExchangeMatrix& b, const std::vector<int>& perm) {
    const int n = b.n();
    ExchangeMatrix out(n, b.m());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out.at(i, j) = b.at(perm[static_cast<std::size_t>(i)],
                                                        perm[static_cast<std::size_t>(j)]);
        for (int j = n; j < b.m(); ++j) out.at(i, j) = b.at(perm[static_cast<std::size_t>(i)], j);
    }
    return out;
}

} // namespace

ExchangeMatrix canonical_form(const ExchangeMatrix& b) {
    const int n = b.n();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    ExchangeMatrix best = apply_permutation(b, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        ExchangeMatrix cand = apply_permutation(b, perm);
        if (cand < best) best = cand;
    }
    return best;
}

ExchangeGraph explore_exchange_graph(const SignVector& eps, const ExplorationLimits& lim) {
    const int n = eps.n();
    if (n > lim.max_n)
        throw resource_limit_error("exchange graph exploration limited to n <= " +
                                       std::to_string(lim.max_n),
                                   static_cast<std::size_t>(lim.max_n));
    std::map<ExchangeMatrix, int> index_of;
    std::set<std::pair<int, int>> edges;
    ExchangeMatrix start = canonical_form(framed_quiver(eps));
    index_of.emplace(start, 0);
    std::vector<ExchangeMatrix> frontier{start};
    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end());
        std::vector<ExchangeMatrix> next;
        for (const ExchangeMatrix& b : frontier) {
            const int from = index_of.at(b);
            for (int k = 1; k <= n; ++k) {
                ExchangeMatrix c = canonical_form(mutate(b, k));
                auto [it, inserted] = index_of.emplace(c, static_cast<int>(index_of.size()));
                if (inserted) {
                    if (index_of.size() > lim.max_nodes)
                        throw resource_limit_error(
                            "exchange graph exceeded the node budget of " +
                                std::to_string(lim.max_nodes),
                            lim.max_nodes);
                    next.push_back(c);
                }
                const int to = it->second;
                if (from != to) edges.emplace(std::min(from, to), std::max(from, to));
            }
        }
        frontier = std::move(next);
    }
    // re-index states into sorted order
    ExchangeGraph g;
    g.states.reserve(index_of.size());
    std::vector<int> newindex(index_of.size());
    int pos = 0;
    for (const auto& [state, old] : index_of) {
        newindex[static_cast<std::size_t>(old)] = pos++;
        g.states.push_back(state);
    }
    for (auto [a, b] : edges) {
        int na = newindex[static_cast<std::size_t>(a)];
        int nb = newindex[static_cast<std::size_t>(b)];
        g.edges.emplace_back(std::min(na, nb), std::max(na, nb));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::vector<CMatrix> enumerate_c_matrices(const SignVector& eps, const ExplorationLimits& lim) {
    ExchangeGraph g = explore_exchange_graph(eps, lim);
    std::set<CMatrix> out;
    for (const ExchangeMatrix& b : g.states) out.insert(sorted_rows(c_matrix(b)));
    return {out.begin(), out.end()};
}

ReddeningVerdict check_reddening_terminal(const SignVector& eps, const ExchangeMatrix& r) {
    ReddeningVerdict v;
    const int n = r.n();
    for (int i = 1; i <= n; ++i) {
        if (vertex_color(r, i) == VertexColor::green) {
            v.is_terminal = false;
            v.detail = "vertex " + std::to_string(i) + " is green";
            return v;
        }
    }
    v.is_terminal = true;
    // rows of the c-matrix must be -e_{sigma(i)}, all distinct
    CMatrix c = c_matrix(r);
    std::vector<int> sigma(static_cast<std::size_t>(n), 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        int hit = -1;
        for (int j = 0; j < n; ++j) {
            int x = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (x == -1 && hit < 0)
                hit = j;
            else if (x != 0) {
                hit = -2;
                break;
            }
        }
        if (hit < 0 || used[static_cast<std::size_t>(hit)]) {
            v.consistent = false;
            v.counterexample_row = i + 1;
            v.detail = "row " + std::to_string(i + 1) + " of the c-matrix is not a fresh -e_k";
            return v;
        }
        used[static_cast<std::size_t>(hit)] = true;
        sigma[static_cast<std::size_t>(i)] = hit + 1;
    }
    if (canonical_form(r) != canonical_form(coframed_quiver(eps))) {
        v.consistent = false;
        v.detail = "all-red state is not frozen-isomorphic to the coframed quiver";
        return v;
    }
    v.witness = sigma;
    return v;
}

} // namespace strandlab
