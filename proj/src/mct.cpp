#include "strandlab/mct.hpp"

#include <algorithm>
#include <numeric>

namespace strandlab {

namespace {

std::string edge_str(std::pair<int, int> e) {
    return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

bool spanning_tree(const std::vector<std::pair<int, int>>& edges, int points) {
    if (static_cast<int>(edges.size()) != points - 1) return false;
    std::vector<int> parent(static_cast<std::size_t>(points));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= points || b >= points || a == b) return false;
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[static_cast<std::size_t>(ra)] = rb;
    }
    return true;
}

} // namespace

std::optional<MctViolation> mct_violation(const MixedCobinaryTree& t) {
    const int n = t.eps.n();
    if (static_cast<int>(t.heights.size()) != n + 1)
        return MctViolation{"not-spanning-tree", "height vector has wrong length"};
    if (!spanning_tree(t.edges, n + 1))
        return MctViolation{"not-spanning-tree", "edges do not form a spanning tree on 0..n"};
    const auto& y = t.heights;
    for (auto e : t.edges)
        if (y[static_cast<std::size_t>(e.first)] == y[static_cast<std::size_t>(e.second)])
            return MctViolation{"horizontal-edge", "edge " + edge_str(e) + " is horizontal"};
    // a point with sign + lies above every tree point at its abscissa, and
    // a point with sign - lies below
    for (int p = 0; p <= n; ++p) {
        for (auto e : t.edges) {
            int lo = std::min(e.first, e.second), hi = std::max(e.first, e.second);
            if (!(lo < p && p < hi)) continue;
            Rational z = line_height_at(Rational(lo), y[static_cast<std::size_t>(lo)],
                                        Rational(hi), y[static_cast<std::size_t>(hi)],
                                        Rational(p));
            if (t.eps.is_plus(p) && !(y[static_cast<std::size_t>(p)] >= z))
                return MctViolation{"point-side",
                                    "edge " + edge_str(e) + " passes above point " +
                                        std::to_string(p)};
            if (t.eps.is_minus(p) && !(y[static_cast<std::size_t>(p)] <= z))
                return MctViolation{"point-side",
                                    "edge " + edge_str(e) + " passes below point " +
                                        std::to_string(p)};
        }
    }
    for (int p = 0; p <= n; ++p) {
        int up_l = 0, up_r = 0, down_l = 0, down_r = 0;
        for (auto e : t.edges) {
            int other = e.first == p ? e.second : e.second == p ? e.first : -1;
            if (other < 0) continue;
            bool up = y[static_cast<std::size_t>(other)] > y[static_cast<std::size_t>(p)];
            bool left = other < p;
            (up ? (left ? up_l : up_r) : (left ? down_l : down_r))++;
        }
        bool bad = t.eps.is_plus(p) ? (down_l + down_r > 1 || up_l > 1 || up_r > 1)
                                    : (up_l + up_r > 1 || down_l > 1 || down_r > 1);
        if (bad)
            return MctViolation{"vertex-pattern",
                                "degree/side pattern violated at point " + std::to_string(p)};
    }
    for (std::size_t x = 0; x < t.edges.size(); ++x)
        for (std::size_t w = x + 1; w < t.edges.size(); ++w) {
            auto [a1, b1] = t.edges[x];
            auto [a2, b2] = t.edges[w];
            RPoint a{Rational(a1), y[static_cast<std::size_t>(a1)]};
            RPoint b{Rational(b1), y[static_cast<std::size_t>(b1)]};
            RPoint c{Rational(a2), y[static_cast<std::size_t>(a2)]};
            RPoint d{Rational(b2), y[static_cast<std::size_t>(b2)]};
            if (segments_meet_off_endpoints(a, b, c, d))
                return MctViolation{"edge-crossing", "edges " + edge_str(t.edges[x]) + " and " +
                                                         edge_str(t.edges[w]) + " cross"};
        }
    return std::nullopt;
}

MixedCobinaryTree realize(const OrientedDiagram& od) {
    const int n = od.eps.n();
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n) + 1);
    std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
    for (const OrientedStrand& s : od.strands) {
        succ[static_cast<std::size_t>(s.from)].push_back(s.to);
        ++indeg[static_cast<std::size_t>(s.to)];
    }
    std::vector<int> ready;
    for (int v = 0; v <= n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    std::vector<int> layer(static_cast<std::size_t>(n) + 1, 0);
    int seen = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++seen;
        for (int w : succ[static_cast<std::size_t>(v)]) {
            layer[static_cast<std::size_t>(w)] =
                std::max(layer[static_cast<std::size_t>(w)], layer[static_cast<std::size_t>(v)] + 1);
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
        }
    }
    if (seen != n + 1)
        throw invalid_input_error("orientation constraints contain a directed cycle");
    MixedCobinaryTree t{od.eps, {}, {}};
    for (int v = 0; v <= n; ++v)
        t.heights.push_back(Rational(layer[static_cast<std::size_t>(v)]) + Rational(v, n + 2));
    for (const OrientedStrand& s : od.strands) {
        Strand u = s.underlying();
        t.edges.emplace_back(u.a, u.b);
    }
    std::sort(t.edges.begin(), t.edges.end());
    if (auto v = mct_violation(t))
        throw internal_invariant_error("realized tree is invalid (" + v->condition +
                                       "): " + v->detail);
    return t;
}

OrientedDiagram mct_to_oriented(const MixedCobinaryTree& t) {
    if (auto v = mct_violation(t))
        throw validation_error("invalid tree (" + v->condition + "): " + v->detail);
    OrientedDiagram od{{}, t.eps};
    for (auto [a, b] : t.edges) {
        bool ascending = t.heights[static_cast<std::size_t>(a)] <
                         t.heights[static_cast<std::size_t>(b)];
        od.strands.push_back(ascending ? OrientedStrand{a, b} : OrientedStrand{b, a});
    }
    std::sort(od.strands.begin(), od.strands.end(),
              [](const OrientedStrand& l, const OrientedStrand& r) {
                  return l.underlying() < r.underlying();
              });
    return od;
}

CMatrix cmatrix_of_mct(const MixedCobinaryTree& t) {
    std::vector<std::pair<int, int>> edges = t.edges;
    std::sort(edges.begin(), edges.end());
    CMatrix c;
    for (auto [a, b] : edges) {
        int lo = std::min(a, b), hi = std::max(a, b);
        int sign = t.heights[static_cast<std::size_t>(hi)] >
                           t.heights[static_cast<std::size_t>(lo)]
                       ? 1
                       : -1;
        std::vector<int> row(static_cast<std::size_t>(t.eps.n()), 0);
        for (int v = lo + 1; v <= hi; ++v) row[static_cast<std::size_t>(v - 1)] = sign;
        c.push_back(std::move(row));
    }
    return c;
}

bool region_contains(const MixedCobinaryTree& t, const std::vector<Rational>& y) {
    if (y.size() != t.heights.size())
        throw invalid_input_error("height vector has wrong length");
    for (std::size_t a = 0; a < y.size(); ++a)
        for (std::size_t b = a + 1; b < y.size(); ++b)
            if (y[a] == y[b]) throw invalid_input_error("heights must be pairwise distinct");
    for (auto [a, b] : t.edges) {
        bool was = t.heights[static_cast<std::size_t>(a)] < t.heights[static_cast<std::size_t>(b)];
        bool now = y[static_cast<std::size_t>(a)] < y[static_cast<std::size_t>(b)];
        if (was != now) return false; // slope sign flipped
    }
    MixedCobinaryTree moved{t.eps, y, t.edges};
    return is_valid_mct(moved);
}

} // namespace strandlab
