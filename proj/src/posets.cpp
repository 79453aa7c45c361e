#include "strandlab/posets.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace strandlab {

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
            if (!below(a, b)) continue;
            bool direct = true;
            for (int m = 0; m < size; ++m)
                if (below(a, m) && below(m, b)) {
                    direct = false;
                    break;
                }
            if (direct) out.emplace_back(a, b);
        }
    return out;
}

bool poset_isomorphic(const Poset& p, const Poset& q) {
    if (p.size != q.size) return false;
    const int m = p.size;
    auto profile = [](const Poset& s, int v) {
        int up = 0, down = 0;
        for (int o = 0; o < s.size; ++o) {
            if (s.below(v, o)) ++up;
            if (s.below(o, v)) ++down;
        }
        return std::pair{up, down};
    };
    std::vector<int> img(static_cast<std::size_t>(m), -1), used(static_cast<std::size_t>(m), 0);
    auto match = [&](auto&& self, int v) -> bool {
        if (v == m) return true;
        for (int w = 0; w < m; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (profile(p, v) != profile(q, w)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                int wu = img[static_cast<std::size_t>(u)];
                if (p.below(u, v) != q.below(wu, w) || p.below(v, u) != q.below(w, wu)) ok = false;
            }
            if (!ok) continue;
            img[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (self(self, v + 1)) return true;
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    return match(match, 0);
}

DiagramPoset poset_of_diagram(const Diagram& d) {
    const int m = static_cast<int>(d.strands.size());
    Poset p{m, std::vector<std::vector<bool>>(static_cast<std::size_t>(m),
                                              std::vector<bool>(static_cast<std::size_t>(m)))};
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && clockwise_from(d.strands[static_cast<std::size_t>(b)],
                                         d.strands[static_cast<std::size_t>(a)], d.eps))
                p.less[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    for (int k = 0; k < m; ++k)
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (p.below(a, k) && p.below(k, b))
                    p.less[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    for (int a = 0; a < m; ++a)
        if (p.below(a, a))
            throw internal_invariant_error("clockwise relation has a cycle in a valid diagram");
    return DiagramPoset{d.strands, std::move(p)};
}

unsigned long long count_linear_extensions(const Poset& p, const CountLimits& lim) {
    const int m = p.size;
    if (m > lim.max_elements)
        throw resource_limit_error("linear extension counting limited to " +
                                       std::to_string(lim.max_elements) + " elements",
                                   static_cast<std::size_t>(lim.max_elements));
    if (m == 0) return 1;
    std::vector<unsigned> pred(static_cast<std::size_t>(m), 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (p.below(a, b)) pred[static_cast<std::size_t>(b)] |= 1u << a;
    const unsigned full = (1u << m) - 1;
    std::vector<unsigned long long> count(static_cast<std::size_t>(full) + 1, 0);
    count[0] = 1;
    for (unsigned mask = 0; mask < full; ++mask) {
        if (count[mask] == 0) continue;
        for (int v = 0; v < m; ++v) {
            if (mask & (1u << v)) continue;
            if ((pred[static_cast<std::size_t>(v)] & ~mask) != 0) continue;
            count[mask | (1u << v)] += count[mask];
        }
    }
    return count[full];
}

Diagram rotate(const Diagram& d) {
    if (!d.eps.is_constant())
        throw unsupported_orientation_error(
            "rotation is only defined over constant sign vectors");
    const int pts = d.eps.points();
    std::vector<Strand> out;
    for (const Strand& s : d.strands) {
        int a = (s.a - 1 + pts) % pts;
        int b = (s.b - 1 + pts) % pts;
        out.push_back(make_strand(a, b));
    }
    std::sort(out.begin(), out.end());
    return Diagram{std::move(out), d.eps};
}

namespace {

// all strands sharing endpoint v that lie clockwise from s about v
bool clockwise_free_at(const std::vector<Strand>& diagram, const Strand& s, int v,
                       const SignVector& eps) {
    for (const Strand& o : diagram) {
        if (o == s) continue;
        if ((o.a == v || o.b == v) && clockwise_from(o, s, eps)) return false;
    }
    return true;
}

Strand rotate_strand(Strand s, int t, int pts) {
    return make_strand(((s.a - t) % pts + pts) % pts, ((s.b - t) % pts + pts) % pts);
}

struct BuiltDiagram {
    std::vector<Strand> strands;        // one per poset element, index-aligned
};

// Recursive construction over the all-minus sign vector. Elements of p map to
// strands positionally: result.strands[e] realizes element e. The chord
// diagram lives on p.size+1 points.
BuiltDiagram realize_minus(const Poset& p) {
    const int m = p.size;
    if (m == 1) return BuiltDiagram{{Strand{0, 1}}};
    auto covers = p.covers();
    int x = -1;
    for (int v = 0; v < m; ++v) {
        bool maximal = true;
        for (int o = 0; o < m; ++o)
            if (p.below(v, o)) maximal = false;
        if (maximal) {
            x = v;
            break;
        }
    }
    std::vector<int> downs;
    for (auto [lo, hi] : covers)
        if (hi == x) downs.push_back(lo);

    auto subposet = [&](const std::vector<int>& sub) {
        Poset q{static_cast<int>(sub.size()),
                std::vector<std::vector<bool>>(sub.size(), std::vector<bool>(sub.size()))};
        for (std::size_t a = 0; a < sub.size(); ++a)
            for (std::size_t b = 0; b < sub.size(); ++b)
                if (p.below(sub[a], sub[b])) q.less[a][b] = true;
        return q;
    };

    if (downs.size() == 2) {
        // removing x splits the Hasse tree into the two components under it
        std::vector<int> comp(static_cast<std::size_t>(m), -1);
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
        for (auto [lo, hi] : covers) {
            if (lo == x || hi == x) continue;
            adj[static_cast<std::size_t>(lo)].push_back(hi);
            adj[static_cast<std::size_t>(hi)].push_back(lo);
        }
        int cid = 0;
        for (int start = 0; start < m; ++start) {
            if (start == x || comp[static_cast<std::size_t>(start)] >= 0) continue;
            std::vector<int> stack{start};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                if (comp[static_cast<std::size_t>(v)] >= 0) continue;
                comp[static_cast<std::size_t>(v)] = cid;
                for (int w : adj[static_cast<std::size_t>(v)]) stack.push_back(w);
            }
            ++cid;
        }
        int y = downs[0], z = downs[1];
        std::vector<int> sub1, sub2;
        for (int v = 0; v < m; ++v) {
            if (v == x) continue;
            (comp[static_cast<std::size_t>(v)] == comp[static_cast<std::size_t>(y)] ? sub1 : sub2)
                .push_back(v);
        }
        BuiltDiagram d1 = realize_minus(subposet(sub1));
        BuiltDiagram d2 = realize_minus(subposet(sub2));
        const int k1 = static_cast<int>(sub1.size());
        const int k2 = static_cast<int>(sub2.size());
        SignVector e1 = SignVector::constant(k1 > 0 ? k1 : 1);
        SignVector e2 = SignVector::constant(k2 > 0 ? k2 : 1);
        auto pos_of = [](const std::vector<int>& sub, int e) {
            return static_cast<std::size_t>(
                std::find(sub.begin(), sub.end(), e) - sub.begin());
        };
        Strand cy = d1.strands[pos_of(sub1, y)];
        Strand cz = d2.strands[pos_of(sub2, z)];
        auto pick_rotation = [&](const BuiltDiagram& dd, Strand c, int k,
                                 const SignVector& ee) {
            int best = -1;
            for (int v : {c.a, c.b}) {
                if (!clockwise_free_at(dd.strands, c, v, ee)) continue;
                int t = ((v - k) % (k + 1) + (k + 1)) % (k + 1);
                if (best < 0 || t < best) best = t;
            }
            if (best < 0)
                throw internal_invariant_error(
                    "no rotation exposes the element joined from above");
            return best;
        };
        int t1 = pick_rotation(d1, cy, k1, e1);
        int t2 = pick_rotation(d2, cz, k2, e2);
        const int pts = m + 1;
        BuiltDiagram out;
        out.strands.resize(static_cast<std::size_t>(m));
        for (std::size_t idx = 0; idx < sub1.size(); ++idx)
            out.strands[static_cast<std::size_t>(sub1[idx])] =
                rotate_strand(d1.strands[idx], t1, k1 + 1);
        for (std::size_t idx = 0; idx < sub2.size(); ++idx) {
            Strand s = rotate_strand(d2.strands[idx], t2, k2 + 1);
            out.strands[static_cast<std::size_t>(sub2[idx])] =
                Strand{s.a + k1 + 1, s.b + k1 + 1};
        }
        out.strands[static_cast<std::size_t>(x)] = Strand{k1, pts - 1};
        return out;
    }

    // x covers a single element y: realize the rest, rotate y's free endpoint
    // to position 0, insert a fresh point next to it and attach a short chord
    int y = downs.at(0);
    std::vector<int> rest;
    for (int v = 0; v < m; ++v)
        if (v != x) rest.push_back(v);
    BuiltDiagram d0 = realize_minus(subposet(rest));
    const int k0 = m - 1;
    SignVector e0 = SignVector::constant(k0 > 0 ? k0 : 1);
    std::size_t ypos = static_cast<std::size_t>(
        std::find(rest.begin(), rest.end(), y) - rest.begin());
    Strand cy = d0.strands[ypos];
    int vfree = -1;
    for (int v : {cy.a, cy.b})
        if (clockwise_free_at(d0.strands, cy, v, e0)) {
            vfree = v;
            break;
        }
    if (vfree < 0)
        throw internal_invariant_error("no free endpoint on the covered element");
    BuiltDiagram out;
    out.strands.resize(static_cast<std::size_t>(m));
    for (std::size_t idx = 0; idx < rest.size(); ++idx) {
        Strand s = rotate_strand(d0.strands[idx], vfree, k0 + 1);
        out.strands[static_cast<std::size_t>(rest[idx])] =
            make_strand(s.a == 0 ? 0 : s.a + 1, s.b + 1);
    }
    out.strands[static_cast<std::size_t>(x)] = Strand{0, 1};
    return out;
}

Strand reflect_strand(Strand s, int n) { return make_strand(n - s.b, n - s.a); }

} // namespace

RealizeResult realize_poset(const Poset& p, char sign) {
    RealizeResult res;
    if (p.size < 1) {
        res.failed_condition = "empty poset";
        return res;
    }
    auto covers = p.covers();
    std::vector<int> up(static_cast<std::size_t>(p.size), 0),
        down(static_cast<std::size_t>(p.size), 0);
    for (auto [lo, hi] : covers) {
        ++up[static_cast<std::size_t>(lo)];
        ++down[static_cast<std::size_t>(hi)];
    }
    for (int v = 0; v < p.size; ++v)
        if (up[static_cast<std::size_t>(v)] > 2 || down[static_cast<std::size_t>(v)] > 2) {
            res.failed_condition = "an element has more than two covers or covers more than two";
            return res;
        }
    // the Hasse diagram must be a single tree: connected with size-1 edges
    if (static_cast<int>(covers.size()) != p.size - 1) {
        res.failed_condition = static_cast<int>(covers.size()) > p.size - 1
                                   ? "Hasse diagram contains a cycle"
                                   : "Hasse diagram is disconnected";
        return res;
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(p.size));
    for (auto [lo, hi] : covers) {
        adj[static_cast<std::size_t>(lo)].push_back(hi);
        adj[static_cast<std::size_t>(hi)].push_back(lo);
    }
    std::vector<char> seen(static_cast<std::size_t>(p.size), 0);
    std::vector<int> stack{0};
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        for (int w : adj[static_cast<std::size_t>(v)]) stack.push_back(w);
    }
    if (reached != p.size) {
        // right edge count but disconnected means some component has a cycle
        res.failed_condition = "Hasse diagram contains a cycle";
        return res;
    }

    BuiltDiagram built = realize_minus(p);
    std::vector<Strand> strands = built.strands;
    if (sign == '+')
        for (Strand& s : strands) s = reflect_strand(s, p.size);
    else if (sign != '-')
        throw invalid_input_error("target sign must be '+' or '-'");

    SignVector eps = SignVector::constant(p.size, sign);
    std::vector<Strand> sorted = strands;
    std::sort(sorted.begin(), sorted.end());
    res.diagram = make_diagram(sorted, eps);
    res.element_to_strand.resize(static_cast<std::size_t>(p.size));
    for (int e = 0; e < p.size; ++e) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(),
                                   strands[static_cast<std::size_t>(e)]);
        res.element_to_strand[static_cast<std::size_t>(e)] =
            static_cast<int>(it - sorted.begin());
    }
    // the positional map must be an order isomorphism
    DiagramPoset dp = poset_of_diagram(res.diagram);
    for (int a = 0; a < p.size; ++a)
        for (int b = 0; b < p.size; ++b)
            if (p.below(a, b) != dp.order.below(res.element_to_strand[static_cast<std::size_t>(a)],
                                                res.element_to_strand[static_cast<std::size_t>(b)]))
                throw internal_invariant_error("constructed diagram fails to realize the order");
    res.feasible = true;
    return res;
}

unsigned long long count_trees_with_leaves(int n, int r, const DiagramLimits& lim) {
    if (n > lim.max_n)
        throw resource_limit_error("tree counting limited to n <= " + std::to_string(lim.max_n),
                                   static_cast<std::size_t>(lim.max_n));
    SignVector eps = SignVector::constant(n);
    unsigned long long total = 0;
    for (const Diagram& d : enumerate_diagrams(eps, n, lim)) {
        int short_chords = 0;
        for (int i = 0; i <= n; ++i) {
            Strand probe = make_strand(i, (i + 1) % (n + 1));
            if (std::binary_search(d.strands.begin(), d.strands.end(), probe)) ++short_chords;
        }
        if (short_chords == r) total += count_linear_extensions(poset_of_diagram(d).order);
    }
    return total;
}

} // namespace strandlab
