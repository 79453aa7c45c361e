#include "strandlab/strands.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "strandlab/rational.hpp"

namespace strandlab {

Strand make_strand(int a, int b) {
    if (a == b || a < 0 || b < 0)
        throw invalid_input_error("strand endpoints must be distinct and nonnegative");
    return a < b ? Strand{a, b} : Strand{b, a};
}

bool crosses(Strand s1, Strand s2, const SignVector& eps) {
    if (s2 < s1) std::swap(s1, s2);
    if (s1 == s2) return false;
    if (s1.a == s2.a || s1.b == s2.b || s1.b == s2.a || s1.a == s2.b) return false;
    if (s1.b < s2.a) return false;                               // separated or touching
    if (s2.a < s1.b && s1.b < s2.b)                              // interlaced
        return eps.at(s2.a) == eps.at(s1.b);
    return eps.at(s2.a) != eps.at(s2.b);                         // s2 nested in s1
}

bool clockwise_from(Strand s1, Strand s2, const SignVector& eps) {
    if (s1 == s2) return false;
    const bool share_a = s1.a == s2.a;
    const bool share_b = s1.b == s2.b;
    if (s1.a == s2.b) // s1 rightward, s2 leftward of the shared point
        return eps.is_minus(s1.a);
    if (s1.b == s2.a) // s1 leftward, s2 rightward
        return eps.is_plus(s1.b);
    if (share_a && !share_b) {
        const int inner = std::min(s1.b, s2.b);
        return s1.b < s2.b ? eps.is_minus(inner) : eps.is_plus(inner);
    }
    if (share_b && !share_a) {
        const int inner = std::max(s1.a, s2.a);
        return s1.a < s2.a ? eps.is_minus(inner) : eps.is_plus(inner);
    }
    return false;
}

std::string DiagramViolation::describe() const {
    std::string what = kind == Kind::crossing ? "crossing strands" : "cycle closed by strands";
    return what + " c(" + std::to_string(s1.a) + "," + std::to_string(s1.b) + ") and c(" +
           std::to_string(s2.a) + "," + std::to_string(s2.b) + ")";
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[static_cast<std::size_t>(ra)] = rb;
        return true;
    }
};

} // namespace

std::optional<DiagramViolation> diagram_violation(const std::vector<Strand>& strands,
                                                  const SignVector& eps) {
    for (const Strand& s : strands)
        if (s.a < 0 || s.b > eps.n())
            throw invalid_input_error("strand endpoint outside [0..n]");
    for (std::size_t x = 0; x < strands.size(); ++x)
        for (std::size_t y = x + 1; y < strands.size(); ++y)
            if (crosses(strands[x], strands[y], eps))
                return DiagramViolation{DiagramViolation::Kind::crossing, strands[x], strands[y]};
    UnionFind uf(eps.points());
    std::optional<Strand> prev;
    for (const Strand& s : strands) {
        if (!uf.unite(s.a, s.b))
            return DiagramViolation{DiagramViolation::Kind::cycle, prev.value_or(s), s};
        prev = s;
    }
    return std::nullopt;
}

Diagram make_diagram(std::vector<Strand> strands, const SignVector& eps) {
    std::sort(strands.begin(), strands.end());
    auto dup = std::unique(strands.begin(), strands.end());
    if (dup != strands.end()) throw validation_error("duplicate strand in diagram");
    if (auto v = diagram_violation(strands, eps)) throw validation_error(v->describe());
    return Diagram{std::move(strands), eps};
}

namespace {

// strands of ld incident to point p
std::vector<LabeledStrand> strands_at(const LabeledDiagram& ld, int p) {
    std::vector<LabeledStrand> out;
    for (const LabeledStrand& s : ld.strands)
        if (s.s.a == p || s.s.b == p) out.push_back(s);
    return out;
}

} // namespace

bool is_good_labeling(const LabeledDiagram& ld) {
    if (auto v = diagram_violation(
            [&] {
                std::vector<Strand> ss;
                for (const auto& s : ld.strands) ss.push_back(s.s);
                return ss;
            }(),
            ld.eps))
        throw validation_error(v->describe());
    std::vector<int> labels;
    for (const auto& s : ld.strands) labels.push_back(s.label);
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != static_cast<int>(i) + 1)
            throw validation_error("labels must be exactly 1..k");

    for (int p = 0; p <= ld.eps.n(); ++p) {
        auto at = strands_at(ld, p);
        for (std::size_t x = 0; x < at.size(); ++x)
            for (std::size_t y = x + 1; y < at.size(); ++y) {
                bool xy = clockwise_from(at[x].s, at[y].s, ld.eps);
                bool yx = clockwise_from(at[y].s, at[x].s, ld.eps);
                if (xy == yx)
                    throw internal_invariant_error(
                        "clockwise comparator fails to order two strands at a shared point");
                if (xy && at[x].label < at[y].label) return false;
                if (yx && at[y].label < at[x].label) return false;
            }
        // the pairwise relation at a point must be transitive
        std::sort(at.begin(), at.end(), [&](const LabeledStrand& l, const LabeledStrand& r) {
            return clockwise_from(r.s, l.s, ld.eps);
        });
        for (std::size_t x = 0; x < at.size(); ++x)
            for (std::size_t y = x + 1; y < at.size(); ++y)
                if (!clockwise_from(at[y].s, at[x].s, ld.eps))
                    throw internal_invariant_error(
                        "clockwise comparator is not transitive at a point");
    }
    return true;
}

LabeledDiagram phi_tilde(const ExceptionalSequence& seq, const SignVector& eps) {
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (!is_exceptional_pair(seq[a], seq[b], eps))
                throw validation_error(
                    "not an exceptional sequence: pair at positions " + std::to_string(a + 1) +
                    "," + std::to_string(b + 1) + " fails");
    const int k = static_cast<int>(seq.size());
    LabeledDiagram ld{{}, eps};
    for (int l = 1; l <= k; ++l)
        ld.strands.push_back(LabeledStrand{phi(seq[static_cast<std::size_t>(l - 1)]), k + 1 - l});
    std::sort(ld.strands.begin(), ld.strands.end());
    return ld;
}

ExceptionalSequence phi_tilde_inverse(const LabeledDiagram& ld) {
    if (!is_good_labeling(ld)) throw validation_error("strand labeling is not good");
    std::vector<LabeledStrand> by_label = ld.strands;
    std::sort(by_label.begin(), by_label.end(),
              [](const LabeledStrand& l, const LabeledStrand& r) { return l.label > r.label; });
    ExceptionalSequence seq;
    for (const auto& s : by_label) seq.push_back(phi_inverse(s.s));
    if (!is_exceptional_sequence(seq, ld.eps))
        throw internal_invariant_error("good labeled diagram failed to order exceptionally");
    return seq;
}

void for_each_diagram(const SignVector& eps, int k, const DiagramLimits& lim,
                      const std::function<void(const Diagram&)>& sink) {
    const int n = eps.n();
    if (n > lim.max_n)
        throw resource_limit_error(
            "diagram enumeration limited to n <= " + std::to_string(lim.max_n),
            static_cast<std::size_t>(lim.max_n));
    if (k < 1 || k > n) throw invalid_input_error("diagram size k must lie in [1..n]");
    std::vector<Strand> all;
    for (IntervalRep r : all_intervals(n)) all.push_back(phi(r));
    std::vector<Strand> cur;
    auto grow = [&](auto&& self, std::size_t start, UnionFind uf) -> void {
        if (static_cast<int>(cur.size()) == k) {
            sink(Diagram{cur, eps});
            return;
        }
        for (std::size_t idx = start; idx < all.size(); ++idx) {
            const Strand& s = all[idx];
            bool ok = true;
            for (const Strand& t : cur)
                if (crosses(s, t, eps)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            UnionFind next = uf;
            if (!next.unite(s.a, s.b)) continue;
            cur.push_back(s);
            self(self, idx + 1, next);
            cur.pop_back();
        }
    };
    grow(grow, 0, UnionFind(eps.points()));
}

std::vector<Diagram> enumerate_diagrams(const SignVector& eps, int k, const DiagramLimits& lim) {
    std::vector<Diagram> out;
    for_each_diagram(eps, k, lim, [&](const Diagram& d) { out.push_back(d); });
    return out;
}

void for_each_labeled_diagram(const SignVector& eps, int k, const DiagramLimits& lim,
                              const std::function<void(const LabeledDiagram&)>& sink) {
    for_each_diagram(eps, k, lim, [&](const Diagram& d) {
        // assign labels 1..k in increasing order; a strand may take the next
        // label only if it is clockwise from every labeled strand it meets
        std::vector<int> label(d.strands.size(), 0);
        auto assign = [&](auto&& self, int next) -> void {
            if (next > k) {
                LabeledDiagram ld{{}, eps};
                for (std::size_t idx = 0; idx < d.strands.size(); ++idx)
                    ld.strands.push_back(LabeledStrand{d.strands[idx], label[idx]});
                sink(ld);
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
    });
}

std::vector<LabeledDiagram> enumerate_labeled_diagrams(const SignVector& eps, int k,
                                                       const DiagramLimits& lim) {
    std::vector<LabeledDiagram> out;
    for_each_labeled_diagram(eps, k, lim, [&](const LabeledDiagram& ld) { out.push_back(ld); });
    return out;
}

namespace {

// Heights from longest-path layering over the orientation constraints, with
// index offsets i/(n+2) making all coordinates distinct.
std::optional<std::vector<Rational>> layered_heights(const std::vector<OrientedStrand>& strands,
                                                     int n) {
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n) + 1);
    std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
    for (const OrientedStrand& s : strands) {
        succ[static_cast<std::size_t>(s.from)].push_back(s.to);
        ++indeg[static_cast<std::size_t>(s.to)];
    }
    std::deque<int> ready;
    for (int v = 0; v <= n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    std::vector<int> layer(static_cast<std::size_t>(n) + 1, 0);
    int seen = 0;
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop_front();
        ++seen;
        for (int w : succ[static_cast<std::size_t>(v)]) {
            layer[static_cast<std::size_t>(w)] =
                std::max(layer[static_cast<std::size_t>(w)], layer[static_cast<std::size_t>(v)] + 1);
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
        }
    }
    if (seen != n + 1) return std::nullopt; // directed cycle
    std::vector<Rational> y;
    y.reserve(static_cast<std::size_t>(n) + 1);
    for (int v = 0; v <= n; ++v)
        y.push_back(Rational(layer[static_cast<std::size_t>(v)]) + Rational(v, n + 2));
    return y;
}

bool local_sides_ok(const OrientedDiagram& od) {
    const int n = od.eps.n();
    for (int p = 0; p <= n; ++p) {
        int in_l = 0, in_r = 0, out_l = 0, out_r = 0;
        for (const OrientedStrand& s : od.strands) {
            if (s.to == p) (s.from < p ? in_l : in_r)++;
            if (s.from == p) (s.to < p ? out_l : out_r)++;
        }
        if (od.eps.is_plus(p)) {
            if (in_l + in_r > 1 || out_l > 1 || out_r > 1) return false;
        } else {
            if (out_l + out_r > 1 || in_l > 1 || in_r > 1) return false;
        }
    }
    return true;
}

// Validity of the straight-line embedding at heights y: point signs respected
// by every spanning segment, and segments meet only at shared endpoints.
bool embedding_ok(const std::vector<OrientedStrand>& strands, const std::vector<Rational>& y,
                  const SignVector& eps) {
    const int n = eps.n();
    for (const OrientedStrand& s : strands)
        if (!(y[static_cast<std::size_t>(s.from)] < y[static_cast<std::size_t>(s.to)]))
            return false;
    for (int p = 0; p <= n; ++p) {
        for (const OrientedStrand& s : strands) {
            Strand u = s.underlying();
            if (!(u.a < p && p < u.b)) continue;
            Rational z = line_height_at(Rational(u.a), y[static_cast<std::size_t>(u.a)],
                                        Rational(u.b), y[static_cast<std::size_t>(u.b)],
                                        Rational(p));
            if (eps.is_plus(p) && !(y[static_cast<std::size_t>(p)] >= z)) return false;
            if (eps.is_minus(p) && !(y[static_cast<std::size_t>(p)] <= z)) return false;
        }
    }
    for (std::size_t x = 0; x < strands.size(); ++x)
        for (std::size_t w = x + 1; w < strands.size(); ++w) {
            Strand s = strands[x].underlying(), t = strands[w].underlying();
            RPoint a{Rational(s.a), y[static_cast<std::size_t>(s.a)]};
            RPoint b{Rational(s.b), y[static_cast<std::size_t>(s.b)]};
            RPoint c{Rational(t.a), y[static_cast<std::size_t>(t.a)]};
            RPoint d{Rational(t.b), y[static_cast<std::size_t>(t.b)]};
            if (segments_meet_off_endpoints(a, b, c, d)) return false;
        }
    return true;
}

} // namespace

bool is_in_D_arrow(const OrientedDiagram& od) {
    const int n = od.eps.n();
    if (static_cast<int>(od.strands.size()) != n) return false;
    std::vector<Strand> und;
    for (const OrientedStrand& s : od.strands) und.push_back(s.underlying());
    std::sort(und.begin(), und.end());
    if (std::adjacent_find(und.begin(), und.end()) != und.end()) return false;
    if (diagram_violation(und, od.eps)) return false;
    if (!local_sides_ok(od)) return false;
    auto y = layered_heights(od.strands, n);
    if (!y) return false;
    // any point of the orientation cone decides membership
    return embedding_ok(od.strands, *y, od.eps);
}

OrientedDiagram oriented_of_cmatrix(const CMatrix& c, const SignVector& eps) {
    OrientedDiagram od{{}, eps};
    for (const auto& row : c) {
        if (static_cast<int>(row.size()) != eps.n())
            throw invalid_input_error("c-matrix row length must equal n");
        auto iv = interval_of_row(row);
        if (!iv) throw invalid_input_error("c-matrix row is not a signed interval vector");
        auto [r, sign] = *iv;
        od.strands.push_back(sign > 0 ? OrientedStrand{r.i, r.j} : OrientedStrand{r.j, r.i});
    }
    std::sort(od.strands.begin(), od.strands.end(),
              [](const OrientedStrand& l, const OrientedStrand& r) {
                  return l.underlying() < r.underlying();
              });
    return od;
}

CMatrix cmatrix_of_oriented(const OrientedDiagram& od) {
    std::vector<OrientedStrand> ss = od.strands;
    std::sort(ss.begin(), ss.end(), [](const OrientedStrand& l, const OrientedStrand& r) {
        return l.underlying() < r.underlying();
    });
    CMatrix c;
    for (const OrientedStrand& s : ss) {
        Strand u = s.underlying();
        std::vector<int> row(static_cast<std::size_t>(od.eps.n()), 0);
        const int sign = s.from < s.to ? 1 : -1;
        for (int v = u.a + 1; v <= u.b; ++v) row[static_cast<std::size_t>(v - 1)] = sign;
        c.push_back(std::move(row));
    }
    return c;
}

void for_each_oriented_diagram(const SignVector& eps, const DiagramLimits& lim,
                               const std::function<void(const OrientedDiagram&)>& sink) {
    const int n = eps.n();
    for_each_diagram(eps, n, lim, [&](const Diagram& d) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            OrientedDiagram od{{}, eps};
            for (int idx = 0; idx < n; ++idx) {
                Strand s = d.strands[static_cast<std::size_t>(idx)];
                od.strands.push_back(mask & (1u << idx) ? OrientedStrand{s.b, s.a}
                                                        : OrientedStrand{s.a, s.b});
            }
            if (is_in_D_arrow(od)) sink(od);
        }
    });
}

std::vector<OrientedDiagram> enumerate_oriented_diagrams(const SignVector& eps,
                                                         const DiagramLimits& lim) {
    std::vector<OrientedDiagram> out;
    for_each_oriented_diagram(eps, lim, [&](const OrientedDiagram& od) { out.push_back(od); });
    return out;
}

} // namespace strandlab
