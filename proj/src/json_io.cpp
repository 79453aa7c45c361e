#include "strandlab/json_io.hpp"

#include <algorithm>

namespace strandlab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw validation_error(what); }

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

} // namespace

SignVector epsilon_of_json(const json& j, int fallback_points) {
    if (j.contains("epsilon")) {
        const json& e = j["epsilon"];
        if (!e.is_string()) bad("\"epsilon\" must be a string over +-");
        return SignVector(e.get<std::string>());
    }
    if (fallback_points >= 2) return SignVector::constant(fallback_points - 1);
    bad("missing field \"epsilon\"");
}

json json_of_quiver(const ExchangeMatrix& b, const SignVector* eps) {
    json rows = json::array();
    for (int i = 0; i < b.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < b.m(); ++j) row.push_back(b.at(i, j));
        rows.push_back(std::move(row));
    }
    json out{{"n", b.n()}, {"matrix", std::move(rows)}};
    if (eps) out["epsilon"] = eps->str();
    return out;
}

ExchangeMatrix quiver_of_json(const json& j) {
    const int n = int_field(j, "n");
    const json& rows = field(j, "matrix");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        bad("\"matrix\" must hold n rows");
    if (n < 1) bad("quiver needs n >= 1");
    const int m = static_cast<int>(rows[0].size());
    ExchangeMatrix b(n, m);
    for (int i = 0; i < n; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != m)
            bad("matrix rows must all have the same length");
        for (int c = 0; c < m; ++c) {
            const json& v = row[static_cast<std::size_t>(c)];
            if (!v.is_number_integer()) bad("matrix entries must be integers");
            b.at(i, c) = v.get<int>();
        }
    }
    if (!b.mutable_block_skew()) bad("mutable block must be skew-symmetric");
    return b;
}

json json_of_cmatrix(const CMatrix& c) { return json{{"matrix", c}}; }

CMatrix cmatrix_of_json(const json& j) {
    const json& rows = j.is_array() ? j : field(j, "matrix");
    if (!rows.is_array() || rows.empty()) bad("c-matrix must be a nonempty array of rows");
    CMatrix c;
    for (const json& row : rows) {
        if (!row.is_array()) bad("c-matrix rows must be arrays");
        std::vector<int> r;
        for (const json& v : row) {
            if (!v.is_number_integer()) bad("c-matrix entries must be integers");
            r.push_back(v.get<int>());
        }
        if (!c.empty() && c.front().size() != r.size()) bad("ragged c-matrix");
        c.push_back(std::move(r));
    }
    return c;
}

json json_of_interval(IntervalRep r) { return json{{"i", r.i}, {"j", r.j}}; }

IntervalRep interval_of_json(const json& j) {
    return make_interval(int_field(j, "i"), int_field(j, "j"));
}

json json_of_sequence(const ExceptionalSequence& seq) {
    json reps = json::array();
    for (IntervalRep r : seq) reps.push_back(json_of_interval(r));
    return json{{"reps", std::move(reps)}};
}

ExceptionalSequence sequence_of_json(const json& j) {
    const json& reps = j.is_array() ? j : field(j, "reps");
    ExceptionalSequence seq;
    for (const json& r : reps) seq.push_back(interval_of_json(r));
    return seq;
}

namespace {

Strand strand_of_json(const json& j) {
    if (!j.is_array() || j.size() < 2) bad("strand must be [a,b]");
    return make_strand(j[0].get<int>(), j[1].get<int>());
}

} // namespace

json json_of_diagram(const Diagram& d) {
    json ss = json::array();
    for (const Strand& s : d.strands) ss.push_back(json::array({s.a, s.b}));
    return json{{"epsilon", d.eps.str()}, {"strands", std::move(ss)}};
}

Diagram diagram_of_json(const json& j) {
    SignVector eps = epsilon_of_json(j);
    std::vector<Strand> ss;
    for (const json& s : field(j, "strands")) ss.push_back(strand_of_json(s));
    return make_diagram(std::move(ss), eps);
}

json json_of_labeled(const LabeledDiagram& ld) {
    json ss = json::array();
    for (const LabeledStrand& s : ld.strands) ss.push_back(json::array({s.s.a, s.s.b, s.label}));
    return json{{"epsilon", ld.eps.str()}, {"strands", std::move(ss)}};
}

LabeledDiagram labeled_of_json(const json& j) {
    SignVector eps = epsilon_of_json(j);
    LabeledDiagram ld{{}, eps};
    for (const json& s : field(j, "strands")) {
        if (!s.is_array() || s.size() != 3) bad("labeled strand must be [a,b,label]");
        ld.strands.push_back(LabeledStrand{make_strand(s[0].get<int>(), s[1].get<int>()),
                                           s[2].get<int>()});
    }
    std::sort(ld.strands.begin(), ld.strands.end());
    return ld;
}

json json_of_oriented(const OrientedDiagram& od) {
    json ss = json::array();
    for (const OrientedStrand& s : od.strands)
        ss.push_back(json{{"from", s.from}, {"to", s.to}});
    return json{{"epsilon", od.eps.str()}, {"strands", std::move(ss)}};
}

OrientedDiagram oriented_of_json(const json& j) {
    SignVector eps = epsilon_of_json(j);
    OrientedDiagram od{{}, eps};
    for (const json& s : field(j, "strands")) {
        int from = int_field(s, "from");
        int to = int_field(s, "to");
        if (from == to) bad("oriented strand endpoints must differ");
        od.strands.push_back(OrientedStrand{from, to});
    }
    std::sort(od.strands.begin(), od.strands.end(),
              [](const OrientedStrand& l, const OrientedStrand& r) {
                  return l.underlying() < r.underlying();
              });
    return od;
}

json json_of_mct(const MixedCobinaryTree& t) {
    json hs = json::array();
    for (const Rational& h : t.heights) hs.push_back(h.str());
    json es = json::array();
    for (auto [a, b] : t.edges) es.push_back(json::array({a, b}));
    return json{{"epsilon", t.eps.str()}, {"heights", std::move(hs)}, {"edges", std::move(es)}};
}

MixedCobinaryTree mct_of_json(const json& j) {
    SignVector eps = epsilon_of_json(j);
    MixedCobinaryTree t{eps, {}, {}};
    for (const json& h : field(j, "heights")) {
        if (h.is_number_integer())
            t.heights.emplace_back(h.get<long long>());
        else if (h.is_string())
            t.heights.push_back(Rational::parse(h.get<std::string>()));
        else
            bad("heights must be integers or rational strings");
    }
    for (const json& e : field(j, "edges")) {
        if (!e.is_array() || e.size() != 2) bad("edge must be [i,j]");
        int a = e[0].get<int>(), b = e[1].get<int>();
        t.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

json json_of_poset(const DiagramPoset& p) {
    json els = json::array();
    for (const Strand& s : p.elements) els.push_back(json::array({s.a, s.b}));
    json cov = json::array();
    for (auto [lo, hi] : p.order.covers()) cov.push_back(json::array({lo, hi}));
    return json{{"elements", std::move(els)}, {"covers", std::move(cov)}};
}

json json_of_partition(const NoncrossingPartition& p) {
    json blocks = json::array();
    for (const auto& b : p.blocks) blocks.push_back(b);
    return blocks;
}

json json_of_chain(const PartitionChain& c) {
    json parts = json::array();
    for (const auto& p : c.partitions) parts.push_back(json_of_partition(p));
    return json{{"ground_size", c.ground_size}, {"partitions", std::move(parts)}};
}

PartitionChain chain_of_json(const json& j) {
    const json& parts = j.is_array() ? j : field(j, "partitions");
    int m = 0;
    if (j.is_object() && j.contains("ground_size")) m = int_field(j, "ground_size");
    PartitionChain chain{m, {}};
    for (const json& p : parts) {
        if (!p.is_array()) bad("partition must be an array of blocks");
        std::vector<std::vector<int>> blocks;
        for (const json& b : p) {
            if (!b.is_array()) bad("block must be an array of integers");
            std::vector<int> blk;
            for (const json& v : b) blk.push_back(v.get<int>());
            blocks.push_back(std::move(blk));
        }
        if (chain.ground_size == 0)
            for (const auto& b : blocks)
                for (int v : b) chain.ground_size = std::max(chain.ground_size, v);
        chain.partitions.push_back(
            normalize_partition(std::move(blocks), chain.ground_size));
    }
    return chain;
}

} // namespace strandlab
