#include "strandlab/noncrossing.hpp"

#include <algorithm>
#include <set>

namespace strandlab {

NoncrossingPartition singletons(int m) {
    NoncrossingPartition p;
    for (int v = 1; v <= m; ++v) p.blocks.push_back({v});
    return p;
}

NoncrossingPartition normalize_partition(std::vector<std::vector<int>> blocks, int m) {
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    for (auto& b : blocks) {
        if (b.empty()) throw validation_error("partition block is empty");
        std::sort(b.begin(), b.end());
        for (int v : b) {
            if (v < 1 || v > m) throw validation_error("partition element outside ground set");
            if (seen[static_cast<std::size_t>(v)]) throw validation_error("repeated element");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (int v = 1; v <= m; ++v)
        if (!seen[static_cast<std::size_t>(v)]) throw validation_error("partition misses an element");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return NoncrossingPartition{std::move(blocks)};
}

bool is_noncrossing(const NoncrossingPartition& p) {
    int m = 0;
    for (const auto& b : p.blocks) m = std::max(m, b.back());
    std::vector<int> block_of(static_cast<std::size_t>(m) + 1, -1);
    for (std::size_t bi = 0; bi < p.blocks.size(); ++bi)
        for (int v : p.blocks[bi]) block_of[static_cast<std::size_t>(v)] = static_cast<int>(bi);
    for (std::size_t bi = 0; bi < p.blocks.size(); ++bi) {
        const auto& b = p.blocks[bi];
        for (std::size_t s = 0; s + 1 < b.size(); ++s)
            for (int x = b[s] + 1; x < b[s + 1]; ++x) {
                int other = block_of[static_cast<std::size_t>(x)];
                if (other == static_cast<int>(bi)) continue;
                // the whole block of x must sit inside the gap (b[s], b[s+1])
                for (int w : p.blocks[static_cast<std::size_t>(other)])
                    if (w < b[s] || w > b[s + 1]) return false;
            }
    }
    return true;
}

PartitionChain chain_of_labeled_diagram(const LabeledDiagram& ld) {
    if (!ld.eps.is_constant())
        throw unsupported_orientation_error(
            "partition chains are only defined over constant sign vectors");
    if (!is_good_labeling(ld)) throw validation_error("strand labeling is not good");
    const int m = ld.eps.points();
    PartitionChain chain{m, {singletons(m)}};
    std::vector<LabeledStrand> by_label = ld.strands;
    std::sort(by_label.begin(), by_label.end(),
              [](const LabeledStrand& l, const LabeledStrand& r) { return l.label < r.label; });
    std::vector<std::vector<int>> blocks = chain.partitions.back().blocks;
    for (const LabeledStrand& s : by_label) {
        const int u = s.s.a + 1, v = s.s.b + 1;
        auto holds = [&](const std::vector<int>& b, int x) {
            return std::binary_search(b.begin(), b.end(), x);
        };
        std::size_t bu = blocks.size(), bv = blocks.size();
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            if (holds(blocks[bi], u)) bu = bi;
            if (holds(blocks[bi], v)) bv = bi;
        }
        if (bu == bv)
            throw internal_invariant_error("strand endpoints already joined; diagram has a cycle");
        std::vector<int> merged = blocks[bu];
        merged.insert(merged.end(), blocks[bv].begin(), blocks[bv].end());
        std::sort(merged.begin(), merged.end());
        std::vector<std::vector<int>> next;
        for (std::size_t bi = 0; bi < blocks.size(); ++bi)
            if (bi != bu && bi != bv) next.push_back(blocks[bi]);
        next.push_back(std::move(merged));
        NoncrossingPartition np = normalize_partition(next, m);
        if (!is_noncrossing(np))
            throw internal_invariant_error("merge produced a crossing partition");
        blocks = np.blocks;
        chain.partitions.push_back(std::move(np));
    }
    return chain;
}

LabeledDiagram labeled_diagram_of_chain(const PartitionChain& chain, const SignVector& eps) {
    if (!eps.is_constant())
        throw unsupported_orientation_error(
            "partition chains are only defined over constant sign vectors");
    const int m = chain.ground_size;
    if (m != eps.points())
        throw validation_error("chain ground set does not match the sign vector");
    std::vector<NoncrossingPartition> parts;
    for (const auto& p : chain.partitions) parts.push_back(normalize_partition(p.blocks, m));
    if (parts.empty() || !(parts.front() == singletons(m)))
        throw validation_error("chain must start at the all-singleton partition");
    LabeledDiagram ld{{}, eps};
    for (std::size_t step = 1; step < parts.size(); ++step) {
        const auto& prev = parts[step - 1].blocks;
        const auto& cur = parts[step];
        if (!is_noncrossing(parts[step - 1]) || !is_noncrossing(cur))
            throw validation_error("chain contains a crossing partition at step " +
                                   std::to_string(step));
        std::set<std::vector<int>> cur_set(cur.blocks.begin(), cur.blocks.end());
        std::vector<std::vector<int>> gone;
        for (const auto& b : prev)
            if (!cur_set.count(b)) gone.push_back(b);
        if (gone.size() != 2 || cur.blocks.size() + 1 != prev.size())
            throw validation_error("step " + std::to_string(step) +
                                   " does not merge exactly two blocks");
        std::vector<int> merged = gone[0];
        merged.insert(merged.end(), gone[1].begin(), gone[1].end());
        std::sort(merged.begin(), merged.end());
        if (!cur_set.count(merged))
            throw validation_error("step " + std::to_string(step) +
                                   " does not merge exactly two blocks");
        // boundary elements: cyclic successor inside the union switches block
        auto boundary = [&](const std::vector<int>& mine, const std::vector<int>& theirs) {
            for (int x : mine) {
                auto it = std::upper_bound(merged.begin(), merged.end(), x);
                int succ = it == merged.end() ? merged.front() : *it;
                if (std::binary_search(theirs.begin(), theirs.end(), succ)) return x;
            }
            throw validation_error("blocks at step " + std::to_string(step) +
                                   " have no adjacent boundary");
        };
        int s = boundary(gone[0], gone[1]);
        int t = boundary(gone[1], gone[0]);
        ld.strands.push_back(LabeledStrand{make_strand(s - 1, t - 1), static_cast<int>(step)});
    }
    std::sort(ld.strands.begin(), ld.strands.end());
    if (!is_good_labeling(ld))
        throw validation_error("chain does not reconstruct a good labeling");
    return ld;
}

void for_each_chain(int n, int k, const std::function<void(const PartitionChain&)>& sink) {
    const int m = n + 1;
    if (k < 1 || k > n) throw invalid_input_error("chain length k must lie in [1..n]");
    PartitionChain cur{m, {singletons(m)}};
    auto grow = [&](auto&& self) -> void {
        if (static_cast<int>(cur.partitions.size()) == k + 1) {
            sink(cur);
            return;
        }
        const auto blocks = cur.partitions.back().blocks;
        for (std::size_t a = 0; a < blocks.size(); ++a)
            for (std::size_t b = a + 1; b < blocks.size(); ++b) {
                std::vector<std::vector<int>> next;
                for (std::size_t c = 0; c < blocks.size(); ++c)
                    if (c != a && c != b) next.push_back(blocks[c]);
                std::vector<int> merged = blocks[a];
                merged.insert(merged.end(), blocks[b].begin(), blocks[b].end());
                std::sort(merged.begin(), merged.end());
                next.push_back(std::move(merged));
                NoncrossingPartition np = normalize_partition(next, m);
                if (!is_noncrossing(np)) continue;
                cur.partitions.push_back(std::move(np));
                self(self);
                cur.partitions.pop_back();
            }
    };
    grow(grow);
}

std::vector<PartitionChain> enumerate_chains(int n, int k) {
    std::vector<PartitionChain> out;
    for_each_chain(n, k, [&](const PartitionChain& c) { out.push_back(c); });
    return out;
}

} // namespace strandlab
