#pragma once

#include <functional>
#include <vector>

#include "strandlab/strands.hpp"

namespace strandlab {

/// Set partition of {1..m} into sorted blocks, blocks ordered by minimum.
struct NoncrossingPartition {
    std::vector<std::vector<int>> blocks;

    bool operator==(const NoncrossingPartition&) const = default;
};

NoncrossingPartition singletons(int m);
NoncrossingPartition normalize_partition(std::vector<std::vector<int>> blocks, int m);

/// No i < j < k < l with i,k in one block and j,l in a different one.
bool is_noncrossing(const NoncrossingPartition& p);

/// Saturated merge chain in the noncrossing partition lattice: starts at the
/// all-singleton partition and merges exactly two blocks at each step.
struct PartitionChain {
    int ground_size = 0;                         // partitions live on {1..ground_size}
    std::vector<NoncrossingPartition> partitions;

    bool operator==(const PartitionChain&) const = default;
};

/// Merges the blocks containing i+1 and j+1 per strand c(i,j), in label
/// order. Requires a constant sign vector and a good labeling.
PartitionChain chain_of_labeled_diagram(const LabeledDiagram& ld);

/// Reconstructs the labeled diagram from a merge chain. The merged pair of
/// blocks determines a chord through its two boundary elements: the element
/// of each block whose cyclic successor inside the union lies in the other
/// block.
LabeledDiagram labeled_diagram_of_chain(const PartitionChain& chain, const SignVector& eps);

/// All merge chains of k steps in the noncrossing lattice on {1..n+1},
/// depth-first in block-index order.
void for_each_chain(int n, int k, const std::function<void(const PartitionChain&)>& sink);
std::vector<PartitionChain> enumerate_chains(int n, int k);

} // namespace strandlab
