#pragma once

#include <string>
#include <utility>
#include <vector>

#include "strandlab/strands.hpp"

namespace strandlab {

/// Finite strict partial order on elements 0..size-1.
struct Poset {
    int size = 0;
    std::vector<std::vector<bool>> less; // less[a][b]: a strictly below b

    bool below(int a, int b) const {
        return less[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    /// Transitive reduction, pairs (lower, upper).
    std::vector<std::pair<int, int>> covers() const;
};

/// Poset isomorphism test by backtracking; sizes stay small here.
bool poset_isomorphic(const Poset& p, const Poset& q);

struct DiagramPoset {
    std::vector<Strand> elements; // sorted strands of the diagram
    Poset order;
};

/// Order = transitive closure of the pairwise clockwise relation; covers are
/// its transitive reduction.
DiagramPoset poset_of_diagram(const Diagram& d);

struct CountLimits {
    int max_elements = 12;
};

/// Exact linear extension count by dynamic programming over order ideals.
unsigned long long count_linear_extensions(const Poset& p, const CountLimits& lim = {});

/// Rotation c(i,j) -> c(i-1,j-1) mod n+1. Only defined for constant sign
/// vectors, where the diagram lives on a disk.
Diagram rotate(const Diagram& d);

struct RealizeResult {
    bool feasible = false;
    std::string failed_condition;      // set when infeasible
    Diagram diagram{{}, SignVector("--")};
    std::vector<int> element_to_strand; // index into diagram.strands per element
};

/// Constructive realization of a poset as a full diagram over a constant sign
/// vector: feasible exactly when every element has at most two covers and
/// covers at most two elements and the Hasse diagram is a single tree.
RealizeResult realize_poset(const Poset& p, char sign = '-');

/// Number of labeled trees on n+1 vertices with r leaves, computed as the sum
/// of linear-extension counts over constant-sign full diagrams whose count of
/// cyclic short chords {i, i+1 mod n+1} equals r.
unsigned long long count_trees_with_leaves(int n, int r, const DiagramLimits& lim = {});

} // namespace strandlab
