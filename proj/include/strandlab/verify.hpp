#pragma once

#include <optional>
#include <string>

#include "strandlab/sign_vector.hpp"

namespace strandlab {

struct Verdict {
    bool ok = true;
    unsigned long long checked = 0;
    std::string first_failure;

    void fail(std::string what) {
        if (ok) {
            ok = false;
            first_failure = std::move(what);
        }
    }
    void merge(const Verdict& o) {
        checked += o.checked;
        if (!o.ok) fail(o.first_failure);
    }
};

/// Independent tree enumeration through Prufer sequences; counts labeled
/// trees on `vertices` vertices with exactly `leaves` leaves.
unsigned long long prufer_tree_count(int vertices, int leaves);

// Each suite checks one classification exhaustively at the given n, either
// for one sign vector or (when absent) for all of them.

/// Geometric predicates against the Hom/Ext classification, every pair of
/// distinct intervals: crossing <=> no exceptional order, clockwise <=>
/// one-way exceptional, endpoint-disjoint noncrossing <=> two-way.
Verdict verify_maintech(int n, const std::optional<SignVector>& eps = std::nullopt);

/// Exceptional sequences <-> good labeled diagrams, every length k <= n:
/// counts agree and the label maps invert each other element by element.
Verdict verify_esbij(int n, const std::optional<SignVector>& eps = std::nullopt);

/// Exceptional collections <-> diagrams, every size k <= n, the two sides
/// enumerated independently.
Verdict verify_ecbij(int n, const std::optional<SignVector>& eps = std::nullopt);

/// c-matrices from exchange-graph search <-> admissible oriented diagrams.
Verdict verify_cmat(int n, const std::optional<SignVector>& eps = std::nullopt);

/// Oriented diagrams <-> trees: realization and flattening invert each other
/// and the three c-matrix readings agree up to row order.
Verdict verify_mct(int n, const std::optional<SignVector>& eps = std::nullopt);

/// Good labelings of every full diagram counted two ways: directly and as
/// linear extensions of the diagram poset.
Verdict verify_linext(int n, const std::optional<SignVector>& eps = std::nullopt);

/// count_trees_with_leaves against the Prufer oracle for every leaf count.
Verdict verify_trees(int n);

/// Labeled diagrams <-> noncrossing merge chains, every k <= n, both
/// directions, with every intermediate partition noncrossing.
Verdict verify_chains(int n);

/// Every all-red state in the exchange graph has c-matrix -I up to row
/// permutation and is frozen-isomorphic to the coframed quiver; exactly one
/// such state exists.
Verdict verify_reddening(int n, const std::optional<SignVector>& eps = std::nullopt);

} // namespace strandlab
