#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strandlab/rational.hpp"
#include "strandlab/strands.hpp"

namespace strandlab {

/// Plane tree on vertices (i, y_i), i = 0..n, with straight-line edges.
/// Edge pairs are stored with smaller abscissa first, the list sorted.
struct MixedCobinaryTree {
    SignVector eps;
    std::vector<Rational> heights;            // y_0..y_n
    std::vector<std::pair<int, int>> edges;   // n edges forming a spanning tree
};

struct MctViolation {
    std::string condition; // "horizontal-edge", "point-side", "vertex-pattern",
                           // "edge-crossing", "not-spanning-tree"
    std::string detail;
};

std::optional<MctViolation> mct_violation(const MixedCobinaryTree& t);

inline bool is_valid_mct(const MixedCobinaryTree& t) { return !mct_violation(t); }

/// Straight-line realization of an oriented diagram at the canonical point of
/// its orientation cone: longest-path layer per vertex plus the offset
/// i/(n+2). The result is asserted valid.
MixedCobinaryTree realize(const OrientedDiagram& od);

/// Each edge becomes a strand oriented from its lower endpoint to its higher.
OrientedDiagram mct_to_oriented(const MixedCobinaryTree& t);

/// One signed interval row per edge, sign of the slope, rows in sorted edge
/// order.
CMatrix cmatrix_of_mct(const MixedCobinaryTree& t);

/// Whether the straight-line tree with t's edges at heights y is a valid tree
/// isomorphic to t (same edges, same slope signs). Heights must be distinct.
bool region_contains(const MixedCobinaryTree& t, const std::vector<Rational>& y);

} // namespace strandlab
