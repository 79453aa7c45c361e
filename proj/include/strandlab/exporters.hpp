#pragma once

#include <string>

#include "strandlab/mct.hpp"
#include "strandlab/posets.hpp"
#include "strandlab/quiver.hpp"
#include "strandlab/strands.hpp"

namespace strandlab {

// All exporters emit byte-deterministic output for a fixed input.

/// Marked points on a horizontal line labeled by their signs; strands drawn
/// as arcs that pass below + points and above - points, with lane heights
/// driven by nesting depth.
std::string svg_of_diagram(const Diagram& d);
std::string svg_of_labeled(const LabeledDiagram& ld);
std::string svg_of_oriented(const OrientedDiagram& od);
std::string svg_of_mct(const MixedCobinaryTree& t);

/// Hasse diagram, lower element -> upper element.
std::string dot_of_poset(const DiagramPoset& p);

/// Mutation graph on frozen-isomorphism classes, nodes labeled by c-matrices.
std::string dot_of_exchange_graph(const ExchangeGraph& g);

} // namespace strandlab
