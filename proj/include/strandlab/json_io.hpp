#pragma once

#include <string>

#include "json.hpp"

#include "strandlab/mct.hpp"
#include "strandlab/noncrossing.hpp"
#include "strandlab/posets.hpp"
#include "strandlab/quiver.hpp"
#include "strandlab/rep_theory.hpp"
#include "strandlab/strands.hpp"

namespace strandlab {

using json = nlohmann::json;

// Serialization is deterministic: object keys are emitted by nlohmann::json
// in sorted order and all aggregates are stored pre-sorted.

json json_of_quiver(const ExchangeMatrix& b, const SignVector* eps = nullptr);
ExchangeMatrix quiver_of_json(const json& j);

json json_of_cmatrix(const CMatrix& c);
CMatrix cmatrix_of_json(const json& j);

json json_of_interval(IntervalRep r);
IntervalRep interval_of_json(const json& j);

json json_of_sequence(const ExceptionalSequence& seq);
ExceptionalSequence sequence_of_json(const json& j);

json json_of_diagram(const Diagram& d);
Diagram diagram_of_json(const json& j);

json json_of_labeled(const LabeledDiagram& ld);
LabeledDiagram labeled_of_json(const json& j);

json json_of_oriented(const OrientedDiagram& od);
OrientedDiagram oriented_of_json(const json& j);

json json_of_mct(const MixedCobinaryTree& t);
MixedCobinaryTree mct_of_json(const json& j);

json json_of_poset(const DiagramPoset& p);

json json_of_partition(const NoncrossingPartition& p);
json json_of_chain(const PartitionChain& c);
PartitionChain chain_of_json(const json& j);

/// Reads a sign vector from j["epsilon"], or falls back to all-minus of the
/// given point count when absent and points > 0.
SignVector epsilon_of_json(const json& j, int fallback_points = 0);

} // namespace strandlab
