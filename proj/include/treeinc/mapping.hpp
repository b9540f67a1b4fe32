#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treeinc/tree.hpp"

namespace treeinc {

// Injective, label-preserving, ancestry-preserving (in both directions)
// embedding of pattern nodes into text nodes.
struct InclusionMapping {
	std::vector<std::pair<NodeId, NodeId>> pairs; // (pattern node, text node)
};

// Checks the four embedding invariants; a full witness must also cover every
// pattern node. On failure, *why (if given) names the violated condition.
bool validate_inclusion_mapping(const LabeledTree &pattern, const LabeledTree &text, const InclusionMapping &m,
                                bool requireFull, std::string *why = nullptr);

} // namespace treeinc
