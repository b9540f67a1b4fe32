#pragma once

#include <array>
#include <vector>

#include "treeinc/mapping.hpp"
#include "treeinc/tree.hpp"

namespace treeinc {

// Exhaustive-search ground truth, independent of the production algorithms.
// Sizes are hard-capped (pattern <= 12, text <= 20 nodes); larger inputs
// throw PreconditionError.

// Does the pattern embed anywhere in the text?
bool oracle_included(const LabeledTree &pattern, const LabeledTree &text,
                     InclusionMapping *witness = nullptr);

// Does the pattern embed with its root mapped to text node v?
bool oracle_pinned(const LabeledTree &pattern, const LabeledTree &text,
                   NodeId v, InclusionMapping *witness = nullptr);

// Text nodes v admitting the pattern root with no strict descendant of v
// also admitting it; ascending.
std::vector<NodeId> oracle_minimal_roots(const LabeledTree &pattern,
                                         const LabeledTree &text);

// Exact cover by 3-sets over {1..n}: can some subset of the given triples
// partition the universe? Triples hold 1-based element indices. At most 20
// triples (PreconditionError beyond).
bool x3c_bruteforce(int n, const std::vector<std::array<int, 3>> &triples);

} // namespace treeinc
