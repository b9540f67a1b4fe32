#pragma once

#include <span>
#include <string>
#include <vector>

#include "treeinc/tree.hpp"

namespace treeinc {

// Every rooted tree with exactly `nodes` nodes, ordered children, and labels
// drawn from `labels`. Distinct child orderings come out as distinct trees;
// dedupe with iso_codes when only the unordered shape matters.
std::vector<LabeledTree> enumerate_trees(std::size_t nodes,
                                         std::span<const std::string> labels);

} // namespace treeinc
