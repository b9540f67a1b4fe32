#pragma once

#include <vector>

#include "treeinc/run_result.hpp"

namespace treeinc {

// Augmenting-path bipartite matcher, reusable across calls.
class Matcher {
public:
	// adj: per left vertex, right neighbour indices in [0, rightCount).
	// Returns the matching size. Each per-left-vertex augmentation search is
	// recorded in counters.matchAugmentations.
	int solve(const std::vector<std::vector<int>> &adj, int rightCount,
	          Counters &counters);

	// after solve: matched right per left / left per right, -1 if unmatched
	const std::vector<int> &left_match() const { return matchLeft_; }
	const std::vector<int> &right_match() const { return matchRight_; }

private:
	bool augment(const std::vector<std::vector<int>> &adj, int l);

	std::vector<int> matchLeft_, matchRight_;
	std::vector<bool> visited_;
};

} // namespace treeinc
