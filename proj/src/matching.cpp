#include "treeinc/matching.hpp"

namespace treeinc {

bool Matcher::augment(const std::vector<std::vector<int>> &adj, int l) {
	for (int r : adj[l]) {
		if (visited_[r])
			continue;
		visited_[r] = true;
		if (matchRight_[r] == -1 || augment(adj, matchRight_[r])) {
			matchLeft_[l] = r;
			matchRight_[r] = l;
			return true;
		}
	}
	return false;
}

int Matcher::solve(const std::vector<std::vector<int>> &adj, int rightCount,
                   Counters &counters) {
	matchLeft_.assign(adj.size(), -1);
	matchRight_.assign(rightCount, -1);
	int size = 0;
	for (std::size_t l = 0; l < adj.size(); ++l) {
		visited_.assign(rightCount, false);
		++counters.matchAugmentations;
		if (augment(adj, int(l)))
			++size;
	}
	return size;
}

} // namespace treeinc
