#include "treeinc/two_sat.hpp"

#include <algorithm>

namespace treeinc {

void TwoSat::reset(int vars) {
	vars_ = vars;
	for (auto &edges : adj_)
		edges.clear();
	adj_.resize(std::size_t(2) * vars);
}

int TwoSat::add_var() {
	adj_.emplace_back();
	adj_.emplace_back();
	return vars_++;
}

void TwoSat::add_clause(int a, int b) {
	adj_[negate(a)].push_back(b);
	adj_[negate(b)].push_back(a);
}

bool TwoSat::solve() {
	int n = 2 * vars_;
	comp_.assign(n, -1);
	index_.assign(n, -1);
	low_.assign(n, 0);
	onStack_.assign(n, false);
	sccStack_.clear();
	int clock = 0, comps = 0;
	for (int start = 0; start < n; ++start) {
		if (index_[start] != -1)
			continue;
		callStack_.clear();
		callStack_.push_back({start, 0});
		while (!callStack_.empty()) {
			Frame &f = callStack_.back();
			int x = f.node;
			if (f.edge == 0) {
				index_[x] = low_[x] = clock++;
				sccStack_.push_back(x);
				onStack_[x] = true;
			}
			if (f.edge < int(adj_[x].size())) {
				int y = adj_[x][f.edge++];
				if (index_[y] == -1)
					callStack_.push_back({y, 0});
				else if (onStack_[y])
					low_[x] = std::min(low_[x], index_[y]);
			} else {
				if (low_[x] == index_[x]) {
					while (true) {
						int y = sccStack_.back();
						sccStack_.pop_back();
						onStack_[y] = false;
						comp_[y] = comps;
						if (y == x)
							break;
					}
					++comps;
				}
				callStack_.pop_back();
				if (!callStack_.empty()) {
					int parent = callStack_.back().node;
					low_[parent] = std::min(low_[parent], low_[x]);
				}
			}
		}
	}
	assignment_.assign(vars_, false);
	for (int v = 0; v < vars_; ++v) {
		if (comp_[2 * v] == comp_[2 * v + 1])
			return false;
		// components come out in reverse topological order; a literal is
		// true when its negation precedes it
		assignment_[v] = comp_[2 * v] < comp_[2 * v + 1];
	}
	return true;
}

} // namespace treeinc
