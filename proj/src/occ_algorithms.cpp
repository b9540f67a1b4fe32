#include "treeinc/occ_algorithms.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

#include "treeinc/budget.hpp"
#include "treeinc/errors.hpp"
#include "treeinc/matching.hpp"
#include "treeinc/two_sat.hpp"

namespace treeinc {
namespace {

bool conflicting(const LabeledTree &text, NodeId a, NodeId b) {
	return a == b || text.is_ancestor(a, b) || text.is_ancestor(b, a);
}

// Candidate spots per child of u below v. Empty result: some child has no
// spot, so the cell is unsat without further work. The spots of one child
// are pairwise unrelated, hence their count is bounded by the occurrence
// bound the caller established.
std::optional<std::vector<std::vector<NodeId>>>
gather_candidates(const LabeledTree &pattern, const LabeledTree &text,
                  const DPTable &dp, NodeId u, NodeId v, std::size_t cap) {
	auto kids = pattern.children(u);
	std::vector<std::vector<NodeId>> cand(kids.size());
	NodeId end = v + text.subtree_size(v);
	for (std::size_t i = 0; i < kids.size(); ++i) {
		for (NodeId w = v + 1; w < end; ++w)
			if (dp.minimal(kids[i], w))
				cand[i].push_back(w);
		if (cand[i].empty())
			return std::nullopt;
		if (cand[i].size() > cap)
			throw std::logic_error("candidate count exceeds the occurrence bound");
	}
	return cand;
}

// One 2-SAT variable per (child, spot) pair: exactly one spot per child,
// conflicting spots of different children mutually excluded.
class Occ2Cells {
public:
	Occ2Cells(const LabeledTree &pattern, const LabeledTree &text)
	    : pattern_(pattern), text_(text) {}

	std::optional<std::vector<NodeId>> solve(const DPTable &dp, NodeId u,
	                                         NodeId v) {
		auto cand = gather_candidates(pattern_, text_, dp, u, v, 2);
		if (!cand)
			return std::nullopt;
		const auto &lists = *cand;
		std::vector<int> offset(lists.size());
		int vars = 0;
		for (std::size_t i = 0; i < lists.size(); ++i) {
			offset[i] = vars;
			vars += int(lists[i].size());
		}
		sat_.reset(vars);
		for (std::size_t i = 0; i < lists.size(); ++i) {
			if (lists[i].size() == 1) {
				sat_.add_unit(TwoSat::lit(offset[i], true));
			} else {
				int a = TwoSat::lit(offset[i], true);
				int b = TwoSat::lit(offset[i] + 1, true);
				sat_.add_clause(a, b);
				sat_.add_clause(TwoSat::negate(a), TwoSat::negate(b));
			}
		}
		for (std::size_t i = 0; i < lists.size(); ++i)
			for (std::size_t j = i + 1; j < lists.size(); ++j)
				for (std::size_t a = 0; a < lists[i].size(); ++a)
					for (std::size_t b = 0; b < lists[j].size(); ++b)
						if (conflicting(text_, lists[i][a], lists[j][b]))
							sat_.add_clause(
							    TwoSat::lit(offset[i] + int(a), false),
							    TwoSat::lit(offset[j] + int(b), false));
		if (!sat_.solve())
			return std::nullopt;
		std::vector<NodeId> spots(lists.size());
		for (std::size_t i = 0; i < lists.size(); ++i) {
			std::size_t pick = sat_.value(offset[i]) ? 0 : 1;
			spots[i] = lists[i][pick];
		}
		return spots;
	}

private:
	const LabeledTree &pattern_;
	const LabeledTree &text_;
	TwoSat sat_;
};

struct Occ3Stats {
	std::uint32_t maxK = 0, maxD2 = 0, maxD3 = 0;
	bool fibOK = true, enumOK = true;
};

constexpr double kBranchBase = 1.62;

// Branch-and-propagate search for one cell with at most three candidate
// spots per child.
class FindMapping {
public:
	FindMapping(const LabeledTree &text, Counters &counters, OpBudget &budget,
	            Occ3Stats &stats)
	    : text_(text), counters_(counters), budget_(budget), stats_(stats) {}

	std::optional<std::vector<NodeId>> run(std::vector<std::vector<NodeId>> cand) {
		budget_.check_deadline();
		State st;
		st.cand = std::move(cand);
		st.assigned.assign(st.cand.size(), kNoNode);
		st.unassigned = int(st.cand.size());
		solution_.reset();
		cellBranches_ = 0;
		std::uint32_t d2 = 0, d3 = 0;
		for (const auto &c : st.cand) {
			d2 += c.size() == 2;
			d3 += c.size() == 3;
		}
		stats_.maxD2 = std::max(stats_.maxD2, d2);
		stats_.maxD3 = std::max(stats_.maxD3, d3);
		if (!fixpoint(st))
			return std::nullopt;
		if (st.unassigned == 0)
			return st.assigned;
		// live occ-3 count once forced children are folded in; each branch
		// retires at least one such child, two on the commit side, so spawns
		// stay within the Fibonacci envelope over k
		std::uint32_t k = std::uint32_t(three_count(st));
		stats_.maxK = std::max(stats_.maxK, k);
		bool ok = search(st);
		if (double(cellBranches_) > 2.0 * std::pow(kBranchBase, double(k)))
			stats_.fibOK = false;
		if (!ok)
			return std::nullopt;
		return solution_;
	}

private:
	struct State {
		std::vector<std::vector<NodeId>> cand;
		std::vector<NodeId> assigned;
		int unassigned = 0;
	};

	void commit(State &st, std::size_t i, NodeId w) {
		st.assigned[i] = w;
		--st.unassigned;
		for (std::size_t j = 0; j < st.cand.size(); ++j) {
			if (j == i || st.assigned[j] != kNoNode)
				continue;
			std::erase_if(st.cand[j], [&](NodeId x) {
				return conflicting(text_, w, x);
			});
		}
	}

	// commit every forced child; false when some child runs dry
	bool fixpoint(State &st) {
		bool progress = true;
		while (progress) {
			progress = false;
			for (std::size_t i = 0; i < st.cand.size(); ++i) {
				if (st.assigned[i] != kNoNode)
					continue;
				if (st.cand[i].empty())
					return false;
				if (st.cand[i].size() == 1) {
					commit(st, i, st.cand[i].front());
					progress = true;
				}
			}
		}
		return true;
	}

	int three_count(const State &st) const {
		int k = 0;
		for (std::size_t i = 0; i < st.cand.size(); ++i)
			if (st.assigned[i] == kNoNode && st.cand[i].size() == 3)
				++k;
		return k;
	}

	bool descend(State &st) {
		if (!fixpoint(st))
			return false;
		if (st.unassigned == 0) {
			solution_ = st.assigned;
			return true;
		}
		return search(st);
	}

	// st is fixpoint-normalized with unassigned children left
	bool search(State &st) {
		// lowest conflicting ordered pair among 3-candidate children
		bool found = false;
		std::size_t i1 = 0, i2 = 0;
		NodeId w1 = 0, w2 = 0;
		for (std::size_t a = 0; a < st.cand.size(); ++a) {
			if (st.assigned[a] != kNoNode || st.cand[a].size() != 3)
				continue;
			for (std::size_t b = 0; b < st.cand.size(); ++b) {
				if (b == a || st.assigned[b] != kNoNode ||
				    st.cand[b].size() != 3)
					continue;
				for (NodeId x : st.cand[a])
					for (NodeId y : st.cand[b]) {
						if (!conflicting(text_, x, y))
							continue;
						if (!found || std::tuple(x, y, a, b) <
						                  std::tuple(w1, w2, i1, i2)) {
							found = true;
							w1 = x;
							w2 = y;
							i1 = a;
							i2 = b;
						}
					}
			}
		}
		if (!found)
			return resolve_compatible(st);
		int k = three_count(st);
		(void)k;
		State drop = st;
		std::erase(drop.cand[i1], w1);
		assert(three_count(drop) == k - 1);
		++counters_.branches;
		++cellBranches_;
		budget_.check_deadline();
		if (descend(drop))
			return true;
		State take = std::move(st);
		commit(take, i1, w1);
		assert(three_count(take) <= k - 2);
		++counters_.branches;
		++cellBranches_;
		budget_.check_deadline();
		return descend(take);
	}

	// 3-candidate children are pairwise compatible here; resolve by bounded
	// enumeration of the cheaper side
	bool resolve_compatible(State &st) {
		std::vector<std::size_t> twos, threes;
		for (std::size_t i = 0; i < st.cand.size(); ++i) {
			if (st.assigned[i] != kNoNode)
				continue;
			(st.cand[i].size() == 2 ? twos : threes).push_back(i);
		}
		std::uint32_t bound = std::uint32_t(
		    std::min(twos.size(), threes.size()));
		enumLeaves_ = 0;
		bool ok = threes.size() <= twos.size() ? route_three(st, threes, 0)
		                                       : route_two(st, twos, 0);
		if (bound < 64 && enumLeaves_ > (std::uint64_t(1) << bound))
			stats_.enumOK = false;
		return ok;
	}

	// either commit the lowest candidate of each 3-candidate child or
	// discard that candidate; leaves are plain 2-SAT instances
	bool route_three(State &st, const std::vector<std::size_t> &list,
	                 std::size_t pos) {
		while (pos < list.size() && (st.assigned[list[pos]] != kNoNode ||
		                             st.cand[list[pos]].size() != 3))
			++pos;
		if (pos == list.size()) {
			++enumLeaves_;
			budget_.check_deadline();
			return leaf_two_sat(st);
		}
		std::size_t i = list[pos];
		NodeId w = st.cand[i].front();
		State take = st;
		commit(take, i, w);
		if (route_three(take, list, pos + 1))
			return true;
		State drop = std::move(st);
		std::erase(drop.cand[i], w);
		return route_three(drop, list, pos + 1);
	}

	// commit each 2-candidate child either way; surviving 3-candidate
	// children are pairwise compatible, so a matching finishes the leaf
	bool route_two(State &st, const std::vector<std::size_t> &list,
	               std::size_t pos) {
		while (pos < list.size()) {
			std::size_t i = list[pos];
			if (st.assigned[i] != kNoNode) {
				++pos;
			} else if (st.cand[i].empty()) {
				return false;
			} else if (st.cand[i].size() == 1) {
				commit(st, i, st.cand[i].front());
				++pos;
			} else {
				break;
			}
		}
		if (pos == list.size()) {
			++enumLeaves_;
			budget_.check_deadline();
			return leaf_matching(st);
		}
		std::size_t i = list[pos];
		NodeId w0 = st.cand[i][0], w1 = st.cand[i][1];
		State first = st;
		commit(first, i, w0);
		if (route_two(first, list, pos + 1))
			return true;
		State second = std::move(st);
		commit(second, i, w1);
		return route_two(second, list, pos + 1);
	}

	bool leaf_two_sat(State &st) {
		std::vector<std::size_t> open;
		for (std::size_t i = 0; i < st.cand.size(); ++i) {
			if (st.assigned[i] != kNoNode)
				continue;
			if (st.cand[i].empty())
				return false;
			assert(st.cand[i].size() <= 2);
			open.push_back(i);
		}
		std::vector<int> offset(open.size());
		int vars = 0;
		for (std::size_t o = 0; o < open.size(); ++o) {
			offset[o] = vars;
			vars += int(st.cand[open[o]].size());
		}
		sat_.reset(vars);
		for (std::size_t o = 0; o < open.size(); ++o) {
			const auto &list = st.cand[open[o]];
			if (list.size() == 1) {
				sat_.add_unit(TwoSat::lit(offset[o], true));
			} else {
				int a = TwoSat::lit(offset[o], true);
				int b = TwoSat::lit(offset[o] + 1, true);
				sat_.add_clause(a, b);
				sat_.add_clause(TwoSat::negate(a), TwoSat::negate(b));
			}
		}
		for (std::size_t o = 0; o < open.size(); ++o)
			for (std::size_t p = o + 1; p < open.size(); ++p) {
				const auto &la = st.cand[open[o]];
				const auto &lb = st.cand[open[p]];
				for (std::size_t a = 0; a < la.size(); ++a)
					for (std::size_t b = 0; b < lb.size(); ++b)
						if (conflicting(text_, la[a], lb[b]))
							sat_.add_clause(
							    TwoSat::lit(offset[o] + int(a), false),
							    TwoSat::lit(offset[p] + int(b), false));
			}
		if (!sat_.solve())
			return false;
		for (std::size_t o = 0; o < open.size(); ++o) {
			std::size_t pick = sat_.value(offset[o]) ? 0 : 1;
			st.assigned[open[o]] = st.cand[open[o]][pick];
		}
		solution_ = st.assigned;
		return true;
	}

	bool leaf_matching(State &st) {
		std::vector<std::size_t> open;
		std::vector<NodeId> spots;
		for (std::size_t i = 0; i < st.cand.size(); ++i) {
			if (st.assigned[i] != kNoNode)
				continue;
			open.push_back(i);
			for (NodeId w : st.cand[i])
				spots.push_back(w);
		}
		if (open.empty()) {
			solution_ = st.assigned;
			return true;
		}
		std::sort(spots.begin(), spots.end());
		spots.erase(std::unique(spots.begin(), spots.end()), spots.end());
		std::vector<std::vector<int>> adj(open.size());
		for (std::size_t o = 0; o < open.size(); ++o)
			for (NodeId w : st.cand[open[o]])
				adj[o].push_back(int(
				    std::lower_bound(spots.begin(), spots.end(), w) -
				    spots.begin()));
		if (matcher_.solve(adj, int(spots.size()), counters_) !=
		    int(open.size()))
			return false;
		for (std::size_t o = 0; o < open.size(); ++o)
			st.assigned[open[o]] = spots[matcher_.left_match()[o]];
		solution_ = st.assigned;
		return true;
	}

	const LabeledTree &text_;
	Counters &counters_;
	OpBudget &budget_;
	Occ3Stats &stats_;
	TwoSat sat_;
	Matcher matcher_;
	std::uint64_t cellBranches_ = 0;
	std::uint64_t enumLeaves_ = 0;
	std::optional<std::vector<NodeId>> solution_;
};

void leaf_rows(DPTable &dp, const LabeledTree &pattern,
               const LabeledTree &text, NodeId u) {
	for (NodeId v = 0; v < text.size(); ++v)
		dp.set_inc(u, v, pattern.label(u) == text.label(v));
}

} // namespace

Occ2State occ2_table(const LabeledTree &pattern, const LabeledTree &text,
                     const RunLimits &limits) {
	if (!unique_leaf_labels(pattern))
		throw PreconditionError(
		    "pattern leaf labels are not unique; use alginc2");
	if (occ_bound(pattern, text) > 2)
		throw PreconditionError("occurrence bound exceeds 2; use alginc2");
	Occ2State st{DPTable(pattern, text), Counters{}};
	OpBudget budget(st.counters, limits);
	Occ2Cells cells(pattern, text);
	for (NodeId u : pattern.postorder()) {
		if (pattern.is_leaf(u)) {
			leaf_rows(st.dp, pattern, text, u);
		} else {
			for (NodeId v = 0; v < text.size(); ++v) {
				if (pattern.label(u) != text.label(v))
					continue;
				++st.counters.dpCells;
				budget.check_deadline();
				st.dp.set_inc(u, v, cells.solve(st.dp, u, v).has_value());
			}
		}
		st.dp.update_minimality(u);
	}
	return st;
}

Occ3State occ3_table(const LabeledTree &pattern, const LabeledTree &text,
                     const RunLimits &limits) {
	if (occ_bound(pattern, text) > 3)
		throw PreconditionError("occurrence bound exceeds 3; use alginc2");
	Occ3State st{DPTable(pattern, text), Counters{}};
	OpBudget budget(st.counters, limits);
	Occ3Stats stats;
	FindMapping solver(text, st.counters, budget, stats);
	for (NodeId u : pattern.postorder()) {
		if (pattern.is_leaf(u)) {
			leaf_rows(st.dp, pattern, text, u);
		} else {
			for (NodeId v = 0; v < text.size(); ++v) {
				if (pattern.label(u) != text.label(v))
					continue;
				++st.counters.dpCells;
				auto cand =
				    gather_candidates(pattern, text, st.dp, u, v, 3);
				bool inc = false;
				if (cand)
					inc = solver.run(std::move(*cand)).has_value();
				st.dp.set_inc(u, v, inc);
			}
		}
		st.dp.update_minimality(u);
	}
	st.maxK = stats.maxK;
	st.maxD2 = stats.maxD2;
	st.maxD3 = stats.maxD3;
	st.fibBoundRespected = stats.fibOK;
	st.enumBoundRespected = stats.enumOK;
	return st;
}

namespace {

template <typename CellSolver>
std::optional<InclusionMapping>
descend_witness(const LabeledTree &pattern, NodeId rootSpot,
                CellSolver &&solve) {
	std::vector<std::pair<NodeId, NodeId>> pairs;
	auto rec = [&](auto &&self, NodeId u, NodeId v) -> void {
		pairs.emplace_back(u, v);
		auto kids = pattern.children(u);
		if (kids.empty())
			return;
		std::vector<NodeId> spots = solve(u, v);
		for (std::size_t i = 0; i < kids.size(); ++i)
			self(self, kids[i], spots[i]);
	};
	try {
		rec(rec, pattern.root(), rootSpot);
	} catch (const ResourceLimitError &) {
		return std::nullopt;
	}
	return InclusionMapping{std::move(pairs)};
}

} // namespace

RunResult occ2_run(const LabeledTree &pattern, const LabeledTree &text,
                   const RunLimits &limits) {
	Occ2State st = occ2_table(pattern, text, limits);
	RunResult res;
	res.algo = "occ2";
	res.counters = st.counters;
	res.minimalRoots = st.dp.minimal_roots();
	res.included = !res.minimalRoots.empty();
	if (res.included && limits.extractWitness) {
		Occ2Cells cells(pattern, text);
		res.witness = descend_witness(
		    pattern, res.minimalRoots.front(),
		    [&](NodeId u, NodeId v) { return *cells.solve(st.dp, u, v); });
	}
	return res;
}

RunResult occ3_run(const LabeledTree &pattern, const LabeledTree &text,
                   const RunLimits &limits) {
	Occ3State st = occ3_table(pattern, text, limits);
	RunResult res;
	res.algo = "occ3";
	res.counters = st.counters;
	res.minimalRoots = st.dp.minimal_roots();
	res.included = !res.minimalRoots.empty();
	res.maxK = st.maxK;
	res.maxD2 = st.maxD2;
	res.maxD3 = st.maxD3;
	res.fibBoundRespected = st.fibBoundRespected;
	res.enumBoundRespected = st.enumBoundRespected;
	if (res.included && limits.extractWitness) {
		Counters scratch;
		OpBudget budget(scratch, limits);
		Occ3Stats stats;
		FindMapping solver(text, scratch, budget, stats);
		res.witness = descend_witness(
		    pattern, res.minimalRoots.front(),
		    [&](NodeId u, NodeId v) {
			    auto cand =
			        gather_candidates(pattern, text, st.dp, u, v, 3);
			    return *solver.run(std::move(*cand));
		    });
	}
	return res;
}

} // namespace treeinc
