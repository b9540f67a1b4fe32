#include "treeinc/km_baseline.hpp"

#include <utility>

#include "treeinc/fast_inclusion.hpp"

namespace treeinc {
namespace {

std::vector<SubsetFamily> sweep_families(const LabeledTree &text,
                                         const ChildClassLayout &layout,
                                         const DPTable &dp,
                                         const RunLimits &limits,
                                         OpBudget &budget) {
	if (layout.oversized() ||
	    (unsigned __int128)layout.code_count() * (text.size() + 2) >
	        limits.familyBitsBudget)
		throw ResourceLimitError("family storage budget exceeded");
	std::vector<SubsetFamily> fam(text.size());
	for (NodeId v : text.postorder()) {
		SubsetFamily acc(layout);
		acc.insert(0);
		for (NodeId vi : text.children(v)) {
			SubsetFamily atChild = fam[vi];
			for (std::uint32_t cls : minimal_classes(dp, layout, vi))
				atChild.insert(layout.add_one(0, cls));
			SubsetFamily next(layout);
			fold_product(next, acc, atChild, budget);
			acc = std::move(next);
		}
		fam[v] = std::move(acc);
	}
	return fam;
}

} // namespace

NodeFamilies km_node_families(const LabeledTree &pattern,
                              const LabeledTree &text, NodeId u,
                              const DPTable &dp, const RunLimits &limits,
                              Counters &counters) {
	OpBudget budget(counters, limits);
	NodeFamilies out;
	out.layout = ChildClassLayout(pattern, u, iso_codes(pattern));
	out.at = sweep_families(text, out.layout, dp, limits, budget);
	return out;
}

KmState km_table(const LabeledTree &pattern, const LabeledTree &text,
                 const RunLimits &limits) {
	KmState st{DPTable(pattern, text), Counters{}};
	OpBudget budget(st.counters, limits);
	std::vector<std::string> iso = iso_codes(pattern);
	for (NodeId u : pattern.postorder()) {
		if (pattern.is_leaf(u)) {
			for (NodeId v = 0; v < text.size(); ++v)
				st.dp.set_inc(u, v, pattern.label(u) == text.label(v));
		} else {
			ChildClassLayout layout(pattern, u, iso);
			std::vector<SubsetFamily> fam =
			    sweep_families(text, layout, st.dp, limits, budget);
			for (NodeId v = 0; v < text.size(); ++v)
				st.dp.set_inc(u, v,
				              pattern.label(u) == text.label(v) &&
				                  fam[v].contains(layout.full_code()));
			st.counters.dpCells += text.size();
		}
		st.dp.update_minimality(u);
	}
	return st;
}

RunResult km_run(const LabeledTree &pattern, const LabeledTree &text,
                 const RunLimits &limits) {
	KmState st = km_table(pattern, text, limits);
	RunResult res;
	res.algo = "km";
	res.counters = st.counters;
	res.minimalRoots = st.dp.minimal_roots();
	res.included = !res.minimalRoots.empty();
	if (res.included && limits.extractWitness)
		res.witness =
		    extract_witness(pattern, text, st.dp, res.minimalRoots.front(), limits);
	return res;
}

} // namespace treeinc
