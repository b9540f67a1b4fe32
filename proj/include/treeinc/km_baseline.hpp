#pragma once

#include "treeinc/dp_table.hpp"
#include "treeinc/run_result.hpp"
#include "treeinc/subset_family.hpp"

namespace treeinc {

// Reference quadratic-space algorithm: for every pattern node it sweeps the
// whole text bottom-up, folding the families of the text children together
// one child at a time.
RunResult km_run(const LabeledTree &pattern, const LabeledTree &text,
                 const RunLimits &limits = {});

struct KmState {
	DPTable dp;
	Counters counters;
};
KmState km_table(const LabeledTree &pattern, const LabeledTree &text,
                 const RunLimits &limits = {});

// Families of the sweep for one pattern node, indexed by text node, for
// inspection; the minimality rows of u's children must be final in dp.
struct NodeFamilies {
	ChildClassLayout layout;
	std::vector<SubsetFamily> at;
};
NodeFamilies km_node_families(const LabeledTree &pattern,
                              const LabeledTree &text, NodeId u,
                              const DPTable &dp, const RunLimits &limits,
                              Counters &counters);

} // namespace treeinc
