#pragma once

#include "treeinc/dp_table.hpp"
#include "treeinc/run_result.hpp"

namespace treeinc {

// Decision procedures specialised to low occurrence bounds: per cell, every
// pattern child has at most two (occ2) or three (occ3) candidate spots, and
// the cell reduces to 2-SAT respectively to a branch-and-propagate search.

// Requires unique pattern leaf labels and occurrence bound at most two.
RunResult occ2_run(const LabeledTree &pattern, const LabeledTree &text,
                   const RunLimits &limits = {});

// Requires occurrence bound at most three.
RunResult occ3_run(const LabeledTree &pattern, const LabeledTree &text,
                   const RunLimits &limits = {});

struct Occ2State {
	DPTable dp;
	Counters counters;
};
Occ2State occ2_table(const LabeledTree &pattern, const LabeledTree &text,
                     const RunLimits &limits = {});

struct Occ3State {
	DPTable dp;
	Counters counters;
	std::uint32_t maxK = 0, maxD2 = 0, maxD3 = 0;
	bool fibBoundRespected = true;
	bool enumBoundRespected = true;
};
Occ3State occ3_table(const LabeledTree &pattern, const LabeledTree &text,
                     const RunLimits &limits = {});

} // namespace treeinc
