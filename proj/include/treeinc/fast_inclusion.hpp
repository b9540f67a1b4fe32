#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "treeinc/dp_table.hpp"
#include "treeinc/run_result.hpp"
#include "treeinc/subset_family.hpp"

namespace treeinc {

// Per-cell family propagation over the strict descendants of the pinned text
// node. Dense scans every earlier vertex for the left-of union; Sparse routes
// the same unions through a linear-size aggregation DAG.
enum class IncVariant { Dense, Sparse };

RunResult alginc_run(const LabeledTree &pattern, const LabeledTree &text,
                     IncVariant variant, const RunLimits &limits = {});

struct AlgIncState {
	DPTable dp;
	Counters counters;
};
AlgIncState alginc_table(const LabeledTree &pattern, const LabeledTree &text,
                         IncVariant variant, const RunLimits &limits = {});

// Aggregation DAG over the strict descendants of `base`. A virtual node sits
// between each pair of adjacent siblings; it collects the families of the
// rightmost path of the left sibling's subtree and feeds every node whose
// nearest left neighbour that sibling is. Every real node has at most one
// in-edge and one out-edge, so the edge count is at most twice the real
// node count.
struct SparseLeftDag {
	struct VirtualNode {
		NodeId before;               // real node this virtual directly precedes
		std::vector<NodeId> sources; // rightmost path of the left sibling's subtree
	};

	NodeId base = 0;
	std::uint32_t realCount = 0;
	std::vector<VirtualNode> virtuals;
	// both indexed by x - base - 1 for real node x:
	std::vector<std::int32_t> virtualBefore; // virtual to fold just before x, or -1
	std::vector<std::int32_t> inVirtual;     // unique in-neighbour of x, or -1

	std::uint64_t edge_count() const;
};

SparseLeftDag build_virtual_dag(const LabeledTree &text, NodeId base);

// Families of one cell without the early exit, for inspection. Both variants
// report the same per-vertex families; Sparse computes them through the
// aggregation DAG.
struct CellInspection {
	ChildClassLayout layout;
	// (vertex, its family codes ascending), real vertices in preorder
	std::vector<std::pair<NodeId, std::vector<std::uint64_t>>> perVertex;
	std::vector<std::uint64_t> finalCodes; // union of all vertices, plus empty
	bool included = false;
};
CellInspection fast_cell_families(const LabeledTree &pattern,
                                  const LabeledTree &text, NodeId u, NodeId v,
                                  const DPTable &dp, const RunLimits &limits,
                                  Counters &counters,
                                  IncVariant variant = IncVariant::Dense);

// Embedding reconstruction from a completed table. Returns nothing when the
// rebuild blows a resource limit; reconstruction work is not charged to the
// caller's counters.
std::optional<InclusionMapping> extract_witness(const LabeledTree &pattern,
                                                const LabeledTree &text,
                                                const DPTable &dp,
                                                NodeId rootSpot,
                                                const RunLimits &limits);

} // namespace treeinc
