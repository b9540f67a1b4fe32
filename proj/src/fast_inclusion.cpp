#include "treeinc/fast_inclusion.hpp"

#include <memory>
#include <stdexcept>
#include <utility>

namespace treeinc {
namespace {

void extend_family(SubsetFamily &fam, const ChildClassLayout &layout,
                   const DPTable &dp, NodeId x, OpBudget &budget) {
	std::vector<std::uint32_t> mcls = minimal_classes(dp, layout, x);
	if (mcls.empty())
		return;
	budget.add_unions(std::uint64_t(mcls.size()) * fam.size());
	std::vector<std::uint64_t> snapshot = fam.codes();
	for (std::uint64_t code : snapshot)
		for (std::uint32_t cls : mcls)
			fam.insert(layout.add_one(code, cls));
}

void check_family_bits(const ChildClassLayout &layout, std::uint64_t liveFams,
                       const RunLimits &limits) {
	if (layout.oversized() ||
	    (unsigned __int128)layout.code_count() * liveFams >
	        limits.familyBitsBudget)
		throw ResourceLimitError("family storage budget exceeded");
}

// One cell pinned at text node v: propagate families over the strict
// descendants in preorder, each vertex unioning everything left of it.
// Returns true when the full code shows up. With `keep` the per-vertex
// families are retained and the early exit is disabled.
bool dense_cell(const LabeledTree &text, NodeId v,
                const ChildClassLayout &layout, const DPTable &dp,
                const RunLimits &limits, OpBudget &budget, bool earlyExit,
                std::vector<SubsetFamily> *keep) {
	check_family_bits(layout, std::uint64_t(text.subtree_size(v)) + 2, limits);
	NodeId first = v + 1, end = v + text.subtree_size(v);
	std::vector<SubsetFamily> fams(end - first);
	bool found = false;
	for (NodeId x = first; x < end; ++x) {
		SubsetFamily fam(layout);
		for (NodeId y = first; y < x; ++y)
			if (left_of(text, y, x)) {
				budget.add_unions(fams[y - first].size());
				fam.union_with(fams[y - first]);
			}
		fam.insert(0);
		extend_family(fam, layout, dp, x, budget);
		bool hit = fam.contains(layout.full_code());
		fams[x - first] = std::move(fam);
		if (hit) {
			found = true;
			if (earlyExit)
				break;
		}
	}
	if (keep)
		*keep = std::move(fams);
	return found;
}

bool sparse_cell(const LabeledTree &text, NodeId v,
                 const ChildClassLayout &layout, const DPTable &dp,
                 const SparseLeftDag &dag, const RunLimits &limits,
                 OpBudget &budget, bool earlyExit,
                 std::vector<SubsetFamily> *keep) {
	check_family_bits(layout, 2 * std::uint64_t(text.subtree_size(v)) + 4, limits);
	NodeId first = v + 1, end = v + text.subtree_size(v);
	std::vector<SubsetFamily> real(dag.realCount);
	std::vector<SubsetFamily> virt(dag.virtuals.size());
	bool found = false;
	for (NodeId x = first; x < end; ++x) {
		NodeId i = x - first;
		if (std::int32_t w = dag.virtualBefore[i]; w != -1) {
			SubsetFamily agg(layout);
			for (NodeId y : dag.virtuals[w].sources) {
				budget.add_unions(real[y - first].size());
				agg.union_with(real[y - first]);
			}
			virt[w] = std::move(agg);
		}
		SubsetFamily fam(layout);
		if (std::int32_t w = dag.inVirtual[i]; w != -1) {
			budget.add_unions(virt[w].size());
			fam.union_with(virt[w]);
		}
		fam.insert(0);
		extend_family(fam, layout, dp, x, budget);
		bool hit = fam.contains(layout.full_code());
		real[i] = std::move(fam);
		if (hit) {
			found = true;
			if (earlyExit)
				break;
		}
	}
	if (keep)
		*keep = std::move(real);
	return found;
}

} // namespace

std::uint64_t SparseLeftDag::edge_count() const {
	std::uint64_t edges = 0;
	for (const VirtualNode &vn : virtuals)
		edges += vn.sources.size();
	for (std::int32_t w : inVirtual)
		edges += w != -1;
	return edges;
}

SparseLeftDag build_virtual_dag(const LabeledTree &text, NodeId base) {
	SparseLeftDag dag;
	dag.base = base;
	NodeId size = text.subtree_size(base);
	NodeId first = base + 1, end = base + size;
	dag.realCount = size - 1;
	dag.virtualBefore.assign(dag.realCount, -1);
	dag.inVirtual.assign(dag.realCount, -1);
	std::vector<bool> hasPrev(dag.realCount, false);
	for (NodeId p = base; p < end; ++p) {
		auto ch = text.children(p);
		for (std::size_t i = 1; i < ch.size(); ++i) {
			hasPrev[ch[i] - first] = true;
			SparseLeftDag::VirtualNode vn;
			vn.before = ch[i];
			for (NodeId z = ch[i - 1];; z = text.children(z).back()) {
				vn.sources.push_back(z);
				if (text.is_leaf(z))
					break;
			}
			dag.virtualBefore[ch[i] - first] =
			    std::int32_t(dag.virtuals.size());
			dag.virtuals.push_back(std::move(vn));
		}
	}
	for (NodeId x = first; x < end; ++x) {
		NodeId b = x;
		while (b != base && !hasPrev[b - first])
			b = text.parent(b);
		if (b != base)
			dag.inVirtual[x - first] = dag.virtualBefore[b - first];
	}
	return dag;
}

AlgIncState alginc_table(const LabeledTree &pattern, const LabeledTree &text,
                         IncVariant variant, const RunLimits &limits) {
	AlgIncState st{DPTable(pattern, text), Counters{}};
	OpBudget budget(st.counters, limits);
	std::vector<std::string> iso = iso_codes(pattern);
	std::vector<ChildClassLayout> layouts(pattern.size());
	for (NodeId u = 0; u < pattern.size(); ++u)
		if (!pattern.is_leaf(u))
			layouts[u] = ChildClassLayout(pattern, u, iso);
	std::vector<std::unique_ptr<SparseLeftDag>> dags(
	    variant == IncVariant::Sparse ? text.size() : 0);
	for (NodeId u : pattern.postorder()) {
		if (pattern.is_leaf(u)) {
			for (NodeId v = 0; v < text.size(); ++v)
				st.dp.set_inc(u, v, pattern.label(u) == text.label(v));
		} else {
			for (NodeId v = 0; v < text.size(); ++v) {
				if (pattern.label(u) != text.label(v))
					continue;
				++st.counters.dpCells;
				bool inc;
				if (variant == IncVariant::Dense) {
					inc = dense_cell(text, v, layouts[u], st.dp, limits,
					                 budget, true, nullptr);
				} else {
					if (!dags[v])
						dags[v] = std::make_unique<SparseLeftDag>(
						    build_virtual_dag(text, v));
					inc = sparse_cell(text, v, layouts[u], st.dp, *dags[v],
					                  limits, budget, true, nullptr);
				}
				st.dp.set_inc(u, v, inc);
			}
		}
		st.dp.update_minimality(u);
	}
	return st;
}

RunResult alginc_run(const LabeledTree &pattern, const LabeledTree &text,
                     IncVariant variant, const RunLimits &limits) {
	AlgIncState st = alginc_table(pattern, text, variant, limits);
	RunResult res;
	res.algo = variant == IncVariant::Dense ? "alginc1" : "alginc2";
	res.counters = st.counters;
	res.minimalRoots = st.dp.minimal_roots();
	res.included = !res.minimalRoots.empty();
	if (res.included && limits.extractWitness)
		res.witness = extract_witness(pattern, text, st.dp,
		                              res.minimalRoots.front(), limits);
	return res;
}

CellInspection fast_cell_families(const LabeledTree &pattern,
                                  const LabeledTree &text, NodeId u, NodeId v,
                                  const DPTable &dp, const RunLimits &limits,
                                  Counters &counters, IncVariant variant) {
	CellInspection out;
	if (pattern.is_leaf(u)) {
		out.included = pattern.label(u) == text.label(v);
		return out;
	}
	OpBudget budget(counters, limits);
	out.layout = ChildClassLayout(pattern, u, iso_codes(pattern));
	std::vector<SubsetFamily> fams;
	bool found;
	if (variant == IncVariant::Dense) {
		found = dense_cell(text, v, out.layout, dp, limits, budget, false, &fams);
	} else {
		SparseLeftDag dag = build_virtual_dag(text, v);
		found = sparse_cell(text, v, out.layout, dp, dag, limits, budget,
		                    false, &fams);
	}
	out.included = found && pattern.label(u) == text.label(v);
	SubsetFamily fin(out.layout);
	fin.insert(0);
	NodeId first = v + 1;
	for (std::size_t i = 0; i < fams.size(); ++i) {
		out.perVertex.emplace_back(NodeId(first + i), fams[i].codes());
		fin.union_with(fams[i]);
	}
	out.finalCodes = fin.codes();
	return out;
}

namespace {

struct Extractor {
	const LabeledTree &pattern;
	const LabeledTree &text;
	const DPTable &dp;
	const RunLimits &limits;
	Counters scratch;
	OpBudget budget;
	std::vector<ChildClassLayout> layouts;
	std::vector<std::pair<NodeId, NodeId>> pairs;

	Extractor(const LabeledTree &p, const LabeledTree &t, const DPTable &d,
	          const RunLimits &lim)
	    : pattern(p), text(t), dp(d), limits(lim), budget(scratch, lim),
	      layouts(p.size()) {
		std::vector<std::string> iso = iso_codes(p);
		for (NodeId u = 0; u < p.size(); ++u)
			if (!p.is_leaf(u))
				layouts[u] = ChildClassLayout(p, u, iso);
	}

	// is `code` present at some vertex strictly left of cur?
	NodeId holder_left_of(const std::vector<SubsetFamily> &fams, NodeId first,
	                      NodeId cur, std::uint64_t code) const {
		for (NodeId y = first; y < cur; ++y)
			if (left_of(text, y, cur) && fams[y - first].contains(code))
				return y;
		return kNoNode;
	}

	void cell(NodeId u, NodeId v) {
		pairs.emplace_back(u, v);
		if (pattern.is_leaf(u))
			return;
		const ChildClassLayout &layout = layouts[u];
		std::vector<SubsetFamily> fams;
		dense_cell(text, v, layout, dp, limits, budget, false, &fams);
		NodeId first = v + 1, end = v + text.subtree_size(v);
		std::uint64_t code = layout.full_code();
		NodeId cur = kNoNode;
		for (NodeId x = first; x < end && cur == kNoNode; ++x)
			if (fams[x - first].contains(code))
				cur = x;
		if (cur == kNoNode)
			throw std::logic_error("witness walkback lost the trail");
		std::vector<std::vector<NodeId>> spots(layout.class_count());
		while (code != 0) {
			if (NodeId y = holder_left_of(fams, first, cur, code); y != kNoNode)
				cur = y; // the derivation was copied from the left
			bool peeled = false;
			for (std::uint32_t cls : minimal_classes(dp, layout, cur)) {
				if (layout.digit(code, cls) == 0)
					continue;
				std::uint64_t prev = layout.remove_one(code, cls);
				if (prev != 0 &&
				    holder_left_of(fams, first, cur, prev) == kNoNode)
					continue;
				spots[cls].push_back(cur);
				code = prev;
				peeled = true;
				break;
			}
			if (!peeled)
				throw std::logic_error("witness walkback lost the trail");
		}
		for (std::size_t cls = 0; cls < layout.class_count(); ++cls) {
			const std::vector<NodeId> &members = layout.members(cls);
			if (spots[cls].size() != members.size())
				throw std::logic_error("witness walkback class mismatch");
			for (std::size_t i = 0; i < members.size(); ++i)
				cell(members[i], spots[cls][i]);
		}
	}
};

} // namespace

std::optional<InclusionMapping> extract_witness(const LabeledTree &pattern,
                                                const LabeledTree &text,
                                                const DPTable &dp,
                                                NodeId rootSpot,
                                                const RunLimits &limits) {
	try {
		Extractor ex(pattern, text, dp, limits);
		ex.cell(pattern.root(), rootSpot);
		return InclusionMapping{std::move(ex.pairs)};
	} catch (const ResourceLimitError &) {
		return std::nullopt;
	}
}

} // namespace treeinc
