#pragma once

#include <cstdint>
#include <vector>

#include "treeinc/tree.hpp"

namespace treeinc {

// Bit-packed per-(pattern node, text node) state shared by the inclusion
// algorithms. All planes default to false.
class DPTable {
public:
	DPTable(const LabeledTree &pattern, const LabeledTree &text);

	bool inc(NodeId u, NodeId v) const { return get(incBits_, u, v); }
	bool minimal(NodeId u, NodeId v) const { return get(minBits_, u, v); }
	bool incBelow(NodeId u, NodeId v) const { return get(belowBits_, u, v); }

	void set_inc(NodeId u, NodeId v, bool val) { put(incBits_, u, v, val); }

	// Recomputes minimal/incBelow for pattern node u from its inc row,
	// walking the text bottom-up. minimal(u,v) holds when inc(u,v) does and
	// no strict descendant of v admits u.
	void update_minimality(NodeId u);

	// Text nodes v with minimal(root of pattern, v), ascending.
	std::vector<NodeId> minimal_roots() const;

	const LabeledTree &pattern() const { return *pattern_; }
	const LabeledTree &text() const { return *text_; }

private:
	using Word = std::uint64_t;

	bool get(const std::vector<Word> &bits, NodeId u, NodeId v) const {
		std::size_t i = idx(u, v);
		return (bits[i >> 6] >> (i & 63)) & 1u;
	}
	void put(std::vector<Word> &bits, NodeId u, NodeId v, bool val) {
		std::size_t i = idx(u, v);
		Word mask = Word(1) << (i & 63);
		if (val)
			bits[i >> 6] |= mask;
		else
			bits[i >> 6] &= ~mask;
	}
	std::size_t idx(NodeId u, NodeId v) const {
		return std::size_t(u) * text_->size() + v;
	}

	const LabeledTree *pattern_;
	const LabeledTree *text_;
	std::vector<Word> incBits_, minBits_, belowBits_;
};

} // namespace treeinc
