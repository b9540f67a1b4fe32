#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treeinc/budget.hpp"
#include "treeinc/tree.hpp"

namespace treeinc {

// Children of a pattern node grouped by subtree isomorphism. A set (multiset,
// when classes repeat) of matched children is encoded as a mixed-radix code:
// one digit per class, digit i counting matched members of class i, with
// radix multiplicity(i)+1. When every class has multiplicity one the code is
// a plain bitmask and codes combine with bitwise or.
class ChildClassLayout {
public:
	ChildClassLayout() = default; // leaf layout: one code (0), already full

	ChildClassLayout(const LabeledTree &pattern, NodeId u,
	                 const std::vector<std::string> &isoCodes);

	std::size_t class_count() const { return classes_.size(); }
	std::uint32_t multiplicity(std::size_t cls) const { return classes_[cls].mult; }
	NodeId representative(std::size_t cls) const { return classes_[cls].members.front(); }
	const std::vector<NodeId> &members(std::size_t cls) const { return classes_[cls].members; }
	std::uint64_t stride(std::size_t cls) const { return classes_[cls].stride; }

	std::uint64_t code_count() const { return numCodes_; }
	std::uint64_t full_code() const { return fullCode_; }
	bool all_unit() const { return allUnit_; }
	// true when the code space does not fit the 64-bit encoding
	bool oversized() const { return oversized_; }

	std::uint32_t digit(std::uint64_t code, std::size_t cls) const {
		const Cls &c = classes_[cls];
		return std::uint32_t(code / c.stride % (c.mult + 1));
	}
	// one more member of cls, saturating at the class multiplicity
	std::uint64_t add_one(std::uint64_t code, std::size_t cls) const {
		return digit(code, cls) < classes_[cls].mult ? code + classes_[cls].stride
		                                             : code;
	}
	// inverse of a non-saturated add_one; digit must be positive
	std::uint64_t remove_one(std::uint64_t code, std::size_t cls) const {
		return code - classes_[cls].stride;
	}
	// per-class sum of a and b, saturating at the multiplicities
	std::uint64_t combine(std::uint64_t a, std::uint64_t b) const;

	// digits of code, one entry per class
	std::vector<std::uint32_t> decode(std::uint64_t code) const;

private:
	struct Cls {
		std::uint32_t mult = 0;
		std::uint64_t stride = 1;
		std::vector<NodeId> members;
	};

	std::vector<Cls> classes_;
	std::uint64_t numCodes_ = 1;
	std::uint64_t fullCode_ = 0;
	bool allUnit_ = true;
	bool oversized_ = false;
};

// A set of codes over a ChildClassLayout, stored as a bitset.
class SubsetFamily {
public:
	SubsetFamily() = default;
	explicit SubsetFamily(const ChildClassLayout &layout);

	bool valid() const { return layout_ != nullptr; }
	const ChildClassLayout &layout() const { return *layout_; }

	bool contains(std::uint64_t code) const {
		return (bits_[code >> 6] >> (code & 63)) & 1u;
	}
	bool insert(std::uint64_t code); // true when newly inserted
	std::uint64_t size() const { return size_; }
	bool empty() const { return size_ == 0; }

	// this |= other (same layout); cost is counted by the caller
	void union_with(const SubsetFamily &other);

	void clear();

	template <typename Fn> void for_each(Fn &&fn) const {
		for (std::size_t w = 0; w < bits_.size(); ++w) {
			std::uint64_t word = bits_[w];
			while (word) {
				unsigned bit = unsigned(__builtin_ctzll(word));
				word &= word - 1;
				fn(std::uint64_t(w) * 64 + bit);
			}
		}
	}

	std::vector<std::uint64_t> codes() const; // ascending

private:
	const ChildClassLayout *layout_ = nullptr;
	std::vector<std::uint64_t> bits_;
	std::uint64_t size_ = 0;
};

// dst |= {combine(a, b) : a in lhs, b in rhs}; records |lhs|*|rhs| set
// operations on the budget.
void fold_product(SubsetFamily &dst, const SubsetFamily &lhs,
                  const SubsetFamily &rhs, OpBudget &budget);

class DPTable;

// Classes whose representative child is minimally admitted at text node x.
// Members of a class have isomorphic subtrees, so the representative speaks
// for all of them.
std::vector<std::uint32_t> minimal_classes(const DPTable &dp,
                                           const ChildClassLayout &layout,
                                           NodeId x);

} // namespace treeinc
