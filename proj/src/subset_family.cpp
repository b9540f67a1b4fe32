#include "treeinc/subset_family.hpp"

#include <algorithm>
#include <map>

#include "treeinc/dp_table.hpp"

namespace treeinc {

ChildClassLayout::ChildClassLayout(const LabeledTree &pattern, NodeId u,
                                   const std::vector<std::string> &isoCodes) {
	std::map<std::string_view, std::size_t> byCode;
	for (NodeId c : pattern.children(u)) {
		auto [it, fresh] = byCode.emplace(isoCodes[c], classes_.size());
		if (fresh)
			classes_.push_back({});
		Cls &cls = classes_[it->second];
		cls.mult += 1;
		cls.members.push_back(c);
	}
	for (Cls &cls : classes_) {
		cls.stride = numCodes_;
		if (cls.mult > 1)
			allUnit_ = false;
		unsigned __int128 next =
		    (unsigned __int128)numCodes_ * (cls.mult + 1);
		if (next > (unsigned __int128)1 << 62) {
			oversized_ = true;
			numCodes_ = std::uint64_t(1) << 62;
			break;
		}
		numCodes_ = std::uint64_t(next);
		fullCode_ += cls.stride * cls.mult;
	}
}

std::uint64_t ChildClassLayout::combine(std::uint64_t a, std::uint64_t b) const {
	if (allUnit_)
		return a | b;
	std::uint64_t out = 0;
	for (const Cls &c : classes_) {
		std::uint32_t da = std::uint32_t(a / c.stride % (c.mult + 1));
		std::uint32_t db = std::uint32_t(b / c.stride % (c.mult + 1));
		out += c.stride * std::min(da + db, c.mult);
	}
	return out;
}

std::vector<std::uint32_t> ChildClassLayout::decode(std::uint64_t code) const {
	std::vector<std::uint32_t> digits(classes_.size());
	for (std::size_t i = 0; i < classes_.size(); ++i)
		digits[i] = digit(code, i);
	return digits;
}

SubsetFamily::SubsetFamily(const ChildClassLayout &layout)
    : layout_(&layout), bits_((layout.code_count() + 63) / 64, 0) {}

bool SubsetFamily::insert(std::uint64_t code) {
	std::uint64_t &word = bits_[code >> 6];
	std::uint64_t mask = std::uint64_t(1) << (code & 63);
	if (word & mask)
		return false;
	word |= mask;
	++size_;
	return true;
}

void SubsetFamily::union_with(const SubsetFamily &other) {
	std::uint64_t n = 0;
	for (std::size_t w = 0; w < bits_.size(); ++w) {
		bits_[w] |= other.bits_[w];
		n += std::uint64_t(__builtin_popcountll(bits_[w]));
	}
	size_ = n;
}

void SubsetFamily::clear() {
	std::fill(bits_.begin(), bits_.end(), 0);
	size_ = 0;
}

std::vector<std::uint64_t> SubsetFamily::codes() const {
	std::vector<std::uint64_t> out;
	out.reserve(size_);
	for_each([&](std::uint64_t code) { out.push_back(code); });
	return out;
}

std::vector<std::uint32_t> minimal_classes(const DPTable &dp,
                                           const ChildClassLayout &layout,
                                           NodeId x) {
	std::vector<std::uint32_t> out;
	for (std::size_t cls = 0; cls < layout.class_count(); ++cls)
		if (dp.minimal(layout.representative(cls), x))
			out.push_back(std::uint32_t(cls));
	return out;
}

void fold_product(SubsetFamily &dst, const SubsetFamily &lhs,
                  const SubsetFamily &rhs, OpBudget &budget) {
	const ChildClassLayout &layout = lhs.layout();
	if (layout.all_unit()) {
		lhs.for_each([&](std::uint64_t a) {
			budget.add_unions(rhs.size());
			rhs.for_each([&](std::uint64_t b) { dst.insert(a | b); });
		});
		return;
	}
	lhs.for_each([&](std::uint64_t a) {
		budget.add_unions(rhs.size());
		rhs.for_each(
		    [&](std::uint64_t b) { dst.insert(layout.combine(a, b)); });
	});
}

} // namespace treeinc
