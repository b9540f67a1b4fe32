#include "treeinc/dp_table.hpp"

namespace treeinc {

DPTable::DPTable(const LabeledTree &pattern, const LabeledTree &text)
    : pattern_(&pattern), text_(&text) {
	std::size_t cells = std::size_t(pattern.size()) * text.size();
	std::size_t words = (cells + 63) / 64;
	incBits_.assign(words, 0);
	minBits_.assign(words, 0);
	belowBits_.assign(words, 0);
}

void DPTable::update_minimality(NodeId u) {
	for (NodeId v : text_->postorder()) {
		bool below = false;
		for (NodeId c : text_->children(v))
			if (incBelow(u, c)) {
				below = true;
				break;
			}
		bool here = inc(u, v);
		put(minBits_, u, v, here && !below);
		put(belowBits_, u, v, here || below);
	}
}

std::vector<NodeId> DPTable::minimal_roots() const {
	std::vector<NodeId> out;
	NodeId r = pattern_->root();
	for (NodeId v = 0; v < text_->size(); ++v)
		if (minimal(r, v))
			out.push_back(v);
	return out;
}

} // namespace treeinc
