#include "treeinc/enumerate.hpp"

#include "treeinc/errors.hpp"

namespace treeinc {

namespace {

struct Enumerator {
	std::span<const std::string> labels;
	std::vector<std::vector<std::string>> treeMemo, forestMemo;

	const std::vector<std::string> &trees(std::size_t n) {
		if (treeMemo.size() <= n) treeMemo.resize(n + 1);
		auto &out = treeMemo[n];
		if (!out.empty() || n == 0) return out;
		for (const std::string &lab : labels) {
			std::string head = label_token(lab);
			if (n == 1) {
				out.push_back(head);
				continue;
			}
			for (const std::string &body : forests(n - 1))
				out.push_back(head + "(" + body + ")");
		}
		return out;
	}

	// comma-joined serializations of every ordered forest with n nodes total
	const std::vector<std::string> &forests(std::size_t n) {
		if (forestMemo.size() <= n) forestMemo.resize(n + 1);
		auto &out = forestMemo[n];
		if (!out.empty()) return out;
		if (n == 0) return out;
		for (std::size_t first = 1; first <= n; ++first)
			for (const std::string &head : trees(first)) {
				if (first == n) {
					out.push_back(head);
					continue;
				}
				for (const std::string &rest : forests(n - first))
					out.push_back(head + "," + rest);
			}
		return out;
	}
};

} // namespace

std::vector<LabeledTree> enumerate_trees(std::size_t nodes,
                                         std::span<const std::string> labels) {
	if (nodes == 0)
		throw PreconditionError("trees have at least one node");
	if (labels.empty())
		throw PreconditionError("label alphabet must not be empty");
	Enumerator e{labels, {}, {}};
	std::vector<LabeledTree> out;
	for (const std::string &s : e.trees(nodes))
		out.push_back(parse_tree(s));
	return out;
}

} // namespace treeinc
