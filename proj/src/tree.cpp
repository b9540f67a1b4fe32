#include "treeinc/tree.hpp"

#include <algorithm>
#include <cctype>
#include <stack>

#include "treeinc/errors.hpp"

namespace treeinc {

namespace {

bool plain_label_char(char c) {
	return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

constexpr std::size_t kMaxNesting = 20000;

} // namespace

void LabeledTree::finalize() {
	const std::size_t n = nodes_.size();
	euler_.assign(n, {});
	subtreeSize_.assign(n, 1);
	depth_.assign(n, 0);
	postorder_.clear();
	postorder_.reserve(n);

	// nodes are in preorder, so parents precede children
	std::uint32_t clock = 0;
	std::vector<std::pair<NodeId, std::size_t>> st; // (node, next child index)
	st.emplace_back(0, 0);
	euler_[0].pre = clock++;
	while (!st.empty()) {
		auto &[v, next] = st.back();
		if (next < nodes_[v].children.size()) {
			NodeId c = nodes_[v].children[next++];
			depth_[c] = depth_[v] + 1;
			euler_[c].pre = clock++;
			st.emplace_back(c, 0);
		} else {
			euler_[v].post = clock++;
			postorder_.push_back(v);
			st.pop_back();
			if (!st.empty()) subtreeSize_[st.back().first] += subtreeSize_[v];
		}
	}
}

NodeId TreeBuilder::add_root(std::string label) {
	if (!labels_.empty()) throw PreconditionError("tree already has a root");
	labels_.push_back(std::move(label));
	parents_.push_back(kNoNode);
	children_.emplace_back();
	return 0;
}

NodeId TreeBuilder::add_child(NodeId parent, std::string label) {
	if (parent >= labels_.size()) throw std::out_of_range("bad parent id");
	NodeId id = static_cast<NodeId>(labels_.size());
	labels_.push_back(std::move(label));
	parents_.push_back(parent);
	children_.emplace_back();
	children_[parent].push_back(id);
	return id;
}

TreeBuilder::Built TreeBuilder::build() const {
	if (labels_.empty()) throw PreconditionError("empty tree");
	std::vector<NodeId> remap(labels_.size(), kNoNode);
	std::vector<NodeId> order;
	order.reserve(labels_.size());

	std::vector<std::pair<NodeId, std::size_t>> st;
	st.emplace_back(0, 0);
	remap[0] = 0;
	order.push_back(0);
	while (!st.empty()) {
		auto &[v, next] = st.back();
		if (next < children_[v].size()) {
			NodeId c = children_[v][next++];
			remap[c] = static_cast<NodeId>(order.size());
			order.push_back(c);
			st.emplace_back(c, 0);
		} else {
			st.pop_back();
		}
	}
	if (order.size() != labels_.size()) throw PreconditionError("disconnected builder nodes");

	LabeledTree t;
	t.nodes_.resize(labels_.size());
	for (std::size_t i = 0; i < order.size(); ++i) {
		NodeId old = order[i];
		auto &node = t.nodes_[i];
		node.label = labels_[old];
		node.parent = parents_[old] == kNoNode ? kNoNode : remap[parents_[old]];
		node.children.reserve(children_[old].size());
		for (NodeId c : children_[old]) node.children.push_back(remap[c]);
	}
	t.finalize();
	return {std::move(t), std::move(remap)};
}

namespace {

struct Parser {
	std::string_view text;
	std::size_t pos = 0;

	void skip_ws() {
		while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
	}

	bool eof() {
		skip_ws();
		return pos >= text.size();
	}

	char peek() {
		skip_ws();
		return text[pos];
	}

	std::string parse_label() {
		skip_ws();
		if (pos >= text.size()) throw ParseError("expected label", pos);
		if (text[pos] == '"') {
			std::size_t start = pos++;
			std::string out;
			while (true) {
				if (pos >= text.size()) throw ParseError("unterminated quoted label", start);
				char c = text[pos++];
				if (c == '"') return out;
				if (c == '\\') {
					if (pos >= text.size()) throw ParseError("dangling escape", pos - 1);
					char e = text[pos++];
					if (e != '"' && e != '\\') throw ParseError("bad escape", pos - 2);
					out.push_back(e);
				} else {
					out.push_back(c);
				}
			}
		}
		std::size_t start = pos;
		while (pos < text.size() && plain_label_char(text[pos])) ++pos;
		if (pos == start) throw ParseError("expected label", pos);
		return std::string(text.substr(start, pos - start));
	}

	// recursive descent visits nodes in preorder
	void parse_node(NodeId parent, std::size_t depth) {
		if (depth > kMaxNesting) throw ParseError("nesting too deep", pos);
		std::string lab = parse_label();
		NodeId id = static_cast<NodeId>(labels.size());
		labels.push_back(std::move(lab));
		parents.push_back(parent);
		if (!eof() && peek() == '(') {
			++pos;
			while (true) {
				parse_node(id, depth + 1);
				if (eof()) throw ParseError("expected ',' or ')'", pos);
				char c = peek();
				if (c == ',') {
					++pos;
					continue;
				}
				if (c == ')') {
					++pos;
					break;
				}
				throw ParseError("expected ',' or ')'", pos);
			}
		}
	}

	std::vector<std::string> labels{};
	std::vector<NodeId> parents{};
};

} // namespace

LabeledTree parse_tree(std::string_view text) {
	Parser p{text};
	if (p.eof()) throw ParseError("empty input", 0);
	p.parse_node(kNoNode, 0);
	if (!p.eof()) {
		if (p.peek() == ',') throw ParseError("duplicate root", p.pos);
		throw ParseError("trailing input", p.pos);
	}
	LabeledTree t;
	t.nodes_.resize(p.labels.size());
	for (NodeId id = 0; id < p.labels.size(); ++id) {
		t.nodes_[id].label = std::move(p.labels[id]);
		t.nodes_[id].parent = p.parents[id];
		if (p.parents[id] != kNoNode)
			t.nodes_[p.parents[id]].children.push_back(id);
	}
	t.finalize();
	return t;
}

std::string label_token(const std::string &label) {
	bool plain = !label.empty();
	for (char c : label)
		if (!plain_label_char(c)) {
			plain = false;
			break;
		}
	if (plain) return label;
	std::string out = "\"";
	for (char c : label) {
		if (c == '"' || c == '\\') out.push_back('\\');
		out.push_back(c);
	}
	out.push_back('"');
	return out;
}

std::string serialize_tree(const LabeledTree &t) {
	std::string out;
	// frame: (node, next child index)
	std::vector<std::pair<NodeId, std::size_t>> st;
	st.emplace_back(t.root(), 0);
	out += label_token(t.label(t.root()));
	while (!st.empty()) {
		auto &[v, next] = st.back();
		auto kids = t.children(v);
		if (next < kids.size()) {
			out += next == 0 ? "(" : ",";
			NodeId c = kids[next++];
			out += label_token(t.label(c));
			st.emplace_back(c, 0);
		} else {
			if (!kids.empty()) out += ")";
			st.pop_back();
		}
	}
	return out;
}

bool left_of(const LabeledTree &t, NodeId a, NodeId b) {
	return t.euler(a).post < t.euler(b).pre;
}

std::vector<std::string> iso_codes(const LabeledTree &t) {
	std::vector<std::string> code(t.size());
	for (NodeId v : t.postorder()) {
		auto kids = t.children(v);
		if (kids.empty()) {
			code[v] = label_token(t.label(v));
			continue;
		}
		std::vector<const std::string *> parts;
		parts.reserve(kids.size());
		for (NodeId c : kids) parts.push_back(&code[c]);
		std::sort(parts.begin(), parts.end(), [](const std::string *a, const std::string *b) { return *a < *b; });
		std::string s = label_token(t.label(v));
		s += '(';
		for (std::size_t i = 0; i < parts.size(); ++i) {
			if (i) s += ',';
			s += *parts[i];
		}
		s += ')';
		code[v] = std::move(s);
	}
	return code;
}

TreeStats stats(const LabeledTree &t) {
	TreeStats st;
	st.nodes = t.size();
	for (NodeId v = 0; v < t.size(); ++v) {
		st.degree = std::max(st.degree, t.degree(v));
		st.height = std::max<std::size_t>(st.height, t.depth(v));
		++st.occ[t.label(v)];
	}
	for (NodeId v = 0; v < t.size(); ++v)
		if (t.is_leaf(v)) st.occMax = std::max(st.occMax, st.occ[t.label(v)]);
	return st;
}

std::size_t occ_bound(const LabeledTree &pattern, const LabeledTree &text) {
	TreeStats ts = stats(text);
	std::size_t bound = 0;
	for (NodeId v = 0; v < pattern.size(); ++v) {
		if (!pattern.is_leaf(v)) continue;
		auto it = ts.occ.find(pattern.label(v));
		bound = std::max(bound, it == ts.occ.end() ? std::size_t{0} : it->second);
	}
	return bound;
}

bool unique_leaf_labels(const LabeledTree &t) {
	std::map<std::string_view, int> seen;
	for (NodeId v = 0; v < t.size(); ++v)
		if (t.is_leaf(v) && ++seen[t.label(v)] > 1) return false;
	return true;
}

} // namespace treeinc
