#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treeinc {

// Node ids are preorder ranks, so the subtree of v occupies the contiguous
// id range [v, v + subtree_size(v)).
using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = 0xffffffffu;

struct EulerInterval {
	std::uint32_t pre = 0;
	std::uint32_t post = 0;
};

class TreeBuilder;

class LabeledTree {
public:
	std::size_t size() const { return nodes_.size(); }
	NodeId root() const { return 0; }

	const std::string &label(NodeId v) const { return nodes_[check(v)].label; }
	NodeId parent(NodeId v) const { return nodes_[check(v)].parent; }
	std::span<const NodeId> children(NodeId v) const { return nodes_[check(v)].children; }
	std::size_t degree(NodeId v) const { return nodes_[check(v)].children.size(); }
	bool is_leaf(NodeId v) const { return degree(v) == 0; }

	std::uint32_t subtree_size(NodeId v) const { return subtreeSize_[check(v)]; }
	EulerInterval euler(NodeId v) const { return euler_[check(v)]; }
	std::uint32_t depth(NodeId v) const { return depth_[check(v)]; }

	// strict: a node is not its own ancestor
	bool is_ancestor(NodeId a, NodeId b) const {
		check(a);
		check(b);
		return euler_[a].pre < euler_[b].pre && euler_[b].post < euler_[a].post;
	}

	std::span<const NodeId> postorder() const { return postorder_; }

private:
	struct Node {
		std::string label;
		NodeId parent = kNoNode;
		std::vector<NodeId> children;
	};

	NodeId check(NodeId v) const {
		if (v >= nodes_.size()) throw std::out_of_range("node id " + std::to_string(v) + " out of range");
		return v;
	}

	void finalize(); // fills euler/depth/subtree/postorder; nodes must be in preorder

	std::vector<Node> nodes_;
	std::vector<EulerInterval> euler_;
	std::vector<std::uint32_t> subtreeSize_;
	std::vector<std::uint32_t> depth_;
	std::vector<NodeId> postorder_;

	friend class TreeBuilder;
	friend LabeledTree parse_tree(std::string_view text);
};

// Accumulates nodes in any order; build() renumbers them to preorder ranks.
// Child order is the order of add_child calls.
class TreeBuilder {
public:
	NodeId add_root(std::string label);
	NodeId add_child(NodeId parent, std::string label);
	std::size_t size() const { return labels_.size(); }
	std::size_t degree(NodeId v) const { return children_[v].size(); }
	const std::string &label(NodeId v) const { return labels_[v]; }

	struct Built {
		LabeledTree tree;
		std::vector<NodeId> remap; // remap[builder id] = preorder NodeId
	};
	Built build() const;

private:
	std::vector<std::string> labels_;
	std::vector<NodeId> parents_;
	std::vector<std::vector<NodeId>> children_;
};

// Grammar:  tree  := label | label "(" tree ("," tree)* ")"
//           label := [A-Za-z0-9_]+ | '"' (escaped bytes) '"'
// Whitespace between tokens is ignored. Inside quotes, \" and \\ escape.
LabeledTree parse_tree(std::string_view text);
std::string serialize_tree(const LabeledTree &t);
std::string label_token(const std::string &label); // quoted iff needed

// post(a) < pre(b): the whole subtree of a precedes b
bool left_of(const LabeledTree &t, NodeId a, NodeId b);

// Canonical code per node: the serialization of the subtree with children
// recursively sorted, so two nodes (in the same or different trees) get equal
// codes iff their subtrees are isomorphic as unordered labeled trees.
std::vector<std::string> iso_codes(const LabeledTree &t);

struct TreeStats {
	std::size_t nodes = 0;
	std::size_t degree = 0; // max outdegree
	std::size_t height = 0; // single node has height 0
	std::map<std::string, std::size_t> occ; // label -> occurrences anywhere
	std::size_t occMax = 0; // max occ over labels that appear at a leaf
};
TreeStats stats(const LabeledTree &t);

// Max over the pattern's leaf labels of that label's occurrence count in the
// text. Bounds the number of incomparable minimal occurrences any pattern
// subtree can have.
std::size_t occ_bound(const LabeledTree &pattern, const LabeledTree &text);

bool unique_leaf_labels(const LabeledTree &t);

} // namespace treeinc
