#include "treeinc/oracle.hpp"

#include <algorithm>
#include <string>

#include "treeinc/errors.hpp"

namespace treeinc {
namespace {

constexpr NodeId kMaxOraclePattern = 12;
constexpr NodeId kMaxOracleText = 20;

void check_sizes(const LabeledTree &pattern, const LabeledTree &text) {
	if (pattern.size() > kMaxOraclePattern || text.size() > kMaxOracleText)
		throw PreconditionError("oracle input too large (pattern <= 12, text <= 20)");
}

bool related_same_way(const LabeledTree &a, NodeId a1, NodeId a2,
                      const LabeledTree &b, NodeId b1, NodeId b2) {
	return a.is_ancestor(a1, a2) == b.is_ancestor(b1, b2) &&
	       a.is_ancestor(a2, a1) == b.is_ancestor(b2, b1);
}

// Assigns pattern nodes in preorder; `image` holds the partial mapping.
struct Search {
	const LabeledTree &pattern;
	const LabeledTree &text;
	std::vector<NodeId> image;
	std::vector<bool> used;

	Search(const LabeledTree &p, const LabeledTree &t)
	    : pattern(p), text(t), image(p.size(), kNoNode), used(t.size(), false) {}

	bool consistent(NodeId u, NodeId v) const {
		if (pattern.label(u) != text.label(v))
			return false;
		if (used[v])
			return false;
		for (NodeId w = 0; w < u; ++w)
			if (!related_same_way(pattern, w, u, text, image[w], v))
				return false;
		return true;
	}

	bool extend(NodeId u) {
		if (u == pattern.size())
			return true;
		NodeId p = pattern.parent(u); // u > 0 here, parent already assigned
		NodeId base = image[p];
		// candidates: strict descendants of the parent's image
		NodeId end = base + text.subtree_size(base);
		for (NodeId v = base + 1; v < end; ++v) {
			if (!consistent(u, v))
				continue;
			image[u] = v;
			used[v] = true;
			if (extend(u + 1))
				return true;
			used[v] = false;
			image[u] = kNoNode;
		}
		return false;
	}

	bool run_from(NodeId v) {
		if (pattern.label(pattern.root()) != text.label(v))
			return false;
		image[0] = v;
		used[v] = true;
		bool ok = extend(1);
		if (!ok) {
			used[v] = false;
			image[0] = kNoNode;
		}
		return ok;
	}

	InclusionMapping mapping() const {
		InclusionMapping m;
		for (NodeId u = 0; u < pattern.size(); ++u)
			m.pairs.emplace_back(u, image[u]);
		return m;
	}
};

} // namespace

bool oracle_included(const LabeledTree &pattern, const LabeledTree &text,
                     InclusionMapping *witness) {
	check_sizes(pattern, text);
	Search s(pattern, text);
	for (NodeId v = 0; v < text.size(); ++v)
		if (s.run_from(v)) {
			if (witness)
				*witness = s.mapping();
			return true;
		}
	return false;
}

bool oracle_pinned(const LabeledTree &pattern, const LabeledTree &text,
                   NodeId v, InclusionMapping *witness) {
	check_sizes(pattern, text);
	Search s(pattern, text);
	if (!s.run_from(v))
		return false;
	if (witness)
		*witness = s.mapping();
	return true;
}

std::vector<NodeId> oracle_minimal_roots(const LabeledTree &pattern,
                                         const LabeledTree &text) {
	check_sizes(pattern, text);
	std::vector<bool> pinned(text.size());
	for (NodeId v = 0; v < text.size(); ++v)
		pinned[v] = oracle_pinned(pattern, text, v);
	std::vector<NodeId> out;
	for (NodeId v = 0; v < text.size(); ++v) {
		if (!pinned[v])
			continue;
		bool below = false;
		NodeId end = v + text.subtree_size(v);
		for (NodeId w = v + 1; w < end && !below; ++w)
			below = pinned[w];
		if (!below)
			out.push_back(v);
	}
	return out;
}

bool x3c_bruteforce(int n, const std::vector<std::array<int, 3>> &triples) {
	if (triples.size() > 20)
		throw PreconditionError("x3c brute force capped at 20 triples");
	if (n % 3 != 0)
		return false;
	for (const auto &t : triples)
		for (int e : t)
			if (e < 1 || e > n)
				throw PreconditionError("x3c element out of range");
	std::vector<bool> covered(n + 1, false);
	// branch on the lowest uncovered element
	auto rec = [&](auto &&self, int lowest) -> bool {
		while (lowest <= n && covered[lowest])
			++lowest;
		if (lowest > n)
			return true;
		for (const auto &t : triples) {
			if (t[0] != lowest && t[1] != lowest && t[2] != lowest)
				continue;
			if (covered[t[0]] || covered[t[1]] || covered[t[2]])
				continue;
			covered[t[0]] = covered[t[1]] = covered[t[2]] = true;
			if (self(self, lowest + 1))
				return true;
			covered[t[0]] = covered[t[1]] = covered[t[2]] = false;
		}
		return false;
	};
	return rec(rec, 1);
}

bool validate_inclusion_mapping(const LabeledTree &pattern,
                                const LabeledTree &text,
                                const InclusionMapping &mapping,
                                bool requireFull, std::string *why) {
	auto fail = [&](const std::string &msg) {
		if (why)
			*why = msg;
		return false;
	};
	std::vector<NodeId> image(pattern.size(), kNoNode);
	std::vector<bool> hit(text.size(), false);
	for (auto [u, v] : mapping.pairs) {
		if (u >= pattern.size() || v >= text.size())
			return fail("node id out of range");
		if (image[u] != kNoNode)
			return fail("pattern node mapped twice");
		if (hit[v])
			return fail("text node used twice");
		if (pattern.label(u) != text.label(v))
			return fail("label mismatch");
		image[u] = v;
		hit[v] = true;
	}
	if (requireFull)
		for (NodeId u = 0; u < pattern.size(); ++u)
			if (image[u] == kNoNode)
				return fail("pattern node unmapped");
	for (auto [u1, v1] : mapping.pairs)
		for (auto [u2, v2] : mapping.pairs) {
			if (u1 == u2)
				continue;
			if (pattern.is_ancestor(u1, u2) != text.is_ancestor(v1, v2))
				return fail("ancestry not preserved");
		}
	return true;
}

} // namespace treeinc
