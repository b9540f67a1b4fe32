#include "treeinc/generators.hpp"

#include <algorithm>
#include <sstream>

#include "treeinc/errors.hpp"

namespace treeinc {

namespace {

std::string pool_label(std::size_t i) {
	if (i < 26) return std::string(1, char('a' + i));
	return "l" + std::to_string(i);
}

// mutable rooted tree under construction; labels are pool indices
struct Grow {
	std::vector<int> label;
	std::vector<int> parent;
	std::vector<std::vector<int>> kids;

	int size() const { return int(label.size()); }

	int add(int par, int lab) {
		int id = size();
		label.push_back(lab);
		parent.push_back(par);
		kids.emplace_back();
		if (par >= 0) kids[par].push_back(id);
		return id;
	}

	// put a fresh node between v and its parent
	int subdivide(int v, int lab) {
		int par = parent[v];
		int id = add(par, lab);
		auto &pk = kids[par];
		pk.erase(std::find(pk.begin(), pk.end(), v));
		parent[v] = id;
		kids[id].push_back(v);
		return id;
	}

	int copy_subtree(const Grow &src, int srcNode, int par) {
		int id = add(par, src.label[srcNode]);
		for (int c : src.kids[srcNode])
			copy_subtree(src, c, id);
		return id;
	}

	LabeledTree freeze() const {
		TreeBuilder b;
		std::vector<NodeId> map(label.size());
		std::vector<int> stack{0};
		map[0] = b.add_root(pool_label(std::size_t(label[0])));
		while (!stack.empty()) {
			int v = stack.back();
			stack.pop_back();
			for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it)
				stack.push_back(*it);
			if (v != 0)
				map[v] = b.add_child(map[parent[v]], pool_label(std::size_t(label[v])));
		}
		return b.build().tree;
	}
};

// uniform node with spare outdegree; some leaf always qualifies
int pick_open_node(std::mt19937_64 &rng, const Grow &g, std::size_t maxDegree) {
	std::vector<int> open;
	for (int v = 0; v < g.size(); ++v)
		if (g.kids[v].size() < maxDegree)
			open.push_back(v);
	return open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
}

struct LabelPool {
	std::size_t count = 0;
	std::size_t cap = 0; // 0 = unconstrained
	std::vector<bool> capped; // pool index is held to cap
	std::vector<std::size_t> used;

	// labels still below their cap within [lo, hi)
	int draw(std::mt19937_64 &rng, std::size_t lo, std::size_t hi) {
		std::vector<std::size_t> cand;
		for (std::size_t l = lo; l < hi; ++l)
			if (cap == 0 || !capped[l] || used[l] < cap)
				cand.push_back(l);
		if (cand.empty())
			throw PreconditionError("label pool exhausted under occurrence cap");
		std::size_t l = cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)];
		++used[l];
		return int(l);
	}
};

Grow random_shape(std::mt19937_64 &rng, std::size_t nodes, std::size_t maxDegree) {
	Grow g;
	g.add(-1, 0);
	while (std::size_t(g.size()) < nodes)
		g.add(pick_open_node(rng, g, maxDegree), 0);
	return g;
}

} // namespace

GenInstance gen_random(std::mt19937_64 &rng, const GenSpec &spec) {
	if (spec.patternNodes == 0 || spec.textNodes == 0 || spec.maxDegree == 0)
		throw PreconditionError("generator sizes must be positive");

	Grow pat = random_shape(rng, spec.patternNodes, spec.maxDegree);
	std::vector<int> leaves, internals;
	for (int v = 0; v < pat.size(); ++v)
		(pat.kids[v].empty() ? leaves : internals).push_back(v);

	std::size_t nLabels = std::max<std::size_t>(spec.labelCount, 1);
	if (spec.uniquePatternLeaves)
		nLabels = std::max(nLabels, leaves.size() + (spec.occCap ? 2 : 0));
	if (spec.occCap)
		nLabels = std::max(nLabels, (spec.patternNodes + spec.occCap - 1) / spec.occCap);

	LabelPool pool;
	pool.count = nLabels;
	pool.cap = spec.occCap;
	pool.capped.assign(nLabels, false);
	pool.used.assign(nLabels, 0);

	if (spec.uniquePatternLeaves) {
		std::vector<int> perm(leaves.size());
		for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
		std::shuffle(perm.begin(), perm.end(), rng);
		for (std::size_t i = 0; i < leaves.size(); ++i) {
			pat.label[std::size_t(leaves[i])] = perm[i];
			++pool.used[std::size_t(perm[i])];
		}
		// reserve the leaf labels: internals draw from the rest when capped
		std::size_t lo = spec.occCap ? leaves.size() : 0;
		for (int v : internals)
			pat.label[std::size_t(v)] = pool.draw(rng, lo, nLabels);
	} else {
		// hold the whole pattern to the cap: planted copies put every
		// pattern occurrence into the text
		pool.capped.assign(nLabels, true);
		for (int v = 0; v < pat.size(); ++v)
			pat.label[std::size_t(v)] = pool.draw(rng, 0, nLabels);
		pool.capped.assign(nLabels, false);
	}
	for (int v : leaves)
		pool.capped[std::size_t(pat.label[std::size_t(v)])] = true;
	if (spec.occCap && std::find(pool.capped.begin(), pool.capped.end(), false) ==
	                       pool.capped.end()) {
		// keep one label free of the cap so text growth cannot strand
		pool.capped.push_back(false);
		pool.used.push_back(0);
		pool.count = ++nLabels;
	}

	bool plant = std::bernoulli_distribution(spec.plantProbability)(rng) &&
	             spec.textNodes >= spec.patternNodes;
	Grow txt;
	if (plant) {
		// pattern counts already sit in pool.used, so growth respects the cap
		if (spec.textNodes > spec.patternNodes) {
			txt.add(-1, pool.draw(rng, 0, nLabels));
			txt.copy_subtree(pat, 0, 0);
		} else {
			txt.copy_subtree(pat, 0, -1);
		}
	} else {
		pool.used.assign(nLabels, 0);
		txt.add(-1, pool.draw(rng, 0, nLabels));
	}
	while (std::size_t(txt.size()) < spec.textNodes) {
		int lab = pool.draw(rng, 0, nLabels);
		if (txt.size() > 1 && std::bernoulli_distribution(0.3)(rng))
			txt.subdivide(std::uniform_int_distribution<int>(1, txt.size() - 1)(rng), lab);
		else
			txt.add(pick_open_node(rng, txt, spec.maxDegree), lab);
	}
	if (spec.forceOccExact && spec.occCap && !leaves.empty()) {
		std::size_t pick = std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng);
		auto c = std::size_t(pat.label[std::size_t(leaves[pick])]);
		while (pool.used[c] < spec.occCap) {
			txt.add(pick_open_node(rng, txt, spec.maxDegree), int(c));
			++pool.used[c];
		}
	}

	GenInstance out;
	out.pattern = pat.freeze();
	out.text = txt.freeze();
	out.planted = plant;
	return out;
}

GenInstance gen_star(std::size_t d) {
	if (d == 0) throw PreconditionError("star degree must be positive");
	TreeBuilder pb;
	NodeId pr = pb.add_root("r");
	for (std::size_t i = 0; i < d; ++i)
		pb.add_child(pr, "c" + std::to_string(i));
	TreeBuilder tb;
	NodeId tr = tb.add_root("r");
	for (int rep = 0; rep < 2; ++rep) {
		NodeId mid = tb.add_child(tr, "r");
		for (std::size_t i = 0; i < d; ++i)
			tb.add_child(mid, "c" + std::to_string(i));
	}
	GenInstance out;
	out.pattern = pb.build().tree;
	out.text = tb.build().tree;
	out.planted = true;
	return out;
}

X3CInstance gen_x3c_random(std::mt19937_64 &rng, int n, int m) {
	if (n <= 0 || n % 3 != 0)
		throw PreconditionError("element count must be a positive multiple of 3");
	if (m < (n + 2) / 3 || m > n)
		throw PreconditionError("triple count must fit element quotas");
	for (int attempt = 0; attempt < 10000; ++attempt) {
		std::vector<int> quota(std::size_t(n) + 1, 3);
		X3CInstance inst;
		inst.n = n;
		bool ok = true;
		for (int t = 0; t < m && ok; ++t) {
			std::vector<int> cand;
			for (int e = 1; e <= n; ++e)
				if (quota[std::size_t(e)] > 0)
					cand.push_back(e);
			if (cand.size() < 3) {
				ok = false;
				break;
			}
			std::array<int, 3> tri{};
			std::sample(cand.begin(), cand.end(), tri.begin(), 3, rng);
			std::sort(tri.begin(), tri.end());
			for (int e : tri)
				--quota[std::size_t(e)];
			inst.triples.push_back(tri);
		}
		if (!ok)
			continue;
		bool covered = std::all_of(quota.begin() + 1, quota.end(),
		                           [](int q) { return q < 3; });
		if (covered)
			return inst;
	}
	throw PreconditionError("could not satisfy element quotas");
}

std::string serialize_x3c(const X3CInstance &inst) {
	std::ostringstream out;
	out << inst.n << ' ' << inst.triples.size() << '\n';
	for (const auto &t : inst.triples)
		out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
	return out.str();
}

X3CInstance parse_x3c(std::string_view text) {
	std::istringstream in{std::string(text)};
	X3CInstance inst;
	std::size_t m = 0;
	if (!(in >> inst.n >> m))
		throw ParseError("expected element and triple counts", 0);
	if (inst.n <= 0)
		throw ParseError("element count must be positive", 0);
	for (std::size_t i = 0; i < m; ++i) {
		std::array<int, 3> t{};
		if (!(in >> t[0] >> t[1] >> t[2]))
			throw ParseError("expected three elements for triple " + std::to_string(i + 1),
			                 std::size_t(std::max<std::streamoff>(in.tellg(), 0)));
		for (int e : t)
			if (e < 1 || e > inst.n)
				throw ParseError("element out of range in triple " + std::to_string(i + 1),
				                 std::size_t(std::max<std::streamoff>(in.tellg(), 0)));
		if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
			throw ParseError("repeated element in triple " + std::to_string(i + 1),
			                 std::size_t(std::max<std::streamoff>(in.tellg(), 0)));
		inst.triples.push_back(t);
	}
	return inst;
}

X3CTrees x3c_to_trees(const X3CInstance &inst) {
	if (inst.n <= 0 || inst.n % 3 != 0)
		throw PreconditionError("element count must be a positive multiple of 3");
	const int n = inst.n, m = int(inst.triples.size()), q = n / 3;
	auto elem = [](int e) { return "u" + std::to_string(e); };
	auto mark = [](int i, int j) {
		return "s" + std::to_string(i) + "_" + std::to_string(j);
	};
	const std::string alpha = "#";

	// text: one flat child per triple (with its chain head), per chain link,
	// and per cross-triple rank
	TreeBuilder tb;
	NodeId troot = tb.add_root(alpha);
	for (int i = 1; i <= m; ++i) {
		NodeId c = tb.add_child(troot, alpha);
		tb.add_child(c, mark(i, 0));
		for (int e : inst.triples[std::size_t(i - 1)])
			tb.add_child(c, elem(e));
	}
	for (int i = 1; i <= m; ++i)
		for (int j = 1; j <= q; ++j) {
			NodeId c = tb.add_child(troot, alpha);
			tb.add_child(c, mark(i, j - 1));
			tb.add_child(c, mark(i, j));
		}
	for (int j = 1; j <= q; ++j) {
		NodeId c = tb.add_child(troot, alpha);
		for (int i = 1; i <= m; ++i)
			tb.add_child(c, mark(i, j));
	}

	// pattern: every element as a direct leaf of the root, plus one wrapped
	// single-leaf child per chain label
	TreeBuilder pb;
	NodeId proot = pb.add_root(alpha);
	for (int e = 1; e <= n; ++e)
		pb.add_child(proot, elem(e));
	for (int i = 1; i <= m; ++i)
		for (int j = 0; j <= q; ++j) {
			NodeId c = pb.add_child(proot, alpha);
			pb.add_child(c, mark(i, j));
		}

	X3CTrees out;
	out.pattern = pb.build().tree;
	out.text = tb.build().tree;
	return out;
}

} // namespace treeinc
