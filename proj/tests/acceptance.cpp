// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and bounds are pinned inline next to each check.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "treeinc/enumerate.hpp"
#include "treeinc/errors.hpp"
#include "treeinc/fast_inclusion.hpp"
#include "treeinc/generators.hpp"
#include "treeinc/harness.hpp"
#include "treeinc/km_baseline.hpp"
#include "treeinc/matching.hpp"
#include "treeinc/occ_algorithms.hpp"
#include "treeinc/oracle.hpp"
#include "treeinc/two_sat.hpp"

using namespace treeinc;

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
	return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

struct Failure {
	std::string what;
};

void expect(bool cond, const std::string &what) {
	if (!cond)
		throw Failure{what};
}

std::string ids_str(const std::vector<NodeId> &v) {
	std::string s = "[";
	for (std::size_t i = 0; i < v.size(); ++i)
		s += (i ? "," : "") + std::to_string(v[i]);
	return s + "]";
}

bool witness_ok(const LabeledTree &p, const LabeledTree &t, const RunResult &r,
                std::string *why) {
	if (!r.included) {
		if (r.witness) {
			*why = "witness present on a negative answer";
			return false;
		}
		return true;
	}
	if (!r.witness) {
		*why = "witness missing on a positive answer";
		return false;
	}
	return validate_inclusion_mapping(p, t, *r.witness, true, why);
}

// ---- criterion 1: the worked example ----------------------------------

// Pattern root has six children A..F; the text embeds triangle-like copies so
// that exactly seven (child, vertex) minimality relations hold and the five
// interesting per-vertex families come out as listed below.
bool crit1(std::string &detail) {
	Clock::time_point t0 = Clock::now();
	LabeledTree pat = parse_tree("r(p(a1),p(b1),s(c1),s(d1),s(e1),s(f1))");
	LabeledTree txt = parse_tree("r(z,p(a1,b1,s(c1,s(d1,e1),s(d1,f1))))");
	// text preorder: 0=r 1=z 2=v1 3=a1 4=b1 5=v2 6=c1 7=v3 8=d1 9=e1 10=v4 11=d1 12=f1
	const NodeId uA = 1, uB = 3, uC = 5, uD = 7, uE = 9, uF = 11;
	const std::vector<NodeId> reps{uA, uB, uC, uD, uE, uF};
	const std::set<std::pair<NodeId, NodeId>> wantMinimal{
		{uA, 2}, {uB, 2}, {uC, 5}, {uD, 7}, {uE, 7}, {uD, 10}, {uF, 10}};
	const std::map<NodeId, std::string> wantFamily{
		{1, "{}"},
		{2, "{} {uA} {uB}"},
		{5, "{} {uC}"},
		{7, "{} {uD} {uE}"},
		{10, "{} {uD} {uE} {uF} {uD,uE} {uD,uF} {uE,uF}"}};
	const char *names[6] = {"uA", "uB", "uC", "uD", "uE", "uF"};

	for (IncVariant variant : {IncVariant::Dense, IncVariant::Sparse}) {
		const char *vn = variant == IncVariant::Dense ? "alginc1" : "alginc2";
		AlgIncState st = alginc_table(pat, txt, variant);
		// the complete minimality relation over root children x text nodes
		for (NodeId u : reps)
			for (NodeId v = 0; v < txt.size(); ++v) {
				bool want = wantMinimal.count({u, v}) > 0;
				expect(st.dp.minimal(u, v) == want,
				       std::string(vn) + ": minimal(" + std::to_string(u) + "," +
				           std::to_string(v) + ") != " + (want ? "true" : "false"));
			}
		// child D is admitted at vertex 5 but only non-minimally
		expect(st.dp.inc(uD, 5) && !st.dp.minimal(uD, 5),
		       std::string(vn) + ": child D at vertex 5 should be included, not minimal");

		Counters scratch;
		CellInspection insp =
			fast_cell_families(pat, txt, pat.root(), txt.root(), st.dp, {}, scratch, variant);
		expect(insp.layout.class_count() == 6 && insp.layout.all_unit(),
		       std::string(vn) + ": root layout should have six unit classes");
		expect(!insp.included, std::string(vn) + ": the pattern must not embed as a whole");
		std::map<NodeId, std::string> got;
		for (const auto &[v, codes] : insp.perVertex) {
			if (!wantFamily.count(v))
				continue;
			std::vector<std::uint64_t> order = codes;
			std::sort(order.begin(), order.end(), [](std::uint64_t a, std::uint64_t b) {
				int pa = std::popcount(a), pb = std::popcount(b);
				return pa != pb ? pa < pb : a < b;
			});
			std::string fam;
			for (std::uint64_t code : order) {
				std::string sub = "{";
				bool first = true;
				for (std::size_t cls = 0; cls < 6; ++cls)
					if (insp.layout.digit(code, cls)) {
						sub += (first ? "" : ",") + std::string(names[cls]);
						first = false;
					}
				sub += "}";
				fam += (fam.empty() ? "" : " ") + sub;
			}
			got[v] = fam;
		}
		for (const auto &[v, want] : wantFamily) {
			expect(got.count(v) > 0, std::string(vn) + ": no family reported at vertex " +
			                             std::to_string(v));
			expect(got[v] == want, std::string(vn) + ": family at vertex " + std::to_string(v) +
			                           " is \"" + got[v] + "\", want \"" + want + "\"");
		}
	}
	std::int64_t elapsed = ms_since(t0);
	expect(elapsed < 1000, "took " + std::to_string(elapsed) + " ms, limit 1000");
	detail = "both variants reproduce the 5 families and 7 minimal relations (" +
	         std::to_string(elapsed) + " ms)";
	return true;
}

// ---- criterion 2: exhaustive agreement on small trees ------------------

bool crit2(std::string &detail) {
	Clock::time_point t0 = Clock::now();
	std::vector<std::string> labels{"a", "b"};
	std::vector<LabeledTree> pats, texts;
	for (std::size_t n = 1; n <= 4; ++n)
		for (LabeledTree &t : enumerate_trees(n, labels))
			pats.push_back(std::move(t));
	for (std::size_t n = 1; n <= 6; ++n)
		for (LabeledTree &t : enumerate_trees(n, labels))
			texts.push_back(std::move(t));
	expect(pats.size() == 102, "expected 102 patterns, got " + std::to_string(pats.size()));
	expect(texts.size() == 3238, "expected 3238 texts, got " + std::to_string(texts.size()));

	RunLimits lim;
	lim.extractWitness = false;
	std::size_t pairs = 0;
	for (const LabeledTree &p : pats)
		for (const LabeledTree &t : texts) {
			++pairs;
			bool inc = oracle_included(p, t);
			std::vector<NodeId> roots = oracle_minimal_roots(p, t);
			for (Algo algo : {Algo::Km, Algo::AlgInc1, Algo::AlgInc2}) {
				RunResult r = run_algorithm(algo, p, t, lim);
				if (r.included != inc || r.minimalRoots != roots)
					throw Failure{algo_name(algo) + " disagrees on pattern \"" +
					              serialize_tree(p) + "\" text \"" + serialize_tree(t) +
					              "\": got " + (r.included ? "1" : "0") + " roots " +
					              ids_str(r.minimalRoots) + ", want " + (inc ? "1" : "0") +
					              " roots " + ids_str(roots)};
			}
		}
	detail = std::to_string(pairs) + " pattern/text pairs, 3 algorithms vs oracle (" +
	         std::to_string(ms_since(t0)) + " ms)";
	return true;
}

// ---- criterion 3: randomized agreement with witness validation ---------

bool crit3(std::string &detail) {
	Clock::time_point t0 = Clock::now();
	const std::uint64_t kInstances = 10000;
	std::size_t witnesses = 0;
	for (std::uint64_t seed = 1; seed <= kInstances; ++seed) {
		std::mt19937_64 rng(seed);
		GenSpec spec;
		spec.patternNodes = 1 + rng() % 8;  // |P| <= 8
		spec.textNodes = 1 + rng() % 14;    // |T| <= 14
		spec.labelCount = 3;
		spec.maxDegree = 4;
		GenInstance g = gen_random(rng, spec);
		RunResult base = run_algorithm(Algo::Oracle, g.pattern, g.text);

		std::vector<Algo> algos{Algo::Km, Algo::AlgInc1, Algo::AlgInc2};
		if (occ_bound(g.pattern, g.text) <= 2 && unique_leaf_labels(g.pattern))
			algos.push_back(Algo::Occ2);
		if (occ_bound(g.pattern, g.text) <= 3)
			algos.push_back(Algo::Occ3);

		std::string why;
		expect(witness_ok(g.pattern, g.text, base, &why),
		       "oracle witness invalid at seed " + std::to_string(seed) + ": " + why);
		for (Algo algo : algos) {
			RunResult r = run_algorithm(algo, g.pattern, g.text);
			if (r.included != base.included || r.minimalRoots != base.minimalRoots)
				throw Failure{algo_name(algo) + " disagrees at seed " + std::to_string(seed) +
				              ": pattern \"" + serialize_tree(g.pattern) + "\" text \"" +
				              serialize_tree(g.text) + "\""};
			if (!witness_ok(g.pattern, g.text, r, &why))
				throw Failure{algo_name(algo) + " witness invalid at seed " +
				              std::to_string(seed) + ": " + why};
			witnesses += r.witness ? 1 : 0;
		}
	}
	detail = std::to_string(kInstances) + " seeded instances, " + std::to_string(witnesses) +
	         " witnesses validated (" + std::to_string(ms_since(t0)) + " ms)";
	return true;
}

// ---- criterion 4: the exact-cover reduction ----------------------------

bool crit4(std::string &detail) {
	Clock::time_point t0 = Clock::now();
	std::mt19937_64 rng(424242);
	const int kInstances = 200;
	// per-run wall clock allowance for the family algorithms; runs that blow
	// it (or the family storage budget) are counted as skipped
	const std::chrono::seconds kDeadline(2);
	std::size_t done[4] = {0, 0, 0, 0}; // occ3, alginc2, alginc1, km
	for (int i = 0; i < kInstances; ++i) {
		int n = (i % 2 == 0) ? 6 : 9;
		int lo = (n + 2) / 3, hi = std::min(8, n);
		int m = lo + int(rng() % std::uint64_t(hi - lo + 1));
		X3CInstance inst = gen_x3c_random(rng, n, m);
		bool want = x3c_bruteforce(inst.n, inst.triples);
		X3CTrees tr = x3c_to_trees(inst);

		TreeStats ts = stats(tr.text), ps = stats(tr.pattern);
		expect(ts.height == 2 && ps.height == 2,
		       "instance " + std::to_string(i) + ": heights " + std::to_string(ts.height) +
		           "/" + std::to_string(ps.height) + ", want 2/2");
		expect(ts.occMax == 3 && ps.occMax == 1,
		       "instance " + std::to_string(i) + ": leaf occurrence bounds " +
		           std::to_string(ts.occMax) + "/" + std::to_string(ps.occMax) +
		           ", want 3/1");

		RunLimits lim;
		lim.extractWitness = false;
		RunResult o3 = occ3_run(tr.pattern, tr.text, lim);
		++done[0];
		expect(o3.included == want, "occ3 disagrees with the cover search on \"" +
		                                serialize_x3c(inst) + "\"");
		struct Try {
			int slot;
			Algo algo;
		} tries[3] = {{1, Algo::AlgInc2}, {2, Algo::AlgInc1}, {3, Algo::Km}};
		for (const Try &tr2 : tries) {
			RunLimits dl = lim;
			dl.deadline = Clock::now() + kDeadline;
			try {
				RunResult r = run_algorithm(tr2.algo, tr.pattern, tr.text, dl);
				++done[std::size_t(tr2.slot)];
				expect(r.included == want, algo_name(tr2.algo) +
				                               " disagrees with the cover search on \"" +
				                               serialize_x3c(inst) + "\"");
			} catch (const ResourceLimitError &) {
				// out of time or family storage: skipped, not wrong
			}
		}
	}
	expect(done[1] >= 40, "alginc2 finished only " + std::to_string(done[1]) + "/200");
	expect(done[2] >= 40, "alginc1 finished only " + std::to_string(done[2]) + "/200");
	expect(done[3] >= 20, "km finished only " + std::to_string(done[3]) + "/200");
	std::ostringstream os;
	os << kInstances << " instances; completions occ3=" << done[0] << " alginc2=" << done[1]
	   << " alginc1=" << done[2] << " km=" << done[3] << ", all agree ("
	   << ms_since(t0) << " ms)";
	detail = os.str();
	return true;
}

// ---- criterion 5: occurrence bound 2 ------------------------------------

bool crit5(std::string &detail) {
	Clock::time_point t0 = Clock::now();
	const std::uint64_t kInstances = 1000;
	for (std::uint64_t seed = 1; seed <= kInstances; ++seed) {
		std::mt19937_64 rng(9000 + seed);
		GenSpec spec;
		spec.patternNodes = 1 + rng() % 9;
		spec.textNodes = 1 + rng() % 18;
		spec.labelCount = 3;
		spec.occCap = 2;
		spec.uniquePatternLeaves = true;
		spec.forceOccExact = true;
		GenInstance g = gen_random(rng, spec);
		expect(occ_bound(g.pattern, g.text) == 2,
		       "seed " + std::to_string(seed) + ": occurrence bound != 2");
		expect(unique_leaf_labels(g.pattern),
		       "seed " + std::to_string(seed) + ": pattern leaf labels not unique");

		RunResult fast = occ2_run(g.pattern, g.text);
		RunResult ref = alginc_run(g.pattern, g.text, IncVariant::Sparse);
		expect(fast.included == ref.included && fast.minimalRoots == ref.minimalRoots,
		       "occ2 disagrees with alginc2 at seed " + std::to_string(seed) +
		           ": pattern \"" + serialize_tree(g.pattern) + "\" text \"" +
		           serialize_tree(g.text) + "\"");
		expect(fast.counters.branches == 0,
		       "occ2 branched at seed " + std::to_string(seed));
		std::string why;
		expect(witness_ok(g.pattern, g.text, fast, &why),
		       "occ2 witness invalid at seed " + std::to_string(seed) + ": " + why);
	}
	detail = std::to_string(kInstances) +
	         " bound-2 instances: occ2 == alginc2, zero branches (" +
	         std::to_string(ms_since(t0)) + " ms)";
	return true;
}

// ---- criterion 6: occurrence bound 3 ------------------------------------

bool crit6(std::string &detail) {
	Clock::time_point t0 = Clock::now();
	const std::uint64_t kInstances = 500;
	std::uint64_t branchedRuns = 0;
	for (std::uint64_t seed = 1; seed <= kInstances; ++seed) {
		std::mt19937_64 rng(77000 + seed);
		GenSpec spec;
		spec.patternNodes = 1 + rng() % 10;
		spec.textNodes = 1 + rng() % 20;
		spec.labelCount = 3;
		spec.occCap = 3;
		spec.forceOccExact = true;
		GenInstance g = gen_random(rng, spec);
		expect(occ_bound(g.pattern, g.text) == 3,
		       "seed " + std::to_string(seed) + ": occurrence bound != 3");

		RunResult fast = occ3_run(g.pattern, g.text);
		RunResult ref = alginc_run(g.pattern, g.text, IncVariant::Sparse);
		expect(fast.included == ref.included && fast.minimalRoots == ref.minimalRoots,
		       "occ3 disagrees with alginc2 at seed " + std::to_string(seed) +
		           ": pattern \"" + serialize_tree(g.pattern) + "\" text \"" +
		           serialize_tree(g.text) + "\"");
		// per cell: branch leaves <= 2 * 1.62^k for the k live at branch time
		expect(fast.fibBoundRespected,
		       "occ3 branch bound violated at seed " + std::to_string(seed));
		branchedRuns += fast.counters.branches ? 1 : 0;
		std::string why;
		expect(witness_ok(g.pattern, g.text, fast, &why),
		       "occ3 witness invalid at seed " + std::to_string(seed) + ": " + why);
	}
	detail = std::to_string(kInstances) + " bound-3 instances: occ3 == alginc2, " +
	         std::to_string(branchedRuns) + " runs branched within 2*1.62^k (" +
	         std::to_string(ms_since(t0)) + " ms)";
	return true;
}

// ---- criterion 7: star-family set-union growth --------------------------

bool crit7(std::string &detail) {
	Clock::time_point t0 = Clock::now();
	RunLimits lim;
	lim.extractWitness = false;
	std::map<std::size_t, std::uint64_t> kmOps, a2Ops;
	for (std::size_t d = 8; d <= 16; ++d) {
		GenInstance g = gen_star(d);
		RunResult km = km_run(g.pattern, g.text, lim);
		RunResult a2 = alginc_run(g.pattern, g.text, IncVariant::Sparse, lim);
		expect(km.included && a2.included, "star d=" + std::to_string(d) + " not included");
		kmOps[d] = km.counters.setUnions;
		a2Ops[d] = a2.counters.setUnions;
	}
	double kmLo = 1e9, kmHi = 0, a2Lo = 1e9, a2Hi = 0;
	for (std::size_t d = 9; d <= 16; ++d) {
		double rk = double(kmOps[d]) / double(kmOps[d - 1]);
		double ra = double(a2Ops[d]) / double(a2Ops[d - 1]);
		// pinned tolerance windows for the per-increment growth ratio
		expect(rk >= 3.2 && rk <= 5.2, "km growth ratio at d=" + std::to_string(d) + " is " +
		                                   std::to_string(rk) + ", want [3.2, 5.2]");
		expect(ra >= 1.6 && ra <= 2.6, "alginc2 growth ratio at d=" + std::to_string(d) +
		                                   " is " + std::to_string(ra) + ", want [1.6, 2.6]");
		kmLo = std::min(kmLo, rk), kmHi = std::max(kmHi, rk);
		a2Lo = std::min(a2Lo, ra), a2Hi = std::max(a2Hi, ra);
	}
	for (std::size_t d = 10; d <= 16; ++d)
		expect(a2Ops[d] < kmOps[d], "alginc2 not cheaper than km at d=" + std::to_string(d));
	std::ostringstream os;
	os.precision(3);
	os << "d=8..16: km ratios [" << kmLo << ", " << kmHi << "], alginc2 ratios [" << a2Lo
	   << ", " << a2Hi << "], alginc2 < km for d>=10 (" << ms_since(t0) << " ms)";
	detail = os.str();
	return true;
}

// ---- criterion 8: the aggregation DAG ------------------------------------

// reachability among real nodes through source -> virtual -> fed-node edges
std::vector<std::vector<bool>> dag_closure(const SparseLeftDag &dag) {
	NodeId base = dag.base;
	std::size_t reals = dag.realCount, virts = dag.virtuals.size();
	std::vector<std::vector<std::size_t>> next(reals + virts);
	for (std::size_t w = 0; w < virts; ++w)
		for (NodeId y : dag.virtuals[w].sources)
			next[y - base - 1].push_back(reals + w);
	for (std::size_t x = 0; x < reals; ++x)
		if (dag.inVirtual[x] != -1)
			next[reals + std::size_t(dag.inVirtual[x])].push_back(x);
	std::vector<std::vector<bool>> reach(reals, std::vector<bool>(reals, false));
	std::vector<std::size_t> stack;
	std::vector<bool> seen(reals + virts);
	for (std::size_t a = 0; a < reals; ++a) {
		std::fill(seen.begin(), seen.end(), false);
		stack.assign(1, a);
		seen[a] = true;
		while (!stack.empty()) {
			std::size_t x = stack.back();
			stack.pop_back();
			for (std::size_t y : next[x])
				if (!seen[y]) {
					seen[y] = true;
					stack.push_back(y);
					if (y < reals && y != a)
						reach[a][y] = true;
				}
		}
	}
	return reach;
}

bool crit8(std::string &detail) {
	Clock::time_point t0 = Clock::now();
	// size bound on 1000 random trees
	std::size_t basesChecked = 0;
	for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
		std::mt19937_64 rng(300000 + seed);
		GenSpec spec;
		spec.patternNodes = 1 + rng() % 6;
		spec.textNodes = 2 + rng() % 39;
		spec.maxDegree = 1 + rng() % 6;
		GenInstance g = gen_random(rng, spec);
		for (NodeId v = 0; v < g.text.size(); ++v) {
			if (g.text.is_leaf(v))
				continue;
			SparseLeftDag dag = build_virtual_dag(g.text, v);
			++basesChecked;
			expect(dag.edge_count() <= 2 * std::uint64_t(dag.realCount),
			       "edge bound violated at seed " + std::to_string(seed) + " base " +
			           std::to_string(v) + ": " + std::to_string(dag.edge_count()) +
			           " edges over " + std::to_string(dag.realCount) + " real nodes");
		}
	}
	// exhaustive closure-vs-left-of on every tree with at most 7 nodes
	std::vector<std::string> labels{"a"};
	std::size_t treesChecked = 0;
	for (std::size_t n = 1; n <= 7; ++n)
		for (const LabeledTree &t : enumerate_trees(n, labels)) {
			++treesChecked;
			for (NodeId base = 0; base < t.size(); ++base) {
				SparseLeftDag dag = build_virtual_dag(t, base);
				expect(dag.edge_count() <= 2 * std::uint64_t(dag.realCount),
				       "edge bound violated on \"" + serialize_tree(t) + "\" base " +
				           std::to_string(base));
				std::vector<std::vector<bool>> reach = dag_closure(dag);
				for (std::size_t a = 0; a < dag.realCount; ++a)
					for (std::size_t b = 0; b < dag.realCount; ++b) {
						NodeId x = base + 1 + NodeId(a), y = base + 1 + NodeId(b);
						bool want = a != b && left_of(t, x, y);
						expect(reach[a][b] == want,
						       "closure mismatch on \"" + serialize_tree(t) + "\" base " +
						           std::to_string(base) + ": reach(" + std::to_string(x) +
						           "," + std::to_string(y) + ") = " +
						           (reach[a][b] ? "1" : "0"));
					}
			}
		}
	expect(treesChecked == 197, "expected 197 trees, got " + std::to_string(treesChecked));
	detail = "edge bound on " + std::to_string(basesChecked) +
	         " random bases; closure == left-of on all 197 trees up to 7 nodes (" +
	         std::to_string(ms_since(t0)) + " ms)";
	return true;
}

// ---- criterion 9: the solver subroutines ---------------------------------

int brute_matching(int l, int r, const std::vector<std::vector<int>> &adj) {
	(void)r;
	auto rec = [&](auto &&self, int i, unsigned used) -> int {
		if (i == l)
			return 0;
		int best = self(self, i + 1, used);
		for (int rr : adj[std::size_t(i)])
			if (!(used >> rr & 1))
				best = std::max(best, 1 + self(self, i + 1, used | (1u << rr)));
		return best;
	};
	return rec(rec, 0, 0);
}

bool crit9(std::string &detail) {
	Clock::time_point t0 = Clock::now();

	// 2-SAT: every clause set of size <= 6 over 4 variables (36 distinct
	// clauses counting units), against a 16-row truth table
	const int kVars = 4, kMaxClauses = 6;
	std::vector<std::pair<int, int>> universe;
	for (int a = 0; a < 2 * kVars; ++a)
		for (int b = a; b < 2 * kVars; ++b)
			universe.emplace_back(a, b);
	expect(universe.size() == 36, "clause universe should have 36 entries");
	std::vector<std::uint16_t> satMask(universe.size());
	for (std::size_t c = 0; c < universe.size(); ++c)
		for (int assign = 0; assign < 16; ++assign) {
			auto holds = [&](int lit) {
				bool v = (assign >> (lit >> 1)) & 1;
				return (lit & 1) ? !v : v;
			};
			if (holds(universe[c].first) || holds(universe[c].second))
				satMask[c] = std::uint16_t(satMask[c] | (1u << assign));
		}
	TwoSat sat;
	std::uint64_t satInstances = 0;
	std::vector<std::size_t> chosen;
	auto sweep = [&](auto &&self, std::size_t start, std::uint16_t mask) -> void {
		sat.reset(kVars);
		for (std::size_t c : chosen)
			sat.add_clause(universe[c].first, universe[c].second);
		bool got = sat.solve();
		expect(got == (mask != 0), "2-sat verdict differs from the truth table");
		if (got) {
			for (std::size_t c : chosen) {
				auto holds = [&](int lit) {
					bool v = sat.value(lit >> 1);
					return (lit & 1) ? !v : v;
				};
				expect(holds(universe[c].first) || holds(universe[c].second),
				       "2-sat model does not satisfy its clauses");
			}
		}
		++satInstances;
		if (chosen.size() == kMaxClauses)
			return;
		for (std::size_t c = start; c < universe.size(); ++c) {
			chosen.push_back(c);
			self(self, c + 1, std::uint16_t(mask & satMask[c]));
			chosen.pop_back();
		}
	};
	sweep(sweep, 0, 0xffff);
	expect(satInstances == 2391496,
	       "expected 2391496 clause sets, got " + std::to_string(satInstances));

	// matching: every bipartite graph with <= 5 left and <= 4 right vertices
	Matcher matcher;
	std::uint64_t graphs = 0;
	for (int l = 0; l <= 5; ++l)
		for (int r = 0; r <= 4; ++r) {
			std::vector<std::vector<int>> adj(static_cast<std::size_t>(l));
			std::uint64_t total = 1ull << (l * r);
			for (std::uint64_t mask = 0; mask < total; ++mask) {
				for (int i = 0; i < l; ++i) {
					adj[std::size_t(i)].clear();
					for (int j = 0; j < r; ++j)
						if (mask >> (i * r + j) & 1)
							adj[std::size_t(i)].push_back(j);
				}
				Counters counters;
				int got = matcher.solve(adj, r, counters);
				int want = brute_matching(l, r, adj);
				expect(got == want, "matching size " + std::to_string(got) + " != " +
				                        std::to_string(want) + " on graph l=" +
				                        std::to_string(l) + " r=" + std::to_string(r) +
				                        " mask=" + std::to_string(mask));
				// the reported pairing must be a real matching of that size
				int paired = 0;
				for (int i = 0; i < l; ++i) {
					int j = matcher.left_match()[std::size_t(i)];
					if (j == -1)
						continue;
					++paired;
					expect(std::find(adj[std::size_t(i)].begin(), adj[std::size_t(i)].end(),
					                 j) != adj[std::size_t(i)].end() &&
					           matcher.right_match()[std::size_t(j)] == i,
					       "matcher pairing inconsistent on graph l=" + std::to_string(l) +
					           " r=" + std::to_string(r) + " mask=" + std::to_string(mask));
				}
				expect(paired == got, "matcher pairing size differs from its return value");
				++graphs;
			}
		}
	detail = std::to_string(satInstances) + " clause sets vs truth table; " +
	         std::to_string(graphs) + " bipartite graphs vs exhaustive matching (" +
	         std::to_string(ms_since(t0)) + " ms)";
	return true;
}

} // namespace

int main() {
	struct Crit {
		int id;
		const char *name;
		bool (*fn)(std::string &);
	};
	const Crit crits[] = {
		{1, "worked example families", crit1},
		{2, "exhaustive small-tree agreement", crit2},
		{3, "randomized agreement + witnesses", crit3},
		{4, "exact-cover reduction", crit4},
		{5, "occurrence bound 2", crit5},
		{6, "occurrence bound 3", crit6},
		{7, "star growth ratios", crit7},
		{8, "aggregation dag", crit8},
		{9, "two-sat + matching", crit9},
	};
	bool allOk = true;
	for (const Crit &c : crits) {
		std::string detail;
		bool ok = false;
		try {
			ok = c.fn(detail);
		} catch (const Failure &f) {
			detail = f.what;
		} catch (const std::exception &e) {
			detail = std::string("unexpected exception: ") + e.what();
		}
		std::printf("criterion %d (%s): %s — %s\n", c.id, c.name, ok ? "pass" : "FAIL",
		            detail.c_str());
		std::fflush(stdout);
		allOk = allOk && ok;
	}
	return allOk ? 0 : 1;
}
