#include "treeinc/harness.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "treeinc/errors.hpp"
#include "treeinc/fast_inclusion.hpp"
#include "treeinc/generators.hpp"
#include "treeinc/km_baseline.hpp"
#include "treeinc/occ_algorithms.hpp"
#include "treeinc/oracle.hpp"

namespace treeinc {

namespace {

using nlohmann::json;

std::string read_file(const std::string &path) {
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw std::runtime_error("cannot read " + path);
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

void write_file(const std::string &path, const std::string &content) {
	std::ofstream out(path, std::ios::binary);
	if (!(out << content))
		throw std::runtime_error("cannot write " + path);
}

json result_json(const RunResult &res) {
	json j;
	j["included"] = res.included;
	j["algo"] = res.algo;
	j["minimalRoots"] = res.minimalRoots;
	j["counters"] = {{"setUnions", res.counters.setUnions},
	                 {"branches", res.counters.branches},
	                 {"dpCells", res.counters.dpCells},
	                 {"matchAugmentations", res.counters.matchAugmentations}};
	j["wallTimeMicros"] = res.wallTimeMicros;
	if (res.witness) {
		json pairs = json::array();
		for (auto [pu, tv] : res.witness->pairs)
			pairs.push_back({pu, tv});
		j["witness"] = std::move(pairs);
	}
	return j;
}

} // namespace

std::optional<Algo> algo_from_name(std::string_view name) {
	if (name == "oracle") return Algo::Oracle;
	if (name == "km") return Algo::Km;
	if (name == "alginc1") return Algo::AlgInc1;
	if (name == "alginc2") return Algo::AlgInc2;
	if (name == "occ2") return Algo::Occ2;
	if (name == "occ3") return Algo::Occ3;
	if (name == "auto") return Algo::Auto;
	return std::nullopt;
}

std::string algo_name(Algo algo) {
	switch (algo) {
	case Algo::Oracle: return "oracle";
	case Algo::Km: return "km";
	case Algo::AlgInc1: return "alginc1";
	case Algo::AlgInc2: return "alginc2";
	case Algo::Occ2: return "occ2";
	case Algo::Occ3: return "occ3";
	case Algo::Auto: return "auto";
	}
	return "?";
}

Algo choose_auto(const LabeledTree &pattern, const LabeledTree &text) {
	std::size_t occ = occ_bound(pattern, text);
	if (occ <= 2 && unique_leaf_labels(pattern))
		return Algo::Occ2;
	if (occ <= 3)
		return Algo::Occ3;
	return Algo::AlgInc2;
}

RunResult run_algorithm(Algo algo, const LabeledTree &pattern,
                        const LabeledTree &text, const RunLimits &limits) {
	if (algo == Algo::Auto)
		algo = choose_auto(pattern, text);
	auto t0 = std::chrono::steady_clock::now();
	RunResult res;
	switch (algo) {
	case Algo::Oracle: {
		res.algo = "oracle";
		res.minimalRoots = oracle_minimal_roots(pattern, text);
		res.included = !res.minimalRoots.empty();
		if (res.included && limits.extractWitness) {
			InclusionMapping w;
			if (oracle_pinned(pattern, text, res.minimalRoots.front(), &w))
				res.witness = std::move(w);
		}
		break;
	}
	case Algo::Km:
		res = km_run(pattern, text, limits);
		break;
	case Algo::AlgInc1:
		res = alginc_run(pattern, text, IncVariant::Dense, limits);
		break;
	case Algo::AlgInc2:
		res = alginc_run(pattern, text, IncVariant::Sparse, limits);
		break;
	case Algo::Occ2:
		res = occ2_run(pattern, text, limits);
		break;
	case Algo::Occ3:
		res = occ3_run(pattern, text, limits);
		break;
	case Algo::Auto:
		break; // resolved above
	}
	res.wallTimeMicros = std::chrono::duration_cast<std::chrono::microseconds>(
	                         std::chrono::steady_clock::now() - t0)
	                         .count();
	return res;
}

RunLimits limits_from_env() {
	RunLimits lim;
	if (const char *s = std::getenv("TREEINC_UNION_BUDGET"))
		lim.unionBudget = std::strtoull(s, nullptr, 10);
	if (const char *s = std::getenv("TREEINC_FAMILY_BITS"))
		lim.familyBitsBudget = std::strtoull(s, nullptr, 10);
	return lim;
}

int run_check(const CheckOptions &opt, std::ostream &out, std::ostream &err) {
	try {
		LabeledTree pattern = parse_tree(read_file(opt.patternFile));
		LabeledTree text = parse_tree(read_file(opt.textFile));
		RunResult res = run_algorithm(opt.algo, pattern, text, opt.limits);
		json j = result_json(res);
		out << (opt.compact ? j.dump() : j.dump(2)) << "\n";
		return res.included ? 0 : 1;
	} catch (const std::exception &e) {
		err << "error: " << e.what() << "\n";
		return 2;
	}
}

namespace {

struct VerifyRun {
	Algo algo;
	RunResult res;
};

// all algorithms whose stated requirements the instance meets
std::vector<Algo> applicable_algos(const LabeledTree &pattern,
                                   const LabeledTree &text) {
	std::vector<Algo> algos;
	if (pattern.size() <= 12 && text.size() <= 20)
		algos.push_back(Algo::Oracle);
	algos.push_back(Algo::Km);
	algos.push_back(Algo::AlgInc1);
	algos.push_back(Algo::AlgInc2);
	std::size_t occ = occ_bound(pattern, text);
	if (occ <= 2 && unique_leaf_labels(pattern))
		algos.push_back(Algo::Occ2);
	if (occ <= 3)
		algos.push_back(Algo::Occ3);
	return algos;
}

void print_reproducer(std::ostream &err, std::uint64_t seed,
                      const GenInstance &inst,
                      const std::vector<VerifyRun> &runs,
                      const std::string &what) {
	err << "verify failure at seed " << seed << ": " << what << "\n";
	err << "pattern: " << serialize_tree(inst.pattern) << "\n";
	err << "text:    " << serialize_tree(inst.text) << "\n";
	for (const VerifyRun &r : runs) {
		err << "  " << algo_name(r.algo) << ": included=" << r.res.included
		    << " minimalRoots=[";
		for (std::size_t i = 0; i < r.res.minimalRoots.size(); ++i)
			err << (i ? "," : "") << r.res.minimalRoots[i];
		err << "]\n";
	}
}

} // namespace

int run_verify(const VerifyOptions &opt, std::ostream &out, std::ostream &err) {
	std::uint64_t checked = 0;
	for (std::uint64_t seed = opt.seedFrom;
	     opt.seedTo >= opt.seedFrom && seed <= opt.seedTo; ++seed) {
		std::mt19937_64 rng(seed);
		GenSpec gs;
		gs.patternNodes = std::uniform_int_distribution<std::size_t>(
		    1, std::max<std::size_t>(opt.maxPattern, 1))(rng);
		gs.textNodes = std::uniform_int_distribution<std::size_t>(
		    1, std::max<std::size_t>(opt.maxText, 1))(rng);
		gs.maxDegree = opt.maxDegree;
		gs.labelCount = opt.labelCount;
		GenInstance inst = gen_random(rng, gs);

		std::vector<VerifyRun> runs;
		for (Algo a : applicable_algos(inst.pattern, inst.text))
			runs.push_back(
			    {a, run_algorithm(a, inst.pattern, inst.text, opt.limits)});

		const RunResult &ref = runs.front().res;
		for (const VerifyRun &r : runs) {
			if (r.res.included != ref.included ||
			    r.res.minimalRoots != ref.minimalRoots) {
				print_reproducer(err, seed, inst, runs,
				                 algo_name(r.algo) + " disagrees with " +
				                     algo_name(runs.front().algo));
				return 1;
			}
			if (r.res.included && opt.limits.extractWitness) {
				if (!r.res.witness) {
					print_reproducer(err, seed, inst, runs,
					                 algo_name(r.algo) + " produced no witness");
					return 1;
				}
				std::string why;
				if (!validate_inclusion_mapping(inst.pattern, inst.text,
				                                *r.res.witness, true, &why)) {
					print_reproducer(err, seed, inst, runs,
					                 algo_name(r.algo) +
					                     " witness invalid: " + why);
					return 1;
				}
			}
		}
		++checked;
	}
	out << "verified " << checked << " instances, 0 disagreements\n";
	return 0;
}

namespace {

struct BenchInstance {
	std::string id;
	LabeledTree pattern;
	LabeledTree text;
};

std::vector<Algo> parse_algo_list(const json &fam) {
	std::vector<Algo> algos;
	if (!fam.contains("algos"))
		return {Algo::Auto};
	for (const auto &name : fam.at("algos")) {
		auto a = algo_from_name(name.get<std::string>());
		if (!a)
			throw PreconditionError("unknown algorithm in suite: " +
			                        name.get<std::string>());
		algos.push_back(*a);
	}
	return algos;
}

std::vector<std::uint64_t> parse_seed_list(const json &fam) {
	std::vector<std::uint64_t> seeds;
	if (fam.contains("seeds"))
		for (const auto &s : fam.at("seeds"))
			seeds.push_back(s.get<std::uint64_t>());
	else
		seeds.push_back(fam.value("seed", std::uint64_t{1}));
	return seeds;
}

std::vector<BenchInstance> family_instances(const json &fam) {
	std::string kind = fam.at("kind").get<std::string>();
	std::string name = fam.value("name", kind);
	std::vector<BenchInstance> out;
	if (kind == "star") {
		std::size_t from = fam.value("dFrom", std::size_t{8});
		std::size_t to = fam.value("dTo", std::size_t{16});
		for (std::size_t d = from; d <= to; ++d) {
			GenInstance g = gen_star(d);
			out.push_back({name + "-d" + std::to_string(d),
			               std::move(g.pattern), std::move(g.text)});
		}
	} else if (kind == "random") {
		GenSpec gs;
		gs.patternNodes = fam.value("patternNodes", gs.patternNodes);
		gs.textNodes = fam.value("textNodes", gs.textNodes);
		gs.maxDegree = fam.value("maxDegree", gs.maxDegree);
		gs.labelCount = fam.value("labelCount", gs.labelCount);
		gs.occCap = fam.value("occCap", gs.occCap);
		gs.forceOccExact = fam.value("forceOccExact", gs.forceOccExact);
		gs.uniquePatternLeaves = fam.value("uniqueLeaves", gs.uniquePatternLeaves);
		gs.plantProbability = fam.value("plantProbability", gs.plantProbability);
		for (std::uint64_t seed : parse_seed_list(fam)) {
			std::mt19937_64 rng(seed);
			GenInstance g = gen_random(rng, gs);
			out.push_back({name + "-s" + std::to_string(seed),
			               std::move(g.pattern), std::move(g.text)});
		}
	} else if (kind == "x3c") {
		int n = fam.value("n", 6);
		int m = fam.value("m", 5);
		for (std::uint64_t seed : parse_seed_list(fam)) {
			std::mt19937_64 rng(seed);
			X3CTrees trees = x3c_to_trees(gen_x3c_random(rng, n, m));
			out.push_back({name + "-s" + std::to_string(seed),
			               std::move(trees.pattern), std::move(trees.text)});
		}
	} else {
		throw PreconditionError("unknown family kind: " + kind);
	}
	return out;
}

} // namespace

int run_bench(const BenchOptions &opt, std::ostream &out, std::ostream &err) {
	try {
		json suite = json::parse(read_file(opt.suiteFile));
		std::int64_t timeoutMillis = suite.value("timeoutMillis", std::int64_t{0});

		std::ostringstream csv;
		csv << "instance,algo,d,d2,d3,k,setUnions,branches,dpCells,timeMicros,"
		       "included\n";
		std::size_t rows = 0;
		for (const json &fam : suite.at("families")) {
			std::vector<Algo> algos = parse_algo_list(fam);
			for (const BenchInstance &inst : family_instances(fam)) {
				std::size_t d = stats(inst.pattern).degree;
				for (Algo algo : algos) {
					RunLimits lim = opt.limits;
					if (timeoutMillis > 0)
						lim.deadline = std::chrono::steady_clock::now() +
						               std::chrono::milliseconds(timeoutMillis);
					csv << inst.id << ',' << algo_name(algo) << ',' << d << ',';
					auto t0 = std::chrono::steady_clock::now();
					auto elapsed = [&t0] {
						return std::chrono::duration_cast<
						           std::chrono::microseconds>(
						           std::chrono::steady_clock::now() - t0)
						    .count();
					};
					try {
						RunResult res =
						    run_algorithm(algo, inst.pattern, inst.text, lim);
						if (res.algo == "occ3")
							csv << res.maxD2 << ',' << res.maxD3 << ','
							    << res.maxK << ',';
						else
							csv << ",,,";
						csv << res.counters.setUnions << ','
						    << res.counters.branches << ','
						    << res.counters.dpCells << ','
						    << res.wallTimeMicros << ','
						    << (res.included ? 1 : 0) << "\n";
					} catch (const ResourceLimitError &e) {
						csv << ",,,,,," << elapsed() << ",timeout\n";
						err << inst.id << " " << algo_name(algo)
						    << " hit a limit: " << e.what() << "\n";
					} catch (const PreconditionError &e) {
						csv << ",,,,,," << elapsed() << ",error\n";
						err << inst.id << " " << algo_name(algo)
						    << " rejected: " << e.what() << "\n";
					}
					++rows;
				}
			}
		}
		if (opt.outCsv.empty())
			out << csv.str();
		else {
			write_file(opt.outCsv, csv.str());
			out << "wrote " << rows << " rows to " << opt.outCsv << "\n";
		}
		return 0;
	} catch (const std::exception &e) {
		err << "error: " << e.what() << "\n";
		return 2;
	}
}

int run_gen(const GenOptions &opt, std::ostream &out, std::ostream &err) {
	try {
		std::mt19937_64 rng(opt.seed);
		LabeledTree pattern, text;
		if (opt.kind == "random") {
			GenSpec gs;
			gs.patternNodes = opt.patternNodes;
			gs.textNodes = opt.textNodes;
			gs.maxDegree = opt.maxDegree;
			gs.labelCount = opt.labelCount;
			gs.occCap = opt.occCap;
			gs.uniquePatternLeaves = opt.uniqueLeaves;
			gs.forceOccExact = opt.forceOccExact;
			GenInstance g = gen_random(rng, gs);
			pattern = std::move(g.pattern);
			text = std::move(g.text);
		} else if (opt.kind == "star") {
			GenInstance g = gen_star(opt.d);
			pattern = std::move(g.pattern);
			text = std::move(g.text);
		} else if (opt.kind == "x3c") {
			X3CInstance inst = gen_x3c_random(rng, opt.n, opt.m);
			if (!opt.outInstance.empty()) {
				write_file(opt.outInstance, serialize_x3c(inst));
				out << "wrote " << opt.outInstance << "\n";
			}
			X3CTrees trees = x3c_to_trees(inst);
			pattern = std::move(trees.pattern);
			text = std::move(trees.text);
			if (opt.outInstance.empty() && opt.outPattern.empty() &&
			    opt.outText.empty())
				out << serialize_x3c(inst);
		} else {
			throw PreconditionError("unknown generator kind: " + opt.kind);
		}
		if (!opt.outPattern.empty()) {
			write_file(opt.outPattern, serialize_tree(pattern) + "\n");
			out << "wrote " << opt.outPattern << "\n";
		}
		if (!opt.outText.empty()) {
			write_file(opt.outText, serialize_tree(text) + "\n");
			out << "wrote " << opt.outText << "\n";
		}
		if (opt.kind != "x3c" && opt.outPattern.empty() && opt.outText.empty()) {
			out << "pattern: " << serialize_tree(pattern) << "\n";
			out << "text:    " << serialize_tree(text) << "\n";
		}
		return 0;
	} catch (const std::exception &e) {
		err << "error: " << e.what() << "\n";
		return 2;
	}
}

} // namespace treeinc
