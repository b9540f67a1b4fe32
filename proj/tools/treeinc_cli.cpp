#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "treeinc/harness.hpp"

namespace {

// "A..B" or a single seed "A"
bool parse_seed_range(const std::string &text, std::uint64_t &from,
                      std::uint64_t &to) {
	try {
		std::size_t dots = text.find("..");
		if (dots == std::string::npos) {
			from = to = std::stoull(text);
			return true;
		}
		from = std::stoull(text.substr(0, dots));
		to = std::stoull(text.substr(dots + 2));
		return true;
	} catch (const std::exception &) {
		return false;
	}
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"unordered tree inclusion: decide, locate, verify, benchmark"};
	app.require_subcommand(1);

	treeinc::CheckOptions check;
	std::string algoName = "auto";
	auto *checkCmd = app.add_subcommand(
	    "check", "decide inclusion and report every minimal including subtree");
	checkCmd->add_option("--pattern", check.patternFile, "pattern tree file")
	    ->required();
	checkCmd->add_option("--text", check.textFile, "text tree file")->required();
	checkCmd
	    ->add_option("--algo", algoName,
	                 "oracle|km|alginc1|alginc2|occ2|occ3|auto")
	    ->check(CLI::IsMember({"oracle", "km", "alginc1", "alginc2", "occ2",
	                           "occ3", "auto"}));
	checkCmd->add_flag("--json", check.compact, "one-line JSON output");

	treeinc::GenOptions gen;
	auto *genCmd = app.add_subcommand("gen", "write generated instances");
	genCmd->add_option("kind", gen.kind, "random|x3c|star")
	    ->required()
	    ->check(CLI::IsMember({"random", "x3c", "star"}));
	genCmd->add_option("--seed", gen.seed, "generator seed");
	genCmd->add_option("--pattern-nodes", gen.patternNodes, "pattern size");
	genCmd->add_option("--text-nodes", gen.textNodes, "text size");
	genCmd->add_option("--max-degree", gen.maxDegree, "max outdegree");
	genCmd->add_option("--labels", gen.labelCount, "label alphabet size");
	genCmd->add_option("--occ-cap", gen.occCap,
	                   "cap text occurrences of pattern leaf labels (0 = off)");
	genCmd->add_flag("--unique-leaves", gen.uniqueLeaves,
	                 "distinct pattern leaf labels");
	genCmd->add_flag("--force-occ-exact", gen.forceOccExact,
	                 "drive one pattern leaf label to exactly the cap");
	genCmd->add_option("--n", gen.n, "cover universe size (x3c)");
	genCmd->add_option("--m", gen.m, "triple count (x3c)");
	genCmd->add_option("--d", gen.d, "leaf count (star)");
	genCmd->add_option("--out-pattern", gen.outPattern, "pattern output file");
	genCmd->add_option("--out-text", gen.outText, "text output file");
	genCmd->add_option("--out-instance", gen.outInstance,
	                   "cover instance output file (x3c)");

	treeinc::VerifyOptions verify;
	std::string seeds = "1..100";
	auto *verifyCmd = app.add_subcommand(
	    "verify", "cross-check all applicable algorithms on seeded instances");
	verifyCmd->add_option("--seeds", seeds, "seed range A..B (inclusive)");
	verifyCmd->add_option("--max-pattern", verify.maxPattern,
	                      "largest pattern size");
	verifyCmd->add_option("--max-text", verify.maxText, "largest text size");
	verifyCmd->add_option("--labels", verify.labelCount, "label alphabet size");
	verifyCmd->add_option("--max-degree", verify.maxDegree, "max outdegree");

	treeinc::BenchOptions bench;
	auto *benchCmd =
	    app.add_subcommand("bench", "run a suite file and emit counter CSV");
	benchCmd->add_option("--suite", bench.suiteFile, "suite JSON file")
	    ->required();
	benchCmd->add_option("--out", bench.outCsv, "CSV output file");

	CLI11_PARSE(app, argc, argv);

	treeinc::RunLimits limits = treeinc::limits_from_env();
	if (*checkCmd) {
		check.algo = *treeinc::algo_from_name(algoName);
		check.limits = limits;
		return treeinc::run_check(check, std::cout, std::cerr);
	}
	if (*genCmd)
		return treeinc::run_gen(gen, std::cout, std::cerr);
	if (*verifyCmd) {
		if (!parse_seed_range(seeds, verify.seedFrom, verify.seedTo)) {
			std::cerr << "error: bad seed range '" << seeds << "'\n";
			return 2;
		}
		verify.limits = limits;
		return treeinc::run_verify(verify, std::cout, std::cerr);
	}
	if (*benchCmd) {
		bench.limits = limits;
		return treeinc::run_bench(bench, std::cout, std::cerr);
	}
	return 2;
}
