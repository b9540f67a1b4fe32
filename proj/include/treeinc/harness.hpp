#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "treeinc/run_result.hpp"
#include "treeinc/tree.hpp"

namespace treeinc {

enum class Algo { Oracle, Km, AlgInc1, AlgInc2, Occ2, Occ3, Auto };

std::optional<Algo> algo_from_name(std::string_view name);
std::string algo_name(Algo algo);

// occ2 when the occurrence bound is at most 2 and the pattern's leaf labels
// are unique, occ3 when the bound is at most 3, alginc2 otherwise
Algo choose_auto(const LabeledTree &pattern, const LabeledTree &text);

// resolves Auto and fills wallTimeMicros
RunResult run_algorithm(Algo algo, const LabeledTree &pattern,
                        const LabeledTree &text, const RunLimits &limits = {});

// TREEINC_UNION_BUDGET and TREEINC_FAMILY_BITS override the defaults
RunLimits limits_from_env();

struct CheckOptions {
	std::string patternFile;
	std::string textFile;
	Algo algo = Algo::Auto;
	bool compact = false; // one-line JSON instead of the indented form
	RunLimits limits;
};
// exit code: 0 included, 1 not included, 2 error
int run_check(const CheckOptions &opt, std::ostream &out, std::ostream &err);

struct VerifyOptions {
	std::uint64_t seedFrom = 1;
	std::uint64_t seedTo = 0; // inclusive; empty range when seedTo < seedFrom
	std::size_t maxPattern = 8;
	std::size_t maxText = 14;
	std::size_t labelCount = 3;
	std::size_t maxDegree = 4;
	RunLimits limits;
};
// runs every applicable algorithm per seeded instance; exit 1 with a
// reproducer on the first disagreement or invalid witness
int run_verify(const VerifyOptions &opt, std::ostream &out, std::ostream &err);

struct BenchOptions {
	std::string suiteFile;
	std::string outCsv;
	RunLimits limits;
};
// one CSV row per (instance, algorithm); timeouts and budget hits are
// recorded and the run continues
int run_bench(const BenchOptions &opt, std::ostream &out, std::ostream &err);

struct GenOptions {
	std::string kind; // random | x3c | star
	std::uint64_t seed = 1;
	// random
	std::size_t patternNodes = 6;
	std::size_t textNodes = 12;
	std::size_t maxDegree = 4;
	std::size_t labelCount = 3;
	std::size_t occCap = 0;
	bool uniqueLeaves = false;
	bool forceOccExact = false;
	// x3c
	int n = 6;
	int m = 5;
	// star
	std::size_t d = 8;
	std::string outPattern;
	std::string outText;
	std::string outInstance; // x3c only
};
int run_gen(const GenOptions &opt, std::ostream &out, std::ostream &err);

} // namespace treeinc
