#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treeinc/mapping.hpp"

namespace treeinc {

struct Counters {
	std::uint64_t setUnions = 0;          // elementary family/set operations
	std::uint64_t branches = 0;           // recursive branch spawns (occ3)
	std::uint64_t dpCells = 0;            // (pattern node, text node) cells evaluated
	std::uint64_t matchAugmentations = 0; // bipartite augmenting-path searches
};

struct RunLimits {
	std::uint64_t unionBudget = 0;                   // 0 = unlimited
	std::uint64_t familyBitsBudget = 1ull << 31;     // max bits of live family storage
	bool extractWitness = true;
	std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct RunResult {
	bool included = false;
	std::vector<NodeId> minimalRoots; // ascending preorder ids
	std::optional<InclusionMapping> witness;
	std::string algo;
	Counters counters;
	std::int64_t wallTimeMicros = 0;

	// extra instrumentation (not part of the wire formats)
	std::uint32_t maxK = 0;         // largest live 3-candidate-child count when branching starts
	std::uint32_t maxD2 = 0;        // largest per-cell count of 2-candidate children
	std::uint32_t maxD3 = 0;        // largest per-cell count of 3-candidate children
	bool fibBoundRespected = true;  // per cell: branches <= 2 * 1.62^k
	bool enumBoundRespected = true; // per call: leaves <= 2^min(d2,d3)
};

} // namespace treeinc
