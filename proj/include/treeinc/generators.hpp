#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "treeinc/tree.hpp"

namespace treeinc {

struct GenSpec {
	std::size_t patternNodes = 6;
	std::size_t textNodes = 12;
	std::size_t maxDegree = 4;
	std::size_t labelCount = 3;
	// 0 = unconstrained; otherwise no pattern leaf label occurs more than
	// occCap times in the text
	std::size_t occCap = 0;
	// top up one pattern leaf label to exactly occCap text occurrences
	bool forceOccExact = false;
	bool uniquePatternLeaves = false;
	double plantProbability = 0.5;
};

struct GenInstance {
	LabeledTree pattern;
	LabeledTree text;
	bool planted = false;
};

// Random instance; with probability plantProbability the text is grown
// around an embedded copy of the pattern, so inclusion is guaranteed.
GenInstance gen_random(std::mt19937_64 &rng, const GenSpec &spec);

// pattern: root with d distinct leaves; text: the same root label with two
// copies of the pattern hanging under it
GenInstance gen_star(std::size_t d);

// Exact cover by 3-sets: triples over {1..n}, 1-based.
struct X3CInstance {
	int n = 0;
	std::vector<std::array<int, 3>> triples;
};

// Every element ends up in at least one and at most three triples.
// Requires n % 3 == 0 and m <= n.
X3CInstance gen_x3c_random(std::mt19937_64 &rng, int n, int m);

// "n m" on the first line, then one "a b c" line per triple
std::string serialize_x3c(const X3CInstance &inst);
X3CInstance parse_x3c(std::string_view text);

// Encodes the cover question as a tree-inclusion question: the pattern is
// included in the text iff some subfamily of the triples covers every
// element exactly once. Both trees have height 2 and no text leaf label
// occurs more than three times.
struct X3CTrees {
	LabeledTree pattern;
	LabeledTree text;
};
X3CTrees x3c_to_trees(const X3CInstance &inst);

} // namespace treeinc
