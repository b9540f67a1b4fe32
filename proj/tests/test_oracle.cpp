#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "treeinc/errors.hpp"
#include "treeinc/mapping.hpp"
#include "treeinc/oracle.hpp"
#include "treeinc/tree.hpp"

using namespace treeinc;

TEST_CASE("basic inclusion with depth gaps") {
	LabeledTree p = parse_tree("a(b,c)");
	LabeledTree t = parse_tree("a(x(b),c,d)");
	InclusionMapping w;
	CHECK(oracle_included(p, t, &w));
	std::string why;
	CHECK(validate_inclusion_mapping(p, t, w, true, &why));
	CHECK(why.empty());
}

TEST_CASE("children match in any order") {
	CHECK(oracle_included(parse_tree("a(b,c)"), parse_tree("a(c,b)")));
	CHECK(oracle_included(parse_tree("a(b,c,d)"), parse_tree("a(d,x(c),b)")));
}

TEST_CASE("mapping is injective") {
	LabeledTree p = parse_tree("a(b,b)");
	CHECK(!oracle_included(p, parse_tree("a(b)")));
	CHECK(oracle_included(p, parse_tree("a(b,x(b))")));
}

TEST_CASE("siblings must land on unrelated text nodes") {
	// the only text b is an ancestor of the only text c
	CHECK(!oracle_included(parse_tree("a(b,c)"), parse_tree("a(b(c))")));
	// and a pattern ancestor pair cannot land on siblings
	CHECK(!oracle_included(parse_tree("a(b(c))"), parse_tree("a(b,c)")));
	CHECK(oracle_included(parse_tree("a(b(c))"), parse_tree("a(b(x(c)))")));
}

TEST_CASE("labels must match") {
	CHECK(!oracle_included(parse_tree("a"), parse_tree("b")));
	CHECK(oracle_included(parse_tree("a"), parse_tree("b(a)")));
}

TEST_CASE("pinned asks for a specific root image") {
	LabeledTree p = parse_tree("a");
	LabeledTree t = parse_tree("b(a)");
	CHECK(!oracle_pinned(p, t, 0));
	InclusionMapping w;
	CHECK(oracle_pinned(p, t, 1, &w));
	REQUIRE(w.pairs.size() == 1);
	CHECK(w.pairs[0].first == 0);
	CHECK(w.pairs[0].second == 1);
}

TEST_CASE("minimal roots exclude nodes with an admitting descendant") {
	LabeledTree p = parse_tree("a");
	LabeledTree t = parse_tree("a(x(a),a)"); // ids: a=0 x=1 a=2 a=3
	auto roots = oracle_minimal_roots(p, t);
	REQUIRE(roots.size() == 2);
	CHECK(roots[0] == 2);
	CHECK(roots[1] == 3);

	LabeledTree p2 = parse_tree("a(b,c)");
	LabeledTree t2 = parse_tree("a(x(b),c,d)");
	auto roots2 = oracle_minimal_roots(p2, t2);
	REQUIRE(roots2.size() == 1);
	CHECK(roots2[0] == 0);

	CHECK(oracle_minimal_roots(parse_tree("q"), t2).empty());
}

TEST_CASE("oracle size guards") {
	LabeledTree big13 = parse_tree("r(c,c,c,c,c,c,c,c,c,c,c,c)");
	LabeledTree big21 = parse_tree("r(c,c,c,c,c,c,c,c,c,c,c,c,c,c,c,c,c,c,c,c)");
	LabeledTree small = parse_tree("r(c)");
	CHECK(big13.size() == 13);
	CHECK(big21.size() == 21);
	CHECK_THROWS_AS(oracle_included(big13, small), PreconditionError);
	CHECK_THROWS_AS(oracle_included(small, big21), PreconditionError);
	CHECK_THROWS_AS(oracle_pinned(big13, small, 0), PreconditionError);
	CHECK_THROWS_AS(oracle_minimal_roots(small, big21), PreconditionError);
	// 12 / 20 are still fine
	LabeledTree pat12 = parse_tree("r(c,c,c,c,c,c,c,c,c,c,c)");
	LabeledTree text20 = parse_tree("r(c,c,c,c,c,c,c,c,c,c,c,c,c,c,c,c,c,c,c)");
	CHECK(pat12.size() == 12);
	CHECK(text20.size() == 20);
	CHECK(oracle_included(pat12, text20));
}

TEST_CASE("mapping validation rejects each broken invariant") {
	std::string why;
	LabeledTree p = parse_tree("a(b,b)");
	LabeledTree t = parse_tree("a(b,b)");

	InclusionMapping twice{{{0, 0}, {1, 1}, {2, 1}}};
	CHECK(!validate_inclusion_mapping(p, t, twice, true, &why));
	CHECK(why == "text node used twice");

	InclusionMapping dup{{{0, 0}, {1, 1}, {1, 2}}};
	CHECK(!validate_inclusion_mapping(p, t, dup, true, &why));
	CHECK(why == "pattern node mapped twice");

	LabeledTree t2 = parse_tree("a(c,b)");
	InclusionMapping mislabeled{{{0, 0}, {1, 1}, {2, 2}}};
	CHECK(!validate_inclusion_mapping(p, t2, mislabeled, true, &why));
	CHECK(why == "label mismatch");

	LabeledTree chain = parse_tree("a(b(b))");
	InclusionMapping related{{{0, 0}, {1, 1}, {2, 2}}};
	CHECK(!validate_inclusion_mapping(p, chain, related, true, &why));
	CHECK(why == "ancestry not preserved");

	InclusionMapping partial{{{0, 0}, {1, 1}}};
	CHECK(!validate_inclusion_mapping(p, t, partial, true, &why));
	CHECK(why == "pattern node unmapped");
	CHECK(validate_inclusion_mapping(p, t, partial, false));

	InclusionMapping oob{{{0, 0}, {1, 9}}};
	CHECK(!validate_inclusion_mapping(p, t, oob, false, &why));
	CHECK(why == "node id out of range");
}

TEST_CASE("x3c brute force") {
	using T = std::vector<std::array<int, 3>>;
	CHECK(x3c_bruteforce(3, T{{{1, 2, 3}}}));
	CHECK(!x3c_bruteforce(3, T{}));
	CHECK(x3c_bruteforce(0, T{}));
	CHECK(x3c_bruteforce(6, T{{{1, 2, 3}, {4, 5, 6}}}));
	CHECK(!x3c_bruteforce(6, T{{{1, 2, 3}, {3, 4, 5}}}));
	CHECK(!x3c_bruteforce(6, T{{{1, 2, 3}, {1, 4, 5}, {2, 4, 6}}}));
	CHECK(x3c_bruteforce(6, T{{{2, 3, 4}, {1, 2, 3}, {4, 5, 6}}}));
	// overlap forces picking the right pair out of three
	CHECK(x3c_bruteforce(9, T{{{1, 2, 3}, {3, 4, 5}, {4, 5, 6}, {7, 8, 9}}}));
	CHECK(!x3c_bruteforce(4, T{{{1, 2, 3}}})); // n not a multiple of 3

	CHECK_THROWS_AS(x3c_bruteforce(3, T{{{0, 1, 2}}}), PreconditionError);
	CHECK_THROWS_AS(x3c_bruteforce(3, T{{{1, 2, 4}}}), PreconditionError);
	T many(21, {1, 2, 3});
	CHECK_THROWS_AS(x3c_bruteforce(3, many), PreconditionError);
}

TEST_CASE("witnesses from every entry point validate") {
	LabeledTree p = parse_tree("a(b(c),d)");
	LabeledTree t = parse_tree("a(a(b(x(c)),d),d)");
	InclusionMapping w1, w2;
	REQUIRE(oracle_included(p, t, &w1));
	CHECK(validate_inclusion_mapping(p, t, w1, true));
	REQUIRE(oracle_pinned(p, t, 1, &w2));
	CHECK(validate_inclusion_mapping(p, t, w2, true));
	CHECK(w2.pairs[0].second == 1);
	auto roots = oracle_minimal_roots(p, t);
	REQUIRE(roots.size() == 1);
	CHECK(roots[0] == 1);
}
