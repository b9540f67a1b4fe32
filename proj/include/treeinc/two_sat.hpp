#pragma once

#include <vector>

namespace treeinc {

// Implication-graph 2-SAT with an iterative strongly-connected-components
// pass. Instances are reusable so tight enumeration loops can avoid
// reallocation.
class TwoSat {
public:
	explicit TwoSat(int vars = 0) { reset(vars); }

	void reset(int vars);
	int add_var();
	int var_count() const { return vars_; }

	static int lit(int var, bool positive) { return 2 * var + !positive; }
	static int negate(int literal) { return literal ^ 1; }

	void add_clause(int a, int b); // a or b
	void add_unit(int a) { add_clause(a, a); }

	bool solve(); // leaves a model readable through value()
	bool value(int var) const { return assignment_[var]; }

private:
	int vars_ = 0;
	std::vector<std::vector<int>> adj_; // one node per literal
	std::vector<int> comp_, index_, low_, sccStack_;
	std::vector<bool> onStack_;
	std::vector<bool> assignment_;
	struct Frame {
		int node;
		int edge;
	};
	std::vector<Frame> callStack_;
};

} // namespace treeinc
