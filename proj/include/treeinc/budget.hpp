#pragma once

#include <chrono>

#include "treeinc/errors.hpp"
#include "treeinc/run_result.hpp"

namespace treeinc {

// Tracks elementary set operations against RunLimits. Limits are checked
// roughly every 64k recorded operations to keep the hot loops cheap.
class OpBudget {
public:
	OpBudget(Counters &counters, const RunLimits &limits)
	    : counters_(&counters), limits_(&limits),
	      next_(counters.setUnions + kCheckEvery) {}

	void add_unions(std::uint64_t n) {
		counters_->setUnions += n;
		if (counters_->setUnions >= next_)
			check_now();
	}

	void check_now() {
		next_ = counters_->setUnions + kCheckEvery;
		if (limits_->unionBudget != 0 &&
		    counters_->setUnions > limits_->unionBudget)
			throw ResourceLimitError("set-operation budget exceeded");
		check_deadline();
	}

	void check_deadline() const {
		if (limits_->deadline &&
		    std::chrono::steady_clock::now() > *limits_->deadline)
			throw ResourceLimitError("deadline exceeded");
	}

private:
	static constexpr std::uint64_t kCheckEvery = 1u << 16;

	Counters *counters_;
	const RunLimits *limits_;
	std::uint64_t next_;
};

} // namespace treeinc
