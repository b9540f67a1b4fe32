#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treeinc {

// Input text could not be parsed; offset is the byte position of the defect.
class ParseError : public std::runtime_error {
public:
	ParseError(const std::string &msg, std::size_t offset)
	    : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

	std::size_t offset() const { return offset_; }

private:
	std::size_t offset_;
};

// An operation was invoked on inputs that violate its stated requirements
// (size guards, label restrictions, infeasible generator parameters, ...).
class PreconditionError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

// A configured budget (set-operation count, family storage, deadline) was hit.
class ResourceLimitError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

} // namespace treeinc
