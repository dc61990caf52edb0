#ifndef GRLOCAL_ERRORS_HPP
#define GRLOCAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grlocal {

/// Violated precondition or malformed input. The CLI maps this to exit code 2.
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A product left the truncation window. Distinct from other precondition
/// failures so callers can tell truncation overflow from bad input.
class TruncationError : public PreconditionError {
public:
  explicit TruncationError(const std::string& what) : PreconditionError(what) {}
};

/// Internal invariant violation (a bug, not a user error). CLI exit code 3.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace grlocal

#endif
