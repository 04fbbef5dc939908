#pragma once

#include <stdexcept>
#include <string>

namespace jset {

/// A size guard was exceeded (matrix dimension, enumeration degree, ...).
class CapExceeded : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent computations of the same quantity disagreed.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

namespace detail {

[[noreturn]] inline void fail(const std::string &what) {
  throw std::invalid_argument(what);
}

inline void require(bool cond, const std::string &what) {
  if (!cond)
    fail(what);
}

} // namespace detail
} // namespace jset
