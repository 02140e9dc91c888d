// Exception types used across the library. The CLI maps InvalidParam /
// ParseError to usage errors; budget overruns are InvalidParam subclasses so
// callers can treat them uniformly.
#pragma once

#include <stdexcept>
#include <string>

namespace wlx {

struct InvalidParam : std::invalid_argument {
  explicit InvalidParam(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BudgetExceeded : InvalidParam {
  explicit BudgetExceeded(const std::string& msg) : InvalidParam(msg) {}
};

struct SizeLimitExceeded : InvalidParam {
  explicit SizeLimitExceeded(const std::string& msg) : InvalidParam(msg) {}
};

}  // namespace wlx
