#pragma once

#include <stdexcept>
#include <string>

namespace colearn {

// Weight/feature dimension disagreement, always a misconfigured domain.
struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// PA/CSPA learning rate requested for a zero delta vector.
struct DegenerateDeltaError : std::domain_error {
  explicit DegenerateDeltaError(const std::string& what) : std::domain_error(what) {}
};

struct ConfigError : std::invalid_argument {
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Solution space larger than the caller's enumeration limit.
struct EnumerationLimitError : std::runtime_error {
  explicit EnumerationLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Bound formula requested for a rule it was never derived for.
struct UnsupportedRuleError : std::invalid_argument {
  explicit UnsupportedRuleError(const std::string& what) : std::invalid_argument(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace colearn
