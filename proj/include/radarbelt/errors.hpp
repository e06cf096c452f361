#pragma once

#include <stdexcept>
#include <string>

namespace radarbelt {

/// Argument outside an operation's domain (negative width, omega >= zeta_max, ...).
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Iterative or closed-form numerics failed to produce a trustworthy answer.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// No placement within the searched family/bounds covers the belt.
class InfeasibleError : public std::runtime_error {
public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace radarbelt
