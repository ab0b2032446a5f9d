#pragma once

#include <stdexcept>
#include <string>

namespace ecindex {

// Bad arguments: out-of-range vertices, invalid family parameters.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// The argument is well formed but the quantity is undefined for it
// (eccentricity of a disconnected graph, caterpillar test on a non-tree).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Order exceeds a hard cap of a brute-force routine.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

// Malformed graph6 or edge-list text.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ecindex
