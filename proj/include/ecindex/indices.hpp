#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

#include "ecindex/graph.hpp"

namespace ecindex {

// Eccentric connectivity index value: the sum over vertices of
// eccentricity times degree. Always a non-negative integer.
struct EciValue {
  std::uint64_t value = 0;

  friend bool operator==(const EciValue&, const EciValue&) = default;
  friend auto operator<=>(const EciValue&, const EciValue&) = default;
};

inline std::ostream& operator<<(std::ostream& os, EciValue v) {
  return os << v.value;
}

// Requires a connected graph with at least two vertices (DomainError).
EciValue eci(const Graph& g);
EciValue eci(const EccentricityProfile& p);

// Index of the path on n >= 2 vertices:
//   (3n^2 - 6n + 4) / 2 for even n,   3(n - 1)^2 / 2 for odd n.
EciValue eci_path_closed_form(std::int64_t n);

// Index of the volcano graph of order n and diameter d (d >= 2, n >= d + 1):
//   nd + n + d^2/2 - 2d - 1         for even d,
//   nd + 2n + d^2/2 - 3d - 3/2      for odd d.
// Evaluated as an exact integer by doubling and halving.
EciValue eci_volcano_closed_form(std::int64_t n, std::int64_t d);

// Growth of the volcano index per added pendant: d + 1 (even d), d + 2 (odd d).
std::int64_t volcano_increment(std::int64_t d);

}  // namespace ecindex
