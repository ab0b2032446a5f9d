#include "ecindex/indices.hpp"

#include <string>

#include "ecindex/error.hpp"

namespace ecindex {
namespace {

EciValue halve(std::int64_t twice, const char* what) {
  if (twice < 0 || twice % 2 != 0) {
    throw std::logic_error(std::string(what) + ": doubled value " +
                           std::to_string(twice) + " is not a non-negative even number");
  }
  return {static_cast<std::uint64_t>(twice / 2)};
}

}  // namespace

EciValue eci(const EccentricityProfile& p) {
  if (p.eccentricity.size() < 2) {
    throw DomainError("eccentric connectivity index needs at least two vertices");
  }
  std::uint64_t sum = 0;
  for (std::size_t v = 0; v < p.eccentricity.size(); ++v) {
    sum += static_cast<std::uint64_t>(p.eccentricity[v]) *
           static_cast<std::uint64_t>(p.degree[v]);
  }
  return {sum};
}

EciValue eci(const Graph& g) {
  if (g.order() < 2) {
    throw DomainError("eccentric connectivity index needs at least two vertices");
  }
  return eci(profile(g));
}

EciValue eci_path_closed_form(std::int64_t n) {
  if (n < 2) throw InputError("path closed form needs n >= 2");
  if (n % 2 == 0) return halve(3 * n * n - 6 * n + 4, "path closed form");
  return halve(3 * (n - 1) * (n - 1), "path closed form");
}

EciValue eci_volcano_closed_form(std::int64_t n, std::int64_t d) {
  if (d < 2 || n < d + 1) {
    throw InputError("volcano closed form needs d >= 2 and n >= d + 1, got n=" +
                     std::to_string(n) + " d=" + std::to_string(d));
  }
  if (d % 2 == 0) {
    return halve(2 * n * d + 2 * n + d * d - 4 * d - 2, "volcano closed form");
  }
  return halve(2 * n * d + 4 * n + d * d - 6 * d - 3, "volcano closed form");
}

std::int64_t volcano_increment(std::int64_t d) { return d % 2 == 0 ? d + 1 : d + 2; }

}  // namespace ecindex
