#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathres/quiver.hpp"
#include "pathres/rewrite.hpp"

namespace pathres {

// Weighted degree-lexicographic order. Paths compare by total weight, then
// letter by letter starting from the rightmost arrow; vertices sit below all
// arrows and compare by index.
class DeglexOrder {
 public:
  // `ascending` lists every arrow once, smallest first. Missing weights are 1.
  DeglexOrder(const Quiver& q, std::vector<std::uint32_t> ascending, std::vector<std::uint64_t> weights = {});
  static DeglexOrder by_names(const Quiver& q, const std::vector<std::string>& ascending);

  int compare(Path a, Path b) const;
  bool less(Path a, Path b) const { return compare(a, b) < 0; }
  std::uint64_t weight(Path p) const;
  Path tip(const PathPoly& x) const;
  // Every rhs term is below its tip.
  bool orients(const ReductionSystem& r) const;

  const std::vector<std::uint32_t>& ascending() const { return ascending_; }
  const std::vector<std::uint64_t>& weights() const { return weights_; }

 private:
  const Quiver* q_;
  std::vector<std::uint32_t> ascending_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint64_t> weights_;
};

enum class ReachStatus { Yes, No, FuelExhausted };

struct ReachResult {
  ReachStatus status;
  Trace trace;
  std::size_t steps = 0;
};

constexpr std::size_t kDefaultReachFuel = 10000;

// Does some reduction take `source` to a combination containing `target`?
// With a coefficient the search runs over whole reduction states and asks for
// that exact coefficient; without one it follows single paths, which decides
// the path-level relation and is much cheaper. `strict` excludes target == source.
ReachResult reaches(const ReductionSystem& r, Path source, Path target, const std::optional<Scalar>& coef,
                    std::size_t fuel = kDefaultReachFuel, bool strict = true);

struct MintipResult {
  std::vector<Path> tips;
  bool complete;  // false when completion stopped at the degree cap
};

// Tips of the completion of the given generators.
MintipResult mintip(const Quiver& q, const std::vector<PathPoly>& generators, const DeglexOrder& order,
                    std::size_t degree_cap = 12);

}  // namespace pathres
