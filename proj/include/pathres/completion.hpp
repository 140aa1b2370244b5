#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathres/order.hpp"
#include "pathres/rewrite.hpp"

namespace pathres {

// A 2-ambiguity p = u0 u1 u2 = v2 v1 v0, with u0 u1 and v1 v0 tips.
struct Overlap {
  Path path;
  std::vector<Path> left;   // u0, u1, u2
  std::vector<Path> right;  // v2, v1, v0
  std::size_t left_rule;
  std::size_t right_rule;
};

std::vector<Overlap> overlaps(const ReductionSystem& r);

struct Resolution2 {
  NormalForm left;   // first step reduces u0 u1
  NormalForm right;  // first step reduces v1 v0
  PathPoly residual;
  bool resolves() const { return residual.is_zero(); }
};

Resolution2 resolve_overlap(const ReductionSystem& r, const Overlap& ov, std::size_t fuel = kDefaultNormalFormFuel);

// Orient each nonzero generator by its tip and make it monic.
std::vector<Rule> orient(const Quiver& q, const std::vector<PathPoly>& generators, const DeglexOrder& order);

enum class CompletionStatus { Complete, CapExceeded, RoundsExceeded };

struct CompletionOptions {
  std::size_t degree_cap = 12;
  std::size_t max_rounds = 200;
  std::size_t fuel = kDefaultNormalFormFuel;
};

struct CompletionResult {
  CompletionStatus status;
  std::vector<Rule> rules;
  std::size_t rounds = 0;
  std::vector<Path> added;  // tips absent from the input, in order of introduction
  std::string note;
};

// Knuth-Bendix style completion over 2-ambiguities, shortest first. The result
// is inter-reduced: no tip divides another and every rhs is irreducible.
CompletionResult complete(const Quiver& q, std::vector<Rule> rules, const DeglexOrder& order,
                          const CompletionOptions& opts = {});

struct DiamondReport {
  bool rhs_irreducible = true;
  bool overlaps_resolve = true;
  bool termination_certified = false;
  std::string termination;  // "order-certified" or "unverified termination"
  std::vector<Path> unresolved;
  std::vector<std::size_t> reducible_rhs;
  bool holds() const { return rhs_irreducible && overlaps_resolve && termination != "fuel exhausted"; }
};

// Without an orienting order, termination is attested by normalising every
// path of length <= spot_length within the fuel budget.
DiamondReport check_diamond(const ReductionSystem& r, const DeglexOrder* order = nullptr,
                            std::size_t spot_length = 6, std::size_t fuel = kDefaultNormalFormFuel);

}  // namespace pathres
