#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "pathres/rewrite.hpp"

namespace pathres {

// An n-ambiguity with its left factorization [u_0, ..., u_n] and right
// factorization [v_n, ..., v_0], both in written order.
struct Chain {
  int degree;
  Path path;
  std::vector<Path> left;
  std::vector<Path> right;
};

struct ChainSet {
  int degree;
  std::vector<Chain> chains;     // canonical order
  std::vector<Path> truncated;   // parents whose extensions passed the length cap
  bool complete() const { return truncated.empty(); }
};

// Chain membership and factorizations for one reduction system. Degrees are
// disjoint, so each path has at most one chain degree.
class ChainIndex {
 public:
  explicit ChainIndex(const ReductionSystem& r) : r_(&r) {}

  const ReductionSystem& system() const { return *r_; }
  std::optional<int> degree_of(Path p) const;
  std::optional<std::vector<Path>> left_factorization(Path p) const;
  std::optional<std::vector<Path>> right_factorization(Path p) const;

  // n >= -1. Without a cap the enumeration is exhaustive: an n-chain has
  // length at most 1 + n*(max tip length - 1).
  ChainSet chains(int n, std::optional<std::size_t> length_cap = std::nullopt) const;
  // Exhaustive, cached.
  const std::vector<Path>& generators(int n) const;

 private:
  // Offsets [b_0, b_1, ..., b_{n+1}] of the greedy left factorization.
  std::optional<std::vector<std::size_t>> left_cuts(Path p) const;
  std::optional<std::vector<std::size_t>> right_cuts(Path p) const;

  const ReductionSystem* r_;
  mutable std::unordered_map<std::uint32_t, int> degree_;  // -2 means not a chain
  mutable std::unordered_map<int, std::vector<Path>> generators_;
};

inline ChainSet chains(const ReductionSystem& r, int n, std::optional<std::size_t> length_cap = std::nullopt) {
  return ChainIndex(r).chains(n, length_cap);
}

// For systems whose tips all have length 2: walks a_0 ... a_n with every
// adjacent pair a tip. Throws NotQuadratic otherwise.
std::vector<Path> chains_quadratic(const ReductionSystem& r, int n);

}  // namespace pathres
