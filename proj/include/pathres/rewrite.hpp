#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pathres/quiver.hpp"

namespace pathres {

struct Rule {
  Path tip;
  PathPoly rhs;
};

// r_{a,s,c}: maps a*s*c to a*f*c and fixes every other path.
struct BasicReduction {
  Path left;
  std::size_t rule;
  Path right;
  bool operator==(const BasicReduction&) const = default;
};

// Applied first to last.
using Trace = std::vector<BasicReduction>;

enum class Strategy { Leftmost, Rightmost };

struct Match {
  std::size_t rule;
  std::size_t pos;  // start offset in the written word
};

struct NormalForm {
  PathPoly value;
  Trace trace;
  bool exhausted = false;  // fuel ran out; value is partial
};

constexpr std::size_t kDefaultNormalFormFuel = 100000;

class ReductionSystem {
 public:
  ReductionSystem(const Quiver& q, std::vector<Rule> rules);

  const Quiver& quiver() const { return *q_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const Field* field() const { return field_; }
  std::size_t max_tip_length() const { return max_tip_; }

  std::vector<Match> matches(Path p) const;
  std::optional<Match> first_match(Path p, Strategy s) const;
  std::optional<Match> match_starting_at(Path p, std::size_t pos) const;
  std::optional<Match> match_ending_at(Path p, std::size_t end) const;
  bool is_irreducible(Path p) const;

  BasicReduction reduction_for(Path p, const Match& m) const;
  // a*s*c, or nullopt when not composable.
  std::optional<Path> source_of(const BasicReduction& r) const;
  PathPoly apply(const BasicReduction& r, const PathPoly& x) const;
  PathPoly apply(const Trace& t, const PathPoly& x) const;

  // Memoised normal form. Under (diamond) it does not depend on the strategy.
  const PathPoly& beta(Path p) const;
  PathPoly beta(const PathPoly& x) const;
  void set_beta_fuel(std::size_t fuel) { beta_fuel_ = fuel; }

  NormalForm normal_form(const PathPoly& x, Strategy s = Strategy::Leftmost,
                         std::size_t fuel = kDefaultNormalFormFuel) const;
  // Continue Leftmost after a forced first step.
  NormalForm normal_form_after(const BasicReduction& first, const PathPoly& x,
                               std::size_t fuel = kDefaultNormalFormFuel) const;

  // Irreducible paths of length <= cap, canonical order.
  std::vector<Path> irreducible_basis(std::size_t length_cap) const;

  std::string format_rule(std::size_t i) const;

 private:
  const PathPoly& beta_rec(Path p, std::size_t& steps) const;

  const Quiver* q_;
  std::vector<Rule> rules_;
  const Field* field_ = nullptr;
  std::size_t max_tip_ = 0;
  std::vector<std::vector<std::size_t>> by_first_, by_last_;
  std::size_t beta_fuel_ = 1000000;
  mutable std::vector<std::int8_t> irreducible_;
  mutable std::unordered_map<std::uint32_t, PathPoly> beta_;
  mutable std::unordered_set<std::uint32_t> in_progress_;
};

}  // namespace pathres
