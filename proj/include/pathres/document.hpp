#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pathres/order.hpp"
#include "pathres/rewrite.hpp"
#include "json.hpp"

namespace pathres {

struct ArrowSpec {
  std::string id, src, tgt;
  bool operator==(const ArrowSpec&) const = default;
};

struct TermSpec {
  std::string coef;
  std::string path;
  bool operator==(const TermSpec&) const = default;
};

struct RuleSpec {
  std::string lhs;
  std::vector<TermSpec> rhs;
  bool operator==(const RuleSpec&) const = default;
};

struct OrderSpec {
  std::vector<std::string> arrow_order;
  std::map<std::string, std::uint64_t> weights;
  bool operator==(const OrderSpec&) const = default;
};

struct TaskSpec {
  std::string kind;  // complete, chains, basis, resolve, verify, dualize, cy-check
  int degree = 3;
  std::size_t length_cap = 4;
  std::optional<std::size_t> fuel;
  std::size_t degree_cap = 12;
  std::size_t max_rounds = 200;
  bool strict_prec = false;
  bool operator==(const TaskSpec&) const = default;
};

struct ProblemDocument {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  std::vector<std::string> parameters;
  std::optional<OrderSpec> order;
  std::optional<std::vector<RuleSpec>> rules;
  std::optional<std::vector<std::vector<TermSpec>>> generators;
  TaskSpec task;
  bool operator==(const ProblemDocument&) const = default;
};

// Throws Error(ParseError) on malformed or dangling input.
ProblemDocument parse_document(const nlohmann::json& j);
ProblemDocument parse_document(const std::string& text);
nlohmann::json to_json(const ProblemDocument& doc);

// A document resolved against its quiver and field.
struct Problem {
  std::unique_ptr<Quiver> quiver;
  const Field* field = nullptr;
  std::optional<DeglexOrder> order;
  std::vector<Rule> rules;
  std::vector<PathPoly> generators;
  bool has_rules = false;
};

Problem instantiate(const ProblemDocument& doc);

PathPoly parse_terms(const Quiver& q, const Field* field, const std::vector<TermSpec>& terms);
std::vector<TermSpec> term_specs(const Quiver& q, const PathPoly& x);

}  // namespace pathres
