#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pathres/document.hpp"
#include "pathres/tensor.hpp"

namespace pathres {

struct FixtureTerm {
  std::string coef, left, gen, right;
};

// Expected d_n(1 (x) gen (x) 1).
struct DifferentialFixture {
  int degree;
  std::string gen;
  std::vector<FixtureTerm> terms;
};

struct ExampleParams {
  std::map<std::string, std::string> values;  // parameter -> rational value
  std::map<std::string, long> ints;           // n, m for qci
  std::string system;                         // cubic: R1, R2, raw
};

struct Example {
  ProblemDocument doc;
  std::vector<std::string> all_parameters;  // before specialization
  std::vector<std::optional<mpq_class>> values;
  std::vector<DifferentialFixture> differentials;
  std::map<int, std::vector<std::string>> chains;  // expected A_n
  std::vector<RuleSpec> completed;                 // expected completion, if any
};

std::vector<std::string> example_names();
// Throws UnknownExample or BadParams.
Example example(const std::string& name, const ExampleParams& params = {});

// Fixture coefficients are written over all parameters; this specializes them
// into `target`.
Scalar fixture_scalar(const Example& ex, const std::string& coef, const Field* target);
TensorElt fixture_tensor(const Example& ex, const Quiver& q, const Field* target, int degree,
                         const std::vector<FixtureTerm>& terms);

}  // namespace pathres
