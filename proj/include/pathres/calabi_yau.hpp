#pragma once

#include <string>
#include <vector>

#include "pathres/examples.hpp"

namespace pathres {

struct CalabiYauReport {
  bool dual_matches = true;       // computed d_i^* equal the expected dual maps
  bool diagram_commutes = true;   // psi o d_i^* equals the expected bottom row o psi
  bool bottom_is_complex = true;  // consecutive bottom maps compose to zero
  bool self_dual = true;          // each bottom map is +-d_{2-i}
  std::vector<int> signs;         // the sign for i = 0, 1, 2 (0 when none works)
  std::vector<std::string> mismatches;
  std::string potential;          // cubic potential whose cyclic derivatives give the relations at beta = -1
  bool potential_verified = false;
  std::string stated_potential;
  bool stated_potential_verified = false;
  bool calabi_yau() const { return diagram_commutes && bottom_is_complex && self_dual; }
};

// Builds the down-up tower for the given parameter values (unset ones stay
// symbolic) and checks the duality diagram. Throws BetaZero when beta = 0.
CalabiYauReport downup_cy_check(const ExampleParams& params = {});

// Cyclic derivative with respect to an arrow on a one-vertex quiver.
PathPoly cyclic_derivative(const PathPoly& phi, Path arrow);

}  // namespace pathres
