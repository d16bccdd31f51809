#pragma once

#include <string>
#include <vector>

#include "orbifold/table.hpp"

namespace orbifold {

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::int64_t checked = 0;       // instances examined
  std::string counterexample;     // first failure, empty when passed
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool all_passed() const;
  const AxiomResult* first_failure() const;
  std::string to_text() const;
};

// Checks the fusion-ring axioms on a fully decided table: unit law,
// integrality, commutativity, exhaustive associativity, dual existence and
// uniqueness (delta property), dual involution, dual qdim preservation, the
// dual symmetry of structure constants, the qdim homomorphism, the qdim >= 1
// bound, and the simple-current group structure (Z_{2k} x Z_2). Each axiom
// reports its first counterexample.
AxiomReport verify_axioms(const CompleteTable& t);

}  // namespace orbifold
