#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbifold/table.hpp"
#include "orbifold/verify.hpp"

namespace orbifold {

enum class CompletionStatus : int {
  Unique = 0,  // exactly one consistent table (trivially so when nothing was unknown)
  Ambiguous,   // several consistent assignments; all listed
  Infeasible,  // no consistent assignment; failing axiom and cell named
};
const char* completion_status_name(CompletionStatus s);

struct ResolvedCell {
  CellKey key;
  FusionVector value;
  friend auto operator<=>(const ResolvedCell&, const ResolvedCell&) = default;
};

struct Counterexample {
  std::string axiom;
  std::string detail;
};

struct CompletionReport {
  RankParam rk;
  RuleVariantConfig cfg;
  CompletionStatus status = CompletionStatus::Infeasible;
  int unknown_uncovered = 0;  // cells the rules declined entirely
  int unknown_markers = 0;    // degenerate positions left open in covered cells
  std::vector<ResolvedCell> resolved;               // Unique: values of all unknown cells
  std::vector<std::vector<ResolvedCell>> solutions; // Ambiguous: every consistent assignment
  std::optional<Counterexample> failure;            // Infeasible
  std::optional<CompleteTable> table;               // Unique
  AxiomReport axioms;                               // final verification, when a table exists
  bool verified = false;                            // axioms field populated
  std::string to_text() const;                      // deterministic rendering
};

// Resolves every unknown cell of the partial table by exact constraint
// satisfaction: candidates are label multisets meeting the cell's exact qdim
// budget, pruned by current-orbit transport, the delta property, and
// associativity against decided cells, with an exhaustive product over any
// residue. With run_verify the resulting table is checked against the full
// axiom suite; a failure downgrades the result to Infeasible.
CompletionReport complete_table(const PartialTable& pt, bool run_verify = true);

struct ArbitrationOutcome {
  RankParam rk;
  std::vector<std::pair<Variant, CompletionReport>> reports;
  std::optional<Variant> passing;  // the variant whose completed table verifies
  bool coincident = false;         // both passed with cell-identical tables
  std::string to_text() const;
};

// Runs completion under both rule variants and names the passing one. In the
// hypothetical case that both pass with cell-identical tables the corrected
// variant is reported as canonical and the coincidence is flagged.
ArbitrationOutcome arbitrate_variants(const RankParam& rk,
                                      DegeneratePolicy pol = DegeneratePolicy::Defer);

}  // namespace orbifold
