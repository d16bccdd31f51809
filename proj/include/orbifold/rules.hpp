#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "orbifold/fusion_vector.hpp"
#include "orbifold/labels.hpp"

namespace orbifold {

// Two readings of the published multiplication rules. `Printed` follows the
// source table literally (including its operand-order asymmetries, evaluated
// with operands in canonical label order). `Corrected` applies the readings
// forced by the ring axioms; it is the default and the variant under which
// the completed table verifies.
enum class Variant : int { Printed = 0, Corrected = 1 };

// What to emit at a degenerate sum position (an index pair that collapses to
// a single residue): defer to the completion solver (budget 2 per position),
// or guess an even split D(a,0)+D(a,1) immediately.
enum class DegeneratePolicy : int { Defer = 0, SplitEven = 1 };

struct RuleVariantConfig {
  Variant variant = Variant::Corrected;
  DegeneratePolicy degenerate = DegeneratePolicy::Defer;
  friend constexpr auto operator<=>(const RuleVariantConfig&, const RuleVariantConfig&) = default;
};

const char* variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view s);

// Which rule produced a cell; names describe the operand sectors.
enum class RuleTag : int {
  NonDiagNonDiagGeneric = 0,
  NonDiagNonDiagEqualDiff,
  NonDiagDiag,
  NonDiagTwist,
  DiagDiag,
  DiagTwist,
  TwistTwistSameParity,
  TwistTwistMixedParity,
  Uncovered,
};
const char* rule_tag_name(RuleTag t);

// Result of applying the rules to one product x*y.
//  - covered = false: the rules decline to decide the cell (degenerate leading
//    summand); terms/markers are empty and the completion solver owns the
//    whole cell, with qdim budget qdim(x)*qdim(y).
//  - covered = true: `terms` holds the decided summands; `markers` lists any
//    degenerate positions left open (DegeneratePolicy::Defer), each with an
//    exact qdim budget of 2.
struct FuseOutcome {
  bool covered = true;
  FusionVector terms;
  std::vector<DegeneratePair> markers;
  RuleTag rule = RuleTag::Uncovered;
};

FuseOutcome fuse(const RankParam& rk, const Label& x, const Label& y, const RuleVariantConfig& cfg);

// Fusion by a simple current (Diag label) is a permutation of the simples.
// The variant matters: on Twist labels the two variants disagree about when
// the epsilon component flips.
Label current_translate(const RankParam& rk, const Label& current, const Label& x,
                        const RuleVariantConfig& cfg);

}  // namespace orbifold
