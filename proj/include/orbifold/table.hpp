#pragma once

#include <map>
#include <optional>
#include <vector>

#include "orbifold/fusion_vector.hpp"
#include "orbifold/labels.hpp"
#include "orbifold/rules.hpp"

namespace orbifold {

// Unordered cell key; the product is commutative, cells are stored once.
struct CellKey {
  Label a, b;
  CellKey() = default;
  CellKey(Label x, Label y) : a(x), b(y) {
    if (b < a) std::swap(a, b);
  }
  friend constexpr auto operator<=>(const CellKey&, const CellKey&) = default;
};

std::string cell_text(const CellKey& key);

enum class CellStatus : int { Covered = 0, CoveredWithMarkers = 1, Uncovered = 2 };

struct Cell {
  CellStatus status = CellStatus::Covered;
  FusionVector terms;                   // decided summands
  std::vector<DegeneratePair> markers;  // open degenerate positions, budget 2 each
  RuleTag rule = RuleTag::Uncovered;
};

// Rule-generated multiplication table over all unordered pairs of simples.
// Cells the rules decline to decide are present with status Uncovered and an
// exact qdim budget; completion resolves them.
struct PartialTable {
  RankParam rk;
  RuleVariantConfig cfg;
  std::vector<Label> simples;
  std::map<CellKey, Cell> cells;

  int uncovered_count() const;
  int marker_count() const;
  // qdim(a)*qdim(b), the exact budget the cell's summands must meet.
  QDim cell_budget(const CellKey& key) const;
  // budget minus decided terms: 0 for covered cells, 2 per marker, the full
  // budget for uncovered cells.
  QDim unknown_budget(const CellKey& key) const;
};

PartialTable build_partial_table(const RankParam& rk, const RuleVariantConfig& cfg);

// How a completed cell got its value.
struct CellOrigin {
  RuleTag rule = RuleTag::Uncovered;
  bool from_completion = false;
};

// Fully decided table, dense over ordered index pairs for fast verification.
struct CompleteTable {
  RankParam rk;
  RuleVariantConfig cfg;
  std::vector<Label> simples;

  int index_of(const Label& x) const;  // position in `simples`, -1 if absent
  const FusionVector& product(const Label& x, const Label& y) const;
  const FusionVector& product_at(int ix, int iy) const { return prod_[at(ix, iy)]; }
  CellOrigin origin(const Label& x, const Label& y) const;
  std::int64_t structure_constant(const Label& x, const Label& y, const Label& c) const;

  void init(const RankParam& rank, const RuleVariantConfig& config);
  void set_cell(const Label& x, const Label& y, const FusionVector& v, CellOrigin o);

  size_t at(int ix, int iy) const { return static_cast<size_t>(ix) * simples.size() + iy; }

 private:
  std::vector<FusionVector> prod_;
  std::vector<CellOrigin> origin_;
};

// The unique y with the unit appearing in x*y (exactly once); nullopt when
// absent or ambiguous. The dual is read off the table, not postulated.
std::optional<Label> dual_of(const CompleteTable& t, const Label& x);

// Simples of quantum dimension exactly 1; these form the simple-current
// group of the ring.
std::vector<Label> simple_currents(const CompleteTable& t);

}  // namespace orbifold
