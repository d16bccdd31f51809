#include "orbifold/table.hpp"

#include <cassert>

#include "orbifold/ring.hpp"

namespace orbifold {

std::string cell_text(const CellKey& key) {
  return label_text(key.a) + " * " + label_text(key.b);
}

int PartialTable::uncovered_count() const {
  int n = 0;
  for (const auto& [key, cell] : cells)
    if (cell.status == CellStatus::Uncovered) ++n;
  return n;
}

int PartialTable::marker_count() const {
  int n = 0;
  for (const auto& [key, cell] : cells) n += static_cast<int>(cell.markers.size());
  return n;
}

QDim PartialTable::cell_budget(const CellKey& key) const {
  return qdim(rk, key.a) * qdim(rk, key.b);
}

QDim PartialTable::unknown_budget(const CellKey& key) const {
  const Cell& cell = cells.at(key);
  if (cell.status == CellStatus::Uncovered) return cell_budget(key);
  return QDim(Rational(2 * static_cast<std::int64_t>(cell.markers.size())), Rational(0),
              rk.radicand());
}

PartialTable build_partial_table(const RankParam& rk, const RuleVariantConfig& cfg) {
  PartialTable pt;
  pt.rk = rk;
  pt.cfg = cfg;
  pt.simples = enumerate_simples(rk);
  for (size_t ia = 0; ia < pt.simples.size(); ++ia) {
    for (size_t ib = ia; ib < pt.simples.size(); ++ib) {
      const CellKey key(pt.simples[ia], pt.simples[ib]);
      FuseOutcome oc = fuse(rk, key.a, key.b, cfg);
      Cell cell;
      cell.rule = oc.rule;
      if (!oc.covered) {
        cell.status = CellStatus::Uncovered;
      } else {
        cell.terms = std::move(oc.terms);
        cell.markers = std::move(oc.markers);
        cell.status = cell.markers.empty() ? CellStatus::Covered : CellStatus::CoveredWithMarkers;
      }
      pt.cells.emplace(key, std::move(cell));
    }
  }
  return pt;
}

int CompleteTable::index_of(const Label& x) const {
  auto it = std::lower_bound(simples.begin(), simples.end(), x);
  if (it == simples.end() || *it != x) return -1;
  return static_cast<int>(it - simples.begin());
}

const FusionVector& CompleteTable::product(const Label& x, const Label& y) const {
  const int ix = index_of(x), iy = index_of(y);
  assert(ix >= 0 && iy >= 0);
  return prod_[at(ix, iy)];
}

CellOrigin CompleteTable::origin(const Label& x, const Label& y) const {
  const int ix = index_of(x), iy = index_of(y);
  assert(ix >= 0 && iy >= 0);
  return origin_[at(ix, iy)];
}

std::int64_t CompleteTable::structure_constant(const Label& x, const Label& y,
                                               const Label& c) const {
  return product(x, y).mult_of(c);
}

void CompleteTable::init(const RankParam& rank, const RuleVariantConfig& config) {
  rk = rank;
  cfg = config;
  simples = enumerate_simples(rank);
  prod_.assign(simples.size() * simples.size(), FusionVector{});
  origin_.assign(simples.size() * simples.size(), CellOrigin{});
}

void CompleteTable::set_cell(const Label& x, const Label& y, const FusionVector& v, CellOrigin o) {
  const int ix = index_of(x), iy = index_of(y);
  assert(ix >= 0 && iy >= 0);
  prod_[at(ix, iy)] = v;
  origin_[at(ix, iy)] = o;
  if (ix != iy) {
    prod_[at(iy, ix)] = v;
    origin_[at(iy, ix)] = o;
  }
}

std::optional<Label> dual_of(const CompleteTable& t, const Label& x) {
  const Label one = unit_label();
  std::optional<Label> found;
  for (const Label& y : t.simples) {
    const std::int64_t m = t.product(x, y).mult_of(one);
    if (m == 0) continue;
    if (m > 1 || found) return std::nullopt;
    found = y;
  }
  return found;
}

std::vector<Label> simple_currents(const CompleteTable& t) {
  std::vector<Label> out;
  const QDim one = QDim(Rational(1), Rational(0), t.rk.radicand());
  for (const Label& x : t.simples)
    if (qdim(t.rk, x) == one) out.push_back(x);
  return out;
}

}  // namespace orbifold
