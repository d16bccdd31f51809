#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orbifold/qdim.hpp"

namespace orbifold {

// Rank parameter of the ring: the underlying rank-one lattice has norm 2k.
// All index arithmetic below is mod 2k (epsilon grading mod 2).
struct RankParam {
  int k = 1;
  bool valid() const { return k >= 1; }
  int order() const { return 2 * k; }         // index range for lattice cosets
  std::int64_t radicand() const { return 2 * k; }  // twist qdim is sqrt(2k)
};

inline int floor_mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

// Simple-object sectors, in enumeration order.
//   NonDiag N(i,j): 0 <= j < i < 2k, quantum dimension 2
//   Diag    D(i,e): i mod 2k, e mod 2, quantum dimension 1 (simple currents)
//   Twist   T(i,e): i mod 2k, e mod 2, quantum dimension sqrt(2k)
enum class Sector : int { NonDiag = 0, Diag = 1, Twist = 2 };

struct Label {
  Sector sector = Sector::NonDiag;
  int i = 0;
  int j = 0;  // second index for NonDiag, epsilon for Diag/Twist
  friend constexpr auto operator<=>(const Label&, const Label&) = default;
};

Label nondiag(const RankParam& rk, int a, int b);  // reduces mod 2k, orders i > j
Label diag(const RankParam& rk, int i, int e);
Label twist(const RankParam& rk, int i, int e);

// An unordered index pair reduced mod 2k either names a NonDiag simple or is
// degenerate (both residues equal), in which case only the common index
// survives; degenerate positions carry a qdim budget rather than a label.
struct DegeneratePair {
  int index = 0;
  friend constexpr auto operator<=>(const DegeneratePair&, const DegeneratePair&) = default;
};
using NormalizedPair = std::variant<Label, DegeneratePair>;
NormalizedPair normalize_pair(const RankParam& rk, int a, int b);

int nondiag_count(const RankParam& rk);  // 2k^2 - k
int diag_count(const RankParam& rk);     // 4k
int twist_count(const RankParam& rk);    // 4k
int simple_count(const RankParam& rk);   // 2k^2 + 7k

// All simple labels in canonical order: NonDiag lex by (i,j), then Diag by
// (i,e), then Twist by (i,e). This order matches operator<=> on Label.
std::vector<Label> enumerate_simples(const RankParam& rk);

QDim qdim(const RankParam& rk, const Label& x);

std::string label_text(const Label& x);

// Parses canonical text N(i,j) / D(i,e) / T(i,e) and the short aliases
// (i j), ~(i e), ^(i e). Entries may be any integers; they are reduced into
// range. Returns nullopt and sets err on malformed input (including NonDiag
// pairs whose entries coincide mod 2k).
std::optional<Label> parse_label(std::string_view text, const RankParam& rk, std::string& err);

// Component labels used by branching. Restriction runs to the tensor
// subalgebra (lattice factor at norm 4k) x (plus-type orbifold factor at norm
// 4k); the first coordinate of a component is the lattice-factor index r mod
// 4k, the second one of the 2k+7 plus-factor modules below, named by role.
enum class SubKind : int {
  VPlus = 0,    // vacuum module, qdim 1
  VMinus,       // current-twisted vacuum, qdim 1
  VHalfPlus,    // half-lattice coset modules, qdim 1
  VHalfMinus,
  VLat,         // generic coset module V[s], s in [1, 2k-1], qdim 2
  Tw1Plus,      // order-two twisted modules, qdim sqrt(2k)
  Tw1Minus,
  Tw2Plus,
  Tw2Minus,
};

struct SubLabel {
  SubKind kind = SubKind::VPlus;
  int s = 0;  // only for VLat
  friend constexpr auto operator<=>(const SubLabel&, const SubLabel&) = default;
};

// One summand of a branching decomposition: extension-lattice index r
// (mod 4k) paired with a subalgebra module.
struct BranchComponent {
  int r = 0;
  SubLabel part;
  friend constexpr auto operator<=>(const BranchComponent&, const BranchComponent&) = default;
};

std::string sublabel_text(const SubLabel& p);
std::string branch_component_text(const BranchComponent& c);
QDim qdim_sub(const RankParam& rk, const SubLabel& p);

}  // namespace orbifold
