#include "orbifold/ring.hpp"

#include <cassert>

namespace orbifold {

QDim qdim_vector(const RankParam& rk, const FusionVector& v) { return v.qdim_total(rk); }

QDim global_dimension(const RankParam& rk) {
  QDim s = QDim(Rational(0), Rational(0), rk.radicand());
  for (const Label& x : enumerate_simples(rk)) {
    const QDim d = qdim(rk, x);
    s += d * d;
  }
  return s;
}

std::array<BranchComponent, 2> branch(const RankParam& rk, const Label& x) {
  const int k = rk.k;
  const int m4 = 4 * k;
  switch (x.sector) {
    case Sector::NonDiag: {
      // N(i,j) restricts along the two diagonal cosets i+j and i+j+2k; the
      // plus-factor parts are the generic modules at distance i-j and its
      // half-lattice complement.
      const int d = x.i - x.j;  // in [1, 2k-1]
      return {BranchComponent{floor_mod(x.i + x.j, m4), SubLabel{SubKind::VLat, d}},
              BranchComponent{floor_mod(x.i + x.j + 2 * k, m4), SubLabel{SubKind::VLat, 2 * k - d}}};
    }
    case Sector::Diag: {
      const SubLabel head{x.j == 0 ? SubKind::VPlus : SubKind::VMinus, 0};
      const SubLabel tail{x.j == 0 ? SubKind::VHalfPlus : SubKind::VHalfMinus, 0};
      return {BranchComponent{floor_mod(2 * x.i, m4), head},
              BranchComponent{floor_mod(2 * x.i + 2 * k, m4), tail}};
    }
    case Sector::Twist: {
      // Twist parity class selects the twisted-module family; in the odd
      // class the sign flips between the two components.
      const bool even_class = (k + x.i) % 2 == 0;
      const int e = x.j;
      if (even_class) {
        const SubKind s = e == 0 ? SubKind::Tw1Plus : SubKind::Tw1Minus;
        return {BranchComponent{floor_mod(x.i, m4), SubLabel{s, 0}},
                BranchComponent{floor_mod(x.i + 2 * k, m4), SubLabel{s, 0}}};
      }
      const SubKind s0 = e == 0 ? SubKind::Tw2Plus : SubKind::Tw2Minus;
      const SubKind s1 = e == 0 ? SubKind::Tw2Minus : SubKind::Tw2Plus;
      return {BranchComponent{floor_mod(x.i, m4), SubLabel{s0, 0}},
              BranchComponent{floor_mod(x.i + 2 * k, m4), SubLabel{s1, 0}}};
    }
  }
  assert(false);
  return {};
}

}  // namespace orbifold
