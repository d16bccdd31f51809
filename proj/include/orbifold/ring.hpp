#pragma once

#include <array>

#include "orbifold/fusion_vector.hpp"
#include "orbifold/labels.hpp"

namespace orbifold {

inline Label unit_label() { return Label{Sector::Diag, 0, 0}; }

// Exact quantum dimension of a nonnegative combination of simples.
QDim qdim_vector(const RankParam& rk, const FusionVector& v);

// Sum of squared quantum dimensions over all simples, computed by direct
// summation (closed form: 16 k^2).
QDim global_dimension(const RankParam& rk);

// Restriction of a simple to the tensor subalgebra (see labels.hpp). Every
// simple restricts to exactly two distinct components, and the component
// qdims add up to twice the simple's qdim.
std::array<BranchComponent, 2> branch(const RankParam& rk, const Label& x);

}  // namespace orbifold
