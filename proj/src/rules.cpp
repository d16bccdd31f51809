#include "orbifold/rules.hpp"

#include <cassert>
#include <utility>

namespace orbifold {

const char* variant_name(Variant v) {
  return v == Variant::Printed ? "printed" : "corrected";
}

std::optional<Variant> parse_variant(std::string_view s) {
  if (s == "printed") return Variant::Printed;
  if (s == "corrected") return Variant::Corrected;
  return std::nullopt;
}

const char* rule_tag_name(RuleTag t) {
  switch (t) {
    case RuleTag::NonDiagNonDiagGeneric:
      return "nondiag-nondiag-generic";
    case RuleTag::NonDiagNonDiagEqualDiff:
      return "nondiag-nondiag-equal-diff";
    case RuleTag::NonDiagDiag:
      return "nondiag-diag";
    case RuleTag::NonDiagTwist:
      return "nondiag-twist";
    case RuleTag::DiagDiag:
      return "diag-diag";
    case RuleTag::DiagTwist:
      return "diag-twist";
    case RuleTag::TwistTwistSameParity:
      return "twist-twist-same-parity";
    case RuleTag::TwistTwistMixedParity:
      return "twist-twist-mixed-parity";
    case RuleTag::Uncovered:
      return "uncovered";
  }
  return "?";
}

namespace {

// Adds a normalized index pair to the outcome, or records the degenerate
// position per policy.
void add_pair(const RankParam& rk, FuseOutcome& out, int a, int b, const RuleVariantConfig& cfg) {
  NormalizedPair np = normalize_pair(rk, a, b);
  if (std::holds_alternative<Label>(np)) {
    out.terms.add(std::get<Label>(np));
    return;
  }
  const DegeneratePair d = std::get<DegeneratePair>(np);
  if (cfg.degenerate == DegeneratePolicy::SplitEven) {
    out.terms.add(diag(rk, d.index, 0));
    out.terms.add(diag(rk, d.index, 1));
  } else {
    out.markers.push_back(d);
  }
}

FuseOutcome fuse_nondiag_nondiag(const RankParam& rk, const Label& a, const Label& b,
                                 const RuleVariantConfig& cfg) {
  const int i = a.i, j = a.j, p = b.i, q = b.j;
  const int dx = i - j, dy = p - q;  // both in [1, 2k-1]
  FuseOutcome out;

  if (dx == dy) {
    out.rule = RuleTag::NonDiagNonDiagEqualDiff;
    out.terms.add(diag(rk, p + j, 0));
    out.terms.add(diag(rk, p + j, 1));
    if (cfg.variant == Variant::Corrected) {
      if (dx == rk.k) {
        out.terms.add(diag(rk, i + p, 0));
        out.terms.add(diag(rk, i + p, 1));
      } else {
        out.terms.add(nondiag(rk, i + p, j + q));
      }
    } else {
      out.terms.add(diag(rk, p - i, 0));
      out.terms.add(diag(rk, p - i, 1));
    }
    return out;
  }

  // Generic cell. The leading summand (i+p, j+q) degenerates exactly when
  // dx+dy = 2k; neither variant decides that cell, completion owns it.
  if (dx + dy == 2 * rk.k) {
    out.covered = false;
    out.rule = RuleTag::Uncovered;
    return out;
  }
  out.rule = RuleTag::NonDiagNonDiagGeneric;
  out.terms.add(nondiag(rk, i + p, j + q));
  if (cfg.variant == Variant::Corrected) {
    out.terms.add(nondiag(rk, i + q, j + p));  // dx != dy keeps this nondegenerate
  } else {
    add_pair(rk, out, i + q, j - p, cfg);
  }
  return out;
}

// Epsilon flip acquired when a Diag simple current D(m,*) acts on a Twist
// label T(i,*). The literal table has no flip. The associativity-consistent
// reading flips epsilon on the odd twist class (k+i odd) each time the index
// 2m+i passes a multiple of 2k; with canonical m, i in [0, 2k) that is the
// parity of floor((2m+i)/2k).
int diag_twist_flip(const RankParam& rk, int m, int i, const RuleVariantConfig& cfg) {
  if (cfg.variant == Variant::Printed) return 0;
  if ((rk.k + i) % 2 == 0) return 0;
  return ((2 * m + i) / (2 * rk.k)) % 2;
}

FuseOutcome fuse_twist_twist(const RankParam& rk, const Label& a, const Label& b,
                             const RuleVariantConfig& cfg) {
  const int i = a.i, l = b.i;
  const int s = (a.j + b.j) % 2;
  const bool even_i = (rk.k + i) % 2 == 0;
  const bool even_l = (rk.k + l) % 2 == 0;
  FuseOutcome out;

  if (even_i == even_l) {
    // Same parity class: i+l is even, Diag heads plus even-index sum terms.
    out.rule = RuleTag::TwistTwistSameParity;
    const int h = (i + l) / 2;
    out.terms.add(diag(rk, h, s));
    out.terms.add(diag(rk, h + rk.k, even_i ? s : s + 1));
    for (int r = 2; r <= 2 * rk.k - 2; r += 2) {
      if (cfg.variant == Variant::Corrected)
        add_pair(rk, out, (i + l + r) / 2, (i + l - r) / 2, cfg);
      else
        add_pair(rk, out, i + r, l - r, cfg);
    }
    return out;
  }

  // Mixed parity: no Diag part, odd-index sum terms only.
  out.rule = RuleTag::TwistTwistMixedParity;
  for (int r = 1; r <= 2 * rk.k - 1; r += 2) {
    if (cfg.variant == Variant::Corrected)
      add_pair(rk, out, (i + l + r) / 2, (i + l - r) / 2, cfg);
    else
      add_pair(rk, out, i + r, l - r, cfg);
  }
  return out;
}

}  // namespace

FuseOutcome fuse(const RankParam& rk, const Label& x, const Label& y, const RuleVariantConfig& cfg) {
  Label a = x, b = y;
  if (b < a) std::swap(a, b);  // canonical operand order; Sector order N < D < T

  FuseOutcome out;
  switch (a.sector) {
    case Sector::NonDiag:
      switch (b.sector) {
        case Sector::NonDiag:
          return fuse_nondiag_nondiag(rk, a, b, cfg);
        case Sector::Diag:
          out.rule = RuleTag::NonDiagDiag;
          out.terms.add(nondiag(rk, a.i + b.i, a.j + b.i));
          return out;
        case Sector::Twist:
          out.rule = RuleTag::NonDiagTwist;
          out.terms.add(twist(rk, a.i + a.j + b.i, 0));
          out.terms.add(twist(rk, a.i + a.j + b.i, 1));
          return out;
      }
      break;
    case Sector::Diag:
      if (b.sector == Sector::Diag) {
        out.rule = RuleTag::DiagDiag;
        out.terms.add(diag(rk, a.i + b.i, a.j + b.j));
        return out;
      }
      out.rule = RuleTag::DiagTwist;
      out.terms.add(twist(rk, 2 * a.i + b.i, a.j + b.j + diag_twist_flip(rk, a.i, b.i, cfg)));
      return out;
    case Sector::Twist:
      return fuse_twist_twist(rk, a, b, cfg);
  }
  assert(false);
  return out;
}

Label current_translate(const RankParam& rk, const Label& current, const Label& x,
                        const RuleVariantConfig& cfg) {
  assert(current.sector == Sector::Diag);
  switch (x.sector) {
    case Sector::NonDiag:
      return nondiag(rk, x.i + current.i, x.j + current.i);
    case Sector::Diag:
      return diag(rk, x.i + current.i, x.j + current.j);
    case Sector::Twist:
      return twist(rk, 2 * current.i + x.i,
                   x.j + current.j + diag_twist_flip(rk, current.i, x.i, cfg));
  }
  return x;
}

}  // namespace orbifold
