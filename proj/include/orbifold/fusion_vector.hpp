#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orbifold/labels.hpp"

namespace orbifold {

// Nonnegative integer combination of simple labels, kept sorted by label with
// strictly positive multiplicities. Equality is exact multiset equality.
class FusionVector {
 public:
  using Term = std::pair<Label, std::int64_t>;

  void add(const Label& c, std::int64_t mult = 1) {
    if (mult == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), c,
                               [](const Term& t, const Label& l) { return t.first < l; });
    if (it != terms_.end() && it->first == c) {
      it->second += mult;
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.insert(it, Term{c, mult});
    }
  }

  void add_scaled(const FusionVector& v, std::int64_t mult = 1) {
    for (const Term& t : v.terms_) add(t.first, t.second * mult);
  }

  std::int64_t mult_of(const Label& c) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), c,
                               [](const Term& t, const Label& l) { return t.first < l; });
    return (it != terms_.end() && it->first == c) ? it->second : 0;
  }

  bool empty() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  std::int64_t total_mult() const {
    std::int64_t s = 0;
    for (const Term& t : terms_) s += t.second;
    return s;
  }

  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  QDim qdim_total(const RankParam& rk) const {
    QDim s = QDim(Rational(0), Rational(0), rk.radicand());
    for (const Term& t : terms_) s += qdim(rk, t.first) * QDim(Rational(t.second), Rational(0), rk.radicand());
    return s;
  }

  friend bool operator==(const FusionVector&, const FusionVector&) = default;
  friend auto operator<=>(const FusionVector& x, const FusionVector& y) {
    return x.terms_ <=> y.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const Term& t : terms_) {
      if (!out.empty()) out += " + ";
      if (t.second != 1) out += std::to_string(t.second) + "*";
      out += label_text(t.first);
    }
    return out;
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace orbifold
