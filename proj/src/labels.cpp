#include "orbifold/labels.hpp"

#include <cassert>
#include <cctype>
#include <charconv>

namespace orbifold {

Label nondiag(const RankParam& rk, int a, int b) {
  const int m = rk.order();
  int i = floor_mod(a, m);
  int j = floor_mod(b, m);
  assert(i != j);
  if (i < j) std::swap(i, j);
  return Label{Sector::NonDiag, i, j};
}

Label diag(const RankParam& rk, int i, int e) {
  return Label{Sector::Diag, floor_mod(i, rk.order()), floor_mod(e, 2)};
}

Label twist(const RankParam& rk, int i, int e) {
  return Label{Sector::Twist, floor_mod(i, rk.order()), floor_mod(e, 2)};
}

NormalizedPair normalize_pair(const RankParam& rk, int a, int b) {
  const int m = rk.order();
  const int i = floor_mod(a, m);
  const int j = floor_mod(b, m);
  if (i == j) return DegeneratePair{i};
  return nondiag(rk, i, j);
}

int nondiag_count(const RankParam& rk) { return 2 * rk.k * rk.k - rk.k; }
int diag_count(const RankParam& rk) { return 4 * rk.k; }
int twist_count(const RankParam& rk) { return 4 * rk.k; }
int simple_count(const RankParam& rk) { return 2 * rk.k * rk.k + 7 * rk.k; }

std::vector<Label> enumerate_simples(const RankParam& rk) {
  std::vector<Label> out;
  out.reserve(static_cast<size_t>(simple_count(rk)));
  const int m = rk.order();
  for (int i = 1; i < m; ++i)
    for (int j = 0; j < i; ++j) out.push_back(Label{Sector::NonDiag, i, j});
  for (int i = 0; i < m; ++i)
    for (int e = 0; e < 2; ++e) out.push_back(Label{Sector::Diag, i, e});
  for (int i = 0; i < m; ++i)
    for (int e = 0; e < 2; ++e) out.push_back(Label{Sector::Twist, i, e});
  return out;
}

QDim qdim(const RankParam& rk, const Label& x) {
  switch (x.sector) {
    case Sector::NonDiag:
      return QDim(Rational(2), Rational(0), rk.radicand());
    case Sector::Diag:
      return QDim(Rational(1), Rational(0), rk.radicand());
    case Sector::Twist:
      return QDim(Rational(0), Rational(1), rk.radicand());
  }
  return QDim();
}

std::string label_text(const Label& x) {
  const char head = x.sector == Sector::NonDiag ? 'N' : x.sector == Sector::Diag ? 'D' : 'T';
  return std::string(1, head) + "(" + std::to_string(x.i) + "," + std::to_string(x.j) + ")";
}

namespace {

void skip_ws(std::string_view s, size_t& p) {
  while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
}

bool parse_int(std::string_view s, size_t& p, int& out) {
  skip_ws(s, p);
  const char* first = s.data() + p;
  const char* last = s.data() + s.size();
  auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc()) return false;
  p += static_cast<size_t>(res.ptr - first);
  return true;
}

}  // namespace

std::optional<Label> parse_label(std::string_view text, const RankParam& rk, std::string& err) {
  size_t p = 0;
  skip_ws(text, p);
  if (p == text.size()) {
    err = "empty label";
    return std::nullopt;
  }

  Sector sector;
  const char head = text[p];
  if (head == 'N' || head == 'D' || head == 'T') {
    sector = head == 'N' ? Sector::NonDiag : head == 'D' ? Sector::Diag : Sector::Twist;
    ++p;
  } else if (head == '~') {
    sector = Sector::Diag;
    ++p;
  } else if (head == '^') {
    sector = Sector::Twist;
    ++p;
  } else if (head == '(') {
    sector = Sector::NonDiag;
  } else {
    err = "unknown sector prefix in '" + std::string(text) + "'";
    return std::nullopt;
  }

  skip_ws(text, p);
  if (p == text.size() || text[p] != '(') {
    err = "expected '(' in '" + std::string(text) + "'";
    return std::nullopt;
  }
  ++p;

  int a = 0, b = 0;
  if (!parse_int(text, p, a)) {
    err = "expected integer in '" + std::string(text) + "'";
    return std::nullopt;
  }
  skip_ws(text, p);
  if (p < text.size() && text[p] == ',') ++p;
  if (!parse_int(text, p, b)) {
    err = "expected second integer in '" + std::string(text) + "'";
    return std::nullopt;
  }
  skip_ws(text, p);
  if (p == text.size() || text[p] != ')') {
    err = "expected ')' in '" + std::string(text) + "'";
    return std::nullopt;
  }
  ++p;
  skip_ws(text, p);
  if (p != text.size()) {
    err = "trailing characters in '" + std::string(text) + "'";
    return std::nullopt;
  }

  if (sector == Sector::NonDiag) {
    const int m = rk.order();
    if (floor_mod(a, m) == floor_mod(b, m)) {
      err = "indices of '" + std::string(text) + "' coincide mod " + std::to_string(m);
      return std::nullopt;
    }
    return nondiag(rk, a, b);
  }
  return sector == Sector::Diag ? diag(rk, a, b) : twist(rk, a, b);
}

std::string sublabel_text(const SubLabel& p) {
  switch (p.kind) {
    case SubKind::VPlus:
      return "V+";
    case SubKind::VMinus:
      return "V-";
    case SubKind::VHalfPlus:
      return "Vh+";
    case SubKind::VHalfMinus:
      return "Vh-";
    case SubKind::VLat:
      return "V[" + std::to_string(p.s) + "]";
    case SubKind::Tw1Plus:
      return "T1+";
    case SubKind::Tw1Minus:
      return "T1-";
    case SubKind::Tw2Plus:
      return "T2+";
    case SubKind::Tw2Minus:
      return "T2-";
  }
  return "?";
}

std::string branch_component_text(const BranchComponent& c) {
  return "(" + std::to_string(c.r) + ", " + sublabel_text(c.part) + ")";
}

QDim qdim_sub(const RankParam& rk, const SubLabel& p) {
  switch (p.kind) {
    case SubKind::VLat:
      return QDim(Rational(2), Rational(0), rk.radicand());
    case SubKind::Tw1Plus:
    case SubKind::Tw1Minus:
    case SubKind::Tw2Plus:
    case SubKind::Tw2Minus:
      return QDim(Rational(0), Rational(1), rk.radicand());
    default:
      return QDim(Rational(1), Rational(0), rk.radicand());
  }
}

}  // namespace orbifold
