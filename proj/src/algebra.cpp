#include "splitoct/algebra.hpp"

#include <sstream>

namespace splitoct {

namespace {

// One cell of the printed table. For kind-dependent cells ("±" and "∓")
// `sign` is the upper sign; the split algebra takes the opposite one.
struct Cell {
  int sign;
  int index;
  bool dual;
};

constexpr Cell pos(int k) { return {+1, k, false}; }
constexpr Cell neg(int k) { return {-1, k, false}; }
constexpr Cell pm(int k) { return {+1, k, true}; }  // ±e_k
constexpr Cell mp(int k) { return {-1, k, true}; }  // ∓e_k

// Row e_i, column e_j holds e_i e_j. Index 0 is the unit.
constexpr std::array<std::array<Cell, 7>, 7> kTable = {{
    //  e1       e2       e3      e4       e5      e6      e7
    {{neg(0), pos(4), pos(7), neg(2), pos(6), neg(5), neg(3)}},  // e1
    {{neg(4), neg(0), pos(5), pos(1), neg(3), pos(7), neg(6)}},  // e2
    {{neg(7), neg(5), mp(0), pos(6), pm(2), mp(4), pm(1)}},      // e3
    {{pos(2), neg(1), neg(6), neg(0), pos(7), pos(3), neg(5)}},  // e4
    {{neg(6), pos(3), mp(2), neg(7), mp(0), pm(1), pm(4)}},      // e5
    {{pos(5), neg(7), pm(4), neg(3), mp(1), mp(0), pm(2)}},      // e6
    {{pos(3), pos(6), mp(1), pos(5), mp(4), mp(2), mp(0)}},      // e7
}};

std::array<std::array<BasisProduct, 7>, 7> materialize(AlgebraKind kind) {
  std::array<std::array<BasisProduct, 7>, 7> out{};
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      const Cell& cell = kTable[i][j];
      const int sign = (cell.dual && kind == AlgebraKind::SplitOctonion) ? -cell.sign : cell.sign;
      out[i][j] = {sign, cell.index};
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(AlgebraKind kind) {
  return kind == AlgebraKind::Octonion ? "octonion" : "split";
}

AlgebraKind parse_algebra_kind(std::string_view name) {
  if (name == "octonion") return AlgebraKind::Octonion;
  if (name == "split") return AlgebraKind::SplitOctonion;
  throw std::invalid_argument("unknown algebra '" + std::string(name) + "' (expected octonion or split)");
}

const StructureTable& StructureTable::of(AlgebraKind kind) {
  static const StructureTable octonion(AlgebraKind::Octonion, materialize(AlgebraKind::Octonion));
  static const StructureTable split(AlgebraKind::SplitOctonion, materialize(AlgebraKind::SplitOctonion));
  return kind == AlgebraKind::Octonion ? octonion : split;
}

StructureTable StructureTable::with_flipped_sign(int i, int j) const {
  if (i < 1 || i > 7 || j < 1 || j > 7) throw std::out_of_range("table entry indices must be in 1..7");
  StructureTable copy = *this;
  copy.entries_[i - 1][j - 1].sign = -copy.entries_[i - 1][j - 1].sign;
  return copy;
}

int diagonal_sign(AlgebraKind kind, int i) {
  if (kind == AlgebraKind::Octonion) return -1;
  return (i == 1 || i == 2 || i == 4) ? -1 : +1;
}

TableCheck check_table_structure(const StructureTable& table) {
  TableCheck check;
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      const BasisProduct p = table(i, j);
      const std::string where = basis_name(i) + "*" + basis_name(j);
      if (p.sign != 1 && p.sign != -1) {
        check.closure = false;
        check.failures.push_back(where + ": sign is not +-1");
      }
      if (i == j) {
        if (p.index != 0 || p.sign != diagonal_sign(table.kind(), i)) {
          check.diagonal_signs = false;
          check.failures.push_back(where + ": expected " + (diagonal_sign(table.kind(), i) > 0 ? "+1" : "-1"));
        }
        continue;
      }
      if (p.index < 1 || p.index > 7 || p.index == i || p.index == j) {
        check.closure = false;
        check.failures.push_back(where + ": result " + basis_name(p.index) + " is not a third imaginary unit");
      }
      const BasisProduct q = table(j, i);
      if (q.index != p.index || q.sign != -p.sign) {
        check.antisymmetry = false;
        if (i < j) check.failures.push_back(where + ": not the negative of " + basis_name(j) + "*" + basis_name(i));
      }
    }
  }
  return check;
}

Signature signature(AlgebraKind kind) {
  Signature s;
  for (int k = 0; k < 8; ++k) {
    const Rational n = norm_form(kind, RationalOctonion::basis(k));
    if (sgn(n) > 0)
      ++s.positive;
    else if (sgn(n) < 0)
      ++s.negative;
  }
  return s;
}

std::string basis_name(int k) { return k == 0 ? "1" : "e" + std::to_string(k); }

std::string to_string(const RationalOctonion& x) {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k < 8; ++k) {
    const Rational& v = x.c[k];
    if (is_zero(v)) continue;
    const bool negative = sgn(v) < 0;
    const Rational mag = abs(v);
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (k == 0)
      out << mag.get_str();
    else if (mag == 1)
      out << basis_name(k);
    else
      out << mag.get_str() << "*" << basis_name(k);
  }
  if (first) return "0";
  return out.str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace splitoct
