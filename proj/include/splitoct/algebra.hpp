#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "splitoct/rational.hpp"

namespace splitoct {

/// Selects one of the two algebras carried by the signed multiplication
/// table: Octonion takes the upper sign of every "±"/"∓" entry,
/// SplitOctonion the lower sign.
enum class AlgebraKind { Octonion, SplitOctonion };

std::string_view to_string(AlgebraKind kind);
/// Accepts "octonion" or "split"; throws std::invalid_argument otherwise.
AlgebraKind parse_algebra_kind(std::string_view name);

/// Product of two basis elements: sign * e_index, index 0 being the unit.
struct BasisProduct {
  int sign = 1;
  int index = 0;

  friend bool operator==(const BasisProduct&, const BasisProduct&) = default;
};

/// The 7x7 table of products e_i e_j of imaginary units, materialized for one
/// AlgebraKind. Products involving the unit are handled by operator().
class StructureTable {
 public:
  static const StructureTable& of(AlgebraKind kind);

  AlgebraKind kind() const { return kind_; }

  /// e_i e_j for i, j in 0..7 (0 is the unit).
  BasisProduct operator()(int i, int j) const {
    if (i == 0) return {1, j};
    if (j == 0) return {1, i};
    return entries_[i - 1][j - 1];
  }

  /// Copy with the sign of the single entry e_i e_j negated (i, j in 1..7).
  /// Used to build negative controls; the result is no longer a valid table.
  StructureTable with_flipped_sign(int i, int j) const;

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  StructureTable(AlgebraKind kind, const std::array<std::array<BasisProduct, 7>, 7>& entries)
      : kind_(kind), entries_(entries) {}

  AlgebraKind kind_;
  std::array<std::array<BasisProduct, 7>, 7> entries_;
};

/// Expected sign of e_i^2 (i in 1..7) for the given algebra.
int diagonal_sign(AlgebraKind kind, int i);

struct TableCheck {
  bool antisymmetry = true;
  bool closure = true;
  bool diagonal_signs = true;
  std::vector<std::string> failures;

  bool ok() const { return antisymmetry && closure && diagonal_signs; }
};

/// Structural audit of all 49 entries against the invariants every valid
/// table satisfies; diagonal signs are compared with table.kind().
TableCheck check_table_structure(const StructureTable& table);

template <class A, class B>
struct ring_product;
template <class A>
struct ring_product<A, A> {
  using type = A;
};
template <class A, class B>
using ring_product_t = typename ring_product<A, B>::type;

/// Eight coefficients over the scalar ring S: c[0] is the unit
/// coefficient, c[k] the coefficient of e_k.
template <class S>
struct Octonion {
  std::array<S, 8> c{};

  static Octonion basis(int k) {
    Octonion o;
    o.c[k] = S(1);
    return o;
  }
  static Octonion scalar(S value) {
    Octonion o;
    o.c[0] = std::move(value);
    return o;
  }

  S& operator[](std::size_t k) { return c[k]; }
  const S& operator[](std::size_t k) const { return c[k]; }

  bool is_imaginary() const { return is_zero(c[0]); }
  bool is_zero_element() const {
    for (const auto& v : c)
      if (!is_zero(v)) return false;
    return true;
  }

  Octonion& operator+=(const Octonion& o) {
    for (std::size_t k = 0; k < 8; ++k) c[k] += o.c[k];
    return *this;
  }
  Octonion& operator-=(const Octonion& o) {
    for (std::size_t k = 0; k < 8; ++k) c[k] -= o.c[k];
    return *this;
  }
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator-(const Octonion& a) {
    Octonion r;
    for (std::size_t k = 0; k < 8; ++k) r.c[k] = -a.c[k];
    return r;
  }
  friend bool operator==(const Octonion& a, const Octonion& b) {
    for (std::size_t k = 0; k < 8; ++k)
      if (!(a.c[k] == b.c[k])) return false;
    return true;
  }
};

/// Bilinear extension of the table. The scalar rings may differ when their
/// product is declared through ring_product (e.g. rational basis element
/// times symbolic coefficients).
template <class A, class B>
Octonion<ring_product_t<A, B>> multiply(const StructureTable& table, const Octonion<A>& a,
                                        const Octonion<B>& b) {
  using R = ring_product_t<A, B>;
  Octonion<R> r;
  R term;
  for (int i = 0; i < 8; ++i) {
    if (is_zero(a.c[i])) continue;
    for (int j = 0; j < 8; ++j) {
      if (is_zero(b.c[j])) continue;
      const BasisProduct p = table(i, j);
      term = a.c[i] * b.c[j];
      if (p.sign > 0)
        r.c[p.index] += term;
      else
        r.c[p.index] -= term;
    }
  }
  return r;
}

template <class A, class B>
Octonion<ring_product_t<A, B>> multiply(AlgebraKind kind, const Octonion<A>& a,
                                        const Octonion<B>& b) {
  return multiply(StructureTable::of(kind), a, b);
}

template <class S>
Octonion<S> conjugate(const Octonion<S>& a) {
  Octonion<S> r = a;
  for (std::size_t k = 1; k < 8; ++k) r.c[k] = -a.c[k];
  return r;
}

/// Thrown when x * conjugate(x) has a nonzero imaginary part, which only
/// happens for tables that are not composition-algebra tables.
class NormNotScalar : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class S>
S norm_form(const StructureTable& table, const Octonion<S>& a) {
  const Octonion<S> p = multiply(table, a, conjugate(a));
  for (std::size_t k = 1; k < 8; ++k)
    if (!is_zero(p.c[k])) throw NormNotScalar("x * conj(x) has a nonzero e" + std::to_string(k) + " part");
  return p.c[0];
}

template <class S>
S norm_form(AlgebraKind kind, const Octonion<S>& a) {
  return norm_form(StructureTable::of(kind), a);
}

/// (xy)z - x(yz).
template <class S>
Octonion<S> associator(const StructureTable& table, const Octonion<S>& x, const Octonion<S>& y,
                       const Octonion<S>& z) {
  return multiply(table, multiply(table, x, y), z) - multiply(table, x, multiply(table, y, z));
}

template <class S>
Octonion<S> associator(AlgebraKind kind, const Octonion<S>& x, const Octonion<S>& y,
                       const Octonion<S>& z) {
  return associator(StructureTable::of(kind), x, y, z);
}

struct Signature {
  int positive = 0;
  int negative = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Signs of the norm form on the eight basis directions.
Signature signature(AlgebraKind kind);

using RationalOctonion = Octonion<Rational>;
using RealOctonion = Octonion<double>;

/// "1", "e1", ..., "e7".
std::string basis_name(int k);
/// e.g. "3 - 2*e1 + 1/2*e7"; "0" for the zero element.
std::string to_string(const RationalOctonion& x);

}  // namespace splitoct
