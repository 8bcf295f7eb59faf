#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "splitoct/algebra.hpp"

namespace splitoct {

enum class FieldName { Ex, Ey, Ez, Bx, By, Bz, S, F0 };
enum class Var { x, y, z, t };

inline constexpr std::array<FieldName, 8> kAllFields = {FieldName::Ex, FieldName::Ey, FieldName::Ez, FieldName::Bx,
                                                        FieldName::By, FieldName::Bz, FieldName::S,  FieldName::F0};
inline constexpr std::array<Var, 4> kAllVars = {Var::x, Var::y, Var::z, Var::t};

std::string_view to_string(FieldName f);
std::string_view to_string(Var v);
FieldName parse_field_name(std::string_view s);
Var parse_var(std::string_view s);

/// The opaque symbol d_var(field).
struct DerivAtom {
  Var var;
  FieldName field;

  friend auto operator<=>(const DerivAtom&, const DerivAtom&) = default;
};

/// Rational linear combination of derivative atoms, kept canonical: no zero
/// coefficients are stored, so equality is map equality.
class SymbolicScalar {
 public:
  SymbolicScalar() = default;
  static SymbolicScalar atom(Var v, FieldName f, Rational coeff = 1);

  const std::map<DerivAtom, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Rational coefficient(const DerivAtom& a) const;

  SymbolicScalar& operator+=(const SymbolicScalar& o);
  SymbolicScalar& operator-=(const SymbolicScalar& o);
  SymbolicScalar& operator*=(const Rational& k);

  friend SymbolicScalar operator+(SymbolicScalar a, const SymbolicScalar& b) { return a += b; }
  friend SymbolicScalar operator-(SymbolicScalar a, const SymbolicScalar& b) { return a -= b; }
  friend SymbolicScalar operator-(SymbolicScalar a) { return a *= Rational(-1); }
  friend SymbolicScalar operator*(const Rational& k, SymbolicScalar a) { return a *= k; }
  friend SymbolicScalar operator*(SymbolicScalar a, const Rational& k) { return a *= k; }
  friend bool operator==(const SymbolicScalar&, const SymbolicScalar&) = default;

 private:
  void add(const DerivAtom& a, const Rational& k);

  std::map<DerivAtom, Rational> terms_;
};

inline bool is_zero(const SymbolicScalar& s) { return s.empty(); }

/// "+d_y(Ez) - d_z(Ey) + 2*d_t(Bx)"; "0" when empty.
std::string to_string(const SymbolicScalar& s);

template <>
struct ring_product<Rational, SymbolicScalar> {
  using type = SymbolicScalar;
};
template <>
struct ring_product<SymbolicScalar, Rational> {
  using type = SymbolicScalar;
};

using SymbolicOctonion = Octonion<SymbolicScalar>;

/// Rational linear combination of field names; coefficient type of a field
/// octonion before differentiation.
class FieldCombination {
 public:
  FieldCombination() = default;
  FieldCombination(FieldName f) { terms_[f] = 1; }  // NOLINT(google-explicit-constructor)

  const std::map<FieldName, Rational>& terms() const { return terms_; }

  FieldCombination& operator+=(const FieldCombination& o);
  FieldCombination& operator-=(const FieldCombination& o);
  friend FieldCombination operator-(FieldCombination a);
  friend bool operator==(const FieldCombination&, const FieldCombination&) = default;

  /// d_var applied term by term.
  SymbolicScalar derivative(Var v) const;

 private:
  std::map<FieldName, Rational> terms_;
};

inline bool is_zero(const FieldCombination& f) { return f.terms().empty(); }

using FieldOctonion = Octonion<FieldCombination>;

/// Coefficient index of each field in the electromagnetic field octonion
/// F = Ex e1 + Ey e2 + Ez e4 + Bx e3 + By e6 + Bz e5 + S e7 + F0.
int field_slot(FieldName f);

/// F with E and B, optionally S on e7 and F0 on the unit.
FieldOctonion maxwell_field(bool with_S, bool with_F0);

/// Basis index paired with each coordinate derivative in the Dirac-like
/// operator e1 d_x + e2 d_y + e4 d_z + e7 d_t.
int dirac_unit(Var v);

/// Coefficients of e1, e2, e4 form the Q vector; e3, e6, e5 (in that order,
/// i.e. e7e1, e7e2, e7e4) the e7Q vector.
inline constexpr std::array<int, 3> kQSlots = {1, 2, 4};
inline constexpr std::array<int, 3> kE7QSlots = {3, 6, 5};

/// Regrouping of an octonion expression into scalar, Q-vector, e7Q-vector
/// and e7 parts. The four groups cover all eight coefficients.
template <class S>
struct Decomposition {
  S scalar_part{};
  std::array<S, 3> q_vec{};
  std::array<S, 3> e7q_vec{};
  S e7_part{};

  static Decomposition from_octonion(const Octonion<S>& o) {
    Decomposition d;
    d.scalar_part = o.c[0];
    for (std::size_t i = 0; i < 3; ++i) {
      d.q_vec[i] = o.c[kQSlots[i]];
      d.e7q_vec[i] = o.c[kE7QSlots[i]];
    }
    d.e7_part = o.c[7];
    return d;
  }

  Octonion<S> to_octonion() const {
    Octonion<S> o;
    o.c[0] = scalar_part;
    for (std::size_t i = 0; i < 3; ++i) {
      o.c[kQSlots[i]] = q_vec[i];
      o.c[kE7QSlots[i]] = e7q_vec[i];
    }
    o.c[7] = e7_part;
    return o;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

using MaxwellDecomposition = Decomposition<SymbolicScalar>;

MaxwellDecomposition operator+(const MaxwellDecomposition& a, const MaxwellDecomposition& b);
MaxwellDecomposition operator-(const MaxwellDecomposition& a, const MaxwellDecomposition& b);

/// Component names in a fixed order: scalar, q_vec.x..z, e7q_vec.x..z, e7_part.
const std::array<std::string, 8>& component_names();
std::array<SymbolicScalar, 8> components(const MaxwellDecomposition& d);

/// Sum over mu of e_mu * d_mu(f), left multiplication, without regrouping.
SymbolicOctonion dirac_product(const StructureTable& table, const FieldOctonion& f);

MaxwellDecomposition apply_dirac(const StructureTable& table, const FieldOctonion& f);
MaxwellDecomposition apply_dirac(AlgebraKind kind, const FieldOctonion& f);

/// Vector-calculus construction of the expected right-hand sides:
///   scalar  = -div E + s d_t S
///   q_vec   = curl E + s d_t B + grad F0
///   e7q_vec = -curl B + d_t E - grad S
///   e7_part = div B + d_t F0
/// with s = -1 for the octonions and +1 for the split octonions.
MaxwellDecomposition expected_decomposition(AlgebraKind kind, bool with_S, bool with_F0);

struct ComponentMismatch {
  std::string component;
  std::string actual;
  std::string expected;
};

struct ExpansionVerdict {
  bool equal = true;
  std::vector<ComponentMismatch> mismatches;
};

ExpansionVerdict compare(const MaxwellDecomposition& actual, const MaxwellDecomposition& expected);
ExpansionVerdict verify_expansion(AlgebraKind kind, bool with_S, bool with_F0);

/// One "name = terms" line per component.
std::string render(const MaxwellDecomposition& d);

}  // namespace splitoct
