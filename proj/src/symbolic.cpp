#include "splitoct/symbolic.hpp"

#include <sstream>
#include <stdexcept>

namespace splitoct {

std::string_view to_string(FieldName f) {
  switch (f) {
    case FieldName::Ex: return "Ex";
    case FieldName::Ey: return "Ey";
    case FieldName::Ez: return "Ez";
    case FieldName::Bx: return "Bx";
    case FieldName::By: return "By";
    case FieldName::Bz: return "Bz";
    case FieldName::S: return "S";
    case FieldName::F0: return "F0";
  }
  return "?";
}

std::string_view to_string(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::z: return "z";
    case Var::t: return "t";
  }
  return "?";
}

FieldName parse_field_name(std::string_view s) {
  for (FieldName f : kAllFields)
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown field name '" + std::string(s) + "'");
}

Var parse_var(std::string_view s) {
  for (Var v : kAllVars)
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown variable '" + std::string(s) + "'");
}

// --- SymbolicScalar ---------------------------------------------------------

SymbolicScalar SymbolicScalar::atom(Var v, FieldName f, Rational coeff) {
  SymbolicScalar s;
  s.add({v, f}, coeff);
  return s;
}

Rational SymbolicScalar::coefficient(const DerivAtom& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymbolicScalar::add(const DerivAtom& a, const Rational& k) {
  if (is_zero(k)) return;
  auto [it, inserted] = terms_.try_emplace(a, k);
  if (inserted) return;
  it->second += k;
  if (is_zero(it->second)) terms_.erase(it);
}

SymbolicScalar& SymbolicScalar::operator+=(const SymbolicScalar& o) {
  for (const auto& [a, k] : o.terms_) add(a, k);
  return *this;
}

SymbolicScalar& SymbolicScalar::operator-=(const SymbolicScalar& o) {
  for (const auto& [a, k] : o.terms_) add(a, -k);
  return *this;
}

SymbolicScalar& SymbolicScalar::operator*=(const Rational& k) {
  if (is_zero(k)) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, c] : terms_) c *= k;
  return *this;
}

std::string to_string(const SymbolicScalar& s) {
  if (s.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, k] : s.terms()) {
    const bool negative = sgn(k) < 0;
    if (!first) out << ' ';
    out << (negative ? '-' : '+');
    if (!first) out << ' ';
    const Rational mag = abs(k);
    if (mag != 1) out << mag.get_str() << '*';
    out << "d_" << to_string(a.var) << '(' << to_string(a.field) << ')';
    first = false;
  }
  return out.str();
}

// --- FieldCombination -------------------------------------------------------

FieldCombination& FieldCombination::operator+=(const FieldCombination& o) {
  for (const auto& [f, k] : o.terms_) {
    Rational& slot = terms_[f];
    slot += k;
    if (is_zero(slot)) terms_.erase(f);
  }
  return *this;
}

FieldCombination& FieldCombination::operator-=(const FieldCombination& o) {
  return *this += -o;
}

FieldCombination operator-(FieldCombination a) {
  for (auto& [f, k] : a.terms_) k = -k;
  return a;
}

SymbolicScalar FieldCombination::derivative(Var v) const {
  SymbolicScalar out;
  for (const auto& [f, k] : terms_) out += SymbolicScalar::atom(v, f, k);
  return out;
}

int field_slot(FieldName f) {
  switch (f) {
    case FieldName::F0: return 0;
    case FieldName::Ex: return 1;
    case FieldName::Ey: return 2;
    case FieldName::Bx: return 3;
    case FieldName::Ez: return 4;
    case FieldName::Bz: return 5;
    case FieldName::By: return 6;
    case FieldName::S: return 7;
  }
  throw std::logic_error("unreachable field name");
}

FieldOctonion maxwell_field(bool with_S, bool with_F0) {
  FieldOctonion f;
  for (FieldName name : {FieldName::Ex, FieldName::Ey, FieldName::Ez, FieldName::Bx, FieldName::By, FieldName::Bz})
    f.c[field_slot(name)] = name;
  if (with_S) f.c[field_slot(FieldName::S)] = FieldName::S;
  if (with_F0) f.c[field_slot(FieldName::F0)] = FieldName::F0;
  return f;
}

int dirac_unit(Var v) {
  switch (v) {
    case Var::x: return 1;
    case Var::y: return 2;
    case Var::z: return 4;
    case Var::t: return 7;
  }
  throw std::logic_error("unreachable variable");
}

// --- decomposition ----------------------------------------------------------

MaxwellDecomposition operator+(const MaxwellDecomposition& a, const MaxwellDecomposition& b) {
  return MaxwellDecomposition::from_octonion(a.to_octonion() + b.to_octonion());
}

MaxwellDecomposition operator-(const MaxwellDecomposition& a, const MaxwellDecomposition& b) {
  return MaxwellDecomposition::from_octonion(a.to_octonion() - b.to_octonion());
}

const std::array<std::string, 8>& component_names() {
  static const std::array<std::string, 8> names = {"scalar",    "q_vec.x",   "q_vec.y",   "q_vec.z",
                                                   "e7q_vec.x", "e7q_vec.y", "e7q_vec.z", "e7_part"};
  return names;
}

std::array<SymbolicScalar, 8> components(const MaxwellDecomposition& d) {
  return {d.scalar_part, d.q_vec[0],   d.q_vec[1],   d.q_vec[2],
          d.e7q_vec[0],  d.e7q_vec[1], d.e7q_vec[2], d.e7_part};
}

SymbolicOctonion dirac_product(const StructureTable& table, const FieldOctonion& f) {
  SymbolicOctonion sum;
  for (Var v : kAllVars) {
    SymbolicOctonion df;
    for (std::size_t k = 0; k < 8; ++k) df.c[k] = f.c[k].derivative(v);
    sum += multiply(table, RationalOctonion::basis(dirac_unit(v)), df);
  }
  return sum;
}

MaxwellDecomposition apply_dirac(const StructureTable& table, const FieldOctonion& f) {
  return MaxwellDecomposition::from_octonion(dirac_product(table, f));
}

MaxwellDecomposition apply_dirac(AlgebraKind kind, const FieldOctonion& f) {
  return apply_dirac(StructureTable::of(kind), f);
}

namespace {

using Vec3 = std::array<SymbolicScalar, 3>;

SymbolicScalar d(Var v, FieldName f) { return SymbolicScalar::atom(v, f); }

const std::array<FieldName, 3> kE = {FieldName::Ex, FieldName::Ey, FieldName::Ez};
const std::array<FieldName, 3> kB = {FieldName::Bx, FieldName::By, FieldName::Bz};
const std::array<Var, 3> kSpace = {Var::x, Var::y, Var::z};

SymbolicScalar div(const std::array<FieldName, 3>& v) {
  return d(Var::x, v[0]) + d(Var::y, v[1]) + d(Var::z, v[2]);
}

Vec3 curl(const std::array<FieldName, 3>& v) {
  return {d(Var::y, v[2]) - d(Var::z, v[1]), d(Var::z, v[0]) - d(Var::x, v[2]), d(Var::x, v[1]) - d(Var::y, v[0])};
}

Vec3 time_derivative(const std::array<FieldName, 3>& v) {
  return {d(Var::t, v[0]), d(Var::t, v[1]), d(Var::t, v[2])};
}

Vec3 grad(FieldName f) { return {d(Var::x, f), d(Var::y, f), d(Var::z, f)}; }

}  // namespace

MaxwellDecomposition expected_decomposition(AlgebraKind kind, bool with_S, bool with_F0) {
  // e7 e7 = -1 (octonion) or +1 (split) fixes the sign of both d_t B and d_t S.
  const Rational s = kind == AlgebraKind::SplitOctonion ? 1 : -1;

  MaxwellDecomposition out;
  out.scalar_part = -div(kE);
  const Vec3 curl_e = curl(kE);
  const Vec3 curl_b = curl(kB);
  const Vec3 dt_b = time_derivative(kB);
  const Vec3 dt_e = time_derivative(kE);
  for (std::size_t i = 0; i < 3; ++i) {
    out.q_vec[i] = curl_e[i] + s * dt_b[i];
    out.e7q_vec[i] = -curl_b[i] + dt_e[i];
  }
  out.e7_part = div(kB);

  if (with_S) {
    out.scalar_part += s * d(Var::t, FieldName::S);
    const Vec3 grad_s = grad(FieldName::S);
    for (std::size_t i = 0; i < 3; ++i) out.e7q_vec[i] -= grad_s[i];
  }
  if (with_F0) {
    const Vec3 grad_f0 = grad(FieldName::F0);
    for (std::size_t i = 0; i < 3; ++i) out.q_vec[i] += grad_f0[i];
    out.e7_part += d(Var::t, FieldName::F0);
  }
  return out;
}

ExpansionVerdict compare(const MaxwellDecomposition& actual, const MaxwellDecomposition& expected) {
  ExpansionVerdict verdict;
  const auto a = components(actual);
  const auto e = components(expected);
  for (std::size_t i = 0; i < 8; ++i) {
    if (a[i] == e[i]) continue;
    verdict.equal = false;
    verdict.mismatches.push_back({component_names()[i], to_string(a[i]), to_string(e[i])});
  }
  return verdict;
}

ExpansionVerdict verify_expansion(AlgebraKind kind, bool with_S, bool with_F0) {
  return compare(apply_dirac(kind, maxwell_field(with_S, with_F0)), expected_decomposition(kind, with_S, with_F0));
}

std::string render(const MaxwellDecomposition& d) {
  std::ostringstream out;
  const auto parts = components(d);
  for (std::size_t i = 0; i < 8; ++i) out << component_names()[i] << " = " << to_string(parts[i]) << '\n';
  return out.str();
}

}  // namespace splitoct
