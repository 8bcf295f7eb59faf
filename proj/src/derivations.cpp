#include "splitoct/derivations.hpp"

#include <algorithm>
#include <numeric>

namespace splitoct {

namespace {

std::size_t unknown(int row, int col) { return static_cast<std::size_t>(7 * row + col); }

RationalOctonion basis_product(const StructureTable& table, int i, int j) {
  const BasisProduct p = table(i, j);
  RationalOctonion r;
  r.c[p.index] = p.sign;
  return r;
}

RationalMatrix as_matrix(const LinearMap7& s) {
  RationalMatrix m(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m(i, j) = s(i, j);
  return m;
}

}  // namespace

LinearMap7 LinearMap7::identity() {
  LinearMap7 s;
  for (int i = 0; i < 7; ++i) s.m_[i][i] = 1;
  return s;
}

LinearMap7 LinearMap7::swap(int i, int j) {
  if (i < 1 || i > 7 || j < 1 || j > 7) throw std::out_of_range("swap indices must be in 1..7");
  LinearMap7 s = identity();
  s.m_[i - 1][i - 1] = 0;
  s.m_[j - 1][j - 1] = 0;
  s.m_[j - 1][i - 1] = 1;
  s.m_[i - 1][j - 1] = 1;
  return s;
}

LinearMap7 LinearMap7::from_coordinates(const std::vector<Rational>& v) {
  if (v.size() != 49) throw std::invalid_argument("a 7x7 map needs 49 coordinates");
  LinearMap7 s;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) s.m_[i][j] = v[unknown(i, j)];
  return s;
}

RationalOctonion LinearMap7::image(int k) const {
  RationalOctonion r;
  for (int i = 0; i < 7; ++i) r.c[i + 1] = m_[i][k - 1];
  return r;
}

LinearMap7 LinearMap7::compose(const LinearMap7& other) const {
  LinearMap7 r;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) r.m_[i][j] += m_[i][k] * other.m_[k][j];
  return r;
}

DerivationSystem build_derivation_system(const StructureTable& table) {
  DerivationSystem system;
  system.matrix = RationalMatrix(0, 49);
  for (int a = 1; a <= 7; ++a) {
    for (int b = a; b <= 7; ++b) {
      // equation[k][u]: coefficient of unknown u in the e_k component of
      // D(e_a e_b) - D(e_a) e_b - e_a D(e_b).
      std::array<std::vector<Rational>, 8> equation;
      for (auto& row : equation) row.assign(49, Rational(0));

      const BasisProduct ab = table(a, b);
      if (ab.index != 0)
        for (int i = 0; i < 7; ++i) equation[i + 1][unknown(i, ab.index - 1)] += ab.sign;
      for (int i = 0; i < 7; ++i) {
        const BasisProduct left = table(i + 1, b);
        equation[left.index][unknown(i, a - 1)] -= left.sign;
        const BasisProduct right = table(a, i + 1);
        equation[right.index][unknown(i, b - 1)] -= right.sign;
      }

      for (const auto& row : equation) {
        ++system.equations_considered;
        if (std::any_of(row.begin(), row.end(), [](const Rational& q) { return !is_zero(q); }))
          system.matrix.append_row(row);
      }
    }
  }
  return system;
}

std::vector<LinearMap7> derivation_basis(AlgebraKind kind) {
  const DerivationSystem system = build_derivation_system(StructureTable::of(kind));
  std::vector<LinearMap7> basis;
  for (const auto& v : null_space(system.matrix)) basis.push_back(LinearMap7::from_coordinates(v));
  return basis;
}

std::size_t derivation_dimension(AlgebraKind kind) {
  const DerivationSystem system = build_derivation_system(StructureTable::of(kind));
  return system.matrix.cols() - rank(system.matrix);
}

Verdict is_derivation(const StructureTable& table, const LinearMap7& d) {
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      const auto ei = RationalOctonion::basis(i);
      const auto ej = RationalOctonion::basis(j);
      const auto lhs = d.apply(basis_product(table, i, j), 0);
      const auto rhs = multiply(table, d.apply(ei, 0), ej) + multiply(table, ei, d.apply(ej, 0));
      if (!(lhs == rhs)) {
        return {false, "Leibniz rule fails on (" + basis_name(i) + ", " + basis_name(j) + "): D(e_i e_j) = " +
                           to_string(lhs) + ", D(e_i) e_j + e_i D(e_j) = " + to_string(rhs)};
      }
    }
  }
  return {true, ""};
}

Verdict is_derivation(AlgebraKind kind, const LinearMap7& d) { return is_derivation(StructureTable::of(kind), d); }

Verdict is_automorphism(const StructureTable& table, const LinearMap7& s) {
  if (rank(as_matrix(s)) != 7) return {false, "map is singular"};
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      const auto lhs = multiply(table, s.image(i), s.image(j));
      const auto rhs = s.apply(basis_product(table, i, j), 1);
      if (!(lhs == rhs)) {
        return {false, "s(" + basis_name(i) + ") s(" + basis_name(j) + ") = " + to_string(lhs) + " but s(" +
                           basis_name(i) + basis_name(j) + ") = " + to_string(rhs)};
      }
    }
  }
  return {true, ""};
}

Verdict is_automorphism(AlgebraKind kind, const LinearMap7& s) { return is_automorphism(StructureTable::of(kind), s); }

MaxwellDecomposition transport_maxwell(AlgebraKind kind, const LinearMap7& s, const MaxwellDecomposition& d) {
  Verdict v = is_automorphism(kind, s);
  if (!v) throw NotAnAutomorphism(std::move(v));
  return MaxwellDecomposition::from_octonion(s.apply(d.to_octonion(), 1));
}

std::vector<LinearMap7> signed_permutation_automorphisms(AlgebraKind kind) {
  const auto& table = StructureTable::of(kind);
  std::array<int, 8> perm{};  // perm[0] = 0 keeps the unit fixed
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<LinearMap7> found;
  do {
    for (int mask = 0; mask < 128; ++mask) {
      std::array<int, 8> sign{};
      sign[0] = 1;
      for (int k = 1; k <= 7; ++k) sign[k] = (mask >> (k - 1)) & 1 ? -1 : 1;
      bool ok = true;
      for (int i = 1; i <= 7 && ok; ++i) {
        for (int j = 1; j <= 7 && ok; ++j) {
          const BasisProduct src = table(i, j);
          const BasisProduct img = table(perm[i], perm[j]);
          ok = img.index == perm[src.index] && sign[i] * sign[j] * img.sign == src.sign * sign[src.index];
        }
      }
      if (!ok) continue;
      LinearMap7 s;
      for (int k = 1; k <= 7; ++k) s(perm[k] - 1, k - 1) = sign[k];
      found.push_back(std::move(s));
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return found;
}

}  // namespace splitoct
