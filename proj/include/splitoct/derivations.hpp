#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitoct/algebra.hpp"
#include "splitoct/exact_linalg.hpp"
#include "splitoct/symbolic.hpp"

namespace splitoct {

/// Linear map on the imaginary span e1..e7. Entry (i, j) is the coefficient
/// of e_{i+1} in the image of e_{j+1}. The unit is fixed by automorphisms
/// and annihilated by derivations.
class LinearMap7 {
 public:
  using Matrix = std::array<std::array<Rational, 7>, 7>;

  LinearMap7() = default;
  explicit LinearMap7(Matrix m) : m_(std::move(m)) {}

  static LinearMap7 identity();
  /// Exchanges e_i and e_j (1..7), fixing the other units.
  static LinearMap7 swap(int i, int j);
  /// Unpacks 49 coordinates: v[7*i + j] is entry (i, j).
  static LinearMap7 from_coordinates(const std::vector<Rational>& v);

  const Rational& operator()(int i, int j) const { return m_[i][j]; }
  Rational& operator()(int i, int j) { return m_[i][j]; }
  const Matrix& matrix() const { return m_; }

  /// Image of e_k (k in 1..7) as an imaginary octonion.
  RationalOctonion image(int k) const;

  /// Action on the imaginary part; the unit coefficient is multiplied by
  /// unit_image (1 for automorphisms, 0 for derivations).
  template <class S>
  Octonion<ring_product_t<Rational, S>> apply(const Octonion<S>& x, int unit_image) const {
    Octonion<ring_product_t<Rational, S>> r;
    if (unit_image != 0) r.c[0] = Rational(unit_image) * x.c[0];
    for (int j = 0; j < 7; ++j) {
      if (is_zero(x.c[j + 1])) continue;
      for (int i = 0; i < 7; ++i) {
        if (is_zero(m_[i][j])) continue;
        r.c[i + 1] += m_[i][j] * x.c[j + 1];
      }
    }
    return r;
  }

  /// (this o other)(x) = this(other(x)).
  LinearMap7 compose(const LinearMap7& other) const;

  friend bool operator==(const LinearMap7&, const LinearMap7&) = default;

 private:
  Matrix m_{};
};

/// Leibniz equations D(e_a e_b) = D(e_a) e_b + e_a D(e_b), 1 <= a <= b <= 7,
/// over the 49 entries of D, with all-zero rows dropped.
struct DerivationSystem {
  RationalMatrix matrix;
  std::size_t equations_considered = 0;
};

DerivationSystem build_derivation_system(const StructureTable& table);

/// Rational basis of the derivation algebra.
std::vector<LinearMap7> derivation_basis(AlgebraKind kind);
std::size_t derivation_dimension(AlgebraKind kind);

struct Verdict {
  bool holds = true;
  std::string reason;

  explicit operator bool() const { return holds; }
};

/// D(e_i e_j) = D(e_i) e_j + e_i D(e_j) for all ordered pairs of imaginary units.
Verdict is_derivation(const StructureTable& table, const LinearMap7& d);
Verdict is_derivation(AlgebraKind kind, const LinearMap7& d);

/// s invertible and s(e_i) s(e_j) = s(e_i e_j) for all ordered pairs, s(1) = 1.
Verdict is_automorphism(const StructureTable& table, const LinearMap7& s);
Verdict is_automorphism(AlgebraKind kind, const LinearMap7& s);

class NotAnAutomorphism : public std::invalid_argument {
 public:
  explicit NotAnAutomorphism(Verdict v)
      : std::invalid_argument("map is not an automorphism: " + v.reason), verdict_(std::move(v)) {}
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

/// Applies s to the octonion form of the decomposition and regroups.
/// Throws NotAnAutomorphism when s fails is_automorphism.
MaxwellDecomposition transport_maxwell(AlgebraKind kind, const LinearMap7& s, const MaxwellDecomposition& d);

/// Every automorphism of the form e_i -> +-e_{p(i)}, found by exhaustive
/// search over signed permutations.
std::vector<LinearMap7> signed_permutation_automorphisms(AlgebraKind kind);

}  // namespace splitoct
