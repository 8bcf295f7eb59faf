#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <variant>
#include <vector>

#include "splitoct/algebra.hpp"
#include "splitoct/random.hpp"
#include "splitoct/symbolic.hpp"

namespace splitoct {

using Vec3 = std::array<double, 3>;

struct SpacetimePoint {
  double t = 0, x = 0, y = 0, z = 0;

  double coordinate(Var v) const;
};

/// Thrown when a numeric precondition is violated; the message names it.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// E = eps cos(k.r - |k| t), B = (k^ x eps) cos(k.r - |k| t).
struct PlaneWave {
  Vec3 k{};
  Vec3 eps{};
  double omega = 0;
};

/// Exponents of (t, x, y, z).
using Monomial = std::array<int, 4>;

/// Per-field polynomial in (t, x, y, z) of total degree <= 3; absent fields
/// are identically zero.
struct PolynomialField {
  static constexpr int kMaxDegree = 3;
  std::map<FieldName, std::map<Monomial, double>> coefficients;
};

/// Closed-form field with exact first partial derivatives.
class AnalyticField {
 public:
  explicit AnalyticField(PlaneWave w) : field_(w) {}
  explicit AnalyticField(PolynomialField p);

  static AnalyticField zero() { return AnalyticField(PolynomialField{}); }

  double value(FieldName f, const SpacetimePoint& p) const;
  double derivative(FieldName f, Var v, const SpacetimePoint& p) const;

  const std::variant<PlaneWave, PolynomialField>& variant() const { return field_; }

 private:
  std::variant<PlaneWave, PolynomialField> field_;
};

/// Validates |k| > 0, eps != 0 and eps . k = 0 (relative 1e-12).
AnalyticField plane_wave_em(const Vec3& k, const Vec3& eps);

/// All 35 monomials of degree <= 3 for every one of the eight fields, with
/// coefficients uniform in [-1, 1].
AnalyticField random_polynomial_field(Rng& rng);

/// Points uniform in [lo, hi]^4.
std::vector<SpacetimePoint> sample_points(std::size_t count, std::uint64_t seed, double lo = -10.0, double hi = 10.0);

using NumericDecomposition = Decomposition<double>;

enum class DerivativeMode { Analytic, FiniteDifference };

struct EvaluationOptions {
  DerivativeMode mode = DerivativeMode::Analytic;
  double fd_step = 1e-3;
};

/// 4th-order central difference of f along v.
double finite_difference(const AnalyticField& field, FieldName f, Var v, const SpacetimePoint& p, double step);

/// Sum over mu of e_mu * d_mu F at one point with F in the standard
/// placement (all eight field slots), regrouped.
NumericDecomposition dirac_at(const StructureTable& table, const AnalyticField& field, const SpacetimePoint& p,
                              const EvaluationOptions& options = {});

struct ResidualReport {
  double scalar = 0;
  double q_vec = 0;
  double e7q_vec = 0;
  double e7_part = 0;
  std::size_t points_evaluated = 0;
  std::uint64_t seed = 0;
  /// Largest |h - h/2| disagreement seen in finite-difference mode; 0 otherwise.
  double richardson_gap = 0;

  double max_group() const;
  friend bool operator==(const ResidualReport&, const ResidualReport&) = default;
};

/// Per-group maximum absolute value of the regrouped d F over the points.
/// Requires pts nonempty.
ResidualReport evaluate_dF(const StructureTable& table, const AnalyticField& field,
                           const std::vector<SpacetimePoint>& pts, const EvaluationOptions& options = {});
ResidualReport evaluate_dF(AlgebraKind kind, const AnalyticField& field, const std::vector<SpacetimePoint>& pts,
                           const EvaluationOptions& options = {});

/// Numeric value of a symbolic combination with each atom d_v(f) replaced by
/// the field's analytic derivative at p.
double evaluate_symbolic(const SymbolicScalar& s, const AnalyticField& field, const SpacetimePoint& p);

/// Max componentwise discrepancy between the algebra-product path and the
/// vector-calculus path (expected_decomposition with S and F0, evaluated
/// numerically). Requires pts nonempty.
double cross_check(AlgebraKind kind, const AnalyticField& field, const std::vector<SpacetimePoint>& pts);

}  // namespace splitoct
