#include "splitoct/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace splitoct {

namespace {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Index of v in the (t, x, y, z) exponent tuple.
int exponent_slot(Var v) {
  switch (v) {
    case Var::t: return 0;
    case Var::x: return 1;
    case Var::y: return 2;
    case Var::z: return 3;
  }
  return 0;
}

// Component (0..2) of E or B a field name refers to; -1 for S and F0.
int vector_component(FieldName f) {
  switch (f) {
    case FieldName::Ex:
    case FieldName::Bx: return 0;
    case FieldName::Ey:
    case FieldName::By: return 1;
    case FieldName::Ez:
    case FieldName::Bz: return 2;
    default: return -1;
  }
}

bool is_electric(FieldName f) { return f == FieldName::Ex || f == FieldName::Ey || f == FieldName::Ez; }

double amplitude(const PlaneWave& w, FieldName f) {
  const int i = vector_component(f);
  if (i < 0) return 0.0;
  if (is_electric(f)) return w.eps[i];
  const Vec3 khat = {w.k[0] / w.omega, w.k[1] / w.omega, w.k[2] / w.omega};
  return cross(khat, w.eps)[i];
}

double phase(const PlaneWave& w, const SpacetimePoint& p) {
  return w.k[0] * p.x + w.k[1] * p.y + w.k[2] * p.z - w.omega * p.t;
}

double power(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

double eval_monomial(const Monomial& m, const SpacetimePoint& p) {
  return power(p.t, m[0]) * power(p.x, m[1]) * power(p.y, m[2]) * power(p.z, m[3]);
}

SpacetimePoint shifted(SpacetimePoint p, Var v, double h) {
  switch (v) {
    case Var::t: p.t += h; break;
    case Var::x: p.x += h; break;
    case Var::y: p.y += h; break;
    case Var::z: p.z += h; break;
  }
  return p;
}

void require_points(const std::vector<SpacetimePoint>& pts) {
  if (pts.empty()) throw ValidationError("point list must be nonempty");
}

}  // namespace

double SpacetimePoint::coordinate(Var v) const {
  switch (v) {
    case Var::t: return t;
    case Var::x: return x;
    case Var::y: return y;
    case Var::z: return z;
  }
  return 0;
}

AnalyticField::AnalyticField(PolynomialField p) : field_(std::move(p)) {
  for (const auto& [name, terms] : std::get<PolynomialField>(field_).coefficients) {
    for (const auto& [m, c] : terms) {
      int degree = 0;
      for (int e : m) {
        if (e < 0) throw ValidationError("monomial exponents must be nonnegative");
        degree += e;
      }
      if (degree > PolynomialField::kMaxDegree)
        throw ValidationError("polynomial field " + std::string(to_string(name)) + " has degree > 3");
    }
  }
}

double AnalyticField::value(FieldName f, const SpacetimePoint& p) const {
  if (const auto* w = std::get_if<PlaneWave>(&field_)) return amplitude(*w, f) * std::cos(phase(*w, p));
  const auto& poly = std::get<PolynomialField>(field_);
  auto it = poly.coefficients.find(f);
  if (it == poly.coefficients.end()) return 0.0;
  double sum = 0.0;
  for (const auto& [m, c] : it->second) sum += c * eval_monomial(m, p);
  return sum;
}

double AnalyticField::derivative(FieldName f, Var v, const SpacetimePoint& p) const {
  if (const auto* w = std::get_if<PlaneWave>(&field_)) {
    // d/dv cos(phase) = -sin(phase) * d(phase)/dv
    const double dphase = v == Var::t ? -w->omega : w->k[exponent_slot(v) - 1];
    return -amplitude(*w, f) * std::sin(phase(*w, p)) * dphase;
  }
  const auto& poly = std::get<PolynomialField>(field_);
  auto it = poly.coefficients.find(f);
  if (it == poly.coefficients.end()) return 0.0;
  const int slot = exponent_slot(v);
  double sum = 0.0;
  for (const auto& [m, c] : it->second) {
    if (m[slot] == 0) continue;
    Monomial reduced = m;
    reduced[slot] -= 1;
    sum += c * m[slot] * eval_monomial(reduced, p);
  }
  return sum;
}

AnalyticField plane_wave_em(const Vec3& k, const Vec3& eps) {
  const double k_norm = norm(k);
  const double eps_norm = norm(eps);
  if (!(k_norm > 0.0)) throw ValidationError("wave vector k must be nonzero");
  if (!(eps_norm > 0.0)) throw ValidationError("polarization eps must be nonzero");
  if (std::abs(dot(eps, k)) > 1e-12 * k_norm * eps_norm)
    throw ValidationError("polarization eps is not transverse to k (eps . k != 0)");
  return AnalyticField(PlaneWave{k, eps, k_norm});
}

AnalyticField random_polynomial_field(Rng& rng) {
  PolynomialField poly;
  for (FieldName f : kAllFields) {
    auto& terms = poly.coefficients[f];
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b)
        for (int c = 0; a + b + c <= 3; ++c)
          for (int d = 0; a + b + c + d <= 3; ++d) terms[{a, b, c, d}] = rng.uniform(-1.0, 1.0);
  }
  return AnalyticField(std::move(poly));
}

std::vector<SpacetimePoint> sample_points(std::size_t count, std::uint64_t seed, double lo, double hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw ValidationError("domain bounds must satisfy lo < hi");
  Rng rng(seed);
  std::vector<SpacetimePoint> pts(count);
  for (auto& p : pts) {
    p.t = rng.uniform(lo, hi);
    p.x = rng.uniform(lo, hi);
    p.y = rng.uniform(lo, hi);
    p.z = rng.uniform(lo, hi);
  }
  return pts;
}

double finite_difference(const AnalyticField& field, FieldName f, Var v, const SpacetimePoint& p, double step) {
  const double fp1 = field.value(f, shifted(p, v, step));
  const double fm1 = field.value(f, shifted(p, v, -step));
  const double fp2 = field.value(f, shifted(p, v, 2 * step));
  const double fm2 = field.value(f, shifted(p, v, -2 * step));
  return (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * step);
}

NumericDecomposition dirac_at(const StructureTable& table, const AnalyticField& field, const SpacetimePoint& p,
                              const EvaluationOptions& options) {
  RealOctonion sum;
  for (Var v : kAllVars) {
    RealOctonion df;
    for (FieldName f : kAllFields) {
      df.c[field_slot(f)] = options.mode == DerivativeMode::Analytic ? field.derivative(f, v, p)
                                                                      : finite_difference(field, f, v, p, options.fd_step);
    }
    sum += multiply(table, RealOctonion::basis(dirac_unit(v)), df);
  }
  return NumericDecomposition::from_octonion(sum);
}

double ResidualReport::max_group() const { return std::max({scalar, q_vec, e7q_vec, e7_part}); }

ResidualReport evaluate_dF(const StructureTable& table, const AnalyticField& field,
                           const std::vector<SpacetimePoint>& pts, const EvaluationOptions& options) {
  require_points(pts);
  ResidualReport report;
  for (const auto& p : pts) {
    const auto d = dirac_at(table, field, p, options);
    report.scalar = std::max(report.scalar, std::abs(d.scalar_part));
    for (std::size_t i = 0; i < 3; ++i) {
      report.q_vec = std::max(report.q_vec, std::abs(d.q_vec[i]));
      report.e7q_vec = std::max(report.e7q_vec, std::abs(d.e7q_vec[i]));
    }
    report.e7_part = std::max(report.e7_part, std::abs(d.e7_part));

    if (options.mode == DerivativeMode::FiniteDifference) {
      EvaluationOptions half = options;
      half.fd_step = options.fd_step / 2;
      const auto a = d.to_octonion();
      const auto b = dirac_at(table, field, p, half).to_octonion();
      for (std::size_t k = 0; k < 8; ++k) report.richardson_gap = std::max(report.richardson_gap, std::abs(a.c[k] - b.c[k]));
    }
  }
  report.points_evaluated = pts.size();
  return report;
}

ResidualReport evaluate_dF(AlgebraKind kind, const AnalyticField& field, const std::vector<SpacetimePoint>& pts,
                           const EvaluationOptions& options) {
  return evaluate_dF(StructureTable::of(kind), field, pts, options);
}

double evaluate_symbolic(const SymbolicScalar& s, const AnalyticField& field, const SpacetimePoint& p) {
  double sum = 0.0;
  for (const auto& [atom, k] : s.terms()) sum += k.get_d() * field.derivative(atom.field, atom.var, p);
  return sum;
}

double cross_check(AlgebraKind kind, const AnalyticField& field, const std::vector<SpacetimePoint>& pts) {
  require_points(pts);
  const auto& table = StructureTable::of(kind);
  const auto expected = components(expected_decomposition(kind, true, true));
  double worst = 0.0;
  for (const auto& p : pts) {
    const auto by_product = dirac_at(table, field, p);
    const std::array<double, 8> actual = {by_product.scalar_part, by_product.q_vec[0],   by_product.q_vec[1],
                                          by_product.q_vec[2],    by_product.e7q_vec[0], by_product.e7q_vec[1],
                                          by_product.e7q_vec[2],  by_product.e7_part};
    for (std::size_t i = 0; i < 8; ++i)
      worst = std::max(worst, std::abs(actual[i] - evaluate_symbolic(expected[i], field, p)));
  }
  return worst;
}

}  // namespace splitoct
