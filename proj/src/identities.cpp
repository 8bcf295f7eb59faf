#include "splitoct/identities.hpp"

#include <stdexcept>

namespace splitoct {

namespace {

IdentityResult named(std::string name) {
  IdentityResult r;
  r.name = std::move(name);
  return r;
}

void record(IdentityResult& r, bool ok, const std::string& witness) {
  ++r.trials;
  if (ok) return;
  ++r.failures;
  r.passed = false;
  if (r.witness.empty()) r.witness = witness;
}

std::string triple(const RationalOctonion& x, const RationalOctonion& y, const RationalOctonion& z) {
  return "x = " + to_string(x) + ", y = " + to_string(y) + ", z = " + to_string(z);
}

IdentityResult anticommutativity(const StructureTable& table) {
  IdentityResult r = named("anticommutativity");
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      if (i == j) continue;
      const auto ei = RationalOctonion::basis(i);
      const auto ej = RationalOctonion::basis(j);
      record(r, multiply(table, ei, ej) == -multiply(table, ej, ei),
             basis_name(i) + "*" + basis_name(j) + " != -" + basis_name(j) + "*" + basis_name(i));
    }
  }
  return r;
}

}  // namespace

bool IdentityReport::all_passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

const IdentityResult* IdentityReport::find(const std::string& name) const {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

RationalOctonion random_octonion(Rng& rng) {
  RationalOctonion x;
  for (auto& v : x.c) v = Rational(static_cast<long>(rng.integer(-9, 9)));
  return x;
}

IdentityReport check_identities(const StructureTable& table, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  IdentityReport report{table.kind(), trials, seed, {}};
  report.results.push_back(anticommutativity(table));

  IdentityResult left = named("left_alternativity");
  IdentityResult right = named("right_alternativity");
  IdentityResult moufang = named("moufang");
  IdentityResult norm = named("norm_multiplicativity");

  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto x = random_octonion(rng);
    const auto y = random_octonion(rng);
    const auto z = random_octonion(rng);
    const auto xx = multiply(table, x, x);
    const auto xy = multiply(table, x, y);
    const auto yx = multiply(table, y, x);

    record(left, multiply(table, x, xy) == multiply(table, xx, y), triple(x, y, z));
    record(right, multiply(table, yx, x) == multiply(table, y, xx), triple(x, y, z));
    record(moufang,
           multiply(table, xy, multiply(table, z, x)) == multiply(table, multiply(table, x, multiply(table, y, z)), x),
           triple(x, y, z));

    bool ok;
    try {
      ok = norm_form(table, xy) == norm_form(table, x) * norm_form(table, y);
    } catch (const NormNotScalar&) {
      ok = false;
    }
    record(norm, ok, "x = " + to_string(x) + ", y = " + to_string(y));
  }
  report.results.push_back(std::move(left));
  report.results.push_back(std::move(right));
  report.results.push_back(std::move(moufang));
  report.results.push_back(std::move(norm));
  return report;
}

IdentityReport check_identities(AlgebraKind kind, std::size_t trials, std::uint64_t seed) {
  return check_identities(StructureTable::of(kind), trials, seed);
}

IdentityResult check_associativity(const StructureTable& table, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  IdentityResult r = named("associativity");
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto x = random_octonion(rng);
    const auto y = random_octonion(rng);
    const auto z = random_octonion(rng);
    const auto a = associator(table, x, y, z);
    record(r, a.is_zero_element(), triple(x, y, z) + ", (xy)z - x(yz) = " + to_string(a));
  }
  return r;
}

std::optional<std::pair<RationalOctonion, RationalOctonion>> find_zero_divisor(AlgebraKind kind,
                                                                                 std::size_t attempts,
                                                                                 std::uint64_t seed) {
  const auto& table = StructureTable::of(kind);
  Rng rng(seed);
  auto draw = [&rng] {
    RationalOctonion v;
    v.c[0] = Rational(static_cast<long>(rng.integer(-9, 9)));
    v.c[7] = Rational(static_cast<long>(rng.integer(-9, 9)));
    return v;
  };
  for (std::size_t n = 0; n < attempts; ++n) {
    const auto x = draw();
    const auto y = draw();
    if (x.is_zero_element() || y.is_zero_element()) continue;
    if (!is_zero(norm_form(table, x))) continue;
    if (multiply(table, x, y).is_zero_element()) return std::pair{x, y};
  }
  return std::nullopt;
}

}  // namespace splitoct
