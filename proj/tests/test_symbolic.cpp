#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "splitoct/random.hpp"
#include "splitoct/symbolic.hpp"

using namespace splitoct;

namespace {

constexpr auto kSplit = AlgebraKind::SplitOctonion;
constexpr auto kOcto = AlgebraKind::Octonion;

SymbolicScalar d(Var v, FieldName f, long k = 1) { return SymbolicScalar::atom(v, f, k); }

// Expansion of e1 d_x + e2 d_y + e4 d_z + e7 d_t applied to
// F = Ex e1 + Ey e2 + Ez e4 + Bx e3 + By e6 + Bz e5 + S e7 + F0, computed
// independently with a computer algebra system and frozen here.
const std::array<std::string, 8> kSplitFull = {
    "-d_x(Ex) - d_y(Ey) - d_z(Ez) + d_t(S)",
    "+d_x(F0) + d_y(Ez) - d_z(Ey) + d_t(Bx)",
    "-d_x(Ez) + d_y(F0) + d_z(Ex) + d_t(By)",
    "+d_x(Ey) - d_y(Ex) + d_z(F0) + d_t(Bz)",
    "-d_x(S) - d_y(Bz) + d_z(By) + d_t(Ex)",
    "+d_x(Bz) - d_y(S) - d_z(Bx) + d_t(Ey)",
    "-d_x(By) + d_y(Bx) - d_z(S) + d_t(Ez)",
    "+d_x(Bx) + d_y(By) + d_z(Bz) + d_t(F0)",
};
const std::array<std::string, 8> kOctonionFull = {
    "-d_x(Ex) - d_y(Ey) - d_z(Ez) - d_t(S)",
    "+d_x(F0) + d_y(Ez) - d_z(Ey) - d_t(Bx)",
    "-d_x(Ez) + d_y(F0) + d_z(Ex) - d_t(By)",
    "+d_x(Ey) - d_y(Ex) + d_z(F0) - d_t(Bz)",
    "-d_x(S) - d_y(Bz) + d_z(By) + d_t(Ex)",
    "+d_x(Bz) - d_y(S) - d_z(Bx) + d_t(Ey)",
    "-d_x(By) + d_y(Bx) - d_z(S) + d_t(Ez)",
    "+d_x(Bx) + d_y(By) + d_z(Bz) + d_t(F0)",
};

FieldOctonion random_field_octonion(Rng& rng) {
  FieldOctonion f;
  for (auto& slot : f.c) {
    for (FieldName name : kAllFields) {
      const long k = static_cast<long>(rng.integer(-3, 3));
      if (k == 0) continue;
      FieldCombination term = name;
      for (long n = 0; n < std::abs(k); ++n) {
        if (k > 0)
          slot += term;
        else
          slot -= term;
      }
    }
  }
  return f;
}

std::set<DerivAtom> atoms(const MaxwellDecomposition& m) {
  std::set<DerivAtom> out;
  for (const auto& c : components(m))
    for (const auto& [a, k] : c.terms()) out.insert(a);
  return out;
}

}  // namespace

TEST_CASE("symbolic scalars stay canonical") {
  auto s = d(Var::x, FieldName::Ex) + d(Var::y, FieldName::Ey);
  s -= d(Var::x, FieldName::Ex);
  CHECK(s == d(Var::y, FieldName::Ey));
  CHECK(s.terms().size() == 1);
  CHECK((s - s).empty());
  CHECK((Rational(0) * s).empty());
  CHECK(to_string(SymbolicScalar{}) == "0");
  CHECK(to_string(d(Var::t, FieldName::Bx, 2) - d(Var::y, FieldName::Ez)) == "-d_y(Ez) + 2*d_t(Bx)");
  CHECK(SymbolicScalar::atom(Var::x, FieldName::Ex, 0).empty());
}

TEST_CASE("the field octonion places components as printed") {
  const auto f = maxwell_field(true, true);
  CHECK(f.c[1] == FieldCombination(FieldName::Ex));
  CHECK(f.c[2] == FieldCombination(FieldName::Ey));
  CHECK(f.c[4] == FieldCombination(FieldName::Ez));
  CHECK(f.c[3] == FieldCombination(FieldName::Bx));
  CHECK(f.c[6] == FieldCombination(FieldName::By));
  CHECK(f.c[5] == FieldCombination(FieldName::Bz));
  CHECK(f.c[7] == FieldCombination(FieldName::S));
  CHECK(f.c[0] == FieldCombination(FieldName::F0));
  const auto g = maxwell_field(false, false);
  CHECK(g.is_imaginary());
  CHECK(is_zero(g.c[7]));
}

TEST_CASE("split expansion of E, B reproduces vacuum Maxwell groups") {
  const auto m = apply_dirac(kSplit, maxwell_field(false, false));
  CHECK(m.scalar_part == -(d(Var::x, FieldName::Ex) + d(Var::y, FieldName::Ey) + d(Var::z, FieldName::Ez)));
  // curl E + d_t B
  CHECK(m.q_vec[0] == d(Var::y, FieldName::Ez) - d(Var::z, FieldName::Ey) + d(Var::t, FieldName::Bx));
  CHECK(m.q_vec[1] == d(Var::z, FieldName::Ex) - d(Var::x, FieldName::Ez) + d(Var::t, FieldName::By));
  CHECK(m.q_vec[2] == d(Var::x, FieldName::Ey) - d(Var::y, FieldName::Ex) + d(Var::t, FieldName::Bz));
  // -curl B + d_t E
  CHECK(m.e7q_vec[0] == d(Var::z, FieldName::By) - d(Var::y, FieldName::Bz) + d(Var::t, FieldName::Ex));
  CHECK(m.e7q_vec[1] == d(Var::x, FieldName::Bz) - d(Var::z, FieldName::Bx) + d(Var::t, FieldName::Ey));
  CHECK(m.e7q_vec[2] == d(Var::y, FieldName::Bx) - d(Var::x, FieldName::By) + d(Var::t, FieldName::Ez));
  CHECK(m.e7_part == d(Var::x, FieldName::Bx) + d(Var::y, FieldName::By) + d(Var::z, FieldName::Bz));
  CHECK(to_string(m.q_vec[0]) == "+d_y(Ez) - d_z(Ey) + d_t(Bx)");
}

TEST_CASE("octonion expansion flips only the d_t B terms") {
  const auto split = apply_dirac(kSplit, maxwell_field(false, false));
  const auto octo = apply_dirac(kOcto, maxwell_field(false, false));
  CHECK(octo.q_vec[0] == d(Var::y, FieldName::Ez) - d(Var::z, FieldName::Ey) - d(Var::t, FieldName::Bx));
  CHECK(octo.scalar_part == split.scalar_part);
  CHECK(octo.e7q_vec == split.e7q_vec);
  CHECK(octo.e7_part == split.e7_part);
}

TEST_CASE("frozen full expansions with S and F0") {
  const auto split = components(apply_dirac(kSplit, maxwell_field(true, true)));
  const auto octo = components(apply_dirac(kOcto, maxwell_field(true, true)));
  for (std::size_t i = 0; i < 8; ++i) {
    CAPTURE(component_names()[i]);
    CHECK(to_string(split[i]) == kSplitFull[i]);
    CHECK(to_string(octo[i]) == kOctonionFull[i]);
  }
}

TEST_CASE("S adds d_t S to the scalar and -grad S to e7Q") {
  const auto base = apply_dirac(kSplit, maxwell_field(false, false));
  const auto with_s = apply_dirac(kSplit, maxwell_field(true, false));
  const auto diff = with_s - base;
  CHECK(diff.scalar_part == d(Var::t, FieldName::S));
  CHECK(diff.e7q_vec[0] == -d(Var::x, FieldName::S));
  CHECK(diff.e7q_vec[1] == -d(Var::y, FieldName::S));
  CHECK(diff.e7q_vec[2] == -d(Var::z, FieldName::S));
  CHECK(diff.q_vec == std::array<SymbolicScalar, 3>{});
  CHECK(diff.e7_part.empty());
}

TEST_CASE("F0 alone gives grad F0 in Q and d_t F0 on e7") {
  FieldOctonion f;
  f.c[0] = FieldName::F0;
  const auto m = apply_dirac(kSplit, f);
  CHECK(m.scalar_part.empty());
  CHECK(m.q_vec[0] == d(Var::x, FieldName::F0));
  CHECK(m.q_vec[1] == d(Var::y, FieldName::F0));
  CHECK(m.q_vec[2] == d(Var::z, FieldName::F0));
  CHECK(m.e7q_vec == std::array<SymbolicScalar, 3>{});
  CHECK(m.e7_part == d(Var::t, FieldName::F0));
}

TEST_CASE("expected decomposition matches the product in every configuration") {
  for (AlgebraKind kind : {kOcto, kSplit})
    for (bool s : {false, true})
      for (bool f0 : {false, true}) {
        const auto v = verify_expansion(kind, s, f0);
        CHECK(v.equal);
        CHECK(v.mismatches.empty());
      }
}

TEST_CASE("a mismatch names the component and both sides") {
  const auto bad = StructureTable::of(kSplit).with_flipped_sign(7, 1);
  const auto v = compare(apply_dirac(bad, maxwell_field(false, false)), expected_decomposition(kSplit, false, false));
  CHECK_FALSE(v.equal);
  REQUIRE(v.mismatches.size() == 1);
  CHECK(v.mismatches[0].component == "e7q_vec.x");
  CHECK(v.mismatches[0].actual != v.mismatches[0].expected);
}

TEST_CASE("regrouping loses nothing") {
  Rng rng(21);
  for (int n = 0; n < 50; ++n) {
    const auto f = random_field_octonion(rng);
    for (AlgebraKind kind : {kOcto, kSplit}) {
      const auto direct = dirac_product(StructureTable::of(kind), f);
      CHECK(apply_dirac(kind, f).to_octonion() == direct);
      CHECK(MaxwellDecomposition::from_octonion(direct).to_octonion() == direct);
    }
  }
}

TEST_CASE("apply_dirac is linear") {
  Rng rng(22);
  for (int n = 0; n < 50; ++n) {
    const auto f = random_field_octonion(rng);
    const auto g = random_field_octonion(rng);
    for (AlgebraKind kind : {kOcto, kSplit}) CHECK(apply_dirac(kind, f + g) == apply_dirac(kind, f) + apply_dirac(kind, g));
  }
}

TEST_CASE("octonion and split differ by exactly 2 d_t B in q_vec") {
  const auto f = maxwell_field(true, true);
  const auto diff = apply_dirac(kSplit, f) - apply_dirac(kOcto, f);
  CHECK(diff.q_vec[0] == d(Var::t, FieldName::Bx, 2));
  CHECK(diff.q_vec[1] == d(Var::t, FieldName::By, 2));
  CHECK(diff.q_vec[2] == d(Var::t, FieldName::Bz, 2));
  // With S present the scalar also differs through e7 e7; without S it does not.
  CHECK(diff.scalar_part == d(Var::t, FieldName::S, 2));
  const auto g = maxwell_field(false, true);
  const auto diff_no_s = apply_dirac(kSplit, g) - apply_dirac(kOcto, g);
  CHECK(diff_no_s.scalar_part.empty());
  CHECK(diff_no_s.e7q_vec == std::array<SymbolicScalar, 3>{});
  CHECK(diff_no_s.e7_part.empty());
}

TEST_CASE("S and F0 touch disjoint groups") {
  for (AlgebraKind kind : {kOcto, kSplit}) {
    const auto base = apply_dirac(kind, maxwell_field(false, false));
    const auto s = apply_dirac(kind, maxwell_field(true, false)) - base;
    const auto f0 = apply_dirac(kind, maxwell_field(false, true)) - base;
    CHECK(s.q_vec == std::array<SymbolicScalar, 3>{});
    CHECK(s.e7_part.empty());
    CHECK_FALSE(s.scalar_part.empty());
    CHECK(f0.scalar_part.empty());
    CHECK(f0.e7q_vec == std::array<SymbolicScalar, 3>{});
    for (const auto& a : atoms(s)) CHECK(a.field == FieldName::S);
    for (const auto& a : atoms(f0)) CHECK(a.field == FieldName::F0);
  }
}

TEST_CASE("render lists one line per component") {
  const std::string text = render(apply_dirac(kSplit, maxwell_field(false, false)));
  CHECK(text.find("q_vec.x = +d_y(Ez) - d_z(Ey) + d_t(Bx)\n") != std::string::npos);
  CHECK(text.find("e7_part = +d_x(Bx) + d_y(By) + d_z(Bz)\n") != std::string::npos);
  CHECK(parse_field_name("Bz") == FieldName::Bz);
  CHECK(parse_var("t") == Var::t);
  CHECK_THROWS_AS(parse_var("w"), std::invalid_argument);
}
