#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include "splitoct/algebra.hpp"
#include "splitoct/identities.hpp"

using namespace splitoct;

namespace {

// The printed table, row by row, with "pm"/"mp" standing for the two
// kind-dependent signs. Parsed here independently of the library's copy.
const char* kPrintedTable[7] = {
    "-1 e4 e7 -e2 e6 -e5 -e3",     "-e4 -1 e5 e1 -e3 e7 -e6",      "-e7 -e5 mp1 e6 pme2 mpe4 pme1",
    "e2 -e1 -e6 -1 e7 e3 -e5",     "-e6 e3 mpe2 -e7 mp1 pme1 pme4", "e5 -e7 pme4 -e3 mpe1 mp1 pme2",
    "e3 e6 mpe1 e5 mpe4 mpe2 mp1",
};

BasisProduct parse_cell(std::string cell, AlgebraKind kind) {
  int sign = 1;
  if (cell.rfind("pm", 0) == 0) {
    sign = kind == AlgebraKind::Octonion ? 1 : -1;
    cell = cell.substr(2);
  } else if (cell.rfind("mp", 0) == 0) {
    sign = kind == AlgebraKind::Octonion ? -1 : 1;
    cell = cell.substr(2);
  } else if (cell[0] == '-') {
    sign = -1;
    cell = cell.substr(1);
  }
  return {sign, cell == "1" ? 0 : std::stoi(cell.substr(1))};
}

RationalOctonion e(int k) { return RationalOctonion::basis(k); }

}  // namespace

TEST_CASE("every table entry matches the printed table") {
  for (AlgebraKind kind : {AlgebraKind::Octonion, AlgebraKind::SplitOctonion}) {
    const auto& table = StructureTable::of(kind);
    for (int i = 1; i <= 7; ++i) {
      std::istringstream row(kPrintedTable[i - 1]);
      std::string cell;
      for (int j = 1; j <= 7; ++j) {
        row >> cell;
        CAPTURE(i);
        CAPTURE(j);
        CHECK(table(i, j) == parse_cell(cell, kind));
      }
    }
  }
}

TEST_CASE("multiply examples") {
  const auto split = AlgebraKind::SplitOctonion;
  const auto octo = AlgebraKind::Octonion;
  CHECK(multiply(split, e(1), e(2)) == e(4));
  CHECK(multiply(split, e(3), e(3)) == e(0));
  CHECK(multiply(octo, e(3), e(3)) == -e(0));
  CHECK(multiply(split, e(3), e(5)) == -e(2));
  CHECK(multiply(octo, e(3), e(5)) == e(2));

  Rng rng(3);
  for (int n = 0; n < 20; ++n) {
    const auto x = random_octonion(rng);
    CHECK(multiply(split, e(0), x) == x);
    CHECK(multiply(octo, e(0), x) == x);
    CHECK(multiply(octo, x, e(0)) == x);
  }
}

TEST_CASE("e7 Q reproduces (e3, e6, e5)") {
  for (AlgebraKind kind : {AlgebraKind::Octonion, AlgebraKind::SplitOctonion}) {
    CHECK(multiply(kind, e(7), e(1)) == e(3));
    CHECK(multiply(kind, e(7), e(2)) == e(6));
    CHECK(multiply(kind, e(7), e(4)) == e(5));
  }
}

TEST_CASE("table structure invariants") {
  for (AlgebraKind kind : {AlgebraKind::Octonion, AlgebraKind::SplitOctonion}) {
    const auto& table = StructureTable::of(kind);
    CHECK(check_table_structure(table).ok());
    for (int i = 1; i <= 7; ++i) {
      for (int j = 1; j <= 7; ++j) {
        const auto p = multiply(kind, e(i), e(j));
        int nonzero = 0;
        for (const auto& v : p.c)
          if (!is_zero(v)) {
            ++nonzero;
            CHECK(abs(v) == 1);
          }
        CHECK(nonzero == 1);
        if (i != j) CHECK(p == -multiply(kind, e(j), e(i)));
      }
    }
  }
  const int split_diag[7] = {-1, -1, +1, -1, +1, +1, +1};
  for (int i = 1; i <= 7; ++i) {
    CHECK(StructureTable::of(AlgebraKind::SplitOctonion)(i, i) == BasisProduct{split_diag[i - 1], 0});
    CHECK(StructureTable::of(AlgebraKind::Octonion)(i, i) == BasisProduct{-1, 0});
  }
}

TEST_CASE("flipped sign breaks the structural audit") {
  const auto bad = StructureTable::of(AlgebraKind::SplitOctonion).with_flipped_sign(1, 2);
  const auto check = check_table_structure(bad);
  CHECK_FALSE(check.ok());
  CHECK_FALSE(check.antisymmetry);
  CHECK(check.closure);

  const auto bad_diag = StructureTable::of(AlgebraKind::Octonion).with_flipped_sign(3, 3);
  CHECK_FALSE(check_table_structure(bad_diag).diagonal_signs);
  CHECK_THROWS_AS(bad.with_flipped_sign(0, 1), std::out_of_range);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(e(0)) == e(0));
  CHECK(conjugate(e(7)) == -e(7));
  Rng rng(11);
  for (int n = 0; n < 50; ++n) {
    const auto x = random_octonion(rng);
    CHECK(conjugate(conjugate(x)) == x);
  }
}

TEST_CASE("norm form") {
  RationalOctonion x;
  x.c[0] = 3;
  x.c[1] = -5;
  CHECK(norm_form(AlgebraKind::Octonion, x) == 34);
  CHECK(norm_form(AlgebraKind::SplitOctonion, e(7)) == -1);
  CHECK(norm_form(AlgebraKind::SplitOctonion, e(0)) == 1);

  // In the split algebra N(a + b e7) = a^2 - b^2.
  RationalOctonion y;
  y.c[0] = 2;
  y.c[7] = 5;
  CHECK(norm_form(AlgebraKind::SplitOctonion, y) == -21);

  Rng rng(5);
  for (int n = 0; n < 200; ++n) {
    const auto a = random_octonion(rng);
    const auto b = random_octonion(rng);
    for (AlgebraKind kind : {AlgebraKind::Octonion, AlgebraKind::SplitOctonion})
      CHECK(norm_form(kind, multiply(kind, a, b)) == norm_form(kind, a) * norm_form(kind, b));
  }
}

TEST_CASE("norm form rejects non-scalar x * conj(x)") {
  const auto bad = StructureTable::of(AlgebraKind::Octonion).with_flipped_sign(1, 2);
  RationalOctonion x;
  x.c[1] = 1;
  x.c[2] = 1;
  CHECK_THROWS_AS(norm_form(bad, x), NormNotScalar);
}

TEST_CASE("signature") {
  CHECK(signature(AlgebraKind::Octonion) == Signature{8, 0});
  CHECK(signature(AlgebraKind::SplitOctonion) == Signature{4, 4});
  for (AlgebraKind kind : {AlgebraKind::Octonion, AlgebraKind::SplitOctonion})
    CHECK(norm_form(kind, e(0)) > 0);
}

TEST_CASE("associator") {
  Rng rng(9);
  for (AlgebraKind kind : {AlgebraKind::Octonion, AlgebraKind::SplitOctonion}) {
    for (int n = 0; n < 100; ++n) {
      const auto x = random_octonion(rng);
      const auto y = random_octonion(rng);
      const auto z = random_octonion(rng);
      CHECK(associator(kind, e(0), y, z).is_zero_element());
      CHECK(associator(kind, x, x, y).is_zero_element());
      CHECK(associator(kind, y, x, x).is_zero_element());
    }
    // (e1 e2) e3 = e4 e3 = -e6 and e1 (e2 e3) = e1 e5 = e6.
    CHECK(associator(kind, e(1), e(2), e(3)) == -(e(6) + e(6)));
  }
}

TEST_CASE("floating-point scalars agree with exact ones") {
  Rng rng(17);
  for (int n = 0; n < 100; ++n) {
    const auto a = random_octonion(rng);
    const auto b = random_octonion(rng);
    RealOctonion fa, fb;
    for (int k = 0; k < 8; ++k) {
      fa.c[k] = a.c[k].get_d();
      fb.c[k] = b.c[k].get_d();
    }
    const auto exact = multiply(AlgebraKind::SplitOctonion, a, b);
    const auto real = multiply(AlgebraKind::SplitOctonion, fa, fb);
    for (int k = 0; k < 8; ++k) CHECK(real.c[k] == exact.c[k].get_d());
  }
}

TEST_CASE("names and parsing") {
  CHECK(parse_algebra_kind("split") == AlgebraKind::SplitOctonion);
  CHECK(parse_algebra_kind("octonion") == AlgebraKind::Octonion);
  CHECK_THROWS_AS(parse_algebra_kind("quaternion"), std::invalid_argument);
  RationalOctonion x;
  x.c[0] = 3;
  x.c[1] = -2;
  x.c[7] = Rational(1, 2);
  CHECK(to_string(x) == "3 - 2*e1 + 1/2*e7");
  CHECK(to_string(RationalOctonion{}) == "0");
  CHECK(to_string(-e(4)) == "-e4");
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/x"), std::invalid_argument);
}
