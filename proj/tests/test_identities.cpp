#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "splitoct/identities.hpp"

using namespace splitoct;

TEST_CASE("identity suite passes exactly for both algebras") {
  for (AlgebraKind kind : {AlgebraKind::Octonion, AlgebraKind::SplitOctonion}) {
    for (std::uint64_t seed : {1u, 7u}) {
      const auto report = check_identities(kind, 1000, seed);
      CAPTURE(to_string(kind));
      CHECK(report.all_passed());
      for (const char* name : {"anticommutativity", "left_alternativity", "right_alternativity", "moufang",
                               "norm_multiplicativity"}) {
        const auto* r = report.find(name);
        REQUIRE(r != nullptr);
        CHECK(r->passed);
        CHECK(r->failures == 0);
      }
      CHECK(report.find("moufang")->trials == 1000);
    }
  }
}

TEST_CASE("full associativity fails in both algebras") {
  for (AlgebraKind kind : {AlgebraKind::Octonion, AlgebraKind::SplitOctonion}) {
    const auto r = check_associativity(StructureTable::of(kind), 200, 42);
    CHECK_FALSE(r.passed);
    CHECK(r.failures > 0);
    CHECK_FALSE(r.witness.empty());
  }
}

TEST_CASE("a corrupted table fails norm multiplicativity and anticommutativity") {
  const auto bad = StructureTable::of(AlgebraKind::SplitOctonion).with_flipped_sign(1, 2);
  const auto report = check_identities(bad, 200, 42);
  CHECK_FALSE(report.all_passed());
  CHECK_FALSE(report.find("norm_multiplicativity")->passed);
  CHECK_FALSE(report.find("anticommutativity")->passed);
}

TEST_CASE("trials must be positive") {
  CHECK_THROWS_AS(check_identities(AlgebraKind::Octonion, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_associativity(StructureTable::of(AlgebraKind::Octonion), 0, 1), std::invalid_argument);
}

TEST_CASE("same seed, same draws") {
  Rng a(99), b(99);
  for (int n = 0; n < 10; ++n) CHECK(random_octonion(a) == random_octonion(b));
  Rng c(5);
  for (int n = 0; n < 1000; ++n) {
    const auto v = c.integer(-9, 9);
    CHECK(v >= -9);
    CHECK(v <= 9);
  }
}

TEST_CASE("split octonions have zero divisors built from 1 and e7") {
  const auto found = find_zero_divisor(AlgebraKind::SplitOctonion, 20000, 42);
  REQUIRE(found.has_value());
  const auto& [x, y] = *found;
  CHECK_FALSE(x.is_zero_element());
  CHECK_FALSE(y.is_zero_element());
  CHECK(is_zero(norm_form(AlgebraKind::SplitOctonion, x)));
  CHECK(multiply(AlgebraKind::SplitOctonion, x, y).is_zero_element());
  for (int k = 1; k < 7; ++k) CHECK(is_zero(x.c[k]));

  CHECK_FALSE(find_zero_divisor(AlgebraKind::Octonion, 20000, 42).has_value());
}
