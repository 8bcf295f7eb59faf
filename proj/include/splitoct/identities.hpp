#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitoct/algebra.hpp"
#include "splitoct/random.hpp"

namespace splitoct {

/// Random rational octonion with integer coefficients uniform in [-9, 9].
RationalOctonion random_octonion(Rng& rng);

struct IdentityResult {
  std::string name;
  bool passed = true;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// First failing instance, rendered; empty when passed.
  std::string witness;
};

struct IdentityReport {
  AlgebraKind kind{};
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<IdentityResult> results;

  bool all_passed() const;
  const IdentityResult* find(const std::string& name) const;
};

/// Exact identity suite over random rational octonions: anticommutativity of
/// distinct imaginary units, left and right alternativity, the Moufang
/// identity (xy)(zx) = (x(yz))x and norm multiplicativity.
/// Requires trials >= 1 (std::invalid_argument otherwise).
IdentityReport check_identities(const StructureTable& table, std::size_t trials, std::uint64_t seed);
IdentityReport check_identities(AlgebraKind kind, std::size_t trials, std::uint64_t seed);

/// Full associativity over random triples. Expected to fail in both algebras.
IdentityResult check_associativity(const StructureTable& table, std::size_t trials, std::uint64_t seed);

/// Randomized search for x, y != 0 with N(x) = 0 and xy = 0 among rational
/// combinations a + b*e7.
std::optional<std::pair<RationalOctonion, RationalOctonion>> find_zero_divisor(AlgebraKind kind,
                                                                                 std::size_t attempts,
                                                                                 std::uint64_t seed);

}  // namespace splitoct
