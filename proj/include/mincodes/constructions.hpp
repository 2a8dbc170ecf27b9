#pragma once

/// @file constructions.hpp
/// Explicit column multisets whose codes are minimal.
///
///   Lambda0     over Z_{p^l}, k >= 2: e_i, e_i + u e_j, e_i + d e_j, d e_i + e_j
///               (u units, d zero divisors, i < j).
///   Lambda0Bi   over Z_{p1 p2}, k >= 2: the same four families with units and
///               zero divisors of Z_{p1 p2}, plus p1 e_i + p2 e_j and p2 e_i + p1 e_j.
///   OneDimNaive k = 1: a unit and one generator per proper ideal.
///   OneDimGcd   k = 1: a unit and the sets A_i = { n / p_i^{α_i - t} : 0 <= t < α_i },
///               whose gcds reach every proper divisor of n.
///   RootWords   one representative per unit orbit of root words.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mincodes/code_core.hpp"

namespace mincodes {

enum class Recipe { Lambda0, Lambda0Bi, OneDimNaive, OneDimGcd, RootWords };

std::string_view to_string(Recipe r);
/// Accepts "lambda0", "lambda0-bi", "onedim-naive", "onedim-gcd", "root-words".
std::optional<Recipe> parse_recipe(std::string_view name);

struct ConstructionRecipe {
  Recipe name;
  RingSpec ring;
  std::size_t k;
  Int predicted_length;
  /// Closed form the predicted length comes from.
  std::string provenance;
};

struct Construction {
  ConstructionRecipe recipe;
  ColumnMultiset columns;
};

/// Throws InvalidArgument unless p is prime, l >= 1 and k >= 1. For k = 1 the
/// result is onedim_gcd(Z_{p^l}).
Construction lambda0_prime_power(Int p, int l, std::size_t k);

/// Throws InvalidArgument unless p1 < p2 are distinct primes and k >= 2.
Construction lambda0_two_primes(Int p1, Int p2, std::size_t k);

Construction onedim_naive(const RingSpec& ring);
Construction onedim_gcd(const RingSpec& ring);
Construction root_words_construction(const RingSpec& ring, std::size_t k,
                                     std::uint64_t threshold = kDefaultEnumerationThreshold);

/// Dispatches on the recipe; Lambda0 and Lambda0Bi derive their primes from the ring.
Construction build(Recipe recipe, const RingSpec& ring, std::size_t k);

struct GcdCoverage {
  bool covered = true;
  /// Proper divisor -> a smallest subset of the generators with gcd(S ∪ {n}) equal to it.
  std::map<Int, std::vector<Int>> witnesses;
  std::vector<Int> uncovered;
};

/// For every proper divisor D of n (1 < D < n) looks for generators whose gcd
/// together with n is D.
GcdCoverage verify_gcd_coverage(const RingSpec& ring, const std::vector<Int>& generators);

}  // namespace mincodes
