#pragma once

/// @file perp_structures.hpp
/// Root-word classification and explicit generating sets for v-perp.
///
/// A vector is a root word when no nonzero scalar annihilates it. Over Z_{p^l}
/// that means some component is a unit; a nonzero non-root vector factors as
/// v = p^r * y with y a root word.
///
/// perp_basis() builds v-perp from the closed-form generator templates for
/// prime-power rings and for Z_{p1 p2}, and falls back to the generic Howell
/// kernel elsewhere. Every result is meant to be cross-checked against
/// kernel() and the test-suite does exactly that.

#include <optional>
#include <string_view>
#include <vector>

#include "mincodes/zn_linalg.hpp"

namespace mincodes {

struct RootWordClassification {
  ZnVec vector;
  bool is_root;
  /// Smallest positive scalar annihilating the vector; set iff not root.
  std::optional<Int> witness;

  /// v = p^r * y with y a root word and r minimal (prime-power rings only).
  struct Decomposition {
    int r;
    ZnVec root;
  };
  std::optional<Decomposition> prime_power_decomposition;
};

RootWordClassification classify_root_word(const ZnVec& v, const RingSpec& ring);
bool is_root_word(const ZnVec& v);

/// Which closed-form generator template produced a PerpBasis.
enum class PerpConstruction {
  PrimePowerRootWord,   ///< v has a unit component; k-1 free generators
  PrimePowerNonRoot,    ///< v = p^r y; k generators using p^(l-r)
  TwoPrimesUnitComponent,
  TwoPrimesP1Multiples, ///< every component a multiple of p1
  TwoPrimesP2Multiples, ///< every component a multiple of p2
  TwoPrimesMixed,       ///< p1-multiples and p2-multiples, no unit; free, bridging vector
};

std::string_view to_string(PerpConstruction c);

struct PerpBasis {
  ZnVec source;
  std::vector<ZnVec> generators;
  bool claimed_free;
  /// Absent when the ring has no closed-form template (generic kernel used).
  std::optional<PerpConstruction> construction;
  /// Coordinate order the template was written in: template position i is
  /// original coordinate `layout[i]`. Generators are already mapped back.
  std::vector<std::size_t> layout;
};

/// Throws InvalidArgument for the zero vector.
PerpBasis perp_basis(const ZnVec& v, const RingSpec& ring);

/// kernel(kernel({v})); throws std::logic_error if it differs from span{v}.
Submodule double_perp(const ZnVec& v);

struct RootWordCount {
  std::uint64_t count;
  /// Closed-form count for the ring shape, reported even when it disagrees.
  std::optional<std::uint64_t> formula_count;
};

RootWordCount count_root_words(const RingSpec& ring, std::size_t k,
                               std::uint64_t threshold = kDefaultEnumerationThreshold);

/// Closed-form root-word count: p^{lk} - p^{(l-1)k} for Z_{p^l}, and
/// (p1 p2)^k - (p2-1)^k - (p1-1)^k - 1 for Z_{p1 p2}. The latter overcounts
/// (Z_6^2 has 24 root words, the closed form gives 30); enumeration is
/// authoritative and the closed form is only reported.
std::optional<std::uint64_t> root_word_formula(const RingSpec& ring, std::size_t k);

/// One lexicographically least representative per unit orbit of root words.
std::vector<ZnVec> root_words_mod_units(const RingSpec& ring, std::size_t k,
                                        std::uint64_t threshold = kDefaultEnumerationThreshold);

}  // namespace mincodes
