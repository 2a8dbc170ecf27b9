#pragma once

/// @file bounds_search.hpp
/// Length bounds for minimal codes and the exhaustive search for m(k; n),
/// the least length admitting an [m, k] minimal code over Z_n.
///
/// The lower bound double counts the pairs (v, α) with v != 0, α in Λ and
/// <v, α> = 0. For a Λ made of root words each column contributes |α-perp| - 1
/// pairs, while minimality forces every root message v to see at least k - 1
/// columns and every other nonzero message at least k. Hence
///
///     m >= ( R (k-1) + NR k ) / ( E - 1 )
///
/// with R, NR the numbers of root and nonzero non-root words and E = |v-perp|
/// for a root word. All three are enumerated; the quotient is exact.

#include <boost/rational.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "mincodes/constructions.hpp"

namespace mincodes {

using Quotient = boost::rational<Int>;

/// Smallest integer >= q.
Int ceil_of(const Quotient& q);

/// Sum over nonzero v of the number of columns (with multiplicity) orthogonal to v.
std::uint64_t incidence_sum(const ColumnMultiset& lambda,
                            std::uint64_t threshold = kDefaultEnumerationThreshold);

/// A lower bound stated in closed form in terms of p, l (or p1, p2) and k.
struct ClosedFormBound {
  std::string expression;  ///< e.g. "m > p^l + p^(l-2) + 1"
  Quotient value;          ///< right-hand side
  bool strict;
  Int implied;             ///< least integer m satisfying the inequality
};

struct BoundsReport {
  RingSpec ring;
  std::size_t k;

  Int upper_bound;
  std::string upper_bound_source;
  /// Number of unit orbits of root words (k >= 2).
  std::optional<Int> projective_bound;

  Int lower_bound_exact;
  /// Exact quotient behind lower_bound_exact (absent for k = 1).
  std::optional<Quotient> lower_bound_quotient;
  /// Closed-form lower bound, when its exponents are non-negative integers.
  std::optional<ClosedFormBound> lower_bound_closed_form;

  std::uint64_t root_words;
  std::uint64_t non_root_words;  ///< nonzero only
  std::uint64_t root_perp_size;  ///< E
  std::optional<std::uint64_t> root_words_formula;

  std::vector<std::string> notes;
};

struct UpperBound {
  Int length;
  Construction witness;
};

/// k >= 2: Lambda0 over Z_{p^l}, Lambda0Bi over Z_{p1 p2}; other shapes throw
/// ShapeMismatch. k = 1: the gcd construction, valid for every n.
UpperBound upper_bound(const RingSpec& ring, std::size_t k);

/// Lower bounds (exact quotient and closed form) together with the upper and
/// projective bounds. Throws ShapeMismatch for k >= 2 over rings that are
/// neither prime powers nor products of two primes.
///
/// For k = 1 the quotient is undefined (E - 1 = 0). The exact bound is then the
/// number of proper ideals that are not sums of strictly smaller ideals, plus
/// one for the unit column: each such ideal needs a column generating it.
BoundsReport bounds_report(const RingSpec& ring, std::size_t k,
                           std::uint64_t threshold = kDefaultEnumerationThreshold);

struct SearchConstraints {
  /// Λ must contain k independent columns (for k = 1: a unit). When false,
  /// Λ need only span Z_n^k.
  bool require_basis = true;
  /// Draw columns from root words only.
  bool root_words_only = false;
};

struct SearchStats {
  std::uint64_t candidates = 0;  ///< unit-orbit classes available as columns
  std::uint64_t examined = 0;    ///< complete subsets tested for minimality
  std::uint64_t pruned = 0;      ///< partial subsets cut by the rank test
  std::chrono::milliseconds wall_time{0};
};

struct SearchReport {
  RingSpec ring;
  std::size_t k;
  std::size_t m_cap;
  SearchConstraints constraints;
  std::optional<std::size_t> m_min;
  std::optional<ColumnMultiset> witness;
  /// Lengths searched exhaustively: [searched_from, searched_to].
  std::size_t searched_from;
  std::size_t searched_to;
  SearchStats stats;
};

/// Smallest m <= m_cap admitting a minimal code, searching subsets of distinct
/// unit-orbit representatives in lexicographic order. The witness is the
/// lexicographically least such subset; the report (apart from wall time) does
/// not depend on `workers`.
SearchReport search_m_min(const RingSpec& ring, std::size_t k, std::size_t m_cap,
                          const SearchConstraints& constraints = {}, unsigned workers = 1,
                          std::uint64_t threshold = kDefaultEnumerationThreshold);

struct MonotonicityResult {
  bool holds = true;
  std::vector<std::pair<std::size_t, bool>> per_length;
};

/// Pads the witness with copies of e_1 to every length in (m_min, m_min + extra]
/// and checks each padded code with the criterion.
MonotonicityResult monotonicity_check(const SearchReport& base, std::size_t extra);

}  // namespace mincodes
