#pragma once

/// @file code_core.hpp
/// Linear codes C(Λ) over Z_n and their minimality.
///
/// A code is given by an ordered column multiset Λ = (α_1, ..., α_m) of
/// vectors in Z_n^k; message v encodes to c(v) = (<v,α_1>, ..., <v,α_m>).
///
/// Two independent deciders are provided:
///   * the definitional oracle scans every message v' and checks that each
///     nonzero codeword covered by c(v) is a scalar multiple of c(v);
///   * the criterion compares M(v,Λ), the span of the columns orthogonal to v,
///     with v-perp. c(v) is minimal exactly when the two coincide.
///
/// Coordinates are 0-based in the API; JSON and text reports print supports
/// 1-based.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mincodes/zn_linalg.hpp"

namespace mincodes {

/// What a ColumnMultiset must satisfy at construction.
enum class ColumnRequirement {
  ContainsBasis,  ///< k linearly independent columns (for k = 1: a unit)
  Spanning,       ///< columns span Z_n^k, i.e. encoding is injective
};

class ColumnMultiset {
 public:
  /// Throws IndependenceError when the requirement fails and DimensionMismatch
  /// when a column is not in Z_n^k.
  ColumnMultiset(RingSpec ring, std::size_t k, std::vector<ZnVec> columns,
                 ColumnRequirement requirement = ColumnRequirement::ContainsBasis);

  const RingSpec& ring() const noexcept { return ring_; }
  Int modulus() const noexcept { return ring_.modulus(); }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return columns_.size(); }
  const std::vector<ZnVec>& columns() const noexcept { return columns_; }
  const ZnVec& operator[](std::size_t j) const { return columns_.at(j); }

  /// Columns with duplicates removed, first occurrence kept.
  std::vector<ZnVec> distinct() const;

  /// Copy with `extra` appended (same requirement).
  ColumnMultiset extended(const std::vector<ZnVec>& extra) const;

  friend bool operator==(const ColumnMultiset& a, const ColumnMultiset& b) {
    return a.ring_ == b.ring_ && a.k_ == b.k_ && a.columns_ == b.columns_;
  }

 private:
  RingSpec ring_;
  std::size_t k_;
  std::vector<ZnVec> columns_;
  ColumnRequirement requirement_;
};

class LinearCode {
 public:
  explicit LinearCode(ColumnMultiset lambda);

  const ColumnMultiset& lambda() const noexcept { return lambda_; }
  /// k x m; column j is α_j.
  const ZnMatrix& generator_matrix() const noexcept { return generator_; }
  bool injective_encoding() const noexcept { return injective_; }
  std::size_t length() const noexcept { return lambda_.size(); }
  std::size_t dimension() const noexcept { return lambda_.k(); }
  Int modulus() const noexcept { return lambda_.modulus(); }

 private:
  ColumnMultiset lambda_;
  ZnMatrix generator_;
  bool injective_;
};

/// 0-based indices of the nonzero entries.
std::vector<std::size_t> support(const ZnVec& x);
std::size_t weight(const ZnVec& x);
std::size_t distance(const ZnVec& x, const ZnVec& y);
/// support(small) ⊆ support(big).
bool covers(const ZnVec& big, const ZnVec& small);

ZnVec encode(const ZnVec& v, const LinearCode& code);

struct OrthogonalColumns {
  /// Distinct columns α with <v, α> = 0, in first-occurrence order.
  std::vector<ZnVec> columns;
  /// M(v, Λ).
  Submodule span;
};

OrthogonalColumns orthogonal_columns(const ZnVec& v, const ColumnMultiset& lambda);

enum class DecisionMethod { Oracle, Criterion, Both };
std::string_view to_string(DecisionMethod m);

struct Counterexample {
  /// The message whose codeword fails to be minimal.
  ZnVec message;
  /// v' with c(v') covered by c(message) but not a scalar multiple of it.
  ZnVec witness_message;
  ZnVec witness_codeword;
  std::string reason;
};

struct CriterionEvidence {
  Submodule orthogonal_span;  ///< M(v, Λ)
  Submodule perp;             ///< O(v) = v-perp
};

struct MinimalityReport {
  /// The message examined; nullopt for a whole-code report.
  std::optional<ZnVec> subject;
  bool verdict = false;
  DecisionMethod method = DecisionMethod::Criterion;
  std::optional<Counterexample> counterexample;
  std::optional<CriterionEvidence> criterion_evidence;
  /// Whole-code reports: failing messages in lexicographic order.
  std::vector<ZnVec> per_message_failures;
  std::size_t messages_checked = 0;
  bool injective_encoding = true;
};

/// Definitional check by exhaustive scan of Z_n^k. Requires v != 0 and
/// n^k <= threshold.
MinimalityReport is_minimal_codeword_oracle(const ZnVec& v, const LinearCode& code,
                                            std::uint64_t threshold = kDefaultEnumerationThreshold);

/// M(v, Λ) == v-perp. Requires v != 0. On failure the counterexample is read
/// off M(v, Λ)-perp.
MinimalityReport is_minimal_codeword(const ZnVec& v, const LinearCode& code);

struct MinimalityOptions {
  DecisionMethod method = DecisionMethod::Criterion;
  /// Check every nonzero message instead of one per unit orbit.
  bool full_sweep = false;
  unsigned workers = 1;
  std::uint64_t threshold = kDefaultEnumerationThreshold;
};

/// Whole-code minimality. With DecisionMethod::Both the two deciders must agree
/// on every message; a disagreement throws std::logic_error.
MinimalityReport is_minimal_code(const LinearCode& code, const MinimalityOptions& options = {});

}  // namespace mincodes
