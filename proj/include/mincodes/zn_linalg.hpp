#pragma once

/// @file zn_linalg.hpp
/// Vectors, matrices and submodules of Z_n^k.
///
/// Submodules are kept in Howell normal form. Unlike a Hermite form over Z_n,
/// the Howell form is unique per submodule, so two submodules are equal exactly
/// when their canonical matrices are identical. The canonical matrix satisfies:
///   * pivot columns strictly increase from row to row;
///   * each pivot entry is a positive divisor of n (smaller than n);
///   * entries above a pivot lie in [0, pivot);
///   * for every column c, the rows whose pivot is at or after c span every
///     element of the submodule whose first c entries are zero.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "mincodes/zn_ring.hpp"

namespace mincodes {

/// Default cap on the number of elements any enumeration may produce.
inline constexpr std::uint64_t kDefaultEnumerationThreshold = 1'000'000;

/// N^k, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> checked_power(Int base, std::size_t exp) noexcept;

/// Throws ThresholdExceeded when N^k > threshold (or overflows).
std::uint64_t require_enumerable(Int modulus, std::size_t k, std::uint64_t threshold);

/// An element of Z_n^k.
class ZnVec {
 public:
  ZnVec(std::vector<Int> entries, Int modulus);
  ZnVec(std::initializer_list<Int> entries, Int modulus);
  static ZnVec zero(std::size_t k, Int modulus);
  /// Standard basis vector e_i (0-based i).
  static ZnVec unit_vector(std::size_t k, std::size_t i, Int modulus);

  std::size_t size() const noexcept { return entries_.size(); }
  Int modulus() const noexcept { return modulus_; }
  Int operator[](std::size_t i) const noexcept { return entries_[i]; }
  std::span<const Int> entries() const noexcept { return entries_; }

  bool is_zero() const noexcept;

  ZnVec operator+(const ZnVec& o) const;
  ZnVec operator-(const ZnVec& o) const;
  /// Scalar multiple a*v.
  ZnVec scaled(Int a) const;

  friend bool operator==(const ZnVec&, const ZnVec&) = default;
  /// Lexicographic order on entries (modulus compared first).
  friend auto operator<=>(const ZnVec& a, const ZnVec& b) {
    if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<Int> entries_;
  Int modulus_;
};

std::ostream& operator<<(std::ostream& os, const ZnVec& v);

/// Sum of componentwise products mod n. Throws DimensionMismatch on length or
/// modulus mismatch.
Int inner_product(const ZnVec& v, const ZnVec& w);

/// A rectangular list of rows over Z_n.
class ZnMatrix {
 public:
  ZnMatrix(Int modulus, std::size_t cols);
  ZnMatrix(Int modulus, std::size_t cols, std::vector<ZnVec> rows);

  Int modulus() const noexcept { return modulus_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  const std::vector<ZnVec>& rows() const noexcept { return rows_; }
  const ZnVec& row(std::size_t i) const { return rows_.at(i); }

  void append(ZnVec row);
  ZnMatrix transposed() const;

  friend bool operator==(const ZnMatrix&, const ZnMatrix&) = default;

 private:
  Int modulus_;
  std::size_t cols_;
  std::vector<ZnVec> rows_;
};

/// A submodule of Z_n^k represented by its Howell canonical form.
class Submodule {
 public:
  /// The zero submodule of Z_n^k.
  Submodule(Int modulus, std::size_t ambient_dim);

  Int modulus() const noexcept { return canon_.modulus(); }
  std::size_t ambient_dim() const noexcept { return canon_.cols(); }
  const ZnMatrix& canon() const noexcept { return canon_; }
  /// Pivot column of each canonical row.
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::uint64_t cardinality() const noexcept { return cardinality_; }
  bool is_zero() const noexcept { return canon_.row_count() == 0; }

  friend bool operator==(const Submodule& a, const Submodule& b) { return a.canon_ == b.canon_; }

 private:
  friend Submodule howell_form(const ZnMatrix& m);
  Submodule(ZnMatrix canon, std::vector<std::size_t> pivots);

  ZnMatrix canon_;
  std::vector<std::size_t> pivots_;
  std::uint64_t cardinality_;
};

/// Canonical Howell form of the row span of `m`.
Submodule howell_form(const ZnMatrix& m);
Submodule span(std::span<const ZnVec> vectors, Int modulus, std::size_t ambient_dim);

/// Set equality of submodules. Throws DimensionMismatch for different ambients.
bool submodule_equal(const Submodule& a, const Submodule& b);

/// True iff x lies in s.
bool membership(const ZnVec& x, const Submodule& s);

/// {x : <x, r> = 0 for every row r}.
Submodule kernel(const ZnMatrix& rows);
Submodule kernel(std::span<const ZnVec> rows, Int modulus, std::size_t ambient_dim);

/// True iff the only combination sum c_i r_i equal to zero has all c_i = 0.
bool is_linearly_independent(const ZnMatrix& rows);

/// Every element of s, sorted lexicographically. Throws ThresholdExceeded when
/// the cardinality exceeds `threshold`.
std::vector<ZnVec> enumerate(const Submodule& s,
                             std::uint64_t threshold = kDefaultEnumerationThreshold);

/// True iff the vectors contain k vectors that are linearly independent, i.e.
/// a basis of Z_n^k. Decided prime by prime via ranks over F_p.
bool contains_basis(std::span<const ZnVec> vectors, const RingSpec& ring, std::size_t k);

/// Rank of the vectors reduced modulo the prime p.
std::size_t rank_mod_prime(std::span<const ZnVec> vectors, Int p);

/// Calls f on every vector of Z_n^k in lexicographic order.
void for_each_vector(Int modulus, std::size_t k, const std::function<void(const ZnVec&)>& f);

/// Lexicographically least representative of every orbit {u*v : u a unit}
/// among the nonzero vectors accepted by `keep`, in ascending order.
std::vector<ZnVec> unit_orbit_representatives(
    const RingSpec& ring, std::size_t k, const std::function<bool(const ZnVec&)>& keep,
    std::uint64_t threshold = kDefaultEnumerationThreshold);

}  // namespace mincodes
