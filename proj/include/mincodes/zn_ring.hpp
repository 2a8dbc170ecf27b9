#pragma once

/// @file zn_ring.hpp
/// Exact arithmetic in Z_n: factorization, ring shape, units, zero divisors,
/// annihilators and inverses.
///
/// Residues are always stored as the least non-negative representative, so
/// equality is plain integer equality.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mincodes/errors.hpp"

namespace mincodes {

using Int = std::int64_t;

struct PrimeFactor {
  Int prime;
  int exponent;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// n = p^l.
struct PrimePower {
  Int p;
  int l;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = p1 * p2 with p1 < p2 both prime.
struct TwoPrimes {
  Int p1;
  Int p2;
  friend bool operator==(const TwoPrimes&, const TwoPrimes&) = default;
};

struct GeneralShape {
  friend bool operator==(const GeneralShape&, const GeneralShape&) = default;
};

using RingShape = std::variant<PrimePower, TwoPrimes, GeneralShape>;

/// The modulus n together with its factorization. Immutable once built.
class RingSpec {
 public:
  /// Factorizes n by trial division. Throws InvalidModulus for n < 2.
  explicit RingSpec(Int n);

  Int modulus() const noexcept { return n_; }
  const std::vector<PrimeFactor>& factors() const noexcept { return factors_; }
  const RingShape& shape() const noexcept { return shape_; }

  bool is_prime_power() const noexcept { return std::holds_alternative<PrimePower>(shape_); }
  bool is_two_primes() const noexcept { return std::holds_alternative<TwoPrimes>(shape_); }
  bool is_field() const noexcept { return factors_.size() == 1 && factors_[0].exponent == 1; }

  /// Throws ShapeMismatch if the ring is not a prime power.
  const PrimePower& prime_power() const;
  /// Throws ShapeMismatch if the ring is not a product of two distinct primes.
  const TwoPrimes& two_primes() const;

  /// "PrimePower(2,3)", "TwoPrimes(2,3)" or "General".
  std::string shape_name() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) noexcept { return a.n_ == b.n_; }

 private:
  Int n_;
  std::vector<PrimeFactor> factors_;
  RingShape shape_;
};

RingSpec factorize(Int n);

/// Canonical reduction of any integer into [0, n).
constexpr Int mod_reduce(Int a, Int n) noexcept {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

constexpr Int mul_mod(Int a, Int b, Int n) noexcept {
  return static_cast<Int>((static_cast<__int128>(a) * b) % n);
}

Int gcd(Int a, Int b) noexcept;
Int ipow(Int base, int exp);

/// Result of the extended Euclidean algorithm: g = s*a + t*b.
struct ExtendedGcd {
  Int g;
  Int s;
  Int t;
};
ExtendedGcd extended_gcd(Int a, Int b) noexcept;

/// Smallest x in [0, n) with a*x == b (mod n), if any.
std::optional<Int> solve_linear_congruence(Int a, Int b, Int n);

/// An element of Z_n.
class Residue {
 public:
  /// Reduces `value` into [0, modulus).
  Residue(Int value, Int modulus);

  Int value() const noexcept { return value_; }
  Int modulus() const noexcept { return modulus_; }

  bool is_zero() const noexcept { return value_ == 0; }
  bool is_unit() const noexcept { return gcd(value_, modulus_) == 1; }
  bool is_zero_divisor() const noexcept { return !is_zero() && !is_unit(); }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;

  friend bool operator==(const Residue&, const Residue&) = default;
  friend auto operator<=>(const Residue&, const Residue&) = default;

 private:
  Int value_;
  Int modulus_;
};

std::vector<Residue> units(const RingSpec& ring);
std::vector<Residue> zero_divisors(const RingSpec& ring);
Int euler_phi(const RingSpec& ring);

/// Generator n/gcd(a,n) (reduced mod n) of the annihilator ideal {x : x*a == 0}.
Residue annihilator_generator(const Residue& a);

/// Multiplicative inverse. Throws NotInvertible for non-units.
Residue invert(const Residue& u);

/// A unit u with u*a == gcd(a, n) (mod n). For a == 0 returns 1.
Residue unit_normalizer(const Residue& a);

/// Coefficients with lambda1*p1^2 - lambda2*p2^2 == 1 (mod p1*p2); the
/// lexicographically smallest such pair. Throws ShapeMismatch unless the ring
/// is TwoPrimes.
std::pair<Residue, Residue> split_coefficients(const RingSpec& ring);

/// d = p^r * u in Z_{p^l}: `unit` is d / p^r as an integer, a unit of the ring.
struct ZeroDivisorDecomposition {
  int r;
  Residue unit;
};

/// Throws ShapeMismatch unless the ring is a prime power; InvalidArgument unless
/// d is a zero divisor.
ZeroDivisorDecomposition decompose_zero_divisor(const RingSpec& ring, const Residue& d);

/// Positive divisors of n in ascending order, including 1 and n.
std::vector<Int> divisors(Int n);

}  // namespace mincodes
