#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "mincodes/zn_ring.hpp"
#include "oracles.hpp"

using namespace mincodes;

namespace {

std::vector<Int> values(const std::vector<Residue>& rs) {
  std::vector<Int> out;
  for (const auto& r : rs) out.push_back(r.value());
  return out;
}

std::set<Int> cyclic_subgroup(Int a, Int n) {
  std::set<Int> out;
  for (Int t = 0; t < n; ++t) out.insert(oracle::mod(t * a, n));
  return out;
}

}  // namespace

TEST(Factorize, Examples) {
  const auto r8 = factorize(8);
  ASSERT_EQ(r8.factors().size(), 1u);
  EXPECT_EQ(r8.factors()[0].prime, 2);
  EXPECT_EQ(r8.factors()[0].exponent, 3);
  EXPECT_EQ(r8.prime_power(), (PrimePower{2, 3}));
  EXPECT_EQ(r8.shape_name(), "PrimePower(2,3)");

  const auto r6 = factorize(6);
  EXPECT_EQ(r6.two_primes(), (TwoPrimes{2, 3}));
  EXPECT_EQ(r6.shape_name(), "TwoPrimes(2,3)");

  const auto r12 = factorize(12);
  EXPECT_TRUE(std::holds_alternative<GeneralShape>(r12.shape()));
  ASSERT_EQ(r12.factors().size(), 2u);
  EXPECT_EQ(r12.factors()[0].exponent, 2);
  EXPECT_THROW(r12.prime_power(), ShapeMismatch);
  EXPECT_THROW(r12.two_primes(), ShapeMismatch);
}

TEST(Factorize, RejectsSmallModuli) {
  EXPECT_THROW(factorize(1), InvalidModulus);
  EXPECT_THROW(factorize(0), InvalidModulus);
  EXPECT_THROW(RingSpec(-5), InvalidModulus);
}

TEST(Factorize, ProductAndShapeInvariants) {
  for (Int n = 2; n <= 500; ++n) {
    const RingSpec r(n);
    Int prod = 1, last = 1;
    for (const auto& f : r.factors()) {
      EXPECT_GT(f.prime, last);
      EXPECT_GE(f.exponent, 1);
      prod *= ipow(f.prime, f.exponent);
      last = f.prime;
    }
    EXPECT_EQ(prod, n);
    EXPECT_EQ(r.is_prime_power(), r.factors().size() == 1);
    EXPECT_EQ(r.is_two_primes(),
              r.factors().size() == 2 && r.factors()[0].exponent == 1 && r.factors()[1].exponent == 1);
  }
}

TEST(Units, Examples) {
  EXPECT_EQ(values(units(RingSpec(4))), (std::vector<Int>{1, 3}));
  EXPECT_EQ(values(units(RingSpec(6))), (std::vector<Int>{1, 5}));
  EXPECT_EQ(values(units(RingSpec(12))), (std::vector<Int>{1, 5, 7, 11}));
}

TEST(ZeroDivisors, Examples) {
  EXPECT_EQ(values(zero_divisors(RingSpec(4))), (std::vector<Int>{2}));
  EXPECT_EQ(values(zero_divisors(RingSpec(6))), (std::vector<Int>{2, 3, 4}));
  EXPECT_EQ(values(zero_divisors(RingSpec(8))), (std::vector<Int>{2, 4, 6}));
}

TEST(Units, CountsPartitionTheRing) {
  for (Int n = 2; n <= 200; ++n) {
    const RingSpec r(n);
    const auto us = units(r), ds = zero_divisors(r);
    EXPECT_EQ(static_cast<Int>(us.size() + ds.size() + 1), n);
    EXPECT_EQ(static_cast<Int>(us.size()), euler_phi(r));
    for (const auto& u : us) EXPECT_EQ(std::gcd(u.value(), n), 1);
    for (const auto& d : ds) EXPECT_GT(std::gcd(d.value(), n), 1);
    if (const auto* pp = std::get_if<PrimePower>(&r.shape())) {
      EXPECT_EQ(static_cast<Int>(us.size()), ipow(pp->p, pp->l) - ipow(pp->p, pp->l - 1));
      EXPECT_EQ(static_cast<Int>(ds.size()), ipow(pp->p, pp->l - 1) - 1);
    }
    if (const auto* tp = std::get_if<TwoPrimes>(&r.shape())) EXPECT_EQ(static_cast<Int>(ds.size()), tp->p1 + tp->p2 - 2);
  }
}

TEST(Residue, ArithmeticReduces) {
  const Residue a(3, 4), b(2, 4);
  EXPECT_EQ((a + b).value(), 1);
  EXPECT_EQ((b - a).value(), 3);
  EXPECT_EQ((a * b).value(), 2);
  EXPECT_EQ((-a).value(), 1);
  EXPECT_EQ(Residue(-1, 4).value(), 3);
  EXPECT_EQ(Residue(9, 4).value(), 1);
  EXPECT_TRUE(b.is_zero_divisor());
  EXPECT_TRUE(a.is_unit());
  EXPECT_THROW(a + Residue(1, 6), DimensionMismatch);
}

TEST(Annihilator, Examples) {
  EXPECT_EQ(annihilator_generator(Residue(2, 4)).value(), 2);
  EXPECT_EQ(annihilator_generator(Residue(4, 12)).value(), 3);
  EXPECT_EQ(annihilator_generator(Residue(1, 6)).value(), 0);
}

TEST(Annihilator, GeneratesTheAnnihilatorIdeal) {
  for (Int n = 2; n <= 60; ++n)
    for (Int a = 0; a < n; ++a) {
      const Int g = annihilator_generator(Residue(a, n)).value();
      EXPECT_EQ(oracle::mod(g * a, n), 0);
      std::set<Int> ann;
      for (Int x = 0; x < n; ++x)
        if (oracle::mod(x * a, n) == 0) ann.insert(x);
      EXPECT_EQ(ann, cyclic_subgroup(g, n)) << a << " mod " << n;
    }
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(Residue(3, 4)).value(), 3);
  EXPECT_EQ(invert(Residue(5, 6)).value(), 5);
  EXPECT_EQ(invert(Residue(3, 8)).value(), 3);
  EXPECT_THROW(invert(Residue(2, 4)), NotInvertible);
  EXPECT_THROW(invert(Residue(0, 7)), NotInvertible);
}

TEST(Invert, EveryUnitOfSmallRings) {
  for (Int n = 2; n <= 100; ++n)
    for (const auto& u : units(RingSpec(n))) EXPECT_EQ((u * invert(u)).value(), 1 % n);
}

TEST(UnitNormalizer, ScalesToTheGcd) {
  for (Int n = 2; n <= 60; ++n)
    for (Int a = 0; a < n; ++a) {
      const auto u = unit_normalizer(Residue(a, n));
      EXPECT_TRUE(u.is_unit());
      EXPECT_EQ((u * Residue(a, n)).value(), a == 0 ? 0 : std::gcd(a, n) % n);
    }
}

TEST(SplitCoefficients, SatisfyTheIdentity) {
  const auto [l1, l2] = split_coefficients(RingSpec(6));
  EXPECT_EQ(oracle::mod(l1.value() * 4 - l2.value() * 9, 6), 1);
  EXPECT_EQ(l1.value(), 1);
  EXPECT_EQ(l2.value(), 1);

  for (Int n : {6, 10, 14, 15, 21, 35, 77}) {
    const RingSpec r(n);
    const auto [p1, p2] = r.two_primes();
    const auto [a, b] = split_coefficients(r);
    EXPECT_EQ(oracle::mod(a.value() * p1 * p1 - b.value() * p2 * p2, n), 1 % n);
    // Lexicographically least among all valid pairs.
    bool found = false;
    for (Int x = 0; x < n && !found; ++x)
      for (Int y = 0; y < n && !found; ++y)
        if (oracle::mod(x * p1 * p1 - y * p2 * p2, n) == 1) {
          EXPECT_EQ(x, a.value());
          EXPECT_EQ(y, b.value());
          found = true;
        }
    EXPECT_TRUE(found);
  }
  EXPECT_THROW(split_coefficients(RingSpec(12)), ShapeMismatch);
  EXPECT_THROW(split_coefficients(RingSpec(9)), ShapeMismatch);
}

TEST(ZeroDivisorDecomposition, RecoversPowerAndUnit) {
  for (Int n : {4, 8, 9, 16, 27, 25, 32, 81}) {
    const RingSpec r(n);
    const auto [p, l] = r.prime_power();
    for (const auto& d : zero_divisors(r)) {
      const auto dec = decompose_zero_divisor(r, d);
      EXPECT_GE(dec.r, 1);
      EXPECT_LT(dec.r, l);
      EXPECT_TRUE(dec.unit.is_unit());
      EXPECT_EQ(oracle::mod(ipow(p, dec.r) * dec.unit.value(), n), d.value());
      EXPECT_NE(d.value() % ipow(p, dec.r + 1), 0);
    }
  }
  EXPECT_THROW(decompose_zero_divisor(RingSpec(6), Residue(2, 6)), ShapeMismatch);
  EXPECT_THROW(decompose_zero_divisor(RingSpec(8), Residue(3, 8)), InvalidArgument);
}

TEST(CyclicGenerator, PowersOfP1GenerateTheSameSubgroup) {
  for (Int n : {6, 10, 14, 15, 21, 22, 33, 35}) {
    const auto [p1, p2] = RingSpec(n).two_primes();
    const auto base = cyclic_subgroup(p1, n);
    for (int r1 = 1; r1 < p2 - 1; ++r1) EXPECT_EQ(cyclic_subgroup(oracle::mod(ipow(p1, r1), n), n), base);
  }
}

TEST(Divisors, Ascending) {
  EXPECT_EQ(divisors(12), (std::vector<Int>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(7), (std::vector<Int>{1, 7}));
}

TEST(LinearCongruence, SmallestSolution) {
  EXPECT_EQ(solve_linear_congruence(4, 2, 6), 2);
  EXPECT_EQ(solve_linear_congruence(2, 1, 4), std::nullopt);
  const auto e = extended_gcd(240, 46);
  EXPECT_EQ(e.g, 2);
  EXPECT_EQ(e.s * 240 + e.t * 46, 2);
}
