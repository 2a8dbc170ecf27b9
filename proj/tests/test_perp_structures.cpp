#include <gtest/gtest.h>

#include "convert.hpp"
#include "mincodes/perp_structures.hpp"

using namespace mincodes;
using testing_support::elements;
using testing_support::plain;

namespace {

struct Grid {
  Int n;
  std::size_t k;
};

const std::vector<Grid> kGrids{{4, 1}, {4, 2}, {4, 3}, {8, 1}, {8, 2}, {8, 3}, {9, 1}, {9, 2}, {9, 3},
                               {6, 1}, {6, 2}, {6, 3}, {10, 2}, {15, 2}, {12, 2}};

template <typename F>
void for_each_nonzero(Int n, std::size_t k, F&& f) {
  for (const auto& x : oracle::all_vectors(n, k)) {
    const ZnVec v(x, n);
    if (!v.is_zero()) f(v);
  }
}

}  // namespace

TEST(ClassifyRootWord, Examples) {
  const auto a = classify_root_word(ZnVec({1, 2}, 4), RingSpec(4));
  EXPECT_TRUE(a.is_root);
  EXPECT_FALSE(a.witness);

  const auto b = classify_root_word(ZnVec({2, 2}, 4), RingSpec(4));
  EXPECT_FALSE(b.is_root);
  EXPECT_EQ(b.witness, 2);
  ASSERT_TRUE(b.prime_power_decomposition);
  EXPECT_EQ(b.prime_power_decomposition->r, 1);
  EXPECT_EQ(b.prime_power_decomposition->root, ZnVec({1, 1}, 4));

  EXPECT_TRUE(classify_root_word(ZnVec({2, 3}, 6), RingSpec(6)).is_root);
  EXPECT_FALSE(classify_root_word(ZnVec({2, 4}, 6), RingSpec(6)).is_root);
}

TEST(ClassifyRootWord, MatchesScalarScan) {
  for (const auto& [n, k] : kGrids) {
    const RingSpec ring(n);
    for_each_nonzero(n, k, [&](const ZnVec& v) {
      const auto c = classify_root_word(v, ring);
      EXPECT_EQ(c.is_root, oracle::is_root_word(plain(v), n)) << v;
      EXPECT_EQ(is_root_word(v), c.is_root);
      if (!c.is_root) {
        ASSERT_TRUE(c.witness);
        EXPECT_NE(*c.witness, 0);
        EXPECT_TRUE(v.scaled(*c.witness).is_zero());
      }
      if (c.prime_power_decomposition) {
        const auto p = ring.prime_power().p;
        const auto& d = *c.prime_power_decomposition;
        EXPECT_EQ(d.root.scaled(ipow(p, d.r)), v);
        EXPECT_TRUE(is_root_word(d.root));
        // Minimality of r: v is not p^(r+1) times anything.
        EXPECT_FALSE(std::all_of(v.entries().begin(), v.entries().end(),
                                 [&](Int x) { return x % ipow(p, d.r + 1) == 0; }));
      }
      if (ring.is_prime_power()) EXPECT_EQ(c.prime_power_decomposition.has_value(), !c.is_root);
    });
  }
}

TEST(PerpBasis, Examples) {
  const auto a = perp_basis(ZnVec({1, 2}, 4), RingSpec(4));
  EXPECT_EQ(a.generators, (std::vector<ZnVec>{ZnVec({2, 1}, 4)}));
  EXPECT_TRUE(a.claimed_free);
  EXPECT_EQ(a.construction, PerpConstruction::PrimePowerRootWord);

  const auto b = perp_basis(ZnVec({2, 2}, 4), RingSpec(4));
  EXPECT_EQ(b.generators, (std::vector<ZnVec>{ZnVec({3, 1}, 4), ZnVec({1, 1}, 4)}));
  EXPECT_EQ(b.construction, PerpConstruction::PrimePowerNonRoot);
  EXPECT_EQ(span(b.generators, 4, 2).cardinality(), 8u);

  const auto c = perp_basis(ZnVec({2, 3}, 6), RingSpec(6));
  EXPECT_EQ(c.generators.size(), 1u);
  EXPECT_EQ(c.construction, PerpConstruction::TwoPrimesMixed);
  EXPECT_EQ(elements(span(c.generators, 6, 2)), oracle::span({{3, 2}}, 6, 2));

  EXPECT_THROW(perp_basis(ZnVec({0, 0}, 4), RingSpec(4)), InvalidArgument);
  EXPECT_FALSE(perp_basis(ZnVec({2, 3}, 12), RingSpec(12)).construction);
}

TEST(PerpBasis, SpanEqualsKernelEverywhere) {
  for (const auto& [n, k] : kGrids) {
    const RingSpec ring(n);
    for_each_nonzero(n, k, [&](const ZnVec& v) {
      const auto b = perp_basis(v, ring);
      for (const auto& g : b.generators) EXPECT_EQ(inner_product(g, v), 0) << v << " " << g;
      const auto expected = oracle::kernel({plain(v)}, n, k);
      EXPECT_EQ(elements(span(b.generators, n, k)), expected) << "v = " << v << " over Z_" << n;
      if (b.claimed_free) EXPECT_TRUE(is_linearly_independent(ZnMatrix(n, k, b.generators))) << v;
    });
  }
}

TEST(PerpBasis, GeneratorCountsPerTemplate) {
  for (const auto& [n, k] : kGrids) {
    const RingSpec ring(n);
    if (!ring.is_prime_power() && !ring.is_two_primes()) continue;
    for_each_nonzero(n, k, [&](const ZnVec& v) {
      const auto b = perp_basis(v, ring);
      ASSERT_TRUE(b.construction);
      switch (*b.construction) {
        case PerpConstruction::PrimePowerRootWord:
        case PerpConstruction::TwoPrimesUnitComponent:
        case PerpConstruction::TwoPrimesMixed:
          EXPECT_EQ(b.generators.size(), k - 1) << v;
          EXPECT_TRUE(b.claimed_free);
          break;
        case PerpConstruction::PrimePowerNonRoot:
        case PerpConstruction::TwoPrimesP1Multiples:
        case PerpConstruction::TwoPrimesP2Multiples:
          EXPECT_EQ(b.generators.size(), k) << v;
          break;
      }
    });
  }
}

TEST(PerpBasis, CardinalityFormulas) {
  for (const auto& [n, k] : kGrids) {
    const RingSpec ring(n);
    for_each_nonzero(n, k, [&](const ZnVec& v) {
      const auto size = kernel(std::vector<ZnVec>{v}, n, k).cardinality();
      const auto ki = static_cast<int>(k);
      if (const auto* pp = std::get_if<PrimePower>(&ring.shape())) {
        const auto c = classify_root_word(v, ring);
        const Int r = c.prime_power_decomposition ? c.prime_power_decomposition->r : 0;
        EXPECT_EQ(static_cast<Int>(size), ipow(pp->p, pp->l * (ki - 1)) * ipow(pp->p, static_cast<int>(r))) << v;
      } else if (const auto* tp = std::get_if<TwoPrimes>(&ring.shape())) {
        const auto b = perp_basis(v, ring);
        const Int p1 = tp->p1, p2 = tp->p2;
        switch (*b.construction) {
          case PerpConstruction::TwoPrimesP1Multiples:
            EXPECT_EQ(static_cast<Int>(size), ipow(p1, ki) * ipow(p2, ki - 1)) << v;
            break;
          case PerpConstruction::TwoPrimesP2Multiples:
            EXPECT_EQ(static_cast<Int>(size), ipow(p2, ki) * ipow(p1, ki - 1)) << v;
            break;
          default: EXPECT_EQ(static_cast<Int>(size), ipow(p1 * p2, ki - 1)) << v;
        }
      }
    });
  }
}

TEST(Perp, UnitInvariance) {
  for (const auto& [n, k] : kGrids) {
    if (k > 2) continue;
    const RingSpec ring(n);
    for_each_nonzero(n, k, [&](const ZnVec& v) {
      const auto base = kernel(std::vector<ZnVec>{v}, n, k);
      for (const auto& u : units(ring))
        EXPECT_TRUE(submodule_equal(base, kernel(std::vector<ZnVec>{v.scaled(u.value())}, n, k)));
    });
  }
}

TEST(DoublePerp, Examples) {
  EXPECT_EQ(double_perp(ZnVec({1, 2}, 4)).cardinality(), 4u);
  EXPECT_EQ(elements(double_perp(ZnVec({2, 2}, 4))), (std::set<oracle::Vec>{{0, 0}, {2, 2}}));
  EXPECT_EQ(elements(double_perp(ZnVec({3, 2}, 6))), oracle::span({{3, 2}}, 6, 2));
  EXPECT_THROW(double_perp(ZnVec({0, 0}, 6)), InvalidArgument);
}

TEST(DoublePerp, EqualsCyclicSpanEverywhere) {
  for (const auto& [n, k] : kGrids) {
    for_each_nonzero(n, k, [&](const ZnVec& v) {
      const auto dp = double_perp(v);
      // Independent check: brute-force kernel of the brute-force kernel.
      const auto perp = oracle::kernel({plain(v)}, n, k);
      const auto twice = oracle::kernel({perp.begin(), perp.end()}, n, k);
      EXPECT_EQ(elements(dp), twice);
      EXPECT_EQ(twice, oracle::span({plain(v)}, n, k));
    });
  }
}

TEST(CountRootWords, Examples) {
  const auto a = count_root_words(RingSpec(4), 2);
  EXPECT_EQ(a.count, 12u);
  EXPECT_EQ(a.formula_count, 12u);
  const auto b = count_root_words(RingSpec(8), 1);
  EXPECT_EQ(b.count, 4u);
  EXPECT_EQ(b.formula_count, 4u);
  const auto c = count_root_words(RingSpec(6), 2);
  EXPECT_EQ(c.count, 24u);
  EXPECT_EQ(c.formula_count, 30u);
  EXPECT_FALSE(count_root_words(RingSpec(12), 2).formula_count);
}

TEST(CountRootWords, PrimePowerFormulaHolds) {
  for (Int p : {2, 3})
    for (int l : {1, 2, 3})
      for (std::size_t k : {1u, 2u, 3u}) {
        const RingSpec ring(ipow(p, l));
        std::uint64_t brute = 0;
        for (const auto& x : oracle::all_vectors(ring.modulus(), k)) brute += oracle::is_root_word(x, ring.modulus());
        const auto c = count_root_words(ring, k);
        EXPECT_EQ(c.count, brute);
        EXPECT_EQ(c.formula_count, brute);
      }
}

TEST(RootWordsModUnits, Examples) {
  EXPECT_EQ(root_words_mod_units(RingSpec(4), 2).size(), 6u);
  EXPECT_EQ(root_words_mod_units(RingSpec(8), 1), (std::vector<ZnVec>{ZnVec({1}, 8)}));
  EXPECT_EQ(root_words_mod_units(RingSpec(6), 2).size(), 12u);
}

TEST(RootWordsModUnits, OrbitsPartitionRootWords) {
  for (const auto& [n, k] : kGrids) {
    const RingSpec ring(n);
    std::set<oracle::Vec> covered;
    for (const auto& r : root_words_mod_units(ring, k)) {
      EXPECT_TRUE(is_root_word(r));
      for (const auto& u : units(ring)) covered.insert(plain(r.scaled(u.value())));
    }
    EXPECT_EQ(covered.size(), count_root_words(ring, k).count);
  }
}
