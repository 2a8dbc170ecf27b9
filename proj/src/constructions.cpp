#include "mincodes/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mincodes/perp_structures.hpp"

namespace mincodes {

std::string_view to_string(Recipe r) {
  switch (r) {
    case Recipe::Lambda0: return "lambda0";
    case Recipe::Lambda0Bi: return "lambda0-bi";
    case Recipe::OneDimNaive: return "onedim-naive";
    case Recipe::OneDimGcd: return "onedim-gcd";
    case Recipe::RootWords: return "root-words";
  }
  return "unknown";
}

std::optional<Recipe> parse_recipe(std::string_view name) {
  for (auto r : {Recipe::Lambda0, Recipe::Lambda0Bi, Recipe::OneDimNaive, Recipe::OneDimGcd, Recipe::RootWords})
    if (to_string(r) == name) return r;
  return std::nullopt;
}

namespace {

bool is_prime(Int p) { return p >= 2 && RingSpec(p).is_field(); }

/// x e_i + y e_j in Z_n^k.
ZnVec pair_vector(std::size_t k, std::size_t i, Int x, std::size_t j, Int y, Int n) {
  std::vector<Int> e(k, 0);
  e[i] = x;
  e[j] = y;
  return {std::move(e), n};
}

Construction finish(Recipe name, const RingSpec& ring, std::size_t k, Int predicted, std::string provenance,
                    std::vector<ZnVec> cols) {
  if (static_cast<Int>(cols.size()) != predicted)
    throw std::logic_error(std::string(to_string(name)) + " emitted " + std::to_string(cols.size()) +
                           " columns, expected " + std::to_string(predicted));
  return {{name, ring, k, predicted, std::move(provenance)}, ColumnMultiset(ring, k, std::move(cols))};
}

/// e_i; e_i + u e_j; e_i + d e_j; d e_i + e_j over all pairs i < j.
std::vector<ZnVec> unit_and_zero_divisor_families(const RingSpec& ring, std::size_t k) {
  const Int n = ring.modulus();
  const auto us = units(ring);
  const auto ds = zero_divisors(ring);
  std::vector<ZnVec> cols;
  for (std::size_t i = 0; i < k; ++i) cols.push_back(ZnVec::unit_vector(k, i, n));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (const auto& u : us) cols.push_back(pair_vector(k, i, 1, j, u.value(), n));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (const auto& d : ds) cols.push_back(pair_vector(k, i, 1, j, d.value(), n));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (const auto& d : ds) cols.push_back(pair_vector(k, i, d.value(), j, 1, n));
  return cols;
}

Int pairs(std::size_t k) { return static_cast<Int>(k * (k - 1) / 2); }

}  // namespace

Construction lambda0_prime_power(Int p, int l, std::size_t k) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (l < 1) throw InvalidArgument("exponent l must be at least 1");
  if (k < 1) throw InvalidArgument("dimension k must be at least 1");
  const RingSpec ring(ipow(p, l));
  if (k == 1) return onedim_gcd(ring);

  const Int pl = ipow(p, l), pl1 = ipow(p, l - 1);
  // Per pair: phi(p^l) units plus twice the p^{l-1} - 1 zero divisors.
  const Int per_pair = pl + pl1 - 2;
  if (per_pair != (pl - pl1) + 2 * (pl1 - 1)) throw std::logic_error("per-pair count identity failed");
  return finish(Recipe::Lambda0, ring, k, pairs(k) * per_pair + static_cast<Int>(k),
                "(k(k-1)/2)(p^l + p^(l-1) - 2) + k", unit_and_zero_divisor_families(ring, k));
}

Construction lambda0_two_primes(Int p1, Int p2, std::size_t k) {
  if (!is_prime(p1) || !is_prime(p2)) throw InvalidArgument("p1 and p2 must both be prime");
  if (p1 == p2) throw InvalidArgument("p1 and p2 must be distinct");
  if (p1 > p2) std::swap(p1, p2);
  if (k < 2) throw InvalidArgument("dimension k must be at least 2");
  const RingSpec ring(p1 * p2);
  const Int n = ring.modulus();

  auto cols = unit_and_zero_divisor_families(ring, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) cols.push_back(pair_vector(k, i, p1, j, p2, n));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) cols.push_back(pair_vector(k, i, p2, j, p1, n));

  const Int per_pair = p1 * p2 + p1 + p2 - 1;
  if (per_pair != (p1 - 1) * (p2 - 1) + 2 * (p1 + p2 - 2) + 2)
    throw std::logic_error("per-pair count identity failed");
  return finish(Recipe::Lambda0Bi, ring, k, pairs(k) * per_pair + static_cast<Int>(k),
                "(k(k-1)/2)(p1 p2 + p1 + p2 - 1) + k", std::move(cols));
}

Construction onedim_naive(const RingSpec& ring) {
  const Int n = ring.modulus();
  std::vector<ZnVec> cols{ZnVec({1}, n)};
  for (Int d : divisors(n))
    if (d != 1 && d != n) cols.push_back(ZnVec({d}, n));
  Int predicted = 1;
  for (const auto& f : ring.factors()) predicted *= f.exponent + 1;
  return finish(Recipe::OneDimNaive, ring, 1, predicted - 1, "(1 + a_1)(1 + a_2)...(1 + a_r) - 1", std::move(cols));
}

Construction onedim_gcd(const RingSpec& ring) {
  const Int n = ring.modulus();
  std::vector<Int> gens{1};
  Int alpha_sum = 0;
  for (const auto& [p, alpha] : ring.factors()) {
    alpha_sum += alpha;
    const Int base = n / ipow(p, alpha);
    for (int t = 0; t < alpha; ++t) {
      const Int g = base * ipow(p, t);
      // For n = p^l, A_1 already contains the unit p^0 = 1.
      if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }
  }
  const auto coverage = verify_gcd_coverage(ring, gens);
  if (!coverage.covered) throw std::logic_error("gcd construction misses a proper divisor");

  std::vector<ZnVec> cols;
  for (Int g : gens) cols.push_back(ZnVec({g}, n));
  const bool prime_power = ring.factors().size() == 1;
  return finish(Recipe::OneDimGcd, ring, 1, prime_power ? alpha_sum : alpha_sum + 1,
                prime_power ? "l" : "a_1 + a_2 + ... + a_r + 1", std::move(cols));
}

Construction root_words_construction(const RingSpec& ring, std::size_t k, std::uint64_t threshold) {
  auto cols = root_words_mod_units(ring, k, threshold);
  const auto predicted = static_cast<Int>(cols.size());
  std::string provenance = "enumerated root words modulo units";
  if (const auto formula = root_word_formula(ring, k)) {
    provenance += " (closed form " + std::to_string(*formula) + "/phi(n)";
    provenance += *formula % static_cast<std::uint64_t>(euler_phi(ring)) == 0
                      ? " = " + std::to_string(*formula / static_cast<std::uint64_t>(euler_phi(ring))) + ")"
                      : ", not integral)";
  }
  return finish(Recipe::RootWords, ring, k, predicted, std::move(provenance), std::move(cols));
}

Construction build(Recipe recipe, const RingSpec& ring, std::size_t k) {
  switch (recipe) {
    case Recipe::Lambda0: {
      const auto [p, l] = ring.prime_power();
      return lambda0_prime_power(p, l, k);
    }
    case Recipe::Lambda0Bi: {
      const auto [p1, p2] = ring.two_primes();
      return lambda0_two_primes(p1, p2, k);
    }
    case Recipe::OneDimNaive:
    case Recipe::OneDimGcd:
      if (k != 1) throw InvalidArgument(std::string(to_string(recipe)) + " builds one-dimensional codes only");
      return recipe == Recipe::OneDimNaive ? onedim_naive(ring) : onedim_gcd(ring);
    case Recipe::RootWords: return root_words_construction(ring, k);
  }
  throw InvalidArgument("unknown recipe");
}

GcdCoverage verify_gcd_coverage(const RingSpec& ring, const std::vector<Int>& generators) {
  const Int n = ring.modulus();
  GcdCoverage out;
  for (Int d : divisors(n)) {
    if (d == 1 || d == n) continue;
    // Only generators inside the ideal (d) can contribute to a gcd equal to d.
    std::vector<Int> pool;
    for (Int g : generators)
      if (gcd(mod_reduce(g, n), n) % d == 0) pool.push_back(mod_reduce(g, n));
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    auto gcd_of = [&](const std::vector<Int>& s) {
      return std::accumulate(s.begin(), s.end(), n, [](Int a, Int b) { return gcd(a, b); });
    };
    if (pool.empty() || gcd_of(pool) != d) {
      out.covered = false;
      out.uncovered.push_back(d);
      continue;
    }
    // Report a smallest witness subset when the pool is small enough to scan.
    std::vector<Int> witness = pool;
    if (pool.size() <= 16) {
      for (std::size_t size = 1; size < pool.size() && witness.size() == pool.size(); ++size) {
        std::vector<bool> pick(pool.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
          std::vector<Int> s;
          for (std::size_t i = 0; i < pool.size(); ++i)
            if (pick[i]) s.push_back(pool[i]);
          if (gcd_of(s) == d) {
            witness = std::move(s);
            break;
          }
        } while (std::prev_permutation(pick.begin(), pick.end()));
      }
    }
    out.witnesses.emplace(d, std::move(witness));
  }
  return out;
}

}  // namespace mincodes
