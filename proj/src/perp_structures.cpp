#include "mincodes/perp_structures.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mincodes {

namespace {

Int content(const ZnVec& v) {
  Int g = v.modulus();
  for (Int x : v.entries()) g = gcd(g, x);
  return g;
}

/// Generators written in template coordinates, mapped back to the original
/// coordinate order given by `layout`.
struct TemplateBuilder {
  std::vector<std::size_t> layout;
  Int n;
  std::vector<ZnVec> out;

  void add(std::initializer_list<std::pair<std::size_t, Int>> entries) {
    std::vector<Int> g(layout.size(), 0);
    for (const auto& [pos, val] : entries) g[layout[pos]] = val;
    out.emplace_back(std::move(g), n);
  }
};

/// Template for a vector y whose coordinate `lead` is a unit: normalize y so the
/// lead is 1, put it first, and emit (-a_j at the lead, 1 at j) for every other
/// coordinate j. When `extra_modulus` is set (the annihilator p^s of the scalar
/// in front of y), the extra generator (q - a_1, 1, 0, ...) is appended, or (q)
/// when k = 1.
PerpBasis unit_led_template(const ZnVec& source, const ZnVec& y, std::size_t lead,
                            std::optional<Int> extra_modulus, PerpConstruction tag) {
  const Int n = y.modulus();
  const std::size_t k = y.size();
  std::vector<std::size_t> layout{lead};
  for (std::size_t j = 0; j < k; ++j)
    if (j != lead) layout.push_back(j);

  const ZnVec w = y.scaled(invert(Residue(y[lead], n)).value());
  TemplateBuilder b{layout, n, {}};
  for (std::size_t pos = 1; pos < k; ++pos) b.add({{0, -w[layout[pos]]}, {pos, 1}});
  if (extra_modulus) {
    if (k >= 2)
      b.add({{0, *extra_modulus - w[layout[1]]}, {1, 1}});
    else
      b.add({{0, *extra_modulus}});
  }
  return {source, std::move(b.out), !extra_modulus.has_value(), tag, std::move(layout)};
}

std::optional<std::size_t> first_unit(const ZnVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (gcd(v[i], v.modulus()) == 1) return i;
  return std::nullopt;
}

/// Smallest unit of Z_n congruent to a modulo m (m | n).
Int unit_lift(Int a, Int m, Int n) {
  for (Int u = mod_reduce(a, m); u < n; u += m)
    if (gcd(u, n) == 1) return u;
  throw std::logic_error("no unit lift exists");
}

PerpBasis prime_power_basis(const ZnVec& v, const RingSpec& ring) {
  const auto [p, l] = ring.prime_power();
  const auto cls = classify_root_word(v, ring);
  if (cls.is_root)
    return unit_led_template(v, v, *first_unit(v), std::nullopt, PerpConstruction::PrimePowerRootWord);

  const auto& [r, y] = *cls.prime_power_decomposition;
  const int s = l - r;  // least s with s + r >= l
  if (s < 1 || s + r < l) throw std::logic_error("invalid exponent split for non-root word");
  return unit_led_template(v, y, *first_unit(y), ipow(p, s), PerpConstruction::PrimePowerNonRoot);
}

/// v = q * y where every component is a multiple of q: lift y so its first
/// nonzero coordinate is a unit, then apply the unit-led template with the
/// complementary prime as the extra generator.
PerpBasis single_prime_multiple_basis(const ZnVec& v, Int q, Int other, PerpConstruction tag) {
  const Int n = v.modulus();
  std::vector<Int> y(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) y[i] = v[i] / q;
  const auto lead = static_cast<std::size_t>(
      std::find_if(y.begin(), y.end(), [](Int x) { return x != 0; }) - y.begin());
  // q * (y + t*other) == q * y, so the lead can be replaced by a unit lift.
  y[lead] = unit_lift(y[lead], other, n);
  return unit_led_template(v, ZnVec(std::move(y), n), lead, other, tag);
}

PerpBasis mixed_basis(const ZnVec& v, Int p1, Int p2) {
  const Int n = v.modulus();
  const std::size_t k = v.size();

  // Block layout: p1-multiples (and zeros) first, then p2-multiples.
  std::vector<std::size_t> block1, block2;
  for (std::size_t i = 0; i < k; ++i) (v[i] % p1 == 0 ? block1 : block2).push_back(i);
  const auto lead1 = *std::find_if(block1.begin(), block1.end(), [&](std::size_t i) { return v[i] != 0; });
  const auto lead2 = block2.front();
  std::erase(block1, lead1);
  std::erase(block2, lead2);

  std::vector<std::size_t> layout{lead1};
  layout.insert(layout.end(), block1.begin(), block1.end());
  const std::size_t pos2 = layout.size();
  layout.push_back(lead2);
  layout.insert(layout.end(), block2.begin(), block2.end());

  // v = (p1 u, p1 a_2, ..., -p2 u', -p2 a_{r+2}, ...)
  auto a1 = [&](std::size_t i) { return v[i] / p1; };
  auto a2 = [&](std::size_t i) { return mod_reduce(-v[i], n) / p2; };
  const Int u_inv = invert(Residue(unit_lift(a1(lead1), p2, n), n)).value();
  const Int u2_inv = invert(Residue(unit_lift(a2(lead2), p1, n), n)).value();

  TemplateBuilder b{layout, n, {}};
  for (std::size_t pos = 1; pos < pos2; ++pos)
    b.add({{0, -mul_mod(a1(layout[pos]), u_inv, n)}, {pos, 1}});
  for (std::size_t pos = pos2 + 1; pos < k; ++pos)
    b.add({{pos2, -mul_mod(a2(layout[pos]), u2_inv, n)}, {pos, 1}});
  b.add({{0, p2}, {pos2, p1}});
  return {v, std::move(b.out), true, PerpConstruction::TwoPrimesMixed, std::move(layout)};
}

PerpBasis two_primes_basis(const ZnVec& v, const RingSpec& ring) {
  const auto [p1, p2] = ring.two_primes();
  if (auto lead = first_unit(v))
    return unit_led_template(v, v, *lead, std::nullopt, PerpConstruction::TwoPrimesUnitComponent);

  const auto entries = v.entries();
  const bool all_p1 = std::all_of(entries.begin(), entries.end(), [&](Int x) { return x % p1 == 0; });
  const bool all_p2 = std::all_of(entries.begin(), entries.end(), [&](Int x) { return x % p2 == 0; });
  if (all_p1) return single_prime_multiple_basis(v, p1, p2, PerpConstruction::TwoPrimesP1Multiples);
  if (all_p2) return single_prime_multiple_basis(v, p2, p1, PerpConstruction::TwoPrimesP2Multiples);
  return mixed_basis(v, p1, p2);
}

}  // namespace

std::string_view to_string(PerpConstruction c) {
  switch (c) {
    case PerpConstruction::PrimePowerRootWord: return "prime-power-root-word";
    case PerpConstruction::PrimePowerNonRoot: return "prime-power-non-root";
    case PerpConstruction::TwoPrimesUnitComponent: return "two-primes-unit-component";
    case PerpConstruction::TwoPrimesP1Multiples: return "two-primes-p1-multiples";
    case PerpConstruction::TwoPrimesP2Multiples: return "two-primes-p2-multiples";
    case PerpConstruction::TwoPrimesMixed: return "two-primes-mixed";
  }
  return "unknown";
}

bool is_root_word(const ZnVec& v) { return content(v) == 1; }

RootWordClassification classify_root_word(const ZnVec& v, const RingSpec& ring) {
  if (v.modulus() != ring.modulus()) throw DimensionMismatch("vector and ring moduli differ");
  const Int g = content(v);
  RootWordClassification out{v, g == 1, std::nullopt, std::nullopt};
  if (out.is_root) return out;
  // The annihilator of v is generated by n / gcd(n, v_1, ..., v_k).
  out.witness = ring.modulus() / g;
  if (ring.is_prime_power() && !v.is_zero()) {
    const Int p = ring.prime_power().p;
    int r = 0;
    for (Int h = g; h % p == 0; h /= p) ++r;
    const Int pr = ipow(p, r);
    std::vector<Int> y(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) y[i] = v[i] / pr;
    out.prime_power_decomposition = RootWordClassification::Decomposition{r, ZnVec(std::move(y), v.modulus())};
  }
  return out;
}

PerpBasis perp_basis(const ZnVec& v, const RingSpec& ring) {
  if (v.modulus() != ring.modulus()) throw DimensionMismatch("vector and ring moduli differ");
  if (v.is_zero()) throw InvalidArgument("perp basis of the zero vector is the whole space");
  if (ring.is_prime_power()) return prime_power_basis(v, ring);
  if (ring.is_two_primes()) return two_primes_basis(v, ring);

  const Submodule ker = kernel(std::span(&v, 1), v.modulus(), v.size());
  std::vector<std::size_t> identity(v.size());
  std::iota(identity.begin(), identity.end(), 0);
  return {v, ker.canon().rows(), false, std::nullopt, std::move(identity)};
}

Submodule double_perp(const ZnVec& v) {
  if (v.is_zero()) throw InvalidArgument("double perp requires a nonzero vector");
  const Int n = v.modulus();
  const std::size_t k = v.size();
  const Submodule perp = kernel(std::span(&v, 1), n, k);
  Submodule dp = kernel(perp.canon());
  if (!submodule_equal(dp, span(std::span(&v, 1), n, k)))
    throw std::logic_error("double perp differs from the cyclic span of the vector");
  return dp;
}

std::optional<std::uint64_t> root_word_formula(const RingSpec& ring, std::size_t k) {
  const auto pw = [](Int b, std::size_t e) { return *checked_power(b, e); };
  if (ring.is_prime_power()) {
    const auto [p, l] = ring.prime_power();
    return pw(p, static_cast<std::size_t>(l) * k) - pw(p, static_cast<std::size_t>(l - 1) * k);
  }
  if (ring.is_two_primes()) {
    const auto [p1, p2] = ring.two_primes();
    return pw(p1 * p2, k) - pw(p2 - 1, k) - pw(p1 - 1, k) - 1;
  }
  return std::nullopt;
}

RootWordCount count_root_words(const RingSpec& ring, std::size_t k, std::uint64_t threshold) {
  require_enumerable(ring.modulus(), k, threshold);
  std::uint64_t count = 0;
  for_each_vector(ring.modulus(), k, [&](const ZnVec& v) { count += is_root_word(v) ? 1 : 0; });
  return {count, root_word_formula(ring, k)};
}

std::vector<ZnVec> root_words_mod_units(const RingSpec& ring, std::size_t k, std::uint64_t threshold) {
  return unit_orbit_representatives(ring, k, is_root_word, threshold);
}

}  // namespace mincodes
