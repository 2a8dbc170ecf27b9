#include "mincodes/zn_ring.hpp"

#include <numeric>

namespace mincodes {

Int gcd(Int a, Int b) noexcept { return std::gcd(a, b); }

Int ipow(Int base, int exp) {
  if (exp < 0) throw InvalidArgument("negative exponent");
  Int r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > INT64_MAX / base) throw InvalidArgument("integer power overflows 64 bits");
    r *= base;
  }
  return r;
}

ExtendedGcd extended_gcd(Int a, Int b) noexcept {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::optional<Int> solve_linear_congruence(Int a, Int b, Int n) {
  a = mod_reduce(a, n);
  b = mod_reduce(b, n);
  const auto [g, s, t] = extended_gcd(a, n);
  if (b % g != 0) return std::nullopt;
  const Int step = n / g;
  // s*a == g (mod n), so x = s*(b/g) solves; all solutions agree mod n/g.
  return mod_reduce(mul_mod(mod_reduce(s, step), (b / g) % step, step), step);
}

RingSpec::RingSpec(Int n) : n_(n), shape_(GeneralShape{}) {
  if (n < 2) throw InvalidModulus(n);
  Int rest = n;
  for (Int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    factors_.push_back({p, e});
  }
  if (rest > 1) factors_.push_back({rest, 1});

  if (factors_.size() == 1) {
    shape_ = PrimePower{factors_[0].prime, factors_[0].exponent};
  } else if (factors_.size() == 2 && factors_[0].exponent == 1 && factors_[1].exponent == 1) {
    shape_ = TwoPrimes{factors_[0].prime, factors_[1].prime};
  }
}

const PrimePower& RingSpec::prime_power() const {
  if (const auto* pp = std::get_if<PrimePower>(&shape_)) return *pp;
  throw ShapeMismatch("Z_" + std::to_string(n_) + " is not a prime power ring");
}

const TwoPrimes& RingSpec::two_primes() const {
  if (const auto* tp = std::get_if<TwoPrimes>(&shape_)) return *tp;
  throw ShapeMismatch("Z_" + std::to_string(n_) + " is not a product of two distinct primes");
}

std::string RingSpec::shape_name() const {
  if (const auto* pp = std::get_if<PrimePower>(&shape_))
    return "PrimePower(" + std::to_string(pp->p) + "," + std::to_string(pp->l) + ")";
  if (const auto* tp = std::get_if<TwoPrimes>(&shape_))
    return "TwoPrimes(" + std::to_string(tp->p1) + "," + std::to_string(tp->p2) + ")";
  return "General";
}

RingSpec factorize(Int n) { return RingSpec(n); }

Residue::Residue(Int value, Int modulus) : value_(0), modulus_(modulus) {
  if (modulus < 2) throw InvalidModulus(modulus);
  value_ = mod_reduce(value, modulus);
}

namespace {
void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus())
    throw DimensionMismatch("residues from Z_" + std::to_string(a.modulus()) + " and Z_" +
                            std::to_string(b.modulus()));
}
}  // namespace

Residue Residue::operator+(const Residue& o) const {
  require_same_modulus(*this, o);
  return {value_ + o.value_, modulus_};
}

Residue Residue::operator-(const Residue& o) const {
  require_same_modulus(*this, o);
  return {value_ - o.value_, modulus_};
}

Residue Residue::operator*(const Residue& o) const {
  require_same_modulus(*this, o);
  return {mul_mod(value_, o.value_, modulus_), modulus_};
}

Residue Residue::operator-() const { return {-value_, modulus_}; }

std::vector<Residue> units(const RingSpec& ring) {
  std::vector<Residue> out;
  const Int n = ring.modulus();
  for (Int a = 1; a < n; ++a)
    if (gcd(a, n) == 1) out.emplace_back(a, n);
  return out;
}

std::vector<Residue> zero_divisors(const RingSpec& ring) {
  std::vector<Residue> out;
  const Int n = ring.modulus();
  for (Int a = 1; a < n; ++a)
    if (gcd(a, n) != 1) out.emplace_back(a, n);
  return out;
}

Int euler_phi(const RingSpec& ring) {
  Int phi = ring.modulus();
  for (const auto& f : ring.factors()) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

Residue annihilator_generator(const Residue& a) {
  const Int n = a.modulus();
  return {n / gcd(a.value(), n), n};
}

Residue invert(const Residue& u) {
  const auto [g, s, t] = extended_gcd(u.value(), u.modulus());
  if (g != 1) throw NotInvertible(u.value(), u.modulus());
  return {s, u.modulus()};
}

Residue unit_normalizer(const Residue& a) {
  const Int n = a.modulus();
  if (a.is_zero()) return {1, n};
  const auto [g, s, t] = extended_gcd(a.value(), n);
  // Every c == s (mod n/g) also satisfies c*a == g; pick one coprime to n.
  const Int step = n / g;
  Int c = mod_reduce(s, step);
  while (gcd(c, n) != 1) c += step;
  return {c, n};
}

std::pair<Residue, Residue> split_coefficients(const RingSpec& ring) {
  const auto& [p1, p2] = ring.two_primes();
  const Int n = ring.modulus();
  const Int a = p1 * p1 % n;
  const Int b = p2 * p2 % n;
  for (Int l1 = 0; l1 < n; ++l1) {
    // lambda2 * p2^2 == lambda1 * p1^2 - 1
    if (auto l2 = solve_linear_congruence(b, mul_mod(l1, a, n) - 1, n))
      return {Residue(l1, n), Residue(*l2, n)};
  }
  throw std::logic_error("no split coefficients exist; p1 and p2 must be coprime");
}

ZeroDivisorDecomposition decompose_zero_divisor(const RingSpec& ring, const Residue& d) {
  const auto& [p, l] = ring.prime_power();
  if (!d.is_zero_divisor())
    throw InvalidArgument(std::to_string(d.value()) + " is not a zero divisor of Z_" +
                          std::to_string(ring.modulus()));
  Int rest = d.value();
  int r = 0;
  while (rest % p == 0) {
    rest /= p;
    ++r;
  }
  return {r, Residue(rest, ring.modulus())};
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace mincodes
