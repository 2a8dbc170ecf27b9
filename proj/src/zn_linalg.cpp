#include "mincodes/zn_linalg.hpp"

#include <algorithm>
#include <ostream>

namespace mincodes {

namespace {

Int mulm(Int a, Int b, Int n) noexcept { return mod_reduce(mul_mod(a, b, n), n); }

void require_modulus(Int n) {
  if (n < 2) throw InvalidModulus(n);
}

bool all_zero(std::span<const Int> xs) {
  return std::all_of(xs.begin(), xs.end(), [](Int x) { return x == 0; });
}

}  // namespace

std::optional<std::uint64_t> checked_power(Int base, std::size_t exp) noexcept {
  unsigned __int128 r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    r *= static_cast<unsigned __int128>(base);
    if (r > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t require_enumerable(Int modulus, std::size_t k, std::uint64_t threshold) {
  const auto size = checked_power(modulus, k);
  if (!size) throw ThresholdExceeded(UINT64_MAX, threshold);
  if (*size > threshold) throw ThresholdExceeded(*size, threshold);
  return *size;
}

// ---------------------------------------------------------------------------
// ZnVec

ZnVec::ZnVec(std::vector<Int> entries, Int modulus) : entries_(std::move(entries)), modulus_(modulus) {
  require_modulus(modulus);
  for (auto& e : entries_) e = mod_reduce(e, modulus);
}

ZnVec::ZnVec(std::initializer_list<Int> entries, Int modulus)
    : ZnVec(std::vector<Int>(entries), modulus) {}

ZnVec ZnVec::zero(std::size_t k, Int modulus) { return {std::vector<Int>(k, 0), modulus}; }

ZnVec ZnVec::unit_vector(std::size_t k, std::size_t i, Int modulus) {
  std::vector<Int> e(k, 0);
  e.at(i) = 1;
  return {std::move(e), modulus};
}

bool ZnVec::is_zero() const noexcept { return all_zero(entries_); }

namespace {
void require_compatible(const ZnVec& a, const ZnVec& b) {
  if (a.modulus() != b.modulus())
    throw DimensionMismatch("vectors over Z_" + std::to_string(a.modulus()) + " and Z_" +
                            std::to_string(b.modulus()));
  if (a.size() != b.size())
    throw DimensionMismatch("vector lengths " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
}
}  // namespace

ZnVec ZnVec::operator+(const ZnVec& o) const {
  require_compatible(*this, o);
  std::vector<Int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] + o.entries_[i];
  return {std::move(out), modulus_};
}

ZnVec ZnVec::operator-(const ZnVec& o) const {
  require_compatible(*this, o);
  std::vector<Int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] - o.entries_[i];
  return {std::move(out), modulus_};
}

ZnVec ZnVec::scaled(Int a) const {
  std::vector<Int> out(size());
  const Int s = mod_reduce(a, modulus_);
  for (std::size_t i = 0; i < size(); ++i) out[i] = mul_mod(s, entries_[i], modulus_);
  return {std::move(out), modulus_};
}

std::ostream& operator<<(std::ostream& os, const ZnVec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

Int inner_product(const ZnVec& v, const ZnVec& w) {
  require_compatible(v, w);
  const Int n = v.modulus();
  Int acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) acc = (acc + mul_mod(v[i], w[i], n)) % n;
  return acc;
}

// ---------------------------------------------------------------------------
// ZnMatrix

ZnMatrix::ZnMatrix(Int modulus, std::size_t cols) : modulus_(modulus), cols_(cols) {
  require_modulus(modulus);
}

ZnMatrix::ZnMatrix(Int modulus, std::size_t cols, std::vector<ZnVec> rows)
    : ZnMatrix(modulus, cols) {
  rows_.reserve(rows.size());
  for (auto& r : rows) append(std::move(r));
}

void ZnMatrix::append(ZnVec row) {
  if (row.modulus() != modulus_ || row.size() != cols_)
    throw DimensionMismatch("row of length " + std::to_string(row.size()) + " over Z_" +
                            std::to_string(row.modulus()) + " does not fit a " +
                            std::to_string(cols_) + "-column matrix over Z_" +
                            std::to_string(modulus_));
  rows_.push_back(std::move(row));
}

ZnMatrix ZnMatrix::transposed() const {
  ZnMatrix t(modulus_, rows_.size());
  for (std::size_t c = 0; c < cols_; ++c) {
    std::vector<Int> col(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) col[r] = rows_[r][c];
    t.append(ZnVec(std::move(col), modulus_));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Howell form

Submodule::Submodule(Int modulus, std::size_t ambient_dim)
    : canon_(modulus, ambient_dim), cardinality_(1) {}

Submodule::Submodule(ZnMatrix canon, std::vector<std::size_t> pivots)
    : canon_(std::move(canon)), pivots_(std::move(pivots)), cardinality_(1) {
  const Int n = canon_.modulus();
  unsigned __int128 card = 1;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    card *= static_cast<unsigned __int128>(n / canon_.row(i)[pivots_[i]]);
    if (card > UINT64_MAX) throw InvalidArgument("submodule cardinality overflows 64 bits");
  }
  cardinality_ = static_cast<std::uint64_t>(card);
}

Submodule howell_form(const ZnMatrix& m) {
  const Int n = m.modulus();
  const std::size_t k = m.cols();

  std::vector<std::vector<Int>> work;
  for (const auto& r : m.rows())
    if (!r.is_zero()) work.emplace_back(r.entries().begin(), r.entries().end());

  std::vector<std::vector<Int>> canon;
  std::vector<std::size_t> pivots;

  for (std::size_t col = 0; col < k && !work.empty(); ++col) {
    std::optional<std::size_t> piv;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i][col] == 0) continue;
      if (!piv) {
        piv = i;
        continue;
      }
      // Unimodular 2x2 step: pivot gets gcd, row i gets zero in this column.
      auto& p = work[*piv];
      auto& r = work[i];
      const Int a = p[col], b = r[col];
      const auto [g, s, t] = extended_gcd(a, b);
      const Int ca = a / g, cb = b / g;
      for (std::size_t c = col; c < k; ++c) {
        const Int np = mod_reduce(mulm(s, p[c], n) + mulm(t, r[c], n), n);
        const Int nr = mod_reduce(mulm(-cb, p[c], n) + mulm(ca, r[c], n), n);
        p[c] = np;
        r[c] = nr;
      }
    }
    if (!piv) continue;

    std::vector<Int> p = std::move(work[*piv]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(*piv));

    const Int u = unit_normalizer(Residue(p[col], n)).value();
    for (std::size_t c = col; c < k; ++c) p[c] = mulm(u, p[c], n);
    const Int d = p[col];

    // Multiples of the pivot row that vanish in this column must stay reachable
    // from the later rows (Howell property).
    std::vector<Int> ann(k, 0);
    for (std::size_t c = col; c < k; ++c) ann[c] = mulm(n / d, p[c], n);
    if (!all_zero(ann)) work.push_back(std::move(ann));

    canon.push_back(std::move(p));
    pivots.push_back(col);
    std::erase_if(work, [](const std::vector<Int>& r) { return all_zero(r); });
  }

  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < canon.size(); ++i) {
    const std::size_t pc = pivots[i];
    const Int d = canon[i][pc];
    for (std::size_t j = 0; j < i; ++j) {
      const Int q = canon[j][pc] / d;
      if (q == 0) continue;
      for (std::size_t c = pc; c < k; ++c) canon[j][c] = mod_reduce(canon[j][c] - mulm(q, canon[i][c], n), n);
    }
  }

  ZnMatrix out(n, k);
  for (auto& r : canon) out.append(ZnVec(std::move(r), n));
  return Submodule(std::move(out), std::move(pivots));
}

Submodule span(std::span<const ZnVec> vectors, Int modulus, std::size_t ambient_dim) {
  return howell_form(ZnMatrix(modulus, ambient_dim, {vectors.begin(), vectors.end()}));
}

bool submodule_equal(const Submodule& a, const Submodule& b) {
  if (a.modulus() != b.modulus() || a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("submodules live in different ambient spaces");
  return a == b;
}

bool membership(const ZnVec& x, const Submodule& s) {
  if (x.modulus() != s.modulus() || x.size() != s.ambient_dim())
    throw DimensionMismatch("vector does not live in the submodule's ambient space");
  const Int n = x.modulus();
  std::vector<Int> rest(x.entries().begin(), x.entries().end());
  const auto& rows = s.canon().rows();
  std::size_t next = 0;
  for (std::size_t c = 0; c < rest.size(); ++c) {
    if (next < rows.size() && s.pivots()[next] == c) {
      const auto& row = rows[next++];
      const Int d = row[c];
      if (rest[c] % d != 0) return false;
      const Int q = rest[c] / d;
      for (std::size_t j = c; j < rest.size(); ++j) rest[j] = mod_reduce(rest[j] - mulm(q, row[j], n), n);
    } else if (rest[c] != 0) {
      return false;
    }
  }
  return true;
}

Submodule kernel(const ZnMatrix& rows) {
  const Int n = rows.modulus();
  const std::size_t k = rows.cols();
  const std::size_t t = rows.row_count();
  // Row i of [A^T | I] spans (x A^T, x); the Howell rows with zero A^T-part
  // span exactly {(0, x) : x A^T = 0}.
  ZnMatrix aug(n, t + k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Int> row(t + k, 0);
    for (std::size_t r = 0; r < t; ++r) row[r] = rows.row(r)[i];
    row[t + i] = 1;
    aug.append(ZnVec(std::move(row), n));
  }
  const Submodule h = howell_form(aug);
  ZnMatrix out(n, k);
  for (std::size_t i = 0; i < h.pivots().size(); ++i) {
    if (h.pivots()[i] < t) continue;
    const auto e = h.canon().row(i).entries();
    out.append(ZnVec(std::vector<Int>(e.begin() + static_cast<std::ptrdiff_t>(t), e.end()), n));
  }
  return howell_form(out);
}

Submodule kernel(std::span<const ZnVec> rows, Int modulus, std::size_t ambient_dim) {
  return kernel(ZnMatrix(modulus, ambient_dim, {rows.begin(), rows.end()}));
}

bool is_linearly_independent(const ZnMatrix& rows) {
  if (rows.row_count() == 0) return true;
  // Coefficient vectors c with c*R = 0 are the kernel of R's columns.
  return kernel(rows.transposed()).is_zero();
}

std::vector<ZnVec> enumerate(const Submodule& s, std::uint64_t threshold) {
  if (s.cardinality() > threshold) throw ThresholdExceeded(s.cardinality(), threshold);
  const Int n = s.modulus();
  const std::size_t k = s.ambient_dim();
  const auto& rows = s.canon().rows();

  std::vector<ZnVec> out;
  out.reserve(s.cardinality());
  std::vector<Int> coeff(rows.size(), 0);
  std::vector<Int> bound(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) bound[i] = n / rows[i][s.pivots()[i]];

  while (true) {
    std::vector<Int> acc(k, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t c = 0; c < k; ++c) acc[c] = (acc[c] + mul_mod(coeff[i], rows[i][c], n)) % n;
    out.emplace_back(std::move(acc), n);

    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == bound[i]) coeff[i++] = 0;
    if (i == coeff.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t rank_mod_prime(std::span<const ZnVec> vectors, Int p) {
  if (vectors.empty()) return 0;
  const std::size_t k = vectors.front().size();
  std::vector<std::vector<Int>> a;
  a.reserve(vectors.size());
  for (const auto& v : vectors) {
    std::vector<Int> row(k);
    for (std::size_t c = 0; c < k; ++c) row[c] = v[c] % p;
    a.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < k && rank < a.size(); ++c) {
    std::size_t sel = rank;
    while (sel < a.size() && a[sel][c] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[rank], a[sel]);
    const Int inv = invert(Residue(a[rank][c], p)).value();
    for (auto& x : a[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Int f = a[r][c];
      for (std::size_t j = 0; j < k; ++j) a[r][j] = mod_reduce(a[r][j] - f * a[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

namespace {

bool independent_mod_every_prime(std::span<const ZnVec> vs, const RingSpec& ring) {
  return std::all_of(ring.factors().begin(), ring.factors().end(),
                     [&](const PrimeFactor& f) { return rank_mod_prime(vs, f.prime) == vs.size(); });
}

bool extend_to_basis(std::vector<ZnVec>& chosen, const std::vector<ZnVec>& pool, std::size_t from,
                     const RingSpec& ring, std::size_t k) {
  if (chosen.size() == k) return true;
  for (std::size_t i = from; i + (k - chosen.size()) <= pool.size(); ++i) {
    chosen.push_back(pool[i]);
    if (independent_mod_every_prime(chosen, ring) && extend_to_basis(chosen, pool, i + 1, ring, k))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_basis(std::span<const ZnVec> vectors, const RingSpec& ring, std::size_t k) {
  for (const auto& v : vectors)
    if (v.size() != k || v.modulus() != ring.modulus())
      throw DimensionMismatch("vector does not live in Z_" + std::to_string(ring.modulus()) + "^" +
                              std::to_string(k));
  // k vectors of Z_n^k form a basis iff their determinant is a unit, i.e. they
  // are independent modulo every prime divisor of n.
  if (ring.is_prime_power()) return rank_mod_prime(vectors, ring.prime_power().p) == k;

  std::vector<ZnVec> pool(vectors.begin(), vectors.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  std::erase_if(pool, [](const ZnVec& v) { return v.is_zero(); });
  std::vector<ZnVec> chosen;
  return extend_to_basis(chosen, pool, 0, ring, k);
}

void for_each_vector(Int modulus, std::size_t k, const std::function<void(const ZnVec&)>& f) {
  std::vector<Int> cur(k, 0);
  while (true) {
    f(ZnVec(cur, modulus));
    std::size_t i = k;
    while (i > 0 && ++cur[i - 1] == modulus) cur[--i] = 0;
    if (i == 0) return;
  }
}

std::vector<ZnVec> unit_orbit_representatives(const RingSpec& ring, std::size_t k,
                                              const std::function<bool(const ZnVec&)>& keep,
                                              std::uint64_t threshold) {
  const Int n = ring.modulus();
  const std::uint64_t total = require_enumerable(n, k, threshold);
  const auto us = units(ring);

  auto index_of = [&](const ZnVec& v) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v[i]);
    return idx;
  };

  std::vector<bool> seen(total, false);
  std::vector<ZnVec> reps;
  // Visiting in lexicographic order meets each orbit first at its least member.
  for_each_vector(n, k, [&](const ZnVec& v) {
    const auto idx = index_of(v);
    if (seen[idx] || v.is_zero()) return;
    for (const auto& u : us) seen[index_of(v.scaled(u.value()))] = true;
    if (keep(v)) reps.push_back(v);
  });
  return reps;
}

}  // namespace mincodes
