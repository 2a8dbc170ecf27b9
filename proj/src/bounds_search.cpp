#include "mincodes/bounds_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "mincodes/parallel.hpp"
#include "mincodes/perp_structures.hpp"

namespace mincodes {

Int ceil_of(const Quotient& q) {
  const Int num = q.numerator(), den = q.denominator();  // den > 0
  Int c = num / den;
  if (num % den != 0 && num > 0) ++c;
  return c;
}

std::uint64_t incidence_sum(const ColumnMultiset& lambda, std::uint64_t threshold) {
  require_enumerable(lambda.modulus(), lambda.k(), threshold);
  std::uint64_t total = 0;
  for_each_vector(lambda.modulus(), lambda.k(), [&](const ZnVec& v) {
    if (v.is_zero()) return;
    for (const auto& a : lambda.columns())
      if (inner_product(v, a) == 0) ++total;
  });
  return total;
}

UpperBound upper_bound(const RingSpec& ring, std::size_t k) {
  if (k == 0) throw InvalidArgument("dimension k must be at least 1");
  if (k == 1) {
    auto c = onedim_gcd(ring);
    return {c.recipe.predicted_length, std::move(c)};
  }
  if (ring.is_prime_power()) {
    auto c = build(Recipe::Lambda0, ring, k);
    return {c.recipe.predicted_length, std::move(c)};
  }
  if (ring.is_two_primes()) {
    auto c = build(Recipe::Lambda0Bi, ring, k);
    return {c.recipe.predicted_length, std::move(c)};
  }
  throw ShapeMismatch("no upper bound construction for " + ring.shape_name() + " with k >= 2");
}

namespace {

/// Proper ideals (d), 1 < d < n, that are not the sum of the ideals strictly inside them.
Int join_irreducible_ideals(Int n) {
  Int count = 0;
  for (Int d : divisors(n)) {
    if (d == 1 || d == n) continue;
    Int g = n;
    for (Int e : divisors(n))
      if (e != d && e % d == 0) g = gcd(g, e);
    if (g != d) ++count;
  }
  return count;
}

std::optional<ClosedFormBound> closed_form(const RingSpec& ring, std::size_t k) {
  const Int kk = static_cast<Int>(k);
  if (const auto* pp = std::get_if<PrimePower>(&ring.shape())) {
    const Int p = pp->p;
    const int l = pp->l;
    if (k == 2 && l >= 2) {
      const Int rhs = ipow(p, l) + ipow(p, l - 2) + 1;
      return ClosedFormBound{"m > p^l + p^(l-2) + 1", Quotient(rhs), true, rhs + 1};
    }
    if (k >= 3 && static_cast<std::size_t>(l) >= k) {
      const Int rhs = (kk - 1) * ipow(p, l) + ipow(p, l - static_cast<int>(k));
      return ClosedFormBound{"m > (k-1)p^l + p^(l-k)", Quotient(rhs), true, rhs + 1};
    }
    return std::nullopt;
  }
  if (const auto* tp = std::get_if<TwoPrimes>(&ring.shape())) {
    if (k < 2) return std::nullopt;
    const Int p1 = tp->p1, p2 = tp->p2;
    const int ki = static_cast<int>(k);
    const Int root = ipow(p1 * p2, ki) - ipow(p2 - 1, ki) - ipow(p1 - 1, ki) - 1;
    const Int num = root * (kk - 1) + (ipow(p2 - 1, ki) + ipow(p1 - 1, ki)) * kk;
    const Quotient q(num, ipow(p1 * p2, ki - 1) - 1);
    return ClosedFormBound{
        "m >= ((p1p2)^k - (p2-1)^k - (p1-1)^k - 1)(k-1) + ((p2-1)^k + (p1-1)^k)k) / ((p1p2)^(k-1) - 1)", q, false,
        ceil_of(q)};
  }
  return std::nullopt;
}

std::string to_text(const Quotient& q) {
  return q.denominator() == 1 ? std::to_string(q.numerator())
                              : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace

BoundsReport bounds_report(const RingSpec& ring, std::size_t k, std::uint64_t threshold) {
  if (k == 0) throw InvalidArgument("dimension k must be at least 1");
  if (k >= 2 && !ring.is_prime_power() && !ring.is_two_primes())
    throw ShapeMismatch("bounds need a prime power or a product of two primes, got " + ring.shape_name());

  const auto up = upper_bound(ring, k);
  const auto counts = count_root_words(ring, k, threshold);
  const std::uint64_t total = *checked_power(ring.modulus(), k) - 1;
  const auto E = kernel(std::vector<ZnVec>{ZnVec::unit_vector(k, 0, ring.modulus())}, ring.modulus(), k).cardinality();

  BoundsReport r{ring,
                 k,
                 up.length,
                 std::string(to_string(up.witness.recipe.name)) + ": " + up.witness.recipe.provenance,
                 std::nullopt,
                 0,
                 std::nullopt,
                 std::nullopt,
                 counts.count,
                 total - counts.count,
                 E,
                 counts.formula_count,
                 {}};

  if (k == 1) {
    r.lower_bound_exact = join_irreducible_ideals(ring.modulus()) + 1;
    r.notes.push_back("k = 1: double-counting quotient undefined; exact bound counts ideals that need their own "
                      "generator, plus one unit");
  } else {
    r.projective_bound = static_cast<Int>(root_words_mod_units(ring, k, threshold).size());
    const auto kk = static_cast<Int>(k);
    const Quotient q(static_cast<Int>(r.root_words) * (kk - 1) + static_cast<Int>(r.non_root_words) * kk,
                     static_cast<Int>(E) - 1);
    r.lower_bound_quotient = q;
    r.lower_bound_exact = ceil_of(q);
  }

  if (counts.formula_count && *counts.formula_count != counts.count)
    r.notes.push_back("root-word closed form gives " + std::to_string(*counts.formula_count) + ", enumeration gives " +
                      std::to_string(counts.count) + "; enumerated count used");

  r.lower_bound_closed_form = closed_form(ring, k);
  if (r.lower_bound_closed_form) {
    const auto& cf = *r.lower_bound_closed_form;
    if (cf.implied > r.upper_bound)
      r.notes.push_back("closed form " + cf.expression + " = " + to_text(cf.value) + " implies m >= " +
                        std::to_string(cf.implied) + ", contradicting the construction of length " +
                        std::to_string(r.upper_bound) + "; the exact quotient bound is authoritative");
  } else if (k >= 2) {
    r.notes.push_back("closed-form lower bound not well defined here (negative exponent)");
  }
  if (r.lower_bound_exact > r.upper_bound)
    r.notes.push_back("exact lower bound exceeds the upper bound");
  return r;
}

namespace {

struct TaskResult {
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
  std::optional<std::vector<std::size_t>> witness;
};

struct SearchContext {
  const RingSpec& ring;
  std::size_t k;
  std::size_t m;
  const std::vector<ZnVec>& candidates;
  const std::vector<std::uint64_t>& orth_masks;  // per message
  const std::vector<std::uint64_t>& perp_sizes;  // per message
  bool require_basis;
  std::uint64_t full_size;
};

class SubsetSearch {
 public:
  SubsetSearch(const SearchContext& ctx, const std::atomic<std::size_t>& best)
      : ctx_(ctx), best_(best), caches_(ctx.orth_masks.size()) {
    for (std::size_t i = 0; i < ctx.orth_masks.size(); ++i) order_.push_back(i);
  }

  TaskResult run(std::size_t first) {
    TaskResult out;
    chosen_ = {first};
    if (extend(first + 1, out)) out.witness = chosen_;
    return out;
  }

 private:
  bool cancelled(std::size_t first) const { return best_.load(std::memory_order_relaxed) < first; }

  bool extend(std::size_t next, TaskResult& out) {
    if (cancelled(chosen_.front())) return false;
    if (chosen_.size() == ctx_.m) {
      ++out.examined;
      return accepts();
    }
    std::vector<ZnVec> cols;
    for (auto i : chosen_) cols.push_back(ctx_.candidates[i]);
    const std::size_t remaining = ctx_.m - chosen_.size();
    for (const auto& f : ctx_.ring.factors())
      if (rank_mod_prime(cols, f.prime) + remaining < ctx_.k) {
        ++out.pruned;
        return false;
      }
    for (std::size_t j = next; j + remaining <= ctx_.candidates.size(); ++j) {
      chosen_.push_back(j);
      if (extend(j + 1, out)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  bool accepts() {
    std::vector<ZnVec> cols;
    std::uint64_t mask = 0;
    for (auto i : chosen_) {
      cols.push_back(ctx_.candidates[i]);
      mask |= std::uint64_t{1} << i;
    }
    if (ctx_.require_basis) {
      if (!contains_basis(cols, ctx_.ring, ctx_.k)) return false;
    } else if (span(cols, ctx_.ring.modulus(), ctx_.k).cardinality() != ctx_.full_size) {
      return false;
    }
    for (std::size_t pos = 0; pos < order_.size(); ++pos) {
      const std::size_t msg = order_[pos];
      if (!message_ok(msg, mask & ctx_.orth_masks[msg])) {
        // Failing messages tend to fail again on neighbouring subsets.
        std::rotate(order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(pos),
                    order_.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
        return false;
      }
    }
    return true;
  }

  bool message_ok(std::size_t msg, std::uint64_t mask) {
    auto& cache = caches_[msg];
    if (auto it = cache.find(mask); it != cache.end()) return it->second;
    std::vector<ZnVec> cols;
    for (std::uint64_t b = mask; b != 0; b &= b - 1) cols.push_back(ctx_.candidates[std::countr_zero(b)]);
    const bool ok = span(cols, ctx_.ring.modulus(), ctx_.k).cardinality() == ctx_.perp_sizes[msg];
    cache.emplace(mask, ok);
    return ok;
  }

  const SearchContext& ctx_;
  const std::atomic<std::size_t>& best_;
  std::vector<std::unordered_map<std::uint64_t, bool>> caches_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

SearchReport search_m_min(const RingSpec& ring, std::size_t k, std::size_t m_cap, const SearchConstraints& constraints,
                          unsigned workers, std::uint64_t threshold) {
  const auto start = std::chrono::steady_clock::now();
  if (k == 0) throw InvalidArgument("dimension k must be at least 1");
  if (m_cap < k) throw InvalidArgument("m_cap must be at least k");
  const Int n = ring.modulus();
  const std::uint64_t full_size = require_enumerable(n, k, threshold);

  const auto candidates = unit_orbit_representatives(
      ring, k, [&](const ZnVec& v) { return !constraints.root_words_only || is_root_word(v); }, threshold);
  if (candidates.size() > 64)
    throw InvalidArgument(std::to_string(candidates.size()) + " candidate column classes; the search supports 64");

  std::vector<std::uint64_t> orth_masks, perp_sizes;
  for (const auto& v : unit_orbit_representatives(ring, k, [](const ZnVec&) { return true; }, threshold)) {
    const auto perp = kernel(std::vector<ZnVec>{v}, n, k);
    if (perp.is_zero()) continue;  // M(v, Λ) = 0 = v-perp for every Λ
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (inner_product(v, candidates[i]) == 0) mask |= std::uint64_t{1} << i;
    orth_masks.push_back(mask);
    perp_sizes.push_back(perp.cardinality());
  }

  SearchReport report{ring, k, m_cap, constraints, std::nullopt, std::nullopt, k, k, {}};
  report.stats.candidates = candidates.size();
  const std::size_t top = std::min(m_cap, candidates.size());

  for (std::size_t m = k; m <= top; ++m) {
    report.searched_to = m;
    const SearchContext ctx{ring, k, m, candidates, orth_masks, perp_sizes, constraints.require_basis, full_size};
    const std::size_t tasks = candidates.size() - m + 1;
    std::vector<TaskResult> results(tasks);
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    parallel_for(tasks, workers, [&](std::size_t first) {
      if (best.load() < first) return;
      SubsetSearch search(ctx, best);
      results[first] = search.run(first);
      if (results[first].witness) {
        auto cur = best.load();
        while (first < cur && !best.compare_exchange_weak(cur, first)) {
        }
      }
    });
    // Stats are merged in task order up to the first witness so they do not
    // depend on the worker count.
    for (auto& r : results) {
      report.stats.examined += r.examined;
      report.stats.pruned += r.pruned;
      if (r.witness) {
        std::vector<ZnVec> cols;
        for (auto i : *r.witness) cols.push_back(candidates[i]);
        report.m_min = m;
        report.witness = ColumnMultiset(ring, k, std::move(cols),
                                        constraints.require_basis ? ColumnRequirement::ContainsBasis
                                                                  : ColumnRequirement::Spanning);
        break;
      }
    }
    if (report.m_min) break;
  }
  if (top < k) report.searched_to = k - 1;
  report.stats.wall_time =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

MonotonicityResult monotonicity_check(const SearchReport& base, std::size_t extra) {
  MonotonicityResult out;
  if (extra == 0) return out;
  if (!base.witness || !base.m_min) throw InvalidArgument("monotonicity check needs a search report with a witness");
  const auto e1 = ZnVec::unit_vector(base.k, 0, base.ring.modulus());
  for (std::size_t add = 1; add <= extra; ++add) {
    const LinearCode code(base.witness->extended(std::vector<ZnVec>(add, e1)));
    const bool ok = is_minimal_code(code).verdict;
    out.per_length.emplace_back(*base.m_min + add, ok);
    out.holds = out.holds && ok;
  }
  return out;
}

}  // namespace mincodes
