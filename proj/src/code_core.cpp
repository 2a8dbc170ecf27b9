#include "mincodes/code_core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "mincodes/parallel.hpp"

namespace mincodes {

// ---------------------------------------------------------------------------
// ColumnMultiset / LinearCode

ColumnMultiset::ColumnMultiset(RingSpec ring, std::size_t k, std::vector<ZnVec> columns,
                               ColumnRequirement requirement)
    : ring_(std::move(ring)), k_(k), columns_(std::move(columns)), requirement_(requirement) {
  if (k_ == 0) throw InvalidArgument("message dimension k must be at least 1");
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (columns_[j].size() != k_ || columns_[j].modulus() != ring_.modulus())
      throw DimensionMismatch("column " + std::to_string(j + 1) + " is not a vector of Z_" +
                              std::to_string(ring_.modulus()) + "^" + std::to_string(k_));
  }
  if (requirement_ == ColumnRequirement::ContainsBasis) {
    if (!contains_basis(columns_, ring_, k_))
      throw IndependenceError("columns do not contain " + std::to_string(k_) +
                              " linearly independent vectors of Z_" + std::to_string(ring_.modulus()) +
                              "^" + std::to_string(k_));
  } else if (!kernel(columns_, ring_.modulus(), k_).is_zero()) {
    throw IndependenceError("columns do not span Z_" + std::to_string(ring_.modulus()) + "^" +
                            std::to_string(k_));
  }
}

std::vector<ZnVec> ColumnMultiset::distinct() const {
  std::vector<ZnVec> out;
  for (const auto& c : columns_)
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  return out;
}

ColumnMultiset ColumnMultiset::extended(const std::vector<ZnVec>& extra) const {
  auto cols = columns_;
  cols.insert(cols.end(), extra.begin(), extra.end());
  return {ring_, k_, std::move(cols), requirement_};
}

LinearCode::LinearCode(ColumnMultiset lambda)
    : lambda_(std::move(lambda)),
      generator_(ZnMatrix(lambda_.modulus(), lambda_.k(), lambda_.columns()).transposed()),
      injective_(kernel(lambda_.columns(), lambda_.modulus(), lambda_.k()).is_zero()) {}

// ---------------------------------------------------------------------------
// Support machinery

std::vector<std::size_t> support(const ZnVec& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) out.push_back(i);
  return out;
}

std::size_t weight(const ZnVec& x) { return support(x).size(); }

std::size_t distance(const ZnVec& x, const ZnVec& y) {
  if (x.size() != y.size()) throw DimensionMismatch("distance between vectors of different lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i] ? 1 : 0;
  return d;
}

bool covers(const ZnVec& big, const ZnVec& small) {
  if (big.size() != small.size()) throw DimensionMismatch("cover test on vectors of different lengths");
  for (std::size_t i = 0; i < big.size(); ++i)
    if (small[i] != 0 && big[i] == 0) return false;
  return true;
}

ZnVec encode(const ZnVec& v, const LinearCode& code) {
  if (v.size() != code.dimension() || v.modulus() != code.modulus())
    throw DimensionMismatch("message of length " + std::to_string(v.size()) + " for a code of dimension " +
                            std::to_string(code.dimension()));
  const auto& cols = code.lambda().columns();
  std::vector<Int> out(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) out[j] = inner_product(v, cols[j]);
  return {std::move(out), code.modulus()};
}

OrthogonalColumns orthogonal_columns(const ZnVec& v, const ColumnMultiset& lambda) {
  if (v.size() != lambda.k() || v.modulus() != lambda.modulus())
    throw DimensionMismatch("message does not match the column dimension");
  std::vector<ZnVec> cols;
  for (const auto& c : lambda.distinct())
    if (inner_product(v, c) == 0) cols.push_back(c);
  auto s = span(cols, lambda.modulus(), lambda.k());
  return {std::move(cols), std::move(s)};
}

std::string_view to_string(DecisionMethod m) {
  switch (m) {
    case DecisionMethod::Oracle: return "oracle";
    case DecisionMethod::Criterion: return "criterion";
    case DecisionMethod::Both: return "both";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Definitional oracle

namespace {

/// Every codeword of a code, indexed by message in lexicographic order, with
/// support bitmasks for fast cover tests.
class CodewordTable {
 public:
  CodewordTable(const LinearCode& code, std::uint64_t threshold)
      : code_(code),
        n_(code.modulus()),
        k_(code.dimension()),
        m_(code.length()),
        words_((m_ + 63) / 64),
        count_(require_enumerable(n_, k_, threshold)) {
    codewords_.reserve(count_ * m_);
    masks_.assign(count_ * words_, 0);
    std::size_t idx = 0;
    for_each_vector(n_, k_, [&](const ZnVec& v) {
      const ZnVec c = encode(v, code);
      for (std::size_t j = 0; j < m_; ++j) {
        codewords_.push_back(c[j]);
        if (c[j] != 0) masks_[idx * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
      }
      ++idx;
    });
  }

  std::uint64_t index_of(const ZnVec& v) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < k_; ++i) idx = idx * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(v[i]);
    return idx;
  }

  ZnVec message(std::uint64_t idx) const {
    std::vector<Int> e(k_);
    for (std::size_t i = k_; i-- > 0;) {
      e[i] = static_cast<Int>(idx % static_cast<std::uint64_t>(n_));
      idx /= static_cast<std::uint64_t>(n_);
    }
    return {std::move(e), n_};
  }

  ZnVec codeword(std::uint64_t idx) const {
    const auto* b = codewords_.data() + idx * m_;
    return {std::vector<Int>(b, b + m_), n_};
  }

  bool is_zero(std::uint64_t idx) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (masks_[idx * words_ + w] != 0) return false;
    return true;
  }

  bool covered_by(std::uint64_t small, std::uint64_t big) const {
    for (std::size_t w = 0; w < words_; ++w)
      if ((masks_[small * words_ + w] & ~masks_[big * words_ + w]) != 0) return false;
    return true;
  }

  std::size_t weight_of(std::uint64_t idx) const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < words_; ++i) w += static_cast<std::size_t>(std::popcount(masks_[idx * words_ + i]));
    return w;
  }

  std::size_t unit_entries(std::uint64_t idx) const {
    const auto* b = codewords_.data() + idx * m_;
    return static_cast<std::size_t>(std::count_if(b, b + m_, [&](Int c) { return std::gcd(c, n_) == 1; }));
  }

  bool same_codeword(std::uint64_t a, std::uint64_t b) const {
    return std::equal(codewords_.begin() + static_cast<std::ptrdiff_t>(a * m_),
                      codewords_.begin() + static_cast<std::ptrdiff_t>((a + 1) * m_),
                      codewords_.begin() + static_cast<std::ptrdiff_t>(b * m_));
  }

  std::uint64_t count() const noexcept { return count_; }
  Int modulus() const noexcept { return n_; }
  const LinearCode& code() const noexcept { return code_; }

 private:
  const LinearCode& code_;
  Int n_;
  std::size_t k_;
  std::size_t m_;
  std::size_t words_;
  std::uint64_t count_;
  std::vector<Int> codewords_;
  std::vector<std::uint64_t> masks_;
};

MinimalityReport oracle_check(const CodewordTable& table, const ZnVec& v) {
  if (v.is_zero()) throw InvalidArgument("minimality is defined for nonzero messages only");
  MinimalityReport report;
  report.subject = v;
  report.method = DecisionMethod::Oracle;
  report.injective_encoding = table.code().injective_encoding();
  report.messages_checked = 1;

  const Int n = table.modulus();
  const std::uint64_t iv = table.index_of(v);
  // Indices of a*v; since c(a v) = a c(v) these are the scalar multiples of c(v).
  std::vector<std::uint64_t> multiples;
  for (Int a = 0; a < n; ++a) multiples.push_back(table.index_of(v.scaled(a)));
  std::sort(multiples.begin(), multiples.end());

  auto is_multiple = [&](std::uint64_t j) {
    if (std::binary_search(multiples.begin(), multiples.end(), j)) return true;
    if (table.code().injective_encoding()) return false;
    return std::any_of(multiples.begin(), multiples.end(),
                       [&](std::uint64_t a) { return table.same_codeword(a, j); });
  };

  // The reported witness is the covered non-multiple of largest weight, then
  // with the most unit entries, ties going to the lexicographically least message.
  std::optional<std::uint64_t> best;
  std::pair<std::size_t, std::size_t> best_rank{0, 0};
  for (std::uint64_t j = 1; j < table.count(); ++j) {
    if (table.is_zero(j) || !table.covered_by(j, iv) || is_multiple(j)) continue;
    const std::size_t w = table.weight_of(j);
    if (best && w < best_rank.first) continue;
    const std::pair rank{w, table.unit_entries(j)};
    if (!best || rank > best_rank) {
      best = j;
      best_rank = rank;
    }
  }
  report.verdict = !best.has_value();
  if (best) {
    report.counterexample = Counterexample{v, table.message(*best), table.codeword(*best),
                                           "covered by c(v) but not a scalar multiple of it"};
  }
  return report;
}

}  // namespace

MinimalityReport is_minimal_codeword_oracle(const ZnVec& v, const LinearCode& code, std::uint64_t threshold) {
  if (v.size() != code.dimension() || v.modulus() != code.modulus())
    throw DimensionMismatch("message does not match the code dimension");
  const CodewordTable table(code, threshold);
  return oracle_check(table, v);
}

// ---------------------------------------------------------------------------
// Criterion

MinimalityReport is_minimal_codeword(const ZnVec& v, const LinearCode& code) {
  if (v.size() != code.dimension() || v.modulus() != code.modulus())
    throw DimensionMismatch("message does not match the code dimension");
  if (v.is_zero()) throw InvalidArgument("minimality is defined for nonzero messages only");
  const Int n = code.modulus();
  const std::size_t k = code.dimension();

  MinimalityReport report;
  report.subject = v;
  report.method = DecisionMethod::Criterion;
  report.injective_encoding = code.injective_encoding();
  report.messages_checked = 1;

  auto oc = orthogonal_columns(v, code.lambda());
  Submodule perp = kernel(std::span(&v, 1), n, k);
  report.verdict = oc.span == perp;

  if (!report.verdict) {
    // Any v' in M(v,Λ)-perp outside <v> has c(v') covered by c(v).
    const Submodule cyclic = span(std::span(&v, 1), n, k);
    const Submodule dual = kernel(oc.span.canon());
    for (const auto& g : dual.canon().rows()) {
      if (membership(g, cyclic)) continue;
      report.counterexample = Counterexample{v, g, encode(g, code),
                                             "lies in M(v,L)-perp outside <v>, so c(v) covers it"};
      break;
    }
  }
  report.criterion_evidence = CriterionEvidence{std::move(oc.span), std::move(perp)};
  return report;
}

MinimalityReport is_minimal_code(const LinearCode& code, const MinimalityOptions& options) {
  const RingSpec& ring = code.lambda().ring();
  const std::size_t k = code.dimension();
  require_enumerable(ring.modulus(), k, options.threshold);

  std::vector<ZnVec> messages;
  if (options.full_sweep) {
    for_each_vector(ring.modulus(), k, [&](const ZnVec& v) {
      if (!v.is_zero()) messages.push_back(v);
    });
  } else {
    // O(v,Λ) and v-perp are unchanged by unit scaling of v.
    messages = unit_orbit_representatives(ring, k, [](const ZnVec&) { return true; }, options.threshold);
  }

  const bool use_oracle = options.method != DecisionMethod::Criterion;
  const bool use_criterion = options.method != DecisionMethod::Oracle;
  std::optional<CodewordTable> table;
  if (use_oracle) table.emplace(code, options.threshold);

  std::vector<std::optional<MinimalityReport>> results(messages.size());
  parallel_for(messages.size(), options.workers, [&](std::size_t i) {
    std::optional<MinimalityReport> oracle, criterion;
    if (use_oracle) oracle = oracle_check(*table, messages[i]);
    if (use_criterion) criterion = is_minimal_codeword(messages[i], code);
    if (oracle && criterion && oracle->verdict != criterion->verdict)
      throw std::logic_error("oracle and criterion disagree on a message");
    results[i] = oracle ? std::move(oracle) : std::move(criterion);
  });

  MinimalityReport report;
  report.method = options.method;
  report.injective_encoding = code.injective_encoding();
  report.messages_checked = messages.size();
  report.verdict = true;
  for (std::size_t i = 0; i < messages.size(); ++i) {
    if (results[i]->verdict) continue;
    report.verdict = false;
    report.per_message_failures.push_back(messages[i]);
    if (!report.counterexample) report.counterexample = results[i]->counterexample;
  }
  return report;
}

}  // namespace mincodes
