// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "mincodes/bounds_search.hpp"
#include "mincodes/perp_structures.hpp"
#include "oracles.hpp"

using namespace mincodes;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  Outcome& o;
  void operator()(bool ok, const std::string& what) {
    if (ok || !o.pass) return;
    o.pass = false;
    o.detail = what;
  }
};

std::string str_of(const ZnVec& v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

bool minimal_both(const LinearCode& code) {
  const bool a = is_minimal_code(code, {DecisionMethod::Oracle, true}).verdict;
  const bool b = is_minimal_code(code, {DecisionMethod::Criterion, true}).verdict;
  return a && b;
}

struct BatteryEntry {
  std::string label;
  ColumnMultiset lambda;
};

/// Constructions, {e_1..e_k}-style failing codes and 200 random Λ per ring.
std::vector<BatteryEntry> battery() {
  std::vector<BatteryEntry> out;
  std::mt19937_64 rng(20240611);
  for (Int n : {4, 6, 8, 9, 12})
    for (std::size_t k : {1u, 2u, 3u}) {
      if (ipow(n, static_cast<int>(k)) > 1000000) continue;
      const RingSpec ring(n);
      const std::string tag = "Z_" + std::to_string(n) + "^" + std::to_string(k);
      if (k == 1) {
        out.push_back({tag + " onedim-gcd", onedim_gcd(ring).columns});
        out.push_back({tag + " onedim-naive", onedim_naive(ring).columns});
      } else if (ring.is_prime_power()) {
        out.push_back({tag + " lambda0", build(Recipe::Lambda0, ring, k).columns});
      } else if (ring.is_two_primes()) {
        out.push_back({tag + " lambda0-bi", build(Recipe::Lambda0Bi, ring, k).columns});
      }
      std::vector<ZnVec> basis;
      for (std::size_t i = 0; i < k; ++i) basis.push_back(ZnVec::unit_vector(k, i, n));
      out.push_back({tag + " standard basis", ColumnMultiset(ring, k, basis)});

      std::uniform_int_distribution<std::size_t> extra(0, 4 * k + 4);
      for (int made = 0; made < 200;) {
        std::vector<ZnVec> cols;
        for (std::size_t i = k + extra(rng); i > 0; --i) cols.emplace_back(oracle::random_vector(rng, n, k), n);
        try {
          out.push_back({tag + " random #" + std::to_string(made), ColumnMultiset(ring, k, cols)});
          ++made;
        } catch (const IndependenceError&) {
        }
      }
    }
  return out;
}

Outcome criterion1() {
  Outcome o;
  Check check{o};
  const auto c = lambda0_prime_power(2, 2, 2);
  check(c.columns.size() == 6 && c.recipe.predicted_length == 6, "length is not 6");
  check(minimal_both(LinearCode(c.columns)), "not minimal under both deciders");
  o.detail = o.pass ? "Lambda0 over Z_4, k=2: length 6, minimal (oracle and criterion)" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  Check check{o};
  const auto c = lambda0_two_primes(2, 3, 2);
  check(c.columns.size() == 12 && c.recipe.predicted_length == 12, "length is not 12");
  check(minimal_both(LinearCode(c.columns)), "not minimal under both deciders");
  o.detail = o.pass ? "Lambda0' over Z_6, k=2: length 12, minimal (oracle and criterion)" : o.detail;
  return o;
}

Outcome criterion3(const std::vector<BatteryEntry>& codes) {
  Outcome o;
  Check check{o};
  std::uint64_t messages = 0, non_minimal = 0;
  for (const auto& [label, lambda] : codes) {
    const LinearCode code(lambda);
    const auto a = is_minimal_code(code, {DecisionMethod::Oracle, true});
    const auto b = is_minimal_code(code, {DecisionMethod::Criterion, true});
    check(a.per_message_failures == b.per_message_failures, "verdicts differ on " + label);
    messages += a.messages_checked;
    non_minimal += a.per_message_failures.size();
  }
  if (o.pass) {
    std::ostringstream s;
    s << codes.size() << " codes, " << messages << " messages (" << non_minimal
      << " non-minimal codewords): verdicts agree on all";
    o.detail = s.str();
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  Check check{o};
  std::uint64_t vectors = 0;
  for (const auto& [n, k] : std::vector<std::pair<Int, std::size_t>>{{4, 2}, {4, 3}, {8, 2}, {9, 2}, {6, 2}, {6, 3}}) {
    const RingSpec ring(n);
    for_each_vector(n, k, [&](const ZnVec& v) {
      if (v.is_zero()) return;
      ++vectors;
      const std::string at = str_of(v) + " over Z_" + std::to_string(n);
      const auto basis = perp_basis(v, ring);
      const auto generic = kernel(std::vector<ZnVec>{v}, n, k);
      check(submodule_equal(span(basis.generators, n, k), generic), "span(basis) != kernel at " + at);
      check(submodule_equal(double_perp(v), span(std::vector<ZnVec>{v}, n, k)), "double perp != <v> at " + at);

      const auto size = generic.cardinality();
      check(size == oracle::kernel({std::vector<Int>(v.entries().begin(), v.entries().end())}, n, k).size(),
            "kernel cardinality disagrees with enumeration at " + at);
      const int ki = static_cast<int>(k);
      std::uint64_t expected = 0;
      if (const auto* pp = std::get_if<PrimePower>(&ring.shape())) {
        const auto cls = classify_root_word(v, ring);
        const int r = cls.prime_power_decomposition ? static_cast<int>(cls.prime_power_decomposition->r) : 0;
        expected = static_cast<std::uint64_t>(ipow(pp->p, pp->l * (ki - 1) + r));
      } else {
        const auto [p1, p2] = ring.two_primes();
        switch (*basis.construction) {
          case PerpConstruction::TwoPrimesP1Multiples:
            expected = static_cast<std::uint64_t>(ipow(p1, ki) * ipow(p2, ki - 1));
            break;
          case PerpConstruction::TwoPrimesP2Multiples:
            expected = static_cast<std::uint64_t>(ipow(p2, ki) * ipow(p1, ki - 1));
            break;
          default: expected = static_cast<std::uint64_t>(ipow(p1 * p2, ki - 1));
        }
      }
      check(size == expected, "cardinality formula fails at " + at);
    });
  }
  if (o.pass) o.detail = std::to_string(vectors) + " vectors: explicit perp bases, double perps and cardinalities all match";
  return o;
}

Outcome criterion5(std::vector<SearchReport>& cells) {
  Outcome o;
  Check check{o};
  const RingSpec ring(4);
  const auto s = search_m_min(ring, 2, 6);
  const auto b = bounds_report(ring, 2);
  check(s.m_min == std::optional<std::size_t>(6), "search did not give m_min = 6");
  check(b.lower_bound_quotient == Quotient(6) && b.lower_bound_exact == 6, "exact lower bound is not 6");
  check(b.upper_bound == 6, "upper bound is not 6");
  check(ipow(2, 2) + ipow(2, 1) == 6, "p^l + p^(l-1) != 6");
  if (s.m_min) cells.push_back(s);
  if (o.pass) o.detail = "m(2;4) = 6 = exact lower bound = upper bound = p^l + p^(l-1)";
  return o;
}

Outcome criterion6(std::vector<SearchReport>& cells) {
  Outcome o;
  Check check{o};
  const auto s = search_m_min(RingSpec(8), 1, 4, {true, false});
  check(s.m_min == std::optional<std::size_t>(3), "m(1;8) is not 3");
  const auto g = onedim_gcd(RingSpec(12));
  const auto naive = onedim_naive(RingSpec(12));
  check(g.columns.size() == 4, "onedim_gcd(Z_12) length is not 4");
  check(is_minimal_code(LinearCode(g.columns)).verdict, "onedim_gcd(Z_12) is not minimal");
  check(naive.columns.size() == 5, "onedim_naive(Z_12) length is not 5");
  if (s.m_min) cells.push_back(s);
  if (o.pass) o.detail = "m(1;8) = 3; onedim_gcd(Z_12) has length 4 < 5 and is minimal";
  return o;
}

Outcome criterion7(const std::vector<BatteryEntry>& codes) {
  Outcome o;
  Check check{o};
  std::size_t tested = 0;
  std::vector<ColumnMultiset> extra;
  for (Int n : {4, 8})
    for (std::size_t k : {1u, 2u, 3u}) extra.push_back(root_words_construction(RingSpec(n), k).columns);
  auto test = [&](const std::string& label, const ColumnMultiset& lambda) {
    const Int n = lambda.modulus();
    if (n != 4 && n != 8) return;
    if (!std::all_of(lambda.columns().begin(), lambda.columns().end(), [](const ZnVec& a) { return is_root_word(a); }))
      return;
    ++tested;
    const auto [p, l] = lambda.ring().prime_power();
    const auto per_column = static_cast<std::uint64_t>(ipow(p, l * static_cast<int>(lambda.k() - 1)) - 1);
    check(incidence_sum(lambda) == lambda.size() * per_column, "identity fails on " + label);
  };
  for (const auto& [label, lambda] : codes) test(label, lambda);
  for (const auto& lambda : extra) test("root words over Z_" + std::to_string(lambda.modulus()), lambda);
  check(tested > 0, "no all-root-word codes in the battery");
  if (o.pass) o.detail = std::to_string(tested) + " all-root-word codes over Z_4 and Z_8 satisfy the identity";
  return o;
}

Outcome criterion8(const std::vector<SearchReport>& cells) {
  Outcome o;
  Check check{o};
  check(!cells.empty(), "no completed search cells");
  for (const auto& s : cells) {
    const auto m = monotonicity_check(s, 3);
    check(m.holds && m.per_length.size() == 3,
          "padding fails over Z_" + std::to_string(s.ring.modulus()) + ", k=" + std::to_string(s.k));
  }
  if (o.pass) o.detail = std::to_string(cells.size()) + " search cells: minimal codes at m_min+1 .. m_min+3";
  return o;
}

Outcome criterion9() {
  Outcome o;
  Check check{o};
  const auto b = bounds_report(RingSpec(6), 2);
  check(b.root_words == 24, "enumerated root-word count for Z_6^2 is not 24");
  check(b.root_words_formula == std::optional<std::uint64_t>(30), "closed-form root-word count is not 30");
  const auto mentions = [](const BoundsReport& r, const std::string& s) {
    return std::any_of(r.notes.begin(), r.notes.end(), [&](const std::string& n) { return n.find(s) != std::string::npos; });
  };
  check(mentions(b, "30") && mentions(b, "24"), "report does not show both counts");
  const Quotient from_enumeration(static_cast<Int>(b.root_words * 1 + b.non_root_words * 2),
                                  static_cast<Int>(b.root_perp_size - 1));
  check(b.lower_bound_quotient == from_enumeration, "lower bound does not use the enumerated count");

  const auto z4 = bounds_report(RingSpec(4), 2);
  check(z4.lower_bound_closed_form && z4.lower_bound_closed_form->strict &&
            z4.lower_bound_closed_form->implied > z4.upper_bound,
        "strict closed form at Z_4, k=2 does not exceed the construction");
  check(mentions(z4, "contradicting"), "strict-inequality conflict not flagged in notes");
  if (o.pass) o.detail = "Z_6^2 root words: 24 enumerated vs 30 closed form; Z_4, k=2 strict bound conflict flagged";
  return o;
}

}  // namespace

int main() {
  std::cout << std::unitbuf;
  using clock = std::chrono::steady_clock;
  std::vector<SearchReport> cells;
  std::vector<BatteryEntry> codes;
  bool all = true;

  auto run = [&](int id, double limit_s, const std::function<Outcome()>& f) {
    const auto t0 = clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    if (o.pass && secs > limit_s) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s limit)";
    }
    all = all && o.pass;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " [" << std::fixed << std::setprecision(2)
              << secs << " s] " << o.detail << '\n';
  };

  run(1, 1, criterion1);
  run(2, 1, criterion2);
  run(3, 300, [&] {
    codes = battery();
    return criterion3(codes);
  });
  run(4, 300, criterion4);
  run(5, 30, [&] { return criterion5(cells); });
  run(6, 5, [&] { return criterion6(cells); });
  run(7, 60, [&] { return criterion7(codes); });
  run(8, 60, [&] { return criterion8(cells); });
  run(9, 60, criterion9);
  return all ? 0 : 1;
}
