#include "mincodes/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mincodes/matrix_io.hpp"
#include "mincodes/report.hpp"

namespace mincodes::cli {

namespace {

std::string str(const ZnVec& v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

std::string join(const std::vector<ZnVec>& vs) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : " ") + str(v);
  return out.empty() ? "(none)" : out;
}

void require_single(const CommandConfig& c, bool needs_k) {
  if (c.n.size() != 1) throw InvalidArgument(c.subcommand + " needs exactly one --n");
  if (needs_k && c.k.size() != 1) throw InvalidArgument(c.subcommand + " needs exactly one --k");
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int ring_info(const CommandConfig& c, std::ostream& out) {
  require_single(c, false);
  const RingSpec ring(c.n[0]);
  Json div = divisors(ring.modulus());
  Json j = to_json(ring);
  j["euler_phi"] = euler_phi(ring);
  j["zero_divisors"] = zero_divisors(ring).size();
  j["divisors"] = div;
  j["split_coefficients"] = nullptr;
  if (ring.is_two_primes()) {
    const auto [l1, l2] = split_coefficients(ring);
    j["split_coefficients"] = {l1.value(), l2.value()};
  }
  if (c.output_format == OutputFormat::Json) {
    emit_json(out, j);
    return 0;
  }
  out << "Z_" << ring.modulus() << "  " << ring.shape_name() << '\n';
  out << "factors:";
  for (const auto& f : ring.factors()) out << ' ' << f.prime << '^' << f.exponent;
  out << "\nunits: " << euler_phi(ring) << "\nzero divisors: " << zero_divisors(ring).size() << "\ndivisors:";
  for (Int d : divisors(ring.modulus())) out << ' ' << d;
  out << '\n';
  if (ring.is_two_primes())
    out << "split coefficients: " << j["split_coefficients"][0] << ' ' << j["split_coefficients"][1] << '\n';
  return 0;
}

int perp(const CommandConfig& c, std::ostream& out) {
  require_single(c, false);
  if (!c.vector) throw InvalidArgument("perp needs --v");
  const RingSpec ring(c.n[0]);
  const ZnVec v(*c.vector, ring.modulus());
  const auto cls = classify_root_word(v, ring);
  const auto basis = perp_basis(v, ring);
  const auto generic = kernel(std::vector<ZnVec>{v}, ring.modulus(), v.size());
  const auto from_basis = span(basis.generators, ring.modulus(), v.size());
  const bool agree = submodule_equal(generic, from_basis);
  const auto dp = double_perp(v);

  if (c.output_format == OutputFormat::Json) {
    emit_json(out, {{"ring", to_json(ring)},
                    {"classification", to_json(cls)},
                    {"perp_basis", to_json(basis)},
                    {"kernel", to_json(generic)},
                    {"basis_matches_kernel", agree},
                    {"double_perp", to_json(dp)}});
    return 0;
  }
  out << "v = " << v << " over Z_" << ring.modulus() << '\n';
  out << (cls.is_root ? "root word" : "not a root word");
  if (cls.witness) out << " (annihilated by " << *cls.witness << ")";
  out << '\n';
  if (cls.prime_power_decomposition)
    out << "v = p^" << cls.prime_power_decomposition->r << " * " << cls.prime_power_decomposition->root << '\n';
  out << "perp generators [" << (basis.construction ? to_string(*basis.construction) : "generic-kernel")
      << (basis.claimed_free ? ", free" : "") << "]: " << join(basis.generators) << '\n';
  out << "|v-perp| = " << generic.cardinality() << (agree ? ", matches kernel" : ", DIFFERS from kernel") << '\n';
  out << "double perp: " << join(dp.canon().rows()) << '\n';
  return 0;
}

int construct(const CommandConfig& c, std::ostream& out) {
  require_single(c, false);
  if (!c.recipe) throw InvalidArgument("construct needs --recipe");
  const auto recipe = parse_recipe(*c.recipe);
  if (!recipe) throw InvalidArgument("unknown recipe '" + *c.recipe + "'");
  std::size_t k = c.k.empty() ? 1 : c.k[0];
  if (c.k.size() > 1) throw InvalidArgument("construct needs at most one --k");
  const auto built = build(*recipe, RingSpec(c.n[0]), k);

  if (c.output_format == OutputFormat::Json) {
    emit_json(out, to_json(built));
    return 0;
  }
  if (c.output_format == OutputFormat::Text)
    out << "# " << to_string(built.recipe.name) << " over Z_" << c.n[0] << ", k = " << k << ", length "
        << built.columns.size() << " (predicted " << built.recipe.predicted_length << " from "
        << built.recipe.provenance << ")\n";
  out << format_matrix(built.columns);
  return 0;
}

void print_counterexample(std::ostream& out, const Counterexample& ce) {
  out << "counterexample:\n"
      << "  message v = " << ce.message << '\n'
      << "  covered non-multiple c(v') = " << ce.witness_codeword << " from v' = " << ce.witness_message << '\n'
      << "  " << ce.reason << '\n';
}

int check(const CommandConfig& c, std::ostream& out) {
  if (!c.input_path) throw InvalidArgument("check needs --input");
  const LinearCode code(parse_matrix(*c.input_path));
  MinimalityReport report;
  if (c.vector) {
    const ZnVec v(*c.vector, code.modulus());
    switch (c.method) {
      case DecisionMethod::Oracle: report = is_minimal_codeword_oracle(v, code, c.threshold); break;
      case DecisionMethod::Criterion: report = is_minimal_codeword(v, code); break;
      case DecisionMethod::Both: {
        report = is_minimal_codeword(v, code);
        if (is_minimal_codeword_oracle(v, code, c.threshold).verdict != report.verdict)
          throw std::logic_error("oracle and criterion disagree on " + str(v));
        report.method = DecisionMethod::Both;
        break;
      }
    }
  } else {
    report = is_minimal_code(code, {c.method, c.full_sweep, c.workers, c.threshold});
  }

  if (c.output_format == OutputFormat::Json) {
    Json j = to_json(report);
    j["code"] = to_json(code.lambda());
    emit_json(out, j);
  } else {
    out << "code over Z_" << code.modulus() << ": k = " << code.dimension() << ", m = " << code.length() << '\n';
    if (report.subject) out << "codeword of v = " << *report.subject << '\n';
    out << "verdict: " << (report.verdict ? "minimal" : "not minimal") << " (" << to_string(report.method)
        << ", " << report.messages_checked << " messages)\n";
    if (!report.per_message_failures.empty()) out << "failing messages: " << join(report.per_message_failures) << '\n';
    if (report.counterexample) print_counterexample(out, *report.counterexample);
  }
  return report.verdict ? 0 : 2;
}

int bounds(const CommandConfig& c, std::ostream& out) {
  if (c.n.empty() || c.k.empty()) throw InvalidArgument("bounds needs --n and --k");
  std::vector<BoundsReport> rows;
  for (Int n : c.n)
    for (auto k : c.k) rows.push_back(bounds_report(RingSpec(n), k, c.threshold));

  if (c.output_format == OutputFormat::Csv) {
    out << bounds_csv(rows);
  } else if (c.output_format == OutputFormat::Json) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    emit_json(out, rows.size() == 1 ? arr[0] : arr);
  } else {
    for (const auto& r : rows) {
      out << "Z_" << r.ring.modulus() << ", k = " << r.k << '\n';
      out << "  lower bound (exact): " << r.lower_bound_exact;
      if (r.lower_bound_quotient) out << " = ceil(" << format_quotient(*r.lower_bound_quotient) << ")";
      out << '\n';
      if (r.lower_bound_closed_form)
        out << "  closed form: " << r.lower_bound_closed_form->expression << " = "
            << format_quotient(r.lower_bound_closed_form->value) << ", i.e. m >= "
            << r.lower_bound_closed_form->implied << '\n';
      out << "  upper bound: " << r.upper_bound << " [" << r.upper_bound_source << "]\n";
      if (r.projective_bound) out << "  root words mod units: " << *r.projective_bound << '\n';
      out << "  root words: " << r.root_words;
      if (r.root_words_formula) out << " (closed form " << *r.root_words_formula << ")";
      out << ", non-root nonzero: " << r.non_root_words << ", |v-perp| for a root word: " << r.root_perp_size << '\n';
      for (const auto& note : r.notes) out << "  note: " << note << '\n';
    }
  }
  return 0;
}

int search(const CommandConfig& c, std::ostream& out) {
  if (c.n.empty() || c.k.empty()) throw InvalidArgument("search-mmin needs --n and --k");
  if (c.m_cap == 0) throw InvalidArgument("search-mmin needs --m-cap");
  std::vector<SearchReport> rows;
  std::vector<std::optional<MonotonicityResult>> mono;
  for (Int n : c.n)
    for (auto k : c.k) {
      rows.push_back(search_m_min(RingSpec(n), k, c.m_cap, {c.unit_constraint, c.root_words_only}, c.workers,
                                  c.threshold));
      mono.push_back(c.monotonicity && rows.back().witness
                         ? std::optional(monotonicity_check(rows.back(), c.monotonicity))
                         : std::nullopt);
    }

  if (c.output_format == OutputFormat::Csv) {
    out << search_csv(rows);
  } else if (c.output_format == OutputFormat::Json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Json j = to_json(rows[i], c.timing);
      if (mono[i]) j["monotonicity"] = to_json(*mono[i]);
      arr.push_back(j);
    }
    emit_json(out, rows.size() == 1 ? arr[0] : arr);
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      out << "Z_" << r.ring.modulus() << ", k = " << r.k << ": ";
      if (r.m_min)
        out << "m_min = " << *r.m_min << '\n' << "  witness: " << join(r.witness->columns()) << '\n';
      else
        out << "no minimal code with m in [" << r.searched_from << ", " << r.searched_to << "]\n";
      out << "  " << r.stats.candidates << " column classes, " << r.stats.examined << " subsets examined, "
          << r.stats.pruned << " pruned";
      if (c.timing) out << ", " << r.stats.wall_time.count() << " ms";
      out << '\n';
      if (mono[i]) {
        out << "  monotonicity:";
        for (const auto& [m, ok] : mono[i]->per_length) out << " m=" << m << (ok ? " ok" : " FAIL");
        out << '\n';
      }
    }
  }
  return 0;
}

}  // namespace

std::uint64_t default_threshold() {
  const char* env = std::getenv(kThresholdEnv);
  if (env == nullptr || *env == '\0') return kDefaultEnumerationThreshold;
  std::uint64_t value = 0;
  const std::string_view s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value == 0)
    throw InvalidArgument(std::string(kThresholdEnv) + " must be a positive integer, got '" + env + "'");
  return value;
}

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.threshold == 0) throw InvalidArgument("threshold must be at least 1");
    if (config.workers == 0) throw InvalidArgument("workers must be at least 1");
    const auto& s = config.subcommand;
    if (config.output_format == OutputFormat::Csv && s != "bounds" && s != "search-mmin")
      throw InvalidArgument("csv output is only available for bounds and search-mmin");
    if (config.output_format == OutputFormat::Matrix && s != "construct")
      throw InvalidArgument("matrix output is only available for construct");
    if (s == "ring-info") return ring_info(config, out);
    if (s == "perp") return perp(config, out);
    if (s == "construct") return construct(config, out);
    if (s == "check") return check(config, out);
    if (s == "bounds") return bounds(config, out);
    if (s == "search-mmin") return search(config, out);
    throw InvalidArgument("unknown subcommand '" + s + "'");
  } catch (const ThresholdExceeded& e) {
    err << "error: threshold exceeded: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CommandConfig config;
  try {
    config.threshold = default_threshold();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  CLI::App app{"Minimal linear codes over Z_n"};
  app.require_subcommand(1, 1);
  std::string format = "text";
  std::string method = "criterion";

  auto common = [&](CLI::App* sub, bool multi) {
    auto* n = sub->add_option("--n", config.n, "modulus")->required()->check(CLI::Range(Int{2}, Int{1} << 40));
    auto* k = sub->add_option("--k", config.k, "dimension")->check(CLI::PositiveNumber);
    if (multi) {
      n->delimiter(',');
      k->delimiter(',');
    } else {
      n->expected(1);
      k->expected(1);
    }
    return k;
  };
  auto output = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
    sub->add_flag_callback("--json", [&] { format = "json"; }, "shorthand for --format json");
  };
  auto limits = [&](CLI::App* sub) {
    sub->add_option("--threshold", config.threshold, "enumeration cap (default $MINCODES_THRESHOLD or 1000000)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--workers", config.workers, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* ring_info = app.add_subcommand("ring-info", "factorization and unit structure of Z_n");
  common(ring_info, false);
  output(ring_info, {"text", "json"});

  auto* perp = app.add_subcommand("perp", "root-word classification and v-perp generators");
  common(perp, false);
  perp->add_option("--v", config.vector, "vector, comma separated")->required()->delimiter(',');
  output(perp, {"text", "json"});

  auto* construct = app.add_subcommand("construct", "emit a construction as a column matrix");
  common(construct, false);
  construct->add_option("--recipe", config.recipe, "lambda0, lambda0-bi, onedim-naive, onedim-gcd, root-words")
      ->required();
  output(construct, {"text", "json", "matrix"});

  auto* check = app.add_subcommand("check", "decide minimality of a code read from a matrix file");
  check->add_option("--input", config.input_path, "matrix file")->required()->check(CLI::ExistingFile);
  check->add_option("--v", config.vector, "check only the codeword of this message")->delimiter(',');
  check->add_option("--method", method, "criterion, oracle or both")
      ->check(CLI::IsMember({"criterion", "oracle", "both"}));
  check->add_flag("--full-sweep", config.full_sweep, "check every nonzero message, not one per unit orbit");
  output(check, {"text", "json"});
  limits(check);

  auto* bounds = app.add_subcommand("bounds", "lower and upper bounds on m(k; n)");
  common(bounds, true)->required();
  output(bounds, {"text", "json", "csv"});
  limits(bounds);

  auto* search = app.add_subcommand("search-mmin", "exhaustive search for m(k; n)");
  common(search, true)->required();
  search->add_option("--m-cap", config.m_cap, "largest length to try")->required()->check(CLI::PositiveNumber);
  search->add_flag("--no-unit-constraint{false}", config.unit_constraint,
                   "only require the columns to span Z_n^k (k = 1: no unit needed)");
  search->add_flag("--root-words-only", config.root_words_only, "draw columns from root words only");
  search->add_option("--monotonicity", config.monotonicity, "also verify lengths m_min+1 .. m_min+E");
  search->add_flag("--timing", config.timing, "report wall time (output is then run-dependent)");
  output(search, {"text", "json", "csv"});
  limits(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  if (format == "json") config.output_format = OutputFormat::Json;
  else if (format == "csv") config.output_format = OutputFormat::Csv;
  else if (format == "matrix") config.output_format = OutputFormat::Matrix;
  if (method == "oracle") config.method = DecisionMethod::Oracle;
  else if (method == "both") config.method = DecisionMethod::Both;
  return run(config, out, err);
}

}  // namespace mincodes::cli
