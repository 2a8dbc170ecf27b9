#include "mincodes/report.hpp"

#include <sstream>

namespace mincodes {

namespace {

Json vectors(const std::vector<ZnVec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

template <typename T>
Json optional_or_null(const std::optional<T>& o) {
  return o ? Json(*o) : Json(nullptr);
}

Json one_based_support(const ZnVec& x) {
  Json out = Json::array();
  for (auto i : support(x)) out.push_back(i + 1);
  return out;
}

}  // namespace

std::string format_quotient(const Quotient& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Json to_json(const RingSpec& ring) {
  Json factors = Json::array();
  for (const auto& f : ring.factors()) factors.push_back({f.prime, f.exponent});
  return {{"modulus", ring.modulus()}, {"shape", ring.shape_name()}, {"factors", factors}};
}

Json to_json(const ZnVec& v) {
  Json out = Json::array();
  for (auto a : v.entries()) out.push_back(a);
  return out;
}

Json to_json(const Submodule& s) {
  return {{"generators", vectors(s.canon().rows())}, {"cardinality", s.cardinality()}};
}

Json to_json(const ColumnMultiset& lambda) {
  return {{"modulus", lambda.modulus()}, {"k", lambda.k()}, {"m", lambda.size()}, {"columns", vectors(lambda.columns())}};
}

Json to_json(const MinimalityReport& r) {
  Json out{{"verdict", r.verdict},
           {"method", std::string(to_string(r.method))},
           {"messages_checked", r.messages_checked},
           {"injective_encoding", r.injective_encoding},
           {"per_message_failures", vectors(r.per_message_failures)},
           {"subject", r.subject ? to_json(*r.subject) : Json(nullptr)},
           {"counterexample", nullptr},
           {"criterion_evidence", nullptr}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out["counterexample"] = {{"message", to_json(c.message)},
                             {"witness_message", to_json(c.witness_message)},
                             {"witness_codeword", to_json(c.witness_codeword)},
                             {"witness_support", one_based_support(c.witness_codeword)},
                             {"reason", c.reason}};
  }
  if (r.criterion_evidence)
    out["criterion_evidence"] = {{"orthogonal_span", to_json(r.criterion_evidence->orthogonal_span)},
                                 {"perp", to_json(r.criterion_evidence->perp)}};
  return out;
}

Json to_json(const Construction& c) {
  return {{"recipe", std::string(to_string(c.recipe.name))},
          {"ring", to_json(c.recipe.ring)},
          {"k", c.recipe.k},
          {"predicted_length", c.recipe.predicted_length},
          {"provenance", c.recipe.provenance},
          {"n", c.recipe.ring.modulus()},
          {"m", c.columns.size()},
          {"columns", vectors(c.columns.columns())}};
}

Json to_json(const RootWordClassification& c) {
  Json out{{"vector", to_json(c.vector)},
           {"is_root", c.is_root},
           {"witness", optional_or_null(c.witness)},
           {"prime_power_decomposition", nullptr}};
  if (c.prime_power_decomposition)
    out["prime_power_decomposition"] = {{"r", c.prime_power_decomposition->r},
                                        {"root", to_json(c.prime_power_decomposition->root)}};
  return out;
}

Json to_json(const PerpBasis& b) {
  Json layout = Json::array();
  for (auto i : b.layout) layout.push_back(i + 1);
  return {{"source", to_json(b.source)},
          {"generators", vectors(b.generators)},
          {"claimed_free", b.claimed_free},
          {"construction", b.construction ? Json(std::string(to_string(*b.construction))) : Json("generic-kernel")},
          {"layout", layout}};
}

Json to_json(const BoundsReport& r) {
  Json closed = nullptr;
  if (r.lower_bound_closed_form) {
    const auto& c = *r.lower_bound_closed_form;
    closed = {{"expression", c.expression},
              {"value", format_quotient(c.value)},
              {"strict", c.strict},
              {"implied", c.implied}};
  }
  return {{"ring", to_json(r.ring)},
          {"k", r.k},
          {"upper_bound", r.upper_bound},
          {"upper_bound_source", r.upper_bound_source},
          {"projective_bound", optional_or_null(r.projective_bound)},
          {"lower_bound_exact", r.lower_bound_exact},
          {"lower_bound_quotient",
           r.lower_bound_quotient ? Json(format_quotient(*r.lower_bound_quotient)) : Json(nullptr)},
          {"lower_bound_closed_form", closed},
          {"root_words", r.root_words},
          {"non_root_words", r.non_root_words},
          {"root_perp_size", r.root_perp_size},
          {"root_words_formula", optional_or_null(r.root_words_formula)},
          {"notes", r.notes}};
}

Json to_json(const SearchReport& r, bool include_timing) {
  Json stats{{"candidates", r.stats.candidates}, {"examined", r.stats.examined}, {"pruned", r.stats.pruned}};
  if (include_timing) stats["wall_time_ms"] = r.stats.wall_time.count();
  return {{"ring", to_json(r.ring)},
          {"k", r.k},
          {"m_cap", r.m_cap},
          {"constraints",
           {{"require_basis", r.constraints.require_basis}, {"root_words_only", r.constraints.root_words_only}}},
          {"m_min", optional_or_null(r.m_min)},
          {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
          {"searched_range", {r.searched_from, r.searched_to}},
          {"stats", stats}};
}

Json to_json(const MonotonicityResult& r) {
  Json lengths = Json::array();
  for (const auto& [m, ok] : r.per_length) lengths.push_back({{"m", m}, {"minimal", ok}});
  return {{"holds", r.holds}, {"lengths", lengths}};
}

std::string bounds_csv(const std::vector<BoundsReport>& rows) {
  std::ostringstream out;
  out << "n,k,lower_bound_exact,lower_bound_quotient,closed_form_implied,upper_bound,projective_bound,root_words,"
         "root_words_formula,non_root_words\n";
  for (const auto& r : rows) {
    out << r.ring.modulus() << ',' << r.k << ',' << r.lower_bound_exact << ','
        << (r.lower_bound_quotient ? format_quotient(*r.lower_bound_quotient) : "") << ','
        << (r.lower_bound_closed_form ? std::to_string(r.lower_bound_closed_form->implied) : "") << ','
        << r.upper_bound << ',' << (r.projective_bound ? std::to_string(*r.projective_bound) : "") << ','
        << r.root_words << ',' << (r.root_words_formula ? std::to_string(*r.root_words_formula) : "") << ','
        << r.non_root_words << '\n';
  }
  return out.str();
}

std::string search_csv(const std::vector<SearchReport>& rows) {
  std::ostringstream out;
  out << "n,k,m_cap,require_basis,root_words_only,m_min,searched_from,searched_to,candidates,examined,pruned\n";
  for (const auto& r : rows) {
    out << r.ring.modulus() << ',' << r.k << ',' << r.m_cap << ',' << r.constraints.require_basis << ','
        << r.constraints.root_words_only << ',' << (r.m_min ? std::to_string(*r.m_min) : "") << ','
        << r.searched_from << ',' << r.searched_to << ',' << r.stats.candidates << ',' << r.stats.examined << ','
        << r.stats.pruned << '\n';
  }
  return out.str();
}

}  // namespace mincodes
