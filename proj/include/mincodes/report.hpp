#pragma once

/// @file report.hpp
/// JSON and CSV serialisation of library results. JSON objects are key-sorted
/// and contain nothing run-dependent unless asked (search wall time), so the
/// output is byte-identical across runs and worker counts. Supports are 1-based.

#include <string>
#include <vector>

#include "json.hpp"
#include "mincodes/bounds_search.hpp"
#include "mincodes/perp_structures.hpp"

namespace mincodes {

using Json = nlohmann::json;

Json to_json(const RingSpec& ring);
Json to_json(const ZnVec& v);
Json to_json(const Submodule& s);
Json to_json(const ColumnMultiset& lambda);
Json to_json(const MinimalityReport& r);
Json to_json(const Construction& c);
Json to_json(const RootWordClassification& c);
Json to_json(const PerpBasis& b);
Json to_json(const BoundsReport& r);
Json to_json(const SearchReport& r, bool include_timing = false);
Json to_json(const MonotonicityResult& r);

/// "46/5", or "6" for an integer.
std::string format_quotient(const Quotient& q);

/// One row per report; header first.
std::string bounds_csv(const std::vector<BoundsReport>& rows);
std::string search_csv(const std::vector<SearchReport>& rows);

}  // namespace mincodes
