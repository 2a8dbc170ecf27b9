#pragma once

/// @file matrix_io.hpp
/// Plain-text column matrices.
///
///     # comments and blank lines are ignored
///     n k m
///     a_11 a_12 ... a_1k      <- column α_1
///     ...
///     a_m1 a_m2 ... a_mk      <- column α_m
///
/// Every residue must lie in [0, n).

#include <filesystem>
#include <iosfwd>
#include <string>

#include "mincodes/code_core.hpp"

namespace mincodes {

/// Throws ParseError naming the line (and column, when the fault is a single
/// entry), or IndependenceError when the columns violate `requirement`.
ColumnMultiset parse_matrix(std::istream& in,
                            ColumnRequirement requirement = ColumnRequirement::ContainsBasis);
ColumnMultiset parse_matrix(const std::filesystem::path& path,
                            ColumnRequirement requirement = ColumnRequirement::ContainsBasis);

std::string format_matrix(const ColumnMultiset& lambda);

}  // namespace mincodes
