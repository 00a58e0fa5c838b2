#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gkat/finite_algebra.hpp"

namespace gkat {

/// Reads the algebra file format:
///
///     # comment
///     algebra <name>
///     elements <n1> <n2> ...
///     tests <ni> ...
///     zero <n>
///     one <n>
///     table plus     (|K| rows of |K| names, row = left operand)
///     table seq      (|K| rows)
///     table arrow    (|K| rows; "_" leaves a non-test cell unset)
///     table star     (one row of |K| names)
///
/// Throws ParseError with line and column for malformed text or unknown
/// names, and ClosureError (table, row, column) for structural violations.
FiniteAlgebraData parse_algebra_data(std::string_view text);
FiniteAlgebraPtr parse_algebra(std::string_view text);

/// Throws Error when the file cannot be read.
FiniteAlgebraPtr load_algebra(const std::filesystem::path& path);

/// Writes serialize(alg.data()).
void save_algebra(const FiniteAlgebra& alg, const std::filesystem::path& path);

}  // namespace gkat
