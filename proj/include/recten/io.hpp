#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "recten/tensor.hpp"

namespace recten {

/// Parses the JSON tensor document
///
///   {"p": 2, "q": 2, "m": 3, "n": 3,
///    "entries": [{"i": [1, 1], "j": [2, 1], "v": 2.0}, ...]}
///
/// Indices are 1-based. Malformed JSON raises ParseError with the byte
/// offset; schema, range and duplicate violations raise ValidationError
/// naming the offending record.
RectangularTensor parse_tensor(std::string_view text);

/// Inverse of parse_tensor; entries come out in lexicographic order.
std::string serialize_tensor(const RectangularTensor& a);

/// One real per line; blank lines and '#' comments are skipped.
std::vector<double> parse_candidates(std::string_view text);

std::string read_file(const std::filesystem::path& path);
RectangularTensor load_tensor(const std::filesystem::path& path);

/// Comma-separated 1-based list such as "1,3".
IndexSubset parse_subset(std::string_view text, int n);

}  // namespace recten
