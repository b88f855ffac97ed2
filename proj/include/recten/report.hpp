#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "recten/bounds.hpp"
#include "recten/inclusion.hpp"
#include "recten/oracle.hpp"
#include "recten/tensor.hpp"

namespace recten {

enum class OutputFormat { text, json, csv, svg };

std::string_view to_string(OutputFormat f) noexcept;
std::optional<OutputFormat> parse_format(std::string_view text) noexcept;

/// Bumped whenever a JSON report changes shape.
inline constexpr int kSchemaVersion = 1;

// Text reports print numbers with 4 decimals, JSON with shortest round-trip
// precision, CSV with 17 significant digits. Requesting a format a report
// does not support throws DomainError.

std::string render_info(const RectangularTensor& a, OutputFormat format);
std::string render_bounds(const BoundsReport& report, OutputFormat format);
std::string render_inclusion(const DiskReport& report, OutputFormat format);
std::string render_pair(const SingularPair& pair, OutputFormat format);
std::string render_verification(const InclusionCheck& check, OutputFormat format);
std::string render_sweep(const SubsetSweep& sweep, OutputFormat format);

/// Origin-centered boundary circles for both sets (upsilon solid black, psi
/// dashed blue) with red "+" markers at the given real values. The view
/// spans +-1.1 times the largest radius or marker magnitude.
std::string render_svg(const DiskReport& upsilon, const DiskReport& psi, std::span<const double> markers);

}  // namespace recten
