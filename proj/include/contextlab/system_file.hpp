#pragma once

// Line-oriented text format for systems. Grammar (tokens are separated by
// whitespace, '#' starts a comment that runs to the end of the line):
//
//   file     := header { content | context | bunch }
//   header   := "contextlab-system" "1"
//   content  := "content" ID ":" VALUE VALUE { VALUE }
//   context  := "context" ID ":" ID { ID }
//   bunch    := "bunch" ID ":" ID { ID } NL { entry NL } "end"
//   entry    := VALUE { VALUE } "=" RATIONAL
//
// Bunch entries list one value per declared column; omitted tuples have
// probability 0. See docs/system-format.md for the full description.

#include <contextlab/model.hpp>

#include <string>
#include <string_view>

namespace contextlab {

/// Throws ParseError (with line/column) on syntax errors and the build_system
/// errors on semantic ones.
System parse_system(std::string_view text);

System load_system(const std::string& path);

/// Canonical rendering: declaration order preserved, bunch entries restricted
/// to the support in row-major order, rationals in lowest terms.
std::string format_system(const System& system);

void save_system(const System& system, const std::string& path);

}  // namespace contextlab
