#pragma once

#include <string>

#include "xbdi/lang/syntax.hpp"

namespace xbdi {

/// Canonical text for a library: action schemas (by signature) first, then
/// plans in library order. Re-parses to an equal library.
std::string pretty_print(const PlanLibrary& lib);

std::string to_string(const PlanTemplate& plan);
std::string to_string(const ActionSchema& schema);

}  // namespace xbdi
