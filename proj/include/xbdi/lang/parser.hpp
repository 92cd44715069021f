#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "xbdi/lang/syntax.hpp"

namespace xbdi {

/// Lexical, syntax or well-formedness error in plan-language text.
/// Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column, std::set<std::string> expected = {});

  int line() const { return line_; }
  int column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  int line_;
  int column_;
  std::set<std::string> expected_;
};

/// Parses a `.plan` document. Plans keep file order.
PlanLibrary parse_plan_library(std::string_view source);

/// Parses a single term / literal (the whole input must be consumed).
Term parse_term(std::string_view source);
Literal parse_literal(std::string_view source);

}  // namespace xbdi
