#ifndef SKEWCAL_PARSER_HPP
#define SKEWCAL_PARSER_HPP

#include <string>

#include "skewcal/expr.hpp"

namespace skewcal {

/// Position inside a parsed text, 1-based line and column.
struct SrcPos {
  int line = 1;
  int col = 1;
};

/// Outcome of parsing one expression. `ok()` iff `value` holds an Expr;
/// otherwise `message`/`pos` describe the first error.
struct ExprParseResult {
  std::optional<Expr> value;
  std::string message;
  SrcPos pos;
  bool ok() const { return value.has_value(); }
};

/// Parse the expression grammar over the given chart: integers, rationals
/// p/q, coordinate names, + - *, ^ with nonnegative integer exponents,
/// exp(<rational-linear form in the coordinates>), parentheses. Total: never
/// throws on bad input, reports a positioned message instead.
ExprParseResult parse_expr(const std::string& text, const ChartPtr& chart);

/// Convenience wrapper that throws Error with the diagnostic message.
Expr parse_expr_or_throw(const std::string& text, const ChartPtr& chart);

/// Parse a standalone rational literal ("p", "-p/q"); nullopt on junk.
std::optional<Rat> parse_rat(const std::string& text);

} // namespace skewcal

#endif
