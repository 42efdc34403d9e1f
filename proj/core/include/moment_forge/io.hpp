#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "moment_forge/harness.hpp"
#include "moment_forge/polynomial.hpp"

namespace moment_forge {

/// Polynomial text together with the ring it lives in and the ordered
/// variable names.
///
/// Grammar (explicit '*' is required between factors):
///
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' ['-'|'+'] integer)?
///   base     := rational | 'i' | identifier | '(' expr ')'
///   rational := integer ('/' positive-integer)?
///
/// Negative exponents are accepted only in the Laurent ring, and only on a
/// single-term base. The name 'i' is the imaginary unit and cannot be a
/// variable.
struct PolySource {
  std::string text;
  Ring ring = Ring::polynomial;
  std::vector<std::string> variables;
};

/// Throws ParseError (with 1-based line and column) on malformed input.
AnyPoly parse_poly(const PolySource& source);
MPoly parse_mpoly(std::string_view text, const std::vector<std::string>& variables);
LaurentPoly parse_laurent(std::string_view text, const std::vector<std::string>& variables);

/// Parses "x,y" or "x1..x3,y1..y3" (ranges expand on a shared prefix).
/// Throws UsageError on an invalid, duplicate or reserved name.
std::vector<std::string> parse_variable_list(std::string_view list);
void validate_variables(const std::vector<std::string>& variables);

/// Graded-lex ordered text accepted back by the parser, e.g.
/// "x^2 + 2*i*x*y - y^2". The zero polynomial prints as "0".
template <Ring R>
std::string format_poly(const BasicPoly<R>& p, const std::vector<std::string>& variables);
std::string format_poly(const AnyPoly& p, const std::vector<std::string>& variables);

}  // namespace moment_forge
