#ifndef SNK_PARSER_HPP
#define SNK_PARSER_HPP

#include <string>
#include <vector>

#include "snk/polynomial.hpp"

namespace snk {

/// Parses the polynomial text grammar: ASCII identifiers, integer and a/b
/// rational literals, operators + - * ^, parentheses. Implicit
/// multiplication is a syntax error.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars);

/// Canonical rendering; parse_polynomial(print_polynomial(p)) == p and
/// printing is stable byte-for-byte.
std::string print_polynomial(const Polynomial& p,
                             const std::vector<std::string>& vars);

}  // namespace snk

#endif
