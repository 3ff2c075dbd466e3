/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sigmaforge/laurent.hpp"

namespace sigmaforge {

/// Parse a Laurent polynomial expression over the ordered variable list.
///
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := integer | var ['^' exponent] | '(' expr ')' ['^' natural]
///   exponent := ['-'] integer | '(' ['-'] integer ')'
///
/// Whitespace is ignored. Errors: SyntaxError (with the byte offset),
/// FractionalExponent, UnknownVariable.
LaurentPolynomial parse_poly(std::string_view text, const std::vector<std::string>& vars);

/// Convenience for the default names x, y (rank 2) or x (rank 1).
LaurentPolynomial parse_poly(std::string_view text, int rank = 2);

std::vector<std::string> split_variable_list(std::string_view list);

}  // namespace sigmaforge
