#ifndef HYPFAM_PARSE_HPP
#define HYPFAM_PARSE_HPP

#include "hypfam/bipoly.hpp"

#include <string_view>

namespace hypfam {

/// Parses a polynomial expression in u and s:
///
///   expr     := term (('+'|'-') term)*
///   term     := ('-')? factor ('*' factor)*
///   factor   := base ('^' uint)?
///   base     := rational | 'u' | 's' | '(' expr ')'
///   rational := int ('/' uint)?
///
/// Whitespace is ignored. Throws Error(SyntaxError) whose where()[0] is the
/// byte offset of the offending character.
BiPoly parse_poly_expr(std::string_view text);

} // namespace hypfam

#endif // HYPFAM_PARSE_HPP
