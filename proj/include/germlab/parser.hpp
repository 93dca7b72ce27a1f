#pragma once

#include <string>

#include "germlab/poly.hpp"

namespace germlab {

/// Parses polynomial text into canonical form.
///
/// Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := rational | variable | '(' expr ')'
///
/// Whitespace is ignored. Implicit multiplication ("2x") is a syntax error;
/// so is '/' outside a rational literal ("n/d"). Errors carry the offending
/// position.
Poly parse_poly(const std::string& text, const RingPtr& ring);

} // namespace germlab
