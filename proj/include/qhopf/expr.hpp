#pragma once

#include "qhopf/element.hpp"

#include <string>

namespace qhopf {

// Parses the textual element syntax produced by to_string:
//   element  := [-] term (('+' | '-') term)*
//   term     := coeff | monomial | coeff monomial
//   coeff    := rational [h-part] | h-part | '(' signed coeff sum ')'
//   h-part   := 'h' ['^' nat]
//   monomial := factor ('&' factor)* | '1'
//   factor   := '(' dart+ ')' | '@' vertex
// Dart names may carry a trailing '*'. Throws ParseError (with a character
// position) on malformed input or names missing from the quiver.
SymLElement parse_element(const std::string& text, const DoubleQuiver& dq);

}  // namespace qhopf
