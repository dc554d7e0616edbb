#ifndef NMLAB_PARSE_HPP
#define NMLAB_PARSE_HPP

// Parsers for the three input languages. All report ParseError with a
// 1-based line and column on malformed input.
//
// Formula grammar, loosest to tightest: <-> | -> | "|" | & | ~ and K.
// "->" and "<->" associate to the right, "&" and "|" to the left; ~ and K
// bind equally tightly. Atoms match [a-z][a-zA-Z0-9_]*; "true" and "false"
// are constants. Comments run from '#' to end of line.
//
// A modal theory file holds one formula per line. A default theory file
// has an optional "W:" section of objective formulas, one per line, and a
// "D:" section of defaults "alpha : beta1, beta2 / gamma." (at least one
// justification; section markers may share a line with their first entry).
// A program file holds clauses "head :- b1, not b2." and facts "head.".

#include <string_view>

#include "nmlab/formula.hpp"

namespace nmlab {

Formula parse_formula(std::string_view text);
ModalTheory parse_modal_theory(std::string_view text);
DefaultTheory parse_default_theory(std::string_view text);
Program parse_program(std::string_view text);

}  // namespace nmlab

#endif  // NMLAB_PARSE_HPP
