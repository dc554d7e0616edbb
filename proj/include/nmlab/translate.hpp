#ifndef NMLAB_TRANSLATE_HPP
#define NMLAB_TRANSLATE_HPP

// Translations between the input languages.

#include "nmlab/formula.hpp"

namespace nmlab {

// Modal encoding of a single default "a : b1, .., bk / g":
//   Ka & ~K~b1 & .. & ~K~bk -> g
Formula konolige(const Default& d);

// Modal encoding of a default theory: the facts of W followed by the
// encodings of the defaults, in input order.
ModalTheory konolige(const DefaultTheory& d);

// Reading of a program clause "h :- p1, .., pm, not r1, .., not rk" as the
// default "p1 & .. & pm : ~r1, .., ~rk / h". An empty positive body gives
// the prerequisite "true"; an empty negative body the single justification
// "true". The default theory has no facts.
DefaultTheory lp_to_dl(const Program& p);

}  // namespace nmlab

#endif  // NMLAB_TRANSLATE_HPP
