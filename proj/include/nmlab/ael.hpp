#ifndef NMLAB_AEL_HPP
#define NMLAB_AEL_HPP

// Semantics of modal (autoepistemic) theories.
//
// revise is the expansion operator: it maps a world set Q to the models of
// the theory evaluated relative to Q. Its fixpoints are the expansions.
// revise_pair is the approximating operator on belief pairs whose
// fixpoints are the partial expansions and whose least fixpoint is the
// Kripke-Kleene pair. stable_revise freezes the liberal component and
// takes the least fixpoint of the conservative revision; its fixpoints are
// the extensions, and pairing it with itself gives stable_revise_pair with
// the partial extensions and the well-founded pair.

#include <vector>

#include "nmlab/formula.hpp"
#include "nmlab/truth.hpp"
#include "nmlab/worlds.hpp"

namespace nmlab::ael {

WorldSet revise(const Vocabulary& v, const ModalTheory& t, const WorldSet& q);
BeliefPair revise_pair(const Vocabulary& v, const ModalTheory& t,
                       const BeliefPair& b);

// Least fixpoint of the conservative revision with the liberal component
// frozen at s, iterated downward in knowledge from the full world set.
WorldSet stable_revise(const Vocabulary& v, const ModalTheory& t,
                       const WorldSet& s);
BeliefPair stable_revise_pair(const Vocabulary& v, const ModalTheory& t,
                              const BeliefPair& b);

// Least fixpoints by iteration from the bottom pair (A, {}). The iteration
// count includes the application that confirms the fixpoint.
PairFixpoint kripke_kleene(const Vocabulary& v, const ModalTheory& t);
PairFixpoint well_founded(const Vocabulary& v, const ModalTheory& t);

// Expansions found by guessing the values of the modal subformulas,
// reducing to an objective theory and verifying the guess. Works for any
// vocabulary the workbench accepts.
std::vector<WorldSet> expansions(const Vocabulary& v, const ModalTheory& t);

// The same set by exhaustive search over world sets (at most 4 atoms).
std::vector<WorldSet> expansions_brute(const Vocabulary& v, const ModalTheory& t);

std::vector<BeliefPair> partial_expansions(const Vocabulary& v,
                                           const ModalTheory& t);
std::vector<WorldSet> extensions(const Vocabulary& v, const ModalTheory& t);
std::vector<BeliefPair> partial_extensions(const Vocabulary& v,
                                           const ModalTheory& t);

}  // namespace nmlab::ael

#endif  // NMLAB_AEL_HPP
