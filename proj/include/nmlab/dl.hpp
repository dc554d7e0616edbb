#ifndef NMLAB_DL_HPP
#define NMLAB_DL_HPP

// Semantics of default theories, mirroring the modal module: revise_pair
// is the approximating operator (weak extensions are the fixpoints of its
// diagonal, which revise exposes), stable_revise gives the extensions in
// Reiter's sense, and the two least fixpoints are the Kripke-Kleene and
// well-founded pairs. extensions_oracle recomputes the extensions by an
// independent generate-and-check pass over candidate sets of generating
// defaults.

#include <vector>

#include "nmlab/formula.hpp"
#include "nmlab/truth.hpp"
#include "nmlab/worlds.hpp"

namespace nmlab::dl {

BeliefPair revise_pair(const Vocabulary& v, const DefaultTheory& d,
                       const BeliefPair& b);

// Diagonal of revise_pair. Complete pairs stay complete; if the two
// components ever differ this raises an InternalError.
WorldSet revise(const Vocabulary& v, const DefaultTheory& d, const WorldSet& q);

WorldSet stable_revise(const Vocabulary& v, const DefaultTheory& d,
                       const WorldSet& s);
BeliefPair stable_revise_pair(const Vocabulary& v, const DefaultTheory& d,
                              const BeliefPair& b);

PairFixpoint kripke_kleene(const Vocabulary& v, const DefaultTheory& d);
PairFixpoint well_founded(const Vocabulary& v, const DefaultTheory& d);

std::vector<WorldSet> weak_extensions(const Vocabulary& v,
                                      const DefaultTheory& d);
std::vector<BeliefPair> partial_weak_extensions(const Vocabulary& v,
                                                const DefaultTheory& d);
std::vector<WorldSet> extensions(const Vocabulary& v, const DefaultTheory& d);
std::vector<BeliefPair> partial_extensions(const Vocabulary& v,
                                           const DefaultTheory& d);

// Independent check: for every subset D' of the defaults, close the facts
// under the consequents of D', then replay the quasi-inductive generation
// against that candidate (prerequisite entailed by the closure built so
// far, every justification consistent with the candidate). The candidate
// passes if the generation reproduces exactly D' and its closure. Supports
// at most 16 defaults.
std::vector<WorldSet> extensions_oracle(const Vocabulary& v,
                                        const DefaultTheory& d);

inline constexpr int kOracleMaxDefaults = 16;

}  // namespace nmlab::dl

#endif  // NMLAB_DL_HPP
