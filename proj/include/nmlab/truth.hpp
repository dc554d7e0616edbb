#ifndef NMLAB_TRUTH_HPP
#define NMLAB_TRUTH_HPP

// Truth functions.
//
// eval_moore gives the two-valued truth of a modal formula at an
// interpretation relative to a world set Q: connectives are classical and
// K f holds iff f holds at every member of Q (vacuously for the empty Q),
// so modal subformulas do not depend on the interpretation.
//
// eval_conservative gives the conservative estimate relative to a belief
// pair (P, S). Atoms, conjunction and disjunction are classical; K f is
// checked against every member of P; negation SWAPS the roles of P and S:
// the conservative value of ~f is the complement of the liberal value of
// f. Implication and equivalence are evaluated through their and/or/not
// desugaring. Pairing the estimate with the one for the swapped pair gives
// the four-valued verdict eval_four; consistent pairs never produce the
// contradictory value.
//
// eval_default gives the truth of a default relative to (P, S) and I: the
// default holds iff its prerequisite is falsified somewhere in S, or some
// justification fails everywhere in P, or its consequent holds at I.
//
// Each function has a batch form returning the set of interpretations
// where the formula holds; the operators are built from those.

#include <string>

#include "nmlab/formula.hpp"
#include "nmlab/worlds.hpp"

namespace nmlab {

// Four truth values as (conservative bit, liberal bit).
struct FourVal {
  bool cons = false;
  bool lib = false;
  bool operator==(const FourVal&) const = default;
};

inline constexpr FourVal kTrue4{true, true};
inline constexpr FourVal kFalse4{false, false};
inline constexpr FourVal kUnknown4{false, true};
inline constexpr FourVal kInconsistent4{true, false};

std::string to_string(FourVal v);  // "t" | "f" | "u" | "i"

// Classical truth of an objective formula at one interpretation.
bool eval_classical(const Vocabulary& v, Interpretation i, const Formula& f);

// All models of an objective formula.
WorldSet models_of(const Vocabulary& v, const Formula& f);

bool eval_moore(const Vocabulary& v, const WorldSet& q, Interpretation i,
                const Formula& f);
WorldSet moore_mask(const Vocabulary& v, const WorldSet& q, const Formula& f);

bool eval_conservative(const Vocabulary& v, const BeliefPair& b,
                       Interpretation i, const Formula& f);
WorldSet conservative_mask(const Vocabulary& v, const BeliefPair& b,
                           const Formula& f);

FourVal eval_four(const Vocabulary& v, const BeliefPair& b, Interpretation i,
                  const Formula& f);

bool eval_default(const Vocabulary& v, const BeliefPair& b, Interpretation i,
                  const Default& d);
WorldSet default_mask(const Vocabulary& v, const BeliefPair& b,
                      const Default& d);

// Objective f true at every member of q.
bool entails(const Vocabulary& v, const WorldSet& q, const Formula& f);

}  // namespace nmlab

#endif  // NMLAB_TRUTH_HPP
