#include "nmlab/ael.hpp"

#include <algorithm>

namespace nmlab::ael {

namespace {

// Conservative component of the pair revision: models of the theory under
// the conservative estimate for the swapped pair.
WorldSet lower_mask(const Vocabulary& v, const ModalTheory& t,
                    const BeliefPair& b) {
  WorldSet out = WorldSet::all_of(v);
  BeliefPair swapped = b.swapped();
  for (const Formula& f : t.formulas) out &= conservative_mask(v, swapped, f);
  return out;
}

WorldSet upper_mask(const Vocabulary& v, const ModalTheory& t,
                    const BeliefPair& b) {
  WorldSet out = WorldSet::all_of(v);
  for (const Formula& f : t.formulas) out &= conservative_mask(v, b, f);
  return out;
}

// Replaces every K subformula by the constant its guess assigns to it.
Formula apply_guess(const Formula& f, const std::vector<Formula>& args,
                    std::uint32_t guess) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Atom:
      return f;
    case Formula::Kind::Not:
      return Formula::negation(apply_guess(f.child(), args, guess));
    case Formula::Kind::And:
      return Formula::conjunction(apply_guess(f.left(), args, guess),
                                  apply_guess(f.right(), args, guess));
    case Formula::Kind::Or:
      return Formula::disjunction(apply_guess(f.left(), args, guess),
                                  apply_guess(f.right(), args, guess));
    case Formula::Kind::Implies:
      return Formula::implication(apply_guess(f.left(), args, guess),
                                  apply_guess(f.right(), args, guess));
    case Formula::Kind::Iff:
      return Formula::equivalence(apply_guess(f.left(), args, guess),
                                  apply_guess(f.right(), args, guess));
    case Formula::Kind::Know: {
      Formula arg = f.child();
      for (std::size_t k = 0; k < args.size(); ++k)
        if (args[k] == arg)
          return (guess >> k) & 1u ? Formula::truth() : Formula::falsity();
      throw InternalError("apply_guess: unindexed modal subformula");
    }
  }
  throw InternalError("apply_guess: bad kind");
}

}  // namespace

WorldSet revise(const Vocabulary& v, const ModalTheory& t, const WorldSet& q) {
  WorldSet out = WorldSet::all_of(v);
  for (const Formula& f : t.formulas) out &= moore_mask(v, q, f);
  return out;
}

BeliefPair revise_pair(const Vocabulary& v, const ModalTheory& t,
                       const BeliefPair& b) {
  return BeliefPair(lower_mask(v, t, b), upper_mask(v, t, b));
}

WorldSet stable_revise(const Vocabulary& v, const ModalTheory& t,
                       const WorldSet& s) {
  int cap = static_cast<int>(v.interpretation_count()) + 2;
  WorldSet x = WorldSet::all_of(v);
  for (int step = 0; step < cap; ++step) {
    WorldSet next = lower_mask(v, t, BeliefPair(x, s));
    if (next == x) return x;
    x = std::move(next);
  }
  throw InternalError("stable revision did not reach a fixpoint within its cap");
}

BeliefPair stable_revise_pair(const Vocabulary& v, const ModalTheory& t,
                              const BeliefPair& b) {
  return BeliefPair(stable_revise(v, t, b.s), stable_revise(v, t, b.p));
}

namespace {

template <class Op>
PairFixpoint iterate_to_fixpoint(const Vocabulary& v, const Op& op) {
  int cap = 2 * static_cast<int>(v.interpretation_count()) + 2;
  PairFixpoint out;
  out.pair = bottom_kn(v);
  for (out.iterations = 1; out.iterations <= cap; ++out.iterations) {
    BeliefPair next = op(out.pair);
    if (next == out.pair) return out;
    out.pair = std::move(next);
  }
  throw InternalError("pair iteration did not reach a fixpoint within its cap");
}

}  // namespace

PairFixpoint kripke_kleene(const Vocabulary& v, const ModalTheory& t) {
  return iterate_to_fixpoint(
      v, [&](const BeliefPair& b) { return revise_pair(v, t, b); });
}

PairFixpoint well_founded(const Vocabulary& v, const ModalTheory& t) {
  return iterate_to_fixpoint(
      v, [&](const BeliefPair& b) { return stable_revise_pair(v, t, b); });
}

std::vector<WorldSet> expansions(const Vocabulary& v, const ModalTheory& t) {
  std::vector<Formula> args = modal_subformulas(t);
  if (args.size() > 20)
    throw CapError("expansion search supports at most 20 modal subformulas (got " +
                   std::to_string(args.size()) + ")");
  std::vector<WorldSet> out;
  std::uint32_t guesses = 1u << args.size();
  Interpretation i0{0};
  for (std::uint32_t guess = 0; guess < guesses; ++guess) {
    WorldSet candidate = WorldSet::all_of(v);
    for (const Formula& f : t.formulas)
      candidate &= models_of(v, apply_guess(f, args, guess));
    bool verified = true;
    for (std::size_t k = 0; k < args.size() && verified; ++k) {
      bool known = eval_moore(v, candidate, i0, Formula::know(args[k]));
      verified = known == (((guess >> k) & 1u) != 0);
    }
    if (verified) out.push_back(std::move(candidate));
  }
  std::sort(out.begin(), out.end(), WorldSet::canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<WorldSet> expansions_brute(const Vocabulary& v,
                                       const ModalTheory& t) {
  std::vector<WorldSet> out;
  for (const WorldSet& q : enumerate_world_sets(v))
    if (revise(v, t, q) == q) out.push_back(q);
  return out;
}

std::vector<BeliefPair> partial_expansions(const Vocabulary& v,
                                           const ModalTheory& t) {
  std::vector<BeliefPair> out;
  for (const BeliefPair& b : enumerate_belief_pairs(v))
    if (revise_pair(v, t, b) == b) out.push_back(b);
  return out;
}

std::vector<WorldSet> extensions(const Vocabulary& v, const ModalTheory& t) {
  std::vector<WorldSet> out;
  for (const WorldSet& q : enumerate_world_sets(v))
    if (stable_revise(v, t, q) == q) out.push_back(q);
  return out;
}

std::vector<BeliefPair> partial_extensions(const Vocabulary& v,
                                           const ModalTheory& t) {
  std::vector<BeliefPair> out;
  for (const BeliefPair& b : enumerate_belief_pairs(v))
    if (stable_revise_pair(v, t, b) == b) out.push_back(b);
  return out;
}

}  // namespace nmlab::ael
