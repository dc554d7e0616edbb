#include "nmlab/dl.hpp"

#include <algorithm>

namespace nmlab::dl {

namespace {

// Models of the whole theory under the given pair: facts are classical,
// defaults use the three-case truth condition.
WorldSet theory_mask(const Vocabulary& v, const DefaultTheory& d,
                     const BeliefPair& b) {
  WorldSet out = WorldSet::all_of(v);
  for (const Formula& f : d.facts) out &= models_of(v, f);
  for (const Default& dd : d.defaults) out &= default_mask(v, b, dd);
  return out;
}

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

BeliefPair revise_pair(const Vocabulary& v, const DefaultTheory& d,
                       const BeliefPair& b) {
  return BeliefPair(theory_mask(v, d, b.swapped()), theory_mask(v, d, b));
}

WorldSet revise(const Vocabulary& v, const DefaultTheory& d, const WorldSet& q) {
  BeliefPair out = revise_pair(v, d, BeliefPair(q, q));
  if (!(out.p == out.s))
    throw InternalError("pair revision split a complete pair");
  return out.p;
}

WorldSet stable_revise(const Vocabulary& v, const DefaultTheory& d,
                       const WorldSet& s) {
  int cap = static_cast<int>(v.interpretation_count()) + 2;
  WorldSet x = WorldSet::all_of(v);
  for (int step = 0; step < cap; ++step) {
    WorldSet next = theory_mask(v, d, BeliefPair(s, x));
    if (next == x) return x;
    x = std::move(next);
  }
  throw InternalError("stable revision did not reach a fixpoint within its cap");
}

BeliefPair stable_revise_pair(const Vocabulary& v, const DefaultTheory& d,
                              const BeliefPair& b) {
  return BeliefPair(stable_revise(v, d, b.s), stable_revise(v, d, b.p));
}

PairFixpoint kripke_kleene(const Vocabulary& v, const DefaultTheory& d) {
  return iterate_to_fixpoint(
      v, [&](const BeliefPair& b) { return revise_pair(v, d, b); });
}

PairFixpoint well_founded(const Vocabulary& v, const DefaultTheory& d) {
  return iterate_to_fixpoint(
      v, [&](const BeliefPair& b) { return stable_revise_pair(v, d, b); });
}

std::vector<WorldSet> weak_extensions(const Vocabulary& v,
                                      const DefaultTheory& d) {
  std::vector<WorldSet> out;
  for (const WorldSet& q : enumerate_world_sets(v))
    if (revise(v, d, q) == q) out.push_back(q);
  return out;
}

std::vector<BeliefPair> partial_weak_extensions(const Vocabulary& v,
                                                const DefaultTheory& d) {
  std::vector<BeliefPair> out;
  for (const BeliefPair& b : enumerate_belief_pairs(v))
    if (revise_pair(v, d, b) == b) out.push_back(b);
  return out;
}

std::vector<WorldSet> extensions(const Vocabulary& v, const DefaultTheory& d) {
  std::vector<WorldSet> out;
  for (const WorldSet& q : enumerate_world_sets(v))
    if (stable_revise(v, d, q) == q) out.push_back(q);
  return out;
}

std::vector<BeliefPair> partial_extensions(const Vocabulary& v,
                                           const DefaultTheory& d) {
  std::vector<BeliefPair> out;
  for (const BeliefPair& b : enumerate_belief_pairs(v))
    if (stable_revise_pair(v, d, b) == b) out.push_back(b);
  return out;
}

std::vector<WorldSet> extensions_oracle(const Vocabulary& v,
                                        const DefaultTheory& d) {
  std::size_t m = d.defaults.size();
  if (m > static_cast<std::size_t>(kOracleMaxDefaults))
    throw CapError("generating-set oracle supports at most " +
                   std::to_string(kOracleMaxDefaults) + " defaults (got " +
                   std::to_string(m) + ")");

  WorldSet fact_models = WorldSet::all_of(v);
  for (const Formula& f : d.facts) fact_models &= models_of(v, f);

  std::vector<WorldSet> consequent_models, prerequisite_models;
  std::vector<std::vector<WorldSet>> justification_models;
  for (const Default& dd : d.defaults) {
    consequent_models.push_back(models_of(v, dd.consequent()));
    prerequisite_models.push_back(models_of(v, dd.prerequisite()));
    std::vector<WorldSet> js;
    for (const Formula& j : dd.justifications()) js.push_back(models_of(v, j));
    justification_models.push_back(std::move(js));
  }

  std::vector<WorldSet> out;
  for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
    WorldSet candidate = fact_models;
    for (std::size_t k = 0; k < m; ++k)
      if ((subset >> k) & 1u) candidate &= consequent_models[k];

    // Replay the generation: prerequisites against the growing closure,
    // justifications against the candidate.
    std::vector<bool> compatible(m, true);
    for (std::size_t k = 0; k < m; ++k)
      for (const WorldSet& j : justification_models[k])
        if ((candidate & j).empty()) {
          compatible[k] = false;
          break;
        }
    WorldSet closure = fact_models;
    std::uint32_t applied = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k < m; ++k) {
        if ((applied >> k) & 1u) continue;
        if (!compatible[k]) continue;
        if (!closure.subset_of(prerequisite_models[k])) continue;
        applied |= 1u << k;
        closure &= consequent_models[k];
        changed = true;
      }
    }
    if (applied == subset && closure == candidate) out.push_back(candidate);
  }
  std::sort(out.begin(), out.end(), WorldSet::canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace nmlab::dl
