#ifndef NMLAB_LP_HPP
#define NMLAB_LP_HPP

// Semantics of normal logic programs over a fixed vocabulary of at most 20
// atoms (model enumeration needs at most 16). Sets of atoms are bit masks
// in vocabulary order. step is the one-step consequence operator whose
// fixpoints are the supported models; step_pair is its four-valued
// version; stable_revise computes the least model with the negative
// information frozen, giving the stable models and, iterated in pairs, the
// well-founded pair. gl_models and alternating_fixpoint recompute the
// stable and well-founded semantics through explicitly built reducts.

#include <cstdint>
#include <string>
#include <vector>

#include "nmlab/formula.hpp"
#include "nmlab/worlds.hpp"

namespace nmlab::lp {

struct AtomSet {
  std::uint32_t bits = 0;

  bool contains(int i) const { return (bits >> i) & 1u; }
  void insert(int i) { bits |= 1u << i; }
  bool subset_of(AtomSet o) const { return (bits & ~o.bits) == 0; }
  bool operator==(const AtomSet&) const = default;
};

struct AtomPair {
  AtomSet lower;  // atoms derived as true
  AtomSet upper;  // atoms still possible

  bool operator==(const AtomPair&) const = default;
};

// Knowledge ordering on pairs: lower grows, upper shrinks.
bool leq_kn(const AtomPair& a, const AtomPair& b);
bool is_consistent(const AtomPair& a);
bool is_complete(const AtomPair& a);

AtomSet all_atoms(const Vocabulary& v);

AtomSet step(const Vocabulary& v, const Program& p, AtomSet i);
AtomPair step_pair(const Vocabulary& v, const Program& p, const AtomPair& a);
AtomSet stable_revise(const Vocabulary& v, const Program& p, AtomSet s);

struct LpFixpoint {
  AtomPair pair;
  int iterations = 0;
};

LpFixpoint kripke_kleene(const Vocabulary& v, const Program& p);
LpFixpoint well_founded(const Vocabulary& v, const Program& p);

// Model lists in increasing bit-mask order. Need at most 16 atoms.
std::vector<AtomSet> supported_models(const Vocabulary& v, const Program& p);
std::vector<AtomSet> stable_models(const Vocabulary& v, const Program& p);

// Stable models through explicit reduct construction.
std::vector<AtomSet> gl_models(const Vocabulary& v, const Program& p);

// Well-founded pair through the alternating least-model sequence.
AtomPair alternating_fixpoint(const Vocabulary& v, const Program& p);

inline constexpr int kModelListMaxAtoms = 16;

// Compares the program's semantics with the semantics of its default
// theory reading: stable models against extensions, supported models
// against weak extensions, and the Kripke-Kleene and well-founded atom
// verdicts against entailment in the corresponding pair components. Needs
// at most 4 atoms.
struct EmbeddingCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct EmbeddingReport {
  std::string note;  // reading used for the atom-verdict comparisons
  std::vector<EmbeddingCheck> checks;
  bool all_pass() const;
};

EmbeddingReport check_embedding(const Vocabulary& v, const Program& p);

std::string to_string(const Vocabulary& v, AtomSet a);
std::string to_string(const Vocabulary& v, const AtomPair& a);

}  // namespace nmlab::lp

#endif  // NMLAB_LP_HPP
