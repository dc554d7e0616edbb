#ifndef NMLAB_GEN_HPP
#define NMLAB_GEN_HPP

// Seeded random instances for the property and theorem checks. The same
// configuration always produces the same instance; bounded draws go
// through the raw engine so the streams are identical across platforms.

#include <cstdint>
#include <random>

#include "nmlab/formula.hpp"
#include "nmlab/worlds.hpp"

namespace nmlab {

struct GenConfig {
  std::uint64_t seed = 7;
  int atom_count = 2;
  int max_depth = 2;
  int theory_size = 3;    // modal formulas, or facts of a default theory
  int default_count = 3;  // defaults of a default theory
  int clause_count = 3;   // clauses of a program
  int sample_count = 100;

  void validate() const;  // throws UserError
};

// Uniform over the node kinds available at the current depth; at depth 0
// only atoms and constants remain.
Formula gen_formula(std::mt19937_64& rng, const Vocabulary& v, int depth,
                    bool allow_modal);

// Sizes are drawn uniformly between zero and the configured maximum, so
// degenerate instances occur.
ModalTheory gen_modal_theory(const GenConfig& cfg);
DefaultTheory gen_default_theory(const GenConfig& cfg);
Program gen_program(const GenConfig& cfg);

}  // namespace nmlab

#endif  // NMLAB_GEN_HPP
