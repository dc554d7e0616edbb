#ifndef NMLAB_VERIFY_HPP
#define NMLAB_VERIFY_HPP

// The theorem suite. Each id T1..T15 names one statement about the
// fixpoint machinery; verify_theorem checks it on a stream of seeded
// random instances, quantifying exhaustively over world sets or belief
// pairs where the statement does. A failure records the instance seed and
// its parseable text, so re-running the same configuration fails again.

#include <functional>
#include <string>
#include <vector>

#include "nmlab/formula.hpp"
#include "nmlab/gen.hpp"
#include "nmlab/worlds.hpp"

namespace nmlab {

struct TheoremFailure {
  std::uint64_t seed = 0;  // cfg.seed + sample index
  std::string instance;    // instance in its file format
  std::string detail;
};

struct TheoremReport {
  std::string id;
  std::string title;
  int instances = 0;
  std::vector<TheoremFailure> failures;
  double seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

// T1 .. T15 in order.
const std::vector<std::string>& theorem_ids();

// Throws UserError on an unknown id.
std::string theorem_title(const std::string& id);

TheoremReport verify_theorem(const std::string& id, const GenConfig& cfg);
std::vector<TheoremReport> verify_all(const GenConfig& cfg);

// The sampling drivers behind verify_theorem, exposed so the tests can
// drive them with predicates of their own. A predicate returns the empty
// string on success and the failure detail otherwise.
using ModalPredicate =
    std::function<std::string(const Vocabulary&, const ModalTheory&)>;
using DefaultPredicate =
    std::function<std::string(const Vocabulary&, const DefaultTheory&)>;
using ProgramPredicate =
    std::function<std::string(const Vocabulary&, const Program&)>;

TheoremReport check_modal_property(std::string id, std::string title,
                                   const GenConfig& cfg,
                                   const ModalPredicate& pred);
TheoremReport check_default_property(std::string id, std::string title,
                                     const GenConfig& cfg,
                                     const DefaultPredicate& pred);
TheoremReport check_program_property(std::string id, std::string title,
                                     const GenConfig& cfg,
                                     const ProgramPredicate& pred);

// Summary line, then one indented block per failure (seed, instance,
// detail).
std::string to_string(const TheoremReport& r);

}  // namespace nmlab

#endif  // NMLAB_VERIFY_HPP
