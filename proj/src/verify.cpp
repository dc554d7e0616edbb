#include "nmlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "nmlab/ael.hpp"
#include "nmlab/dl.hpp"
#include "nmlab/lp.hpp"
#include "nmlab/translate.hpp"
#include "nmlab/truth.hpp"

namespace nmlab {

namespace {

// f holds at every member of q, relative to q itself. This is membership
// of f in the belief set determined by q; for objective f it is ordinary
// entailment.
bool belongs(const Vocabulary& v, const WorldSet& q, const Formula& f) {
  for (Interpretation i : q.members())
    if (!eval_moore(v, q, i, f)) return false;
  return true;
}

// Formulas whose membership verdicts the Kripke-Kleene and well-founded
// theorems are checked on: every theory formula and every argument of K.
std::vector<Formula> verdict_candidates(const ModalTheory& t) {
  std::vector<Formula> out = t.formulas;
  for (const Formula& arg : modal_subformulas(t)) {
    bool seen = false;
    for (const Formula& f : out) seen = seen || f == arg;
    if (!seen) out.push_back(arg);
  }
  return out;
}

std::string list_world_sets(const Vocabulary& v,
                            const std::vector<WorldSet>& qs) {
  std::string out = "[";
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i) out += "; ";
    out += to_string(v, qs[i]);
  }
  return out + "]";
}

// ---- modal theorems -------------------------------------------------

std::string t1_pred(const Vocabulary& v, const ModalTheory& t) {
  for (const WorldSet& p : enumerate_world_sets(v)) {
    BeliefPair d = ael::revise_pair(v, t, BeliefPair(p, p));
    WorldSet r = ael::revise(v, t, p);
    if (!(d.p == r && d.s == r))
      return "at P=" + to_string(v, p) + " the pair revision gives " +
             to_string(v, d) + " but the revision gives " + to_string(v, r);
    bool fix2 = d == BeliefPair(p, p);
    bool fix1 = r == p;
    if (fix1 != fix2)
      return "fixpoint status disagrees at P=" + to_string(v, p);
  }
  return "";
}

std::string t2_pred(const Vocabulary& v, const ModalTheory& t) {
  BeliefPair kk = ael::kripke_kleene(v, t).pair;
  if (!is_consistent(kk))
    return "Kripke-Kleene pair " + to_string(v, kk) + " is inconsistent";
  if (!(ael::revise_pair(v, t, kk) == kk))
    return "Kripke-Kleene pair " + to_string(v, kk) + " is not a fixpoint";
  for (const BeliefPair& b : ael::partial_expansions(v, t))
    if (!leq_kn(kk, b))
      return "partial expansion " + to_string(v, b) +
             " is not above the Kripke-Kleene pair " + to_string(v, kk);
  std::vector<WorldSet> exps = ael::expansions_brute(v, t);
  for (const Formula& f : verdict_candidates(t)) {
    FourVal val = eval_four(v, kk, Interpretation{0}, Formula::know(f));
    for (const WorldSet& q : exps) {
      if (val == kTrue4 && !belongs(v, q, f))
        return "K(" + to_string(f) + ") is true at the Kripke-Kleene pair " +
               "but the formula is not in the expansion " + to_string(v, q);
      if (val == kFalse4 && belongs(v, q, f))
        return "K(" + to_string(f) + ") is false at the Kripke-Kleene pair " +
               "but the formula is in the expansion " + to_string(v, q);
    }
  }
  return "";
}

std::string t3_pred(const Vocabulary& v, const ModalTheory& t) {
  for (const WorldSet& p : enumerate_world_sets(v)) {
    bool fix1 = ael::stable_revise(v, t, p) == p;
    bool fix2 = ael::stable_revise_pair(v, t, BeliefPair(p, p)) ==
                BeliefPair(p, p);
    if (fix1 != fix2)
      return "stable fixpoint status disagrees at P=" + to_string(v, p);
  }
  return "";
}

std::string t4_pred(const Vocabulary& v, const ModalTheory& t) {
  BeliefPair wf = ael::well_founded(v, t).pair;
  if (!is_consistent(wf))
    return "well-founded pair " + to_string(v, wf) + " is inconsistent";
  if (!(ael::stable_revise_pair(v, t, wf) == wf))
    return "well-founded pair " + to_string(v, wf) + " is not a fixpoint";
  for (const BeliefPair& b : ael::partial_extensions(v, t))
    if (!leq_kn(wf, b))
      return "partial extension " + to_string(v, b) +
             " is not above the well-founded pair " + to_string(v, wf);
  std::vector<WorldSet> exts = ael::extensions(v, t);
  for (const Formula& f : verdict_candidates(t)) {
    FourVal val = eval_four(v, wf, Interpretation{0}, Formula::know(f));
    for (const WorldSet& q : exts) {
      if (val == kTrue4 && !belongs(v, q, f))
        return "K(" + to_string(f) + ") is true at the well-founded pair " +
               "but the formula is not in the extension " + to_string(v, q);
      if (val == kFalse4 && belongs(v, q, f))
        return "K(" + to_string(f) + ") is false at the well-founded pair " +
               "but the formula is in the extension " + to_string(v, q);
    }
  }
  if (wf.p == wf.s &&
      !(exts.size() == 1 && exts.front() == wf.p))
    return "well-founded pair is complete at " + to_string(v, wf.p) +
           " but the extensions are " + list_world_sets(v, exts);
  return "";
}

std::string t5_pred(const Vocabulary& v, const ModalTheory& t) {
  BeliefPair kk = ael::kripke_kleene(v, t).pair;
  BeliefPair wf = ael::well_founded(v, t).pair;
  if (!leq_kn(kk, wf))
    return "Kripke-Kleene pair " + to_string(v, kk) +
           " is not below the well-founded pair " + to_string(v, wf);
  std::vector<WorldSet> exps = ael::expansions_brute(v, t);
  for (const WorldSet& e : ael::extensions(v, t)) {
    if (std::find(exps.begin(), exps.end(), e) == exps.end())
      return "extension " + to_string(v, e) + " is not an expansion";
    for (const WorldSet& e2 : exps)
      if (!(e2 == e) && leq_w(e2, e))
        return "extension " + to_string(v, e) +
               " is not a minimal expansion: " + to_string(v, e2) +
               " is below it";
  }
  std::vector<BeliefPair> pexps = ael::partial_expansions(v, t);
  for (const BeliefPair& b : ael::partial_extensions(v, t))
    for (const BeliefPair& b2 : pexps)
      if (leq_w(b2.p, b.p) && leq_w(b2.s, b.s) && !(b2 == b))
        return "partial extension " + to_string(v, b) +
               " is not componentwise minimal: " + to_string(v, b2) +
               " is below it";
  return "";
}

// ---- default theorems -----------------------------------------------

std::string t6_pred(const Vocabulary& v, const DefaultTheory& d) {
  for (const WorldSet& q : enumerate_world_sets(v)) {
    BeliefPair b = dl::revise_pair(v, d, BeliefPair(q, q));
    if (!(b.p == b.s))
      return "revision of the complete pair at " + to_string(v, q) +
             " splits into " + to_string(v, b);
  }
  return "";
}

// Weak extensions by their direct closure condition: a candidate Q is a
// weak extension when the facts plus the consequents of exactly the
// defaults whose prerequisite Q entails and none of whose justifications Q
// refutes close back to Q.
std::vector<WorldSet> weak_extensions_direct(const Vocabulary& v,
                                             const DefaultTheory& d) {
  WorldSet facts = WorldSet::all_of(v);
  for (const Formula& f : d.facts) facts &= models_of(v, f);
  std::vector<WorldSet> out;
  for (const WorldSet& q : enumerate_world_sets(v)) {
    WorldSet closure = facts;
    for (const Default& def : d.defaults) {
      bool applies = q.subset_of(models_of(v, def.prerequisite()));
      for (const Formula& just : def.justifications())
        applies = applies && !(q & models_of(v, just)).empty();
      if (applies) closure &= models_of(v, def.consequent());
    }
    if (closure == q) out.push_back(q);
  }
  return out;
}

std::string t7_pred(const Vocabulary& v, const DefaultTheory& d) {
  std::vector<WorldSet> weak = dl::weak_extensions(v, d);
  std::vector<WorldSet> direct = weak_extensions_direct(v, d);
  if (!(weak == direct))
    return "weak extensions " + list_world_sets(v, weak) +
           " differ from the closure-condition list " +
           list_world_sets(v, direct);
  for (const WorldSet& q : enumerate_world_sets(v)) {
    bool fix1 =
        std::find(weak.begin(), weak.end(), q) != weak.end();
    bool fix2 = dl::revise_pair(v, d, BeliefPair(q, q)) == BeliefPair(q, q);
    if (fix1 != fix2)
      return "weak-extension status disagrees with the pair fixpoint at " +
             to_string(v, q);
  }
  return "";
}

std::string t8_pred(const Vocabulary& v, const DefaultTheory& d) {
  BeliefPair kk = dl::kripke_kleene(v, d).pair;
  if (!is_consistent(kk))
    return "Kripke-Kleene pair " + to_string(v, kk) + " is inconsistent";
  std::vector<WorldSet> weak = dl::weak_extensions(v, d);
  // Quantifying over all world sets M covers all objective formulas up to
  // equivalence: P within M reads "every world of P satisfies the formula".
  for (const WorldSet& m : enumerate_world_sets(v)) {
    for (const WorldSet& q : weak) {
      if (kk.p.subset_of(m) && !q.subset_of(m))
        return "the Kripke-Kleene lower bound accepts " + to_string(v, m) +
               " but the weak extension " + to_string(v, q) + " does not";
      if (!kk.s.subset_of(m) && q.subset_of(m))
        return "the Kripke-Kleene upper bound refutes " + to_string(v, m) +
               " but the weak extension " + to_string(v, q) + " accepts it";
    }
  }
  if (kk.p == kk.s && !(weak.size() == 1 && weak.front() == kk.p))
    return "Kripke-Kleene pair is complete at " + to_string(v, kk.p) +
           " but the weak extensions are " + list_world_sets(v, weak);
  return "";
}

std::string t9_pred(const Vocabulary& v, const DefaultTheory& d) {
  std::vector<WorldSet> fix = dl::extensions(v, d);
  std::vector<WorldSet> oracle = dl::extensions_oracle(v, d);
  if (!(fix == oracle))
    return "stable-revision extensions " + list_world_sets(v, fix) +
           " differ from the generate-and-check list " +
           list_world_sets(v, oracle);
  return "";
}

std::string t10_pred(const Vocabulary& v, const DefaultTheory& d) {
  for (const WorldSet& p : enumerate_world_sets(v)) {
    bool fix1 = dl::stable_revise(v, d, p) == p;
    bool fix2 =
        dl::stable_revise_pair(v, d, BeliefPair(p, p)) == BeliefPair(p, p);
    if (fix1 != fix2)
      return "stable fixpoint status disagrees at P=" + to_string(v, p);
  }
  return "";
}

std::string t11_pred(const Vocabulary& v, const DefaultTheory& d) {
  std::vector<WorldSet> sets = enumerate_world_sets(v);
  std::map<std::uint64_t, WorldSet> table;
  for (const WorldSet& q : sets) table.emplace(q.to_bits(), dl::stable_revise(v, d, q));
  for (const WorldSet& a : sets)
    for (const WorldSet& b : sets)
      if (leq_w(a, b) && !leq_w(table.at(b.to_bits()), table.at(a.to_bits())))
        return "stable revision is not antimonotone between " +
               to_string(v, a) + " and " + to_string(v, b);
  for (const BeliefPair& x : enumerate_belief_pairs(v))
    for (const BeliefPair& y : enumerate_belief_pairs(v))
      if (leq_kn(x, y)) {
        BeliefPair fx(table.at(x.s.to_bits()), table.at(x.p.to_bits()));
        BeliefPair fy(table.at(y.s.to_bits()), table.at(y.p.to_bits()));
        if (!leq_kn(fx, fy))
          return "stable pair revision is not monotone between " +
                 to_string(v, x) + " and " + to_string(v, y);
      }
  return "";
}

std::string t12_pred(const Vocabulary& v, const DefaultTheory& d) {
  BeliefPair wf = dl::well_founded(v, d).pair;
  if (!is_consistent(wf))
    return "well-founded pair " + to_string(v, wf) + " is inconsistent";
  for (const BeliefPair& b : dl::partial_extensions(v, d))
    if (!leq_kn(wf, b))
      return "partial extension " + to_string(v, b) +
             " is not above the well-founded pair " + to_string(v, wf);
  std::vector<WorldSet> exts = dl::extensions(v, d);
  for (const WorldSet& m : enumerate_world_sets(v)) {
    for (const WorldSet& q : exts) {
      if (wf.p.subset_of(m) && !q.subset_of(m))
        return "the well-founded lower bound accepts " + to_string(v, m) +
               " but the extension " + to_string(v, q) + " does not";
      if (!wf.s.subset_of(m) && q.subset_of(m))
        return "the well-founded upper bound refutes " + to_string(v, m) +
               " but the extension " + to_string(v, q) + " accepts it";
    }
  }
  if (wf.p == wf.s && !(exts.size() == 1 && exts.front() == wf.p))
    return "well-founded pair is complete at " + to_string(v, wf.p) +
           " but the extensions are " + list_world_sets(v, exts);
  return "";
}

std::string t13_pred(const Vocabulary& v, const DefaultTheory& d) {
  BeliefPair kk = dl::kripke_kleene(v, d).pair;
  BeliefPair wf = dl::well_founded(v, d).pair;
  if (!leq_kn(kk, wf))
    return "Kripke-Kleene pair " + to_string(v, kk) +
           " is not below the well-founded pair " + to_string(v, wf);
  std::vector<WorldSet> weak = dl::weak_extensions(v, d);
  for (const WorldSet& e : dl::extensions(v, d)) {
    if (std::find(weak.begin(), weak.end(), e) == weak.end())
      return "extension " + to_string(v, e) + " is not a weak extension";
    for (const WorldSet& e2 : weak)
      if (!(e2 == e) && leq_w(e2, e))
        return "extension " + to_string(v, e) +
               " is not a minimal weak extension: " + to_string(v, e2) +
               " is below it";
  }
  std::vector<BeliefPair> pweak = dl::partial_weak_extensions(v, d);
  for (const BeliefPair& b : dl::partial_extensions(v, d))
    for (const BeliefPair& b2 : pweak)
      if (leq_w(b2.p, b.p) && leq_w(b2.s, b.s) && !(b2 == b))
        return "partial extension " + to_string(v, b) +
               " is not componentwise minimal: " + to_string(v, b2) +
               " is below it";
  return "";
}

std::string t14_pred(const Vocabulary& v, const DefaultTheory& d) {
  ModalTheory t = konolige(d);
  for (const WorldSet& q : enumerate_world_sets(v)) {
    if (!(ael::revise(v, t, q) == dl::revise(v, d, q)))
      return "revisions differ at " + to_string(v, q);
    if (!(ael::stable_revise(v, t, q) == dl::stable_revise(v, d, q)))
      return "stable revisions differ at " + to_string(v, q);
  }
  for (const BeliefPair& b : enumerate_belief_pairs(v)) {
    if (!(ael::revise_pair(v, t, b) == dl::revise_pair(v, d, b)))
      return "pair revisions differ at " + to_string(v, b);
    if (!(ael::stable_revise_pair(v, t, b) == dl::stable_revise_pair(v, d, b)))
      return "stable pair revisions differ at " + to_string(v, b);
  }
  return "";
}

// ---- program theorem ------------------------------------------------

std::string t15_pred(const Vocabulary& v, const Program& p) {
  lp::EmbeddingReport r = lp::check_embedding(v, p);
  if (r.all_pass()) return "";
  std::string out;
  for (const lp::EmbeddingCheck& c : r.checks)
    if (!c.pass) {
      if (!out.empty()) out += "; ";
      out += c.name + ": " + c.detail;
    }
  return out;
}

// ---- registry --------------------------------------------------------

enum class Kind { Modal, Dflt, Prog };

struct TheoremSpec {
  const char* id;
  const char* title;
  Kind kind;
  std::string (*modal)(const Vocabulary&, const ModalTheory&);
  std::string (*dflt)(const Vocabulary&, const DefaultTheory&);
  std::string (*prog)(const Vocabulary&, const Program&);
};

const TheoremSpec kTheorems[] = {
    {"T1", "modal pair revision agrees with revision on complete pairs",
     Kind::Modal, t1_pred, nullptr, nullptr},
    {"T2",
     "modal Kripke-Kleene pair is a consistent least partial expansion and "
     "decides membership in all expansions",
     Kind::Modal, t2_pred, nullptr, nullptr},
    {"T3", "modal stable fixpoints match complete stable pair fixpoints",
     Kind::Modal, t3_pred, nullptr, nullptr},
    {"T4",
     "modal well-founded pair is a consistent least partial extension, "
     "decides membership in all extensions, and forces uniqueness when "
     "complete",
     Kind::Modal, t4_pred, nullptr, nullptr},
    {"T5",
     "modal Kripke-Kleene is below well-founded and extensions are minimal "
     "expansions",
     Kind::Modal, t5_pred, nullptr, nullptr},
    {"T6", "default pair revision preserves completeness", Kind::Dflt,
     nullptr, t6_pred, nullptr},
    {"T7",
     "default weak extensions match the closure condition and the complete "
     "pair fixpoints",
     Kind::Dflt, nullptr, t7_pred, nullptr},
    {"T8",
     "default Kripke-Kleene pair is consistent, decides membership in weak "
     "extensions, and forces uniqueness when complete",
     Kind::Dflt, nullptr, t8_pred, nullptr},
    {"T9", "default extensions match the generate-and-check oracle",
     Kind::Dflt, nullptr, t9_pred, nullptr},
    {"T10", "default stable fixpoints match complete stable pair fixpoints",
     Kind::Dflt, nullptr, t10_pred, nullptr},
    {"T11",
     "default stable revision is antimonotone and its pair form is "
     "knowledge monotone",
     Kind::Dflt, nullptr, t11_pred, nullptr},
    {"T12",
     "default well-founded pair is a consistent least partial extension, "
     "decides membership in all extensions, and forces uniqueness when "
     "complete",
     Kind::Dflt, nullptr, t12_pred, nullptr},
    {"T13",
     "default Kripke-Kleene is below well-founded and extensions are "
     "minimal weak extensions",
     Kind::Dflt, nullptr, t13_pred, nullptr},
    {"T14",
     "the modal encoding of a default theory induces the same four "
     "operators",
     Kind::Dflt, nullptr, t14_pred, nullptr},
    {"T15", "program semantics survive the default-theory reading",
     Kind::Prog, nullptr, nullptr, t15_pred},
};

const TheoremSpec& find_theorem(const std::string& id) {
  for (const TheoremSpec& t : kTheorems)
    if (id == t.id) return t;
  throw UserError("unknown theorem id: " + id);
}

template <typename Instance, typename GenFn, typename PrintFn,
          typename Pred>
TheoremReport run_samples(std::string id, std::string title,
                          const GenConfig& cfg, GenFn gen, PrintFn print,
                          const Pred& pred) {
  cfg.validate();
  TheoremReport r;
  r.id = std::move(id);
  r.title = std::move(title);
  Vocabulary v = Vocabulary::standard(cfg.atom_count);
  auto start = std::chrono::steady_clock::now();
  for (int k = 0; k < cfg.sample_count; ++k) {
    GenConfig sub = cfg;
    sub.seed = cfg.seed + static_cast<std::uint64_t>(k);
    Instance inst = gen(sub);
    ++r.instances;
    std::string detail = pred(v, inst);
    if (!detail.empty())
      r.failures.push_back({sub.seed, print(inst), std::move(detail)});
  }
  r.seconds = std::chrono::duration<double>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return r;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const TheoremSpec& t : kTheorems) out.emplace_back(t.id);
    return out;
  }();
  return ids;
}

std::string theorem_title(const std::string& id) {
  return find_theorem(id).title;
}

TheoremReport check_modal_property(std::string id, std::string title,
                                   const GenConfig& cfg,
                                   const ModalPredicate& pred) {
  return run_samples<ModalTheory>(
      std::move(id), std::move(title), cfg, gen_modal_theory,
      [](const ModalTheory& t) { return to_string(t); }, pred);
}

TheoremReport check_default_property(std::string id, std::string title,
                                     const GenConfig& cfg,
                                     const DefaultPredicate& pred) {
  return run_samples<DefaultTheory>(
      std::move(id), std::move(title), cfg, gen_default_theory,
      [](const DefaultTheory& d) { return to_string(d); }, pred);
}

TheoremReport check_program_property(std::string id, std::string title,
                                     const GenConfig& cfg,
                                     const ProgramPredicate& pred) {
  return run_samples<Program>(
      std::move(id), std::move(title), cfg, gen_program,
      [](const Program& p) { return to_string(p); }, pred);
}

TheoremReport verify_theorem(const std::string& id, const GenConfig& cfg) {
  const TheoremSpec& t = find_theorem(id);
  switch (t.kind) {
    case Kind::Modal:
      return check_modal_property(t.id, t.title, cfg, t.modal);
    case Kind::Dflt:
      return check_default_property(t.id, t.title, cfg, t.dflt);
    default:
      return check_program_property(t.id, t.title, cfg, t.prog);
  }
}

std::vector<TheoremReport> verify_all(const GenConfig& cfg) {
  std::vector<TheoremReport> out;
  for (const TheoremSpec& t : kTheorems)
    out.push_back(verify_theorem(t.id, cfg));
  return out;
}

std::string to_string(const TheoremReport& r) {
  std::ostringstream out;
  out << r.id << " " << (r.passed() ? "pass" : "FAIL") << " ("
      << r.instances << " instances, " << r.failures.size()
      << " failures, " << r.seconds << " s): " << r.title;
  for (const TheoremFailure& f : r.failures) {
    out << "\n  seed " << f.seed << ": " << f.detail << "\n  instance:";
    std::istringstream lines(f.instance);
    std::string line;
    bool any = false;
    while (std::getline(lines, line)) {
      out << "\n    " << line;
      any = true;
    }
    if (!any) out << " (empty)";
  }
  return out.str();
}

}  // namespace nmlab
