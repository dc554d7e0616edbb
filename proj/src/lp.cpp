#include "nmlab/lp.hpp"

#include <algorithm>
#include <utility>

#include "nmlab/dl.hpp"
#include "nmlab/translate.hpp"
#include "nmlab/truth.hpp"

namespace nmlab::lp {

namespace {

struct MaskClause {
  int head;
  std::uint32_t positive;
  std::uint32_t negative;
};

std::vector<MaskClause> compile(const Vocabulary& v, const Program& p) {
  std::vector<MaskClause> out;
  out.reserve(p.clauses.size());
  for (const Clause& c : p.clauses) {
    MaskClause mc{v.index_of(c.head), 0, 0};
    for (const std::string& a : c.positive) mc.positive |= 1u << v.index_of(a);
    for (const std::string& a : c.negative) mc.negative |= 1u << v.index_of(a);
    out.push_back(mc);
  }
  return out;
}

void check_model_cap(const Vocabulary& v) {
  if (v.size() > kModelListMaxAtoms)
    throw CapError("model enumeration supports at most " +
                   std::to_string(kModelListMaxAtoms) + " atoms (got " +
                   std::to_string(v.size()) + ")");
}

// Least model of the positive program left over after removing every
// clause blocked by the frozen set.
AtomSet reduct_least_model(const Vocabulary& v, const Program& p,
                           AtomSet frozen) {
  std::vector<std::pair<int, std::uint32_t>> reduct;
  for (const Clause& c : p.clauses) {
    bool blocked = false;
    for (const std::string& a : c.negative)
      if (frozen.contains(v.index_of(a))) {
        blocked = true;
        break;
      }
    if (blocked) continue;
    std::uint32_t body = 0;
    for (const std::string& a : c.positive) body |= 1u << v.index_of(a);
    reduct.emplace_back(v.index_of(c.head), body);
  }
  AtomSet m;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [head, body] : reduct)
      if ((body & ~m.bits) == 0 && !m.contains(head)) {
        m.insert(head);
        changed = true;
      }
  }
  return m;
}

}  // namespace

bool leq_kn(const AtomPair& a, const AtomPair& b) {
  return a.lower.subset_of(b.lower) && b.upper.subset_of(a.upper);
}

bool is_consistent(const AtomPair& a) { return a.lower.subset_of(a.upper); }

bool is_complete(const AtomPair& a) { return a.lower == a.upper; }

AtomSet all_atoms(const Vocabulary& v) {
  AtomSet a;
  for (int i = 0; i < v.size(); ++i) a.insert(i);
  return a;
}

AtomSet step(const Vocabulary& v, const Program& p, AtomSet i) {
  AtomSet out;
  for (const MaskClause& c : compile(v, p))
    if ((c.positive & ~i.bits) == 0 && (c.negative & i.bits) == 0)
      out.insert(c.head);
  return out;
}

AtomPair step_pair(const Vocabulary& v, const Program& p, const AtomPair& a) {
  AtomPair out;
  for (const MaskClause& c : compile(v, p)) {
    if ((c.positive & ~a.lower.bits) == 0 && (c.negative & a.upper.bits) == 0)
      out.lower.insert(c.head);
    if ((c.positive & ~a.upper.bits) == 0 && (c.negative & a.lower.bits) == 0)
      out.upper.insert(c.head);
  }
  return out;
}

AtomSet stable_revise(const Vocabulary& v, const Program& p, AtomSet s) {
  std::vector<MaskClause> clauses = compile(v, p);
  AtomSet x;
  int cap = v.size() + 2;
  for (int iter = 0; iter < cap; ++iter) {
    AtomSet next;
    for (const MaskClause& c : clauses)
      if ((c.positive & ~x.bits) == 0 && (c.negative & s.bits) == 0)
        next.insert(c.head);
    if (next == x) return x;
    x = next;
  }
  throw InternalError("stable revision did not reach a fixpoint within its cap");
}

namespace {

template <class Op>
LpFixpoint iterate_pair(const Vocabulary& v, const Op& op) {
  int cap = 2 * v.size() + 2;
  LpFixpoint out;
  out.pair = AtomPair{AtomSet{}, all_atoms(v)};
  for (out.iterations = 1; out.iterations <= cap; ++out.iterations) {
    AtomPair next = op(out.pair);
    if (next == out.pair) return out;
    out.pair = next;
  }
  throw InternalError("pair iteration did not reach a fixpoint within its cap");
}

}  // namespace

LpFixpoint kripke_kleene(const Vocabulary& v, const Program& p) {
  return iterate_pair(v, [&](const AtomPair& a) { return step_pair(v, p, a); });
}

LpFixpoint well_founded(const Vocabulary& v, const Program& p) {
  return iterate_pair(v, [&](const AtomPair& a) {
    return AtomPair{stable_revise(v, p, a.upper), stable_revise(v, p, a.lower)};
  });
}

std::vector<AtomSet> supported_models(const Vocabulary& v, const Program& p) {
  check_model_cap(v);
  std::vector<AtomSet> out;
  for (std::uint32_t m = 0; m < (1u << v.size()); ++m)
    if (step(v, p, AtomSet{m}) == AtomSet{m}) out.push_back(AtomSet{m});
  return out;
}

std::vector<AtomSet> stable_models(const Vocabulary& v, const Program& p) {
  check_model_cap(v);
  std::vector<AtomSet> out;
  for (std::uint32_t m = 0; m < (1u << v.size()); ++m)
    if (stable_revise(v, p, AtomSet{m}) == AtomSet{m}) out.push_back(AtomSet{m});
  return out;
}

std::vector<AtomSet> gl_models(const Vocabulary& v, const Program& p) {
  check_model_cap(v);
  std::vector<AtomSet> out;
  for (std::uint32_t m = 0; m < (1u << v.size()); ++m)
    if (reduct_least_model(v, p, AtomSet{m}) == AtomSet{m})
      out.push_back(AtomSet{m});
  return out;
}

AtomPair alternating_fixpoint(const Vocabulary& v, const Program& p) {
  AtomSet x;
  AtomSet y = reduct_least_model(v, p, x);
  int cap = 2 * v.size() + 4;
  for (int iter = 0; iter < cap; ++iter) {
    AtomSet nx = reduct_least_model(v, p, y);
    AtomSet ny = reduct_least_model(v, p, nx);
    if (nx == x && ny == y) return AtomPair{x, y};
    x = nx;
    y = ny;
  }
  throw InternalError("alternating sequence did not converge within its cap");
}

bool EmbeddingReport::all_pass() const {
  for (const EmbeddingCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

WorldSet worlds_of_atom_set(const Vocabulary& v, AtomSet m) {
  WorldSet out = WorldSet::all_of(v);
  for (int i = 0; i < v.size(); ++i)
    if (m.contains(i)) out &= models_of(v, Formula::atom(v.atom(i)));
  return out;
}

bool same_world_sets(const Vocabulary& v, std::vector<WorldSet> a,
                     std::vector<WorldSet> b, std::string& detail) {
  std::sort(a.begin(), a.end(), WorldSet::canonical_less);
  std::sort(b.begin(), b.end(), WorldSet::canonical_less);
  if (a == b) return true;
  detail = "program side has " + std::to_string(a.size()) +
           " model(s), default side " + std::to_string(b.size());
  for (const WorldSet& q : a) {
    if (std::find(b.begin(), b.end(), q) == b.end()) {
      detail += "; only the program side yields " + to_string(v, q);
      break;
    }
  }
  for (const WorldSet& q : b) {
    if (std::find(a.begin(), a.end(), q) == a.end()) {
      detail += "; only the default side yields " + to_string(v, q);
      break;
    }
  }
  return false;
}

bool verdicts_match(const Vocabulary& v, const AtomPair& lp_pair,
                    const BeliefPair& dl_pair, std::string& detail) {
  for (int i = 0; i < v.size(); ++i) {
    Formula a = Formula::atom(v.atom(i));
    bool lower_here = lp_pair.lower.contains(i);
    bool lower_there = entails(v, dl_pair.p, a);
    bool upper_here = lp_pair.upper.contains(i);
    bool upper_there = entails(v, dl_pair.s, a);
    if (lower_here != lower_there || upper_here != upper_there) {
      detail = "atom '" + v.atom(i) + "': program verdict (" +
               (lower_here ? "t" : "f") + "," + (upper_here ? "t" : "f") +
               "), default-side entailment (" + (lower_there ? "t" : "f") +
               "," + (upper_there ? "t" : "f") + ")";
      return false;
    }
  }
  return true;
}

}  // namespace

EmbeddingReport check_embedding(const Vocabulary& v, const Program& p) {
  if (v.size() > 4)
    throw CapError("embedding check supports at most 4 atoms (got " +
                   std::to_string(v.size()) + ")");
  DefaultTheory d = lp_to_dl(p);
  EmbeddingReport report;
  report.note =
      "kk/wf sub-checks read atom verdicts as entailment in the "
      "corresponding pair component (reconstructed alignment)";

  {
    std::vector<WorldSet> lhs;
    for (AtomSet m : stable_models(v, p)) lhs.push_back(worlds_of_atom_set(v, m));
    std::string detail;
    bool ok = same_world_sets(v, lhs, dl::extensions(v, d), detail);
    report.checks.push_back({"stable-models-vs-extensions", ok, detail});
  }
  {
    std::vector<WorldSet> lhs;
    for (AtomSet m : supported_models(v, p))
      lhs.push_back(worlds_of_atom_set(v, m));
    std::string detail;
    bool ok = same_world_sets(v, lhs, dl::weak_extensions(v, d), detail);
    report.checks.push_back({"supported-models-vs-weak-extensions", ok, detail});
  }
  {
    std::string detail;
    bool ok = verdicts_match(v, kripke_kleene(v, p).pair,
                             dl::kripke_kleene(v, d).pair, detail);
    report.checks.push_back({"kripke-kleene-atom-verdicts", ok, detail});
  }
  {
    std::string detail;
    bool ok = verdicts_match(v, well_founded(v, p).pair,
                             dl::well_founded(v, d).pair, detail);
    report.checks.push_back({"well-founded-atom-verdicts", ok, detail});
  }
  return report;
}

std::string to_string(const Vocabulary& v, AtomSet a) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < v.size(); ++i) {
    if (!a.contains(i)) continue;
    if (!first) out += ',';
    out += v.atom(i);
    first = false;
  }
  out += '}';
  return out;
}

std::string to_string(const Vocabulary& v, const AtomPair& a) {
  return "lower=" + to_string(v, a.lower) + ", upper=" + to_string(v, a.upper);
}

}  // namespace nmlab::lp
