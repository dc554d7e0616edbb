#include "nmlab/truth.hpp"

namespace nmlab {

namespace {

WorldSet atom_models(const Vocabulary& v, int atom_index) {
  WorldSet q = WorldSet::none_of(v);
  std::uint32_t total = v.interpretation_count();
  for (std::uint32_t i = 0; i < total; ++i)
    if ((i >> atom_index) & 1u) q.insert(Interpretation{i});
  return q;
}

[[noreturn]] void reject_modal() {
  throw UserError("modal operator K not allowed in an objective formula");
}

}  // namespace

std::string to_string(FourVal v) {
  if (v == kTrue4) return "t";
  if (v == kFalse4) return "f";
  if (v == kUnknown4) return "u";
  return "i";
}

bool eval_classical(const Vocabulary& v, Interpretation i, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Atom:
      return i.truth(v.index_of(f.atom_name()));
    case Formula::Kind::Not:
      return !eval_classical(v, i, f.child());
    case Formula::Kind::And:
      return eval_classical(v, i, f.left()) && eval_classical(v, i, f.right());
    case Formula::Kind::Or:
      return eval_classical(v, i, f.left()) || eval_classical(v, i, f.right());
    case Formula::Kind::Implies:
      return !eval_classical(v, i, f.left()) || eval_classical(v, i, f.right());
    case Formula::Kind::Iff:
      return eval_classical(v, i, f.left()) == eval_classical(v, i, f.right());
    case Formula::Kind::Know:
      reject_modal();
  }
  throw InternalError("eval_classical: bad kind");
}

WorldSet models_of(const Vocabulary& v, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return WorldSet::all_of(v);
    case Formula::Kind::False:
      return WorldSet::none_of(v);
    case Formula::Kind::Atom:
      return atom_models(v, v.index_of(f.atom_name()));
    case Formula::Kind::Not:
      return models_of(v, f.child()).complement();
    case Formula::Kind::And:
      return models_of(v, f.left()) & models_of(v, f.right());
    case Formula::Kind::Or:
      return models_of(v, f.left()) | models_of(v, f.right());
    case Formula::Kind::Implies:
      return models_of(v, f.left()).complement() | models_of(v, f.right());
    case Formula::Kind::Iff: {
      WorldSet l = models_of(v, f.left());
      WorldSet r = models_of(v, f.right());
      return (l & r) | (l.complement() & r.complement());
    }
    case Formula::Kind::Know:
      reject_modal();
  }
  throw InternalError("models_of: bad kind");
}

bool eval_moore(const Vocabulary& v, const WorldSet& q, Interpretation i,
                const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Atom:
      return i.truth(v.index_of(f.atom_name()));
    case Formula::Kind::Not:
      return !eval_moore(v, q, i, f.child());
    case Formula::Kind::And:
      return eval_moore(v, q, i, f.left()) && eval_moore(v, q, i, f.right());
    case Formula::Kind::Or:
      return eval_moore(v, q, i, f.left()) || eval_moore(v, q, i, f.right());
    case Formula::Kind::Implies:
      return !eval_moore(v, q, i, f.left()) || eval_moore(v, q, i, f.right());
    case Formula::Kind::Iff:
      return eval_moore(v, q, i, f.left()) == eval_moore(v, q, i, f.right());
    case Formula::Kind::Know: {
      std::uint32_t total = v.interpretation_count();
      for (std::uint32_t j = 0; j < total; ++j) {
        Interpretation w{j};
        if (q.contains(w) && !eval_moore(v, q, w, f.child())) return false;
      }
      return true;
    }
  }
  throw InternalError("eval_moore: bad kind");
}

WorldSet moore_mask(const Vocabulary& v, const WorldSet& q, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return WorldSet::all_of(v);
    case Formula::Kind::False:
      return WorldSet::none_of(v);
    case Formula::Kind::Atom:
      return atom_models(v, v.index_of(f.atom_name()));
    case Formula::Kind::Not:
      return moore_mask(v, q, f.child()).complement();
    case Formula::Kind::And:
      return moore_mask(v, q, f.left()) & moore_mask(v, q, f.right());
    case Formula::Kind::Or:
      return moore_mask(v, q, f.left()) | moore_mask(v, q, f.right());
    case Formula::Kind::Implies:
      return moore_mask(v, q, f.left()).complement() | moore_mask(v, q, f.right());
    case Formula::Kind::Iff: {
      WorldSet l = moore_mask(v, q, f.left());
      WorldSet r = moore_mask(v, q, f.right());
      return (l & r) | (l.complement() & r.complement());
    }
    case Formula::Kind::Know:
      return q.subset_of(moore_mask(v, q, f.child())) ? WorldSet::all_of(v)
                                                      : WorldSet::none_of(v);
  }
  throw InternalError("moore_mask: bad kind");
}

bool eval_conservative(const Vocabulary& v, const BeliefPair& b,
                       Interpretation i, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Atom:
      return i.truth(v.index_of(f.atom_name()));
    case Formula::Kind::Not:
      return !eval_conservative(v, b.swapped(), i, f.child());
    case Formula::Kind::And:
      return eval_conservative(v, b, i, f.left()) &&
             eval_conservative(v, b, i, f.right());
    case Formula::Kind::Or:
      return eval_conservative(v, b, i, f.left()) ||
             eval_conservative(v, b, i, f.right());
    case Formula::Kind::Implies:
      return !eval_conservative(v, b.swapped(), i, f.left()) ||
             eval_conservative(v, b, i, f.right());
    case Formula::Kind::Iff:
      return (!eval_conservative(v, b.swapped(), i, f.left()) ||
              eval_conservative(v, b, i, f.right())) &&
             (!eval_conservative(v, b.swapped(), i, f.right()) ||
              eval_conservative(v, b, i, f.left()));
    case Formula::Kind::Know: {
      std::uint32_t total = v.interpretation_count();
      for (std::uint32_t j = 0; j < total; ++j) {
        Interpretation w{j};
        if (b.p.contains(w) && !eval_conservative(v, b, w, f.child()))
          return false;
      }
      return true;
    }
  }
  throw InternalError("eval_conservative: bad kind");
}

WorldSet conservative_mask(const Vocabulary& v, const BeliefPair& b,
                           const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return WorldSet::all_of(v);
    case Formula::Kind::False:
      return WorldSet::none_of(v);
    case Formula::Kind::Atom:
      return atom_models(v, v.index_of(f.atom_name()));
    case Formula::Kind::Not:
      return conservative_mask(v, b.swapped(), f.child()).complement();
    case Formula::Kind::And:
      return conservative_mask(v, b, f.left()) & conservative_mask(v, b, f.right());
    case Formula::Kind::Or:
      return conservative_mask(v, b, f.left()) | conservative_mask(v, b, f.right());
    case Formula::Kind::Implies:
      return conservative_mask(v, b.swapped(), f.left()).complement() |
             conservative_mask(v, b, f.right());
    case Formula::Kind::Iff:
      return (conservative_mask(v, b.swapped(), f.left()).complement() |
              conservative_mask(v, b, f.right())) &
             (conservative_mask(v, b.swapped(), f.right()).complement() |
              conservative_mask(v, b, f.left()));
    case Formula::Kind::Know:
      return b.p.subset_of(conservative_mask(v, b, f.child()))
                 ? WorldSet::all_of(v)
                 : WorldSet::none_of(v);
  }
  throw InternalError("conservative_mask: bad kind");
}

FourVal eval_four(const Vocabulary& v, const BeliefPair& b, Interpretation i,
                  const Formula& f) {
  return FourVal{eval_conservative(v, b, i, f),
                 eval_conservative(v, b.swapped(), i, f)};
}

bool eval_default(const Vocabulary& v, const BeliefPair& b, Interpretation i,
                  const Default& d) {
  std::uint32_t total = v.interpretation_count();
  for (std::uint32_t j = 0; j < total; ++j) {
    Interpretation w{j};
    if (b.s.contains(w) && !eval_classical(v, w, d.prerequisite())) return true;
  }
  for (const Formula& just : d.justifications()) {
    bool refuted_everywhere = true;
    for (std::uint32_t j = 0; j < total && refuted_everywhere; ++j) {
      Interpretation w{j};
      if (b.p.contains(w) && eval_classical(v, w, just))
        refuted_everywhere = false;
    }
    if (refuted_everywhere) return true;
  }
  return eval_classical(v, i, d.consequent());
}

WorldSet default_mask(const Vocabulary& v, const BeliefPair& b,
                      const Default& d) {
  bool fires_vacuously = !b.s.subset_of(models_of(v, d.prerequisite()));
  if (!fires_vacuously) {
    for (const Formula& just : d.justifications())
      if ((b.p & models_of(v, just)).empty()) {
        fires_vacuously = true;
        break;
      }
  }
  if (fires_vacuously) return WorldSet::all_of(v);
  return models_of(v, d.consequent());
}

bool entails(const Vocabulary& v, const WorldSet& q, const Formula& f) {
  return q.subset_of(models_of(v, f));
}

}  // namespace nmlab
