#include "nmlab/gen.hpp"

namespace nmlab {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

}  // namespace

void GenConfig::validate() const {
  if (atom_count < 1 || atom_count > Vocabulary::kMaxAtoms)
    throw UserError("atom count must be between 1 and " +
                    std::to_string(Vocabulary::kMaxAtoms));
  if (max_depth < 0 || max_depth > 8)
    throw UserError("formula depth must be between 0 and 8");
  if (theory_size < 0 || default_count < 0 || clause_count < 0)
    throw UserError("instance sizes must not be negative");
  if (sample_count < 1) throw UserError("sample count must be positive");
}

Formula gen_formula(std::mt19937_64& rng, const Vocabulary& v, int depth,
                    bool allow_modal) {
  if (depth <= 0 || v.size() == 0) {
    switch (v.size() == 0 ? 1 + draw(rng, 2) : draw(rng, 3)) {
      case 0:
        return Formula::atom(v.atom(static_cast<int>(draw(rng, v.size()))));
      case 1:
        return Formula::truth();
      default:
        return Formula::falsity();
    }
  }
  switch (draw(rng, allow_modal ? 9 : 8)) {
    case 0:
      return Formula::atom(v.atom(static_cast<int>(draw(rng, v.size()))));
    case 1:
      return Formula::truth();
    case 2:
      return Formula::falsity();
    case 3:
      return Formula::negation(gen_formula(rng, v, depth - 1, allow_modal));
    case 4:
      return Formula::conjunction(gen_formula(rng, v, depth - 1, allow_modal),
                                  gen_formula(rng, v, depth - 1, allow_modal));
    case 5:
      return Formula::disjunction(gen_formula(rng, v, depth - 1, allow_modal),
                                  gen_formula(rng, v, depth - 1, allow_modal));
    case 6:
      return Formula::implication(gen_formula(rng, v, depth - 1, allow_modal),
                                  gen_formula(rng, v, depth - 1, allow_modal));
    case 7:
      return Formula::equivalence(gen_formula(rng, v, depth - 1, allow_modal),
                                  gen_formula(rng, v, depth - 1, allow_modal));
    default:
      return Formula::know(gen_formula(rng, v, depth - 1, allow_modal));
  }
}

ModalTheory gen_modal_theory(const GenConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  Vocabulary v = Vocabulary::standard(cfg.atom_count);
  ModalTheory t;
  std::uint64_t size = draw(rng, static_cast<std::uint64_t>(cfg.theory_size) + 1);
  for (std::uint64_t i = 0; i < size; ++i)
    t.formulas.push_back(gen_formula(rng, v, cfg.max_depth, true));
  return t;
}

DefaultTheory gen_default_theory(const GenConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  Vocabulary v = Vocabulary::standard(cfg.atom_count);
  DefaultTheory d;
  std::uint64_t facts = draw(rng, static_cast<std::uint64_t>(cfg.theory_size) + 1);
  for (std::uint64_t i = 0; i < facts; ++i)
    d.facts.push_back(gen_formula(rng, v, cfg.max_depth, false));
  std::uint64_t defaults =
      draw(rng, static_cast<std::uint64_t>(cfg.default_count) + 1);
  for (std::uint64_t i = 0; i < defaults; ++i) {
    Formula pre = gen_formula(rng, v, cfg.max_depth, false);
    std::vector<Formula> justs;
    std::uint64_t count = 1 + draw(rng, 2);
    for (std::uint64_t j = 0; j < count; ++j)
      justs.push_back(gen_formula(rng, v, cfg.max_depth, false));
    Formula cons = gen_formula(rng, v, cfg.max_depth, false);
    d.defaults.emplace_back(std::move(pre), std::move(justs), std::move(cons));
  }
  return d;
}

Program gen_program(const GenConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  Vocabulary v = Vocabulary::standard(cfg.atom_count);
  Program p;
  std::uint64_t clauses =
      draw(rng, static_cast<std::uint64_t>(cfg.clause_count) + 1);
  for (std::uint64_t i = 0; i < clauses; ++i) {
    Clause c;
    c.head = v.atom(static_cast<int>(draw(rng, v.size())));
    for (int a = 0; a < v.size(); ++a) {
      switch (draw(rng, 3)) {
        case 0:
          c.positive.push_back(v.atom(a));
          break;
        case 1:
          c.negative.push_back(v.atom(a));
          break;
        default:
          break;
      }
    }
    p.clauses.push_back(std::move(c));
  }
  return p;
}

}  // namespace nmlab
