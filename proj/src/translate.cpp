#include "nmlab/translate.hpp"

namespace nmlab {

Formula konolige(const Default& d) {
  Formula antecedent = Formula::know(d.prerequisite());
  for (const Formula& j : d.justifications())
    antecedent = Formula::conjunction(
        antecedent,
        Formula::negation(Formula::know(Formula::negation(j))));
  return Formula::implication(antecedent, d.consequent());
}

ModalTheory konolige(const DefaultTheory& d) {
  ModalTheory t;
  t.formulas = d.facts;
  for (const Default& dd : d.defaults) t.formulas.push_back(konolige(dd));
  return t;
}

DefaultTheory lp_to_dl(const Program& p) {
  DefaultTheory d;
  for (const Clause& c : p.clauses) {
    Formula pre = Formula::truth();
    for (std::size_t i = 0; i < c.positive.size(); ++i) {
      Formula a = Formula::atom(c.positive[i]);
      pre = i == 0 ? a : Formula::conjunction(pre, a);
    }
    std::vector<Formula> justs;
    for (const std::string& r : c.negative)
      justs.push_back(Formula::negation(Formula::atom(r)));
    if (justs.empty()) justs.push_back(Formula::truth());
    d.defaults.emplace_back(std::move(pre), std::move(justs),
                            Formula::atom(c.head));
  }
  return d;
}

}  // namespace nmlab
