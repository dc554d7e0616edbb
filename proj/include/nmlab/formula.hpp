#ifndef NMLAB_FORMULA_HPP
#define NMLAB_FORMULA_HPP

// Propositional modal formulas and the three input languages of the
// workbench: modal theories, default theories and normal logic programs.
//
// Formulas are immutable trees shared by value. Equality is structural.
// The modal operator K is written as a prefix that binds like negation.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nmlab/error.hpp"

namespace nmlab {

class Formula {
 public:
  enum class Kind : std::uint8_t {
    True,
    False,
    Atom,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Know,
  };

  // Default-constructed formula is the constant "true".
  Formula();

  static Formula truth();
  static Formula falsity();
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula l, Formula r);
  static Formula disjunction(Formula l, Formula r);
  static Formula implication(Formula l, Formula r);
  static Formula equivalence(Formula l, Formula r);
  static Formula know(Formula f);

  Kind kind() const;
  const std::string& atom_name() const;  // Atom nodes only
  Formula child() const;                 // Not / Know nodes
  Formula left() const;                  // binary nodes
  Formula right() const;                 // binary nodes

  bool operator==(const Formula& o) const;  // structural equality
  bool operator!=(const Formula& o) const { return !(*this == o); }
  std::size_t hash() const;

  struct Node;  // defined in formula.cpp

 private:
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// True when the formula contains no modal operator.
bool is_objective(const Formula& f);

// Number of connective nestings; atoms and constants have depth 0.
int formula_depth(const Formula& f);

// Rewrites implications and equivalences into and/or/not form:
// (f -> g) becomes (~f | g), (f <-> g) becomes (~f | g) & (~g | f).
Formula desugar(const Formula& f);

// A default rule "prerequisite : justifications / consequent". All parts
// must be objective and at least one justification is required; a trivial
// justification is written as the constant "true".
class Default {
 public:
  Default(Formula prerequisite, std::vector<Formula> justifications,
          Formula consequent);

  const Formula& prerequisite() const { return prerequisite_; }
  const std::vector<Formula>& justifications() const { return justifications_; }
  const Formula& consequent() const { return consequent_; }

  bool operator==(const Default& o) const;

 private:
  Formula prerequisite_;
  std::vector<Formula> justifications_;
  Formula consequent_;
};

struct ModalTheory {
  std::vector<Formula> formulas;  // duplicates are kept
};

struct DefaultTheory {
  std::vector<Formula> facts;  // objective
  std::vector<Default> defaults;
};

struct Clause {
  std::string head;
  std::vector<std::string> positive;
  std::vector<std::string> negative;
};

struct Program {
  std::vector<Clause> clauses;
};

// Distinct arguments of K occurring anywhere in the theory, in order of
// first occurrence (pre-order, left to right, formula by formula).
std::vector<Formula> modal_subformulas(const ModalTheory& t);

// Atom names in order of first occurrence, deduplicated.
std::vector<std::string> atoms_of(const Formula& f);
std::vector<std::string> atoms_of(const ModalTheory& t);
std::vector<std::string> atoms_of(const DefaultTheory& d);
std::vector<std::string> atoms_of(const Program& p);

// Printers. Formulas print with minimal parentheses and reparse to the
// same tree; theories and programs print in their file formats.
std::string to_string(const Formula& f);
std::string to_string(const Default& d);
std::string to_string(const ModalTheory& t);
std::string to_string(const DefaultTheory& d);
std::string to_string(const Clause& c);
std::string to_string(const Program& p);

}  // namespace nmlab

#endif  // NMLAB_FORMULA_HPP
