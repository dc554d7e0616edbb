#include "nmlab/formula.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace nmlab {

struct Formula::Node {
  Kind kind;
  std::string name;                // Atom
  std::shared_ptr<const Node> a;   // unary child / binary left
  std::shared_ptr<const Node> b;   // binary right
};

namespace {

std::shared_ptr<const Formula::Node> make_node(Formula::Kind k, std::string name,
                                               std::shared_ptr<const Formula::Node> a,
                                               std::shared_ptr<const Formula::Node> b) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = k;
  n->name = std::move(name);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

}  // namespace

Formula::Formula() : node_(make_node(Kind::True, {}, nullptr, nullptr)) {}
Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::truth() { return Formula(); }

Formula Formula::falsity() {
  return Formula(make_node(Kind::False, {}, nullptr, nullptr));
}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw UserError("empty atom name");
  return Formula(make_node(Kind::Atom, std::move(name), nullptr, nullptr));
}

Formula Formula::negation(Formula f) {
  return Formula(make_node(Kind::Not, {}, f.node_, nullptr));
}

Formula Formula::conjunction(Formula l, Formula r) {
  return Formula(make_node(Kind::And, {}, l.node_, r.node_));
}

Formula Formula::disjunction(Formula l, Formula r) {
  return Formula(make_node(Kind::Or, {}, l.node_, r.node_));
}

Formula Formula::implication(Formula l, Formula r) {
  return Formula(make_node(Kind::Implies, {}, l.node_, r.node_));
}

Formula Formula::equivalence(Formula l, Formula r) {
  return Formula(make_node(Kind::Iff, {}, l.node_, r.node_));
}

Formula Formula::know(Formula f) {
  return Formula(make_node(Kind::Know, {}, f.node_, nullptr));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::atom_name() const {
  if (node_->kind != Kind::Atom) throw InternalError("atom_name on non-atom");
  return node_->name;
}

Formula Formula::child() const {
  if (node_->kind != Kind::Not && node_->kind != Kind::Know)
    throw InternalError("child on non-unary formula");
  return Formula(node_->a);
}

Formula Formula::left() const {
  if (!node_->b) throw InternalError("left on non-binary formula");
  return Formula(node_->a);
}

Formula Formula::right() const {
  if (!node_->b) throw InternalError("right on non-binary formula");
  return Formula(node_->b);
}

bool Formula::operator==(const Formula& o) const {
  std::function<bool(const Node*, const Node*)> eq = [&](const Node* x,
                                                         const Node* y) {
    if (x == y) return true;
    if (x->kind != y->kind || x->name != y->name) return false;
    if (!!x->a != !!y->a || !!x->b != !!y->b) return false;
    if (x->a && !eq(x->a.get(), y->a.get())) return false;
    if (x->b && !eq(x->b.get(), y->b.get())) return false;
    return true;
  };
  return eq(node_.get(), o.node_.get());
}

std::size_t Formula::hash() const {
  std::function<std::size_t(const Node*)> h = [&](const Node* n) -> std::size_t {
    std::size_t seed = static_cast<std::size_t>(n->kind) * 0x9e3779b97f4a7c15ull;
    if (!n->name.empty()) seed ^= std::hash<std::string>{}(n->name);
    if (n->a) seed = seed * 31 + h(n->a.get());
    if (n->b) seed = seed * 37 + h(n->b.get());
    return seed;
  };
  return h(node_.get());
}

bool is_objective(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Atom:
      return true;
    case Formula::Kind::Not:
      return is_objective(f.child());
    case Formula::Kind::Know:
      return false;
    default:
      return is_objective(f.left()) && is_objective(f.right());
  }
}

int formula_depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Atom:
      return 0;
    case Formula::Kind::Not:
    case Formula::Kind::Know:
      return 1 + formula_depth(f.child());
    default:
      return 1 + std::max(formula_depth(f.left()), formula_depth(f.right()));
  }
}

Formula desugar(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Atom:
      return f;
    case Formula::Kind::Not:
      return Formula::negation(desugar(f.child()));
    case Formula::Kind::Know:
      return Formula::know(desugar(f.child()));
    case Formula::Kind::And:
      return Formula::conjunction(desugar(f.left()), desugar(f.right()));
    case Formula::Kind::Or:
      return Formula::disjunction(desugar(f.left()), desugar(f.right()));
    case Formula::Kind::Implies:
      return Formula::disjunction(Formula::negation(desugar(f.left())),
                                  desugar(f.right()));
    case Formula::Kind::Iff: {
      Formula l = desugar(f.left());
      Formula r = desugar(f.right());
      return Formula::conjunction(
          Formula::disjunction(Formula::negation(l), r),
          Formula::disjunction(Formula::negation(r), l));
    }
  }
  throw InternalError("desugar: bad kind");
}

Default::Default(Formula prerequisite, std::vector<Formula> justifications,
                 Formula consequent)
    : prerequisite_(std::move(prerequisite)),
      justifications_(std::move(justifications)),
      consequent_(std::move(consequent)) {
  if (justifications_.empty())
    throw UserError("a default needs at least one justification");
  if (!is_objective(prerequisite_) || !is_objective(consequent_))
    throw UserError("modal operator not allowed in a default");
  for (const Formula& j : justifications_)
    if (!is_objective(j)) throw UserError("modal operator not allowed in a default");
}

bool Default::operator==(const Default& o) const {
  return prerequisite_ == o.prerequisite_ && consequent_ == o.consequent_ &&
         justifications_ == o.justifications_;
}

namespace {

void collect_modal_args(const Formula& f, std::vector<Formula>& out) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Atom:
      return;
    case Formula::Kind::Not:
      collect_modal_args(f.child(), out);
      return;
    case Formula::Kind::Know: {
      Formula arg = f.child();
      bool seen = false;
      for (const Formula& g : out)
        if (g == arg) {
          seen = true;
          break;
        }
      if (!seen) out.push_back(arg);
      collect_modal_args(arg, out);
      return;
    }
    default:
      collect_modal_args(f.left(), out);
      collect_modal_args(f.right(), out);
  }
}

void collect_atoms(const Formula& f, std::vector<std::string>& order,
                   std::set<std::string>& seen) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return;
    case Formula::Kind::Atom:
      if (seen.insert(f.atom_name()).second) order.push_back(f.atom_name());
      return;
    case Formula::Kind::Not:
    case Formula::Kind::Know:
      collect_atoms(f.child(), order, seen);
      return;
    default:
      collect_atoms(f.left(), order, seen);
      collect_atoms(f.right(), order, seen);
  }
}

void collect_name(const std::string& name, std::vector<std::string>& order,
                  std::set<std::string>& seen) {
  if (seen.insert(name).second) order.push_back(name);
}

}  // namespace

std::vector<Formula> modal_subformulas(const ModalTheory& t) {
  std::vector<Formula> out;
  for (const Formula& f : t.formulas) collect_modal_args(f, out);
  return out;
}

std::vector<std::string> atoms_of(const Formula& f) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  collect_atoms(f, order, seen);
  return order;
}

std::vector<std::string> atoms_of(const ModalTheory& t) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const Formula& f : t.formulas) collect_atoms(f, order, seen);
  return order;
}

std::vector<std::string> atoms_of(const DefaultTheory& d) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const Formula& f : d.facts) collect_atoms(f, order, seen);
  for (const Default& dd : d.defaults) {
    collect_atoms(dd.prerequisite(), order, seen);
    for (const Formula& j : dd.justifications()) collect_atoms(j, order, seen);
    collect_atoms(dd.consequent(), order, seen);
  }
  return order;
}

std::vector<std::string> atoms_of(const Program& p) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const Clause& c : p.clauses) {
    collect_name(c.head, order, seen);
    for (const std::string& a : c.positive) collect_name(a, order, seen);
    for (const std::string& a : c.negative) collect_name(a, order, seen);
  }
  return order;
}

namespace {

// Precedence levels used by both the printer and the parser:
// <-> = 1 (right), -> = 2 (right), | = 3 (left), & = 4 (left), ~/K = 5.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff:
      return 1;
    case Formula::Kind::Implies:
      return 2;
    case Formula::Kind::Or:
      return 3;
    case Formula::Kind::And:
      return 4;
    case Formula::Kind::Not:
    case Formula::Kind::Know:
      return 5;
    default:
      return 6;
  }
}

void print(const Formula& f, int min_prec, std::string& out) {
  int prec = precedence(f.kind());
  bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::True:
      out += "true";
      break;
    case Formula::Kind::False:
      out += "false";
      break;
    case Formula::Kind::Atom:
      out += f.atom_name();
      break;
    case Formula::Kind::Not:
      out += '~';
      print(f.child(), 5, out);
      break;
    case Formula::Kind::Know:
      out += 'K';
      print(f.child(), 5, out);
      break;
    case Formula::Kind::And:
      print(f.left(), 4, out);
      out += " & ";
      print(f.right(), 5, out);
      break;
    case Formula::Kind::Or:
      print(f.left(), 3, out);
      out += " | ";
      print(f.right(), 4, out);
      break;
    case Formula::Kind::Implies:
      print(f.left(), 3, out);
      out += " -> ";
      print(f.right(), 2, out);
      break;
    case Formula::Kind::Iff:
      print(f.left(), 2, out);
      out += " <-> ";
      print(f.right(), 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

std::string to_string(const Default& d) {
  std::string out = to_string(d.prerequisite());
  out += " : ";
  for (std::size_t i = 0; i < d.justifications().size(); ++i) {
    if (i) out += ", ";
    out += to_string(d.justifications()[i]);
  }
  out += " / ";
  out += to_string(d.consequent());
  out += '.';
  return out;
}

std::string to_string(const ModalTheory& t) {
  std::string out;
  for (const Formula& f : t.formulas) {
    out += to_string(f);
    out += '\n';
  }
  return out;
}

std::string to_string(const DefaultTheory& d) {
  std::string out;
  if (!d.facts.empty()) {
    out += "W:\n";
    for (const Formula& f : d.facts) {
      out += to_string(f);
      out += '\n';
    }
  }
  if (!d.defaults.empty()) {
    out += "D:\n";
    for (const Default& dd : d.defaults) {
      out += to_string(dd);
      out += '\n';
    }
  }
  return out;
}

std::string to_string(const Clause& c) {
  std::string out = c.head;
  if (!c.positive.empty() || !c.negative.empty()) {
    out += " :- ";
    bool first = true;
    for (const std::string& a : c.positive) {
      if (!first) out += ", ";
      out += a;
      first = false;
    }
    for (const std::string& a : c.negative) {
      if (!first) out += ", ";
      out += "not ";
      out += a;
      first = false;
    }
  }
  out += '.';
  return out;
}

std::string to_string(const Program& p) {
  std::string out;
  for (const Clause& c : p.clauses) {
    out += to_string(c);
    out += '\n';
  }
  return out;
}

}  // namespace nmlab
