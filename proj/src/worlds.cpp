#include "nmlab/worlds.hpp"

#include <algorithm>
#include <cctype>

namespace nmlab {

namespace {

bool valid_atom_name(const std::string& name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  if (name == "true" || name == "false" || name == "not") return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  if (static_cast<int>(atoms_.size()) > kMaxAtoms)
    throw CapError("vocabulary supports at most " + std::to_string(kMaxAtoms) +
                   " atoms (got " + std::to_string(atoms_.size()) + ")");
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!valid_atom_name(atoms_[i]))
      throw UserError("invalid atom name '" + atoms_[i] + "'");
    for (std::size_t j = i + 1; j < atoms_.size(); ++j)
      if (atoms_[i] == atoms_[j])
        throw UserError("duplicate atom '" + atoms_[i] + "' in vocabulary");
  }
}

Vocabulary Vocabulary::standard(int n) {
  static const char* kFirst[] = {"p", "q", "r", "s"};
  std::vector<std::string> atoms;
  for (int i = 0; i < n; ++i)
    atoms.push_back(i < 4 ? kFirst[i] : "a" + std::to_string(i));
  return Vocabulary(std::move(atoms));
}

int Vocabulary::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i] == name) return static_cast<int>(i);
  throw UserError("atom '" + name + "' is not in the vocabulary");
}

bool Vocabulary::contains(const std::string& name) const {
  return std::find(atoms_.begin(), atoms_.end(), name) != atoms_.end();
}

WorldSet WorldSet::none_of(const Vocabulary& v) {
  return WorldSet(v.size(), std::size_t{1} << v.size());
}

WorldSet WorldSet::all_of(const Vocabulary& v) {
  WorldSet q(v.size(), std::size_t{1} << v.size());
  q.bits_.set();
  return q;
}

WorldSet WorldSet::from_bits(const Vocabulary& v, std::uint64_t bits) {
  WorldSet q = none_of(v);
  if (q.width() > 64)
    throw InternalError("from_bits needs a vocabulary of at most 6 atoms");
  for (std::size_t i = 0; i < q.width(); ++i)
    if ((bits >> i) & 1u) q.bits_.set(i);
  return q;
}

void WorldSet::check_same_width(const WorldSet& o) const {
  if (atom_count_ != o.atom_count_)
    throw InternalError("world sets over different vocabularies");
}

bool WorldSet::subset_of(const WorldSet& o) const {
  check_same_width(o);
  return bits_.is_subset_of(o.bits_);
}

std::vector<Interpretation> WorldSet::members() const {
  std::vector<Interpretation> out;
  for (std::size_t i = bits_.find_first(); i != boost::dynamic_bitset<>::npos;
       i = bits_.find_next(i))
    out.push_back(Interpretation{static_cast<std::uint32_t>(i)});
  return out;
}

std::uint64_t WorldSet::to_bits() const {
  if (width() > 64)
    throw InternalError("to_bits needs a vocabulary of at most 6 atoms");
  std::uint64_t out = 0;
  for (std::size_t i = bits_.find_first(); i != boost::dynamic_bitset<>::npos;
       i = bits_.find_next(i))
    out |= std::uint64_t{1} << i;
  return out;
}

WorldSet& WorldSet::operator&=(const WorldSet& o) {
  check_same_width(o);
  bits_ &= o.bits_;
  return *this;
}

WorldSet& WorldSet::operator|=(const WorldSet& o) {
  check_same_width(o);
  bits_ |= o.bits_;
  return *this;
}

WorldSet WorldSet::complement() const {
  WorldSet q = *this;
  q.bits_.flip();
  return q;
}

bool WorldSet::canonical_less(const WorldSet& a, const WorldSet& b) {
  a.check_same_width(b);
  return a.bits_ < b.bits_;  // boost compares numerically
}

bool leq_w(const WorldSet& q1, const WorldSet& q2) { return q2.subset_of(q1); }

bool BeliefPair::canonical_less(const BeliefPair& a, const BeliefPair& b) {
  if (a.p == b.p) return WorldSet::canonical_less(a.s, b.s);
  return WorldSet::canonical_less(a.p, b.p);
}

bool leq_kn(const BeliefPair& b1, const BeliefPair& b2) {
  return b1.s.subset_of(b2.s) && b2.p.subset_of(b1.p);
}

bool is_consistent(const BeliefPair& b) { return b.s.subset_of(b.p); }

bool is_complete(const BeliefPair& b) { return b.p == b.s; }

BeliefPair meet_kn(const BeliefPair& a, const BeliefPair& b) {
  return BeliefPair(a.p | b.p, a.s & b.s);
}

BeliefPair join_kn(const BeliefPair& a, const BeliefPair& b) {
  return BeliefPair(a.p & b.p, a.s | b.s);
}

BeliefPair bottom_kn(const Vocabulary& v) {
  return BeliefPair(WorldSet::all_of(v), WorldSet::none_of(v));
}

std::vector<WorldSet> enumerate_world_sets(const Vocabulary& v) {
  if (v.size() > kEnumerateWorldSetsMaxAtoms)
    throw CapError("world-set enumeration supports at most " +
                   std::to_string(kEnumerateWorldSetsMaxAtoms) + " atoms (got " +
                   std::to_string(v.size()) + ")");
  std::uint64_t total = std::uint64_t{1} << v.interpretation_count();
  std::vector<WorldSet> out;
  out.reserve(total);
  for (std::uint64_t m = 0; m < total; ++m) out.push_back(WorldSet::from_bits(v, m));
  return out;
}

std::vector<BeliefPair> enumerate_belief_pairs(const Vocabulary& v) {
  if (v.size() > kEnumerateBeliefPairsMaxAtoms)
    throw CapError("belief-pair enumeration supports at most " +
                   std::to_string(kEnumerateBeliefPairsMaxAtoms) +
                   " atoms (got " + std::to_string(v.size()) + ")");
  std::uint64_t total = std::uint64_t{1} << v.interpretation_count();
  std::vector<BeliefPair> out;
  out.reserve(total * total);
  for (std::uint64_t mp = 0; mp < total; ++mp) {
    WorldSet p = WorldSet::from_bits(v, mp);
    for (std::uint64_t ms = 0; ms < total; ++ms)
      out.emplace_back(p, WorldSet::from_bits(v, ms));
  }
  return out;
}

std::string to_string(const Vocabulary& v, Interpretation i) {
  std::string out = "{";
  bool first = true;
  for (int a = 0; a < v.size(); ++a) {
    if (!i.truth(a)) continue;
    if (!first) out += ',';
    out += v.atom(a);
    first = false;
  }
  out += '}';
  return out;
}

std::string to_string(const Vocabulary& v, const WorldSet& q) {
  std::string out = "[";
  bool first = true;
  for (Interpretation i : q.members()) {
    if (!first) out += ", ";
    out += to_string(v, i);
    first = false;
  }
  out += ']';
  return out;
}

std::string to_string(const Vocabulary& v, const BeliefPair& b) {
  return "P=" + to_string(v, b.p) + ", S=" + to_string(v, b.s);
}

}  // namespace nmlab
