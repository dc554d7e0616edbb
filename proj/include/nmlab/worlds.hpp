#ifndef NMLAB_WORLDS_HPP
#define NMLAB_WORLDS_HPP

// Possible-world structures over a finite propositional vocabulary.
//
// An interpretation is an assignment of truth values to the n vocabulary
// atoms, identified with the integer whose i-th bit gives the value of
// atom i. A WorldSet is a set of interpretations, stored as a bit vector
// of width 2^n. World sets are ordered by reverse inclusion ("leq_w"):
// smaller sets carry more knowledge. A BeliefPair (P, S) approximates a
// world set from both sides, P conservative and S liberal; pairs are
// ordered by the knowledge ordering "leq_kn". Inconsistent pairs (S not
// within P) are legal values.

#include <boost/dynamic_bitset.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "nmlab/error.hpp"

namespace nmlab {

class Vocabulary {
 public:
  static constexpr int kMaxAtoms = 20;

  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> atoms);

  // p, q, r, s, then a4, a5, ... for larger n.
  static Vocabulary standard(int n);

  int size() const { return static_cast<int>(atoms_.size()); }
  std::uint32_t interpretation_count() const { return 1u << atoms_.size(); }
  const std::string& atom(int i) const { return atoms_.at(i); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  int index_of(const std::string& name) const;  // throws UserError
  bool contains(const std::string& name) const;
  bool operator==(const Vocabulary& o) const { return atoms_ == o.atoms_; }

 private:
  std::vector<std::string> atoms_;
};

struct Interpretation {
  std::uint32_t index = 0;
  bool truth(int atom_index) const { return (index >> atom_index) & 1u; }
  auto operator<=>(const Interpretation&) const = default;
};

class WorldSet {
 public:
  // Width-1 empty set over the empty vocabulary.
  WorldSet() : bits_(1) {}

  static WorldSet none_of(const Vocabulary& v);
  static WorldSet all_of(const Vocabulary& v);
  // Membership mask as an integer; only for widths up to 64 bits.
  static WorldSet from_bits(const Vocabulary& v, std::uint64_t bits);

  int atom_count() const { return atom_count_; }
  std::size_t width() const { return bits_.size(); }

  bool contains(Interpretation i) const { return bits_.test(i.index); }
  void insert(Interpretation i) { bits_.set(i.index); }
  void erase(Interpretation i) { bits_.reset(i.index); }

  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool full() const { return bits_.all(); }

  bool subset_of(const WorldSet& o) const;
  std::vector<Interpretation> members() const;
  std::uint64_t to_bits() const;

  WorldSet& operator&=(const WorldSet& o);
  WorldSet& operator|=(const WorldSet& o);
  friend WorldSet operator&(WorldSet a, const WorldSet& b) { return a &= b; }
  friend WorldSet operator|(WorldSet a, const WorldSet& b) { return a |= b; }
  WorldSet complement() const;

  bool operator==(const WorldSet& o) const {
    return atom_count_ == o.atom_count_ && bits_ == o.bits_;
  }

  // Numeric order of the membership bit vector; the canonical order for
  // result lists.
  static bool canonical_less(const WorldSet& a, const WorldSet& b);

 private:
  WorldSet(int atom_count, std::size_t width) : atom_count_(atom_count), bits_(width) {}
  void check_same_width(const WorldSet& o) const;

  int atom_count_ = 0;
  boost::dynamic_bitset<> bits_;
};

// Reverse inclusion: q1 carries at least as much knowledge as q2 demands.
bool leq_w(const WorldSet& q1, const WorldSet& q2);

struct BeliefPair {
  WorldSet p;  // conservative bound
  WorldSet s;  // liberal bound

  BeliefPair() = default;
  BeliefPair(WorldSet p_, WorldSet s_) : p(std::move(p_)), s(std::move(s_)) {}

  BeliefPair swapped() const { return BeliefPair(s, p); }
  bool operator==(const BeliefPair& o) const { return p == o.p && s == o.s; }

  static bool canonical_less(const BeliefPair& a, const BeliefPair& b);
};

// Knowledge ordering: S grows, P shrinks.
bool leq_kn(const BeliefPair& b1, const BeliefPair& b2);

bool is_consistent(const BeliefPair& b);  // S within P
bool is_complete(const BeliefPair& b);    // P equals S

BeliefPair meet_kn(const BeliefPair& a, const BeliefPair& b);
BeliefPair join_kn(const BeliefPair& a, const BeliefPair& b);

// Least element (A, {}) of the knowledge ordering.
BeliefPair bottom_kn(const Vocabulary& v);

// All 2^(2^n) world sets in increasing bit-vector order. Needs n <= 4.
std::vector<WorldSet> enumerate_world_sets(const Vocabulary& v);

// All belief pairs, P-major, each component in increasing bit-vector
// order. Needs n <= 3.
std::vector<BeliefPair> enumerate_belief_pairs(const Vocabulary& v);

inline constexpr int kEnumerateWorldSetsMaxAtoms = 4;
inline constexpr int kEnumerateBeliefPairsMaxAtoms = 3;

// A belief-pair fixpoint together with the number of operator applications
// it took to reach it.
struct PairFixpoint {
  BeliefPair pair;
  int iterations = 0;
};

// Canonical text forms: an interpretation lists its true atoms in
// vocabulary order as "{p,q}"; a world set lists its interpretations in
// increasing index order as "[{}, {p}]"; a pair prints as "P=..., S=...".
std::string to_string(const Vocabulary& v, Interpretation i);
std::string to_string(const Vocabulary& v, const WorldSet& q);
std::string to_string(const Vocabulary& v, const BeliefPair& b);

}  // namespace nmlab

#endif  // NMLAB_WORLDS_HPP
