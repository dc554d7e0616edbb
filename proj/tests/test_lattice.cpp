#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "nmlab/gen.hpp"
#include "nmlab/truth.hpp"
#include "nmlab/worlds.hpp"

using namespace nmlab;

namespace {

WorldSet ws(const Vocabulary& v, std::uint64_t bits) {
  return WorldSet::from_bits(v, bits);
}

}  // namespace

TEST_CASE("vocabulary validation") {
  CHECK(Vocabulary::standard(2).atoms() ==
        std::vector<std::string>{"p", "q"});
  CHECK(Vocabulary::standard(5).atom(4) == "a4");
  CHECK_THROWS_AS(Vocabulary({"p", "p"}), UserError);
  CHECK_THROWS_AS(Vocabulary({"Bad"}), UserError);
  CHECK_THROWS_AS(Vocabulary({"not"}), UserError);
  CHECK_THROWS_AS(Vocabulary::standard(21), UserError);
  Vocabulary v = Vocabulary::standard(2);
  CHECK(v.index_of("q") == 1);
  CHECK_THROWS_AS(v.index_of("r"), UserError);
  CHECK(v.interpretation_count() == 4);
}

TEST_CASE("world set basics") {
  Vocabulary v = Vocabulary::standard(2);
  WorldSet a = WorldSet::all_of(v);
  CHECK(a.count() == 4);
  CHECK(a.full());
  WorldSet n = WorldSet::none_of(v);
  CHECK(n.empty());
  CHECK(n.subset_of(a));
  CHECK(!a.subset_of(n));

  WorldSet q = ws(v, 0b0110);
  CHECK(q.contains(Interpretation{1}));
  CHECK(q.contains(Interpretation{2}));
  CHECK(!q.contains(Interpretation{0}));
  CHECK(q.complement() == ws(v, 0b1001));
  CHECK((q & ws(v, 0b0011)) == ws(v, 0b0010));
  CHECK((q | ws(v, 0b0011)) == ws(v, 0b0111));
  CHECK(q.to_bits() == 0b0110);
  CHECK(q.members().size() == 2);

  WorldSet e = q;
  e.erase(Interpretation{1});
  e.insert(Interpretation{3});
  CHECK(e == ws(v, 0b1100));
}

TEST_CASE("world set order is reverse inclusion") {
  Vocabulary v = Vocabulary::standard(1);
  WorldSet all = WorldSet::all_of(v), none = WorldSet::none_of(v);
  CHECK(leq_w(all, none));
  CHECK(!leq_w(none, all));
  CHECK(leq_w(all, all));
  CHECK(!leq_w(ws(v, 0b01), ws(v, 0b10)));
  CHECK(!leq_w(ws(v, 0b10), ws(v, 0b01)));
}

TEST_CASE("knowledge order on belief pairs") {
  Vocabulary v = Vocabulary::standard(1);
  BeliefPair bottom = bottom_kn(v);
  CHECK(bottom.p.full());
  CHECK(bottom.s.empty());
  for (const BeliefPair& b : enumerate_belief_pairs(v))
    CHECK(leq_kn(bottom, b));
  BeliefPair aa(WorldSet::all_of(v), WorldSet::all_of(v));
  BeliefPair nn(WorldSet::none_of(v), WorldSet::none_of(v));
  CHECK(!leq_kn(aa, nn));
  CHECK(!leq_kn(nn, aa));
  CHECK(leq_kn(aa, aa));
}

TEST_CASE("consistency and completeness") {
  Vocabulary v = Vocabulary::standard(1);
  CHECK(is_consistent(bottom_kn(v)));
  CHECK(!is_complete(bottom_kn(v)));
  BeliefPair qq(ws(v, 0b01), ws(v, 0b01));
  CHECK(is_consistent(qq));
  CHECK(is_complete(qq));
  BeliefPair bad(ws(v, 0b01), ws(v, 0b10));
  CHECK(!is_consistent(bad));
  CHECK(!is_complete(bad));
}

TEST_CASE("enumeration counts and order") {
  CHECK(enumerate_world_sets(Vocabulary::standard(1)).size() == 4);
  CHECK(enumerate_world_sets(Vocabulary::standard(2)).size() == 16);
  CHECK(enumerate_world_sets(Vocabulary::standard(4)).size() == 65536);
  CHECK(enumerate_belief_pairs(Vocabulary::standard(2)).size() == 256);
  CHECK_THROWS_AS(enumerate_world_sets(Vocabulary::standard(5)), CapError);
  CHECK_THROWS_AS(enumerate_belief_pairs(Vocabulary::standard(4)), CapError);

  Vocabulary v = Vocabulary::standard(2);
  std::vector<WorldSet> sets = enumerate_world_sets(v);
  for (std::size_t i = 0; i < sets.size(); ++i)
    CHECK(sets[i].to_bits() == i);
  std::vector<BeliefPair> pairs = enumerate_belief_pairs(v);
  CHECK(pairs[0].p.to_bits() == 0);
  CHECK(pairs[1].s.to_bits() == 1);  // P-major, S varies fastest
  CHECK(pairs[16].p.to_bits() == 1);
}

TEST_CASE("orders are partial orders") {
  Vocabulary v2 = Vocabulary::standard(2);
  std::vector<WorldSet> sets = enumerate_world_sets(v2);
  for (const WorldSet& a : sets) {
    CHECK(leq_w(a, a));
    for (const WorldSet& b : sets) {
      if (leq_w(a, b) && leq_w(b, a)) CHECK(a == b);
      for (const WorldSet& c : sets)
        if (leq_w(a, b) && leq_w(b, c)) CHECK(leq_w(a, c));
    }
  }
  std::vector<BeliefPair> pairs = enumerate_belief_pairs(v2);
  for (const BeliefPair& a : pairs) {
    CHECK(leq_kn(a, a));
    for (const BeliefPair& b : pairs)
      if (leq_kn(a, b) && leq_kn(b, a)) CHECK(a == b);
  }
  // transitivity of the pair order, exhaustive at one atom
  std::vector<BeliefPair> small = enumerate_belief_pairs(Vocabulary::standard(1));
  for (const BeliefPair& a : small)
    for (const BeliefPair& b : small)
      for (const BeliefPair& c : small)
        if (leq_kn(a, b) && leq_kn(b, c)) CHECK(leq_kn(a, c));
}

TEST_CASE("meet and join against a mask oracle") {
  // Independent model: a belief pair over two atoms is a pair of 16-bit
  // masks; the meet unions conservative bits and intersects liberal bits.
  Vocabulary v = Vocabulary::standard(2);
  std::vector<BeliefPair> pairs = enumerate_belief_pairs(v);
  for (const BeliefPair& a : pairs)
    for (const BeliefPair& b : pairs) {
      std::uint16_t ap = static_cast<std::uint16_t>(a.p.to_bits());
      std::uint16_t as = static_cast<std::uint16_t>(a.s.to_bits());
      std::uint16_t bp = static_cast<std::uint16_t>(b.p.to_bits());
      std::uint16_t bs = static_cast<std::uint16_t>(b.s.to_bits());
      BeliefPair m = meet_kn(a, b);
      CHECK(m.p.to_bits() == static_cast<std::uint16_t>(ap | bp));
      CHECK(m.s.to_bits() == static_cast<std::uint16_t>(as & bs));
      BeliefPair j = join_kn(a, b);
      CHECK(j.p.to_bits() == static_cast<std::uint16_t>(ap & bp));
      CHECK(j.s.to_bits() == static_cast<std::uint16_t>(as | bs));
      // order-theoretic laws
      CHECK(leq_kn(m, a));
      CHECK(leq_kn(m, b));
      CHECK(leq_kn(a, j));
      CHECK(leq_kn(b, j));
      CHECK((leq_kn(a, b) == (meet_kn(a, b) == a)));
      CHECK((leq_kn(a, b) == (join_kn(a, b) == b)));
      CHECK(meet_kn(a, b) == meet_kn(b, a));
      CHECK(join_kn(a, join_kn(a, b)) == join_kn(a, b));  // absorption
      CHECK(meet_kn(a, join_kn(a, b)) == a);
      CHECK(join_kn(a, meet_kn(a, b)) == a);
    }
  // greatest lower bound and least upper bound, exhaustive at one atom
  std::vector<BeliefPair> small = enumerate_belief_pairs(Vocabulary::standard(1));
  for (const BeliefPair& a : small)
    for (const BeliefPair& b : small) {
      BeliefPair m = meet_kn(a, b), j = join_kn(a, b);
      for (const BeliefPair& c : small) {
        if (leq_kn(c, a) && leq_kn(c, b)) CHECK(leq_kn(c, m));
        if (leq_kn(a, c) && leq_kn(b, c)) CHECK(leq_kn(j, c));
      }
    }
}

TEST_CASE("canonical printing") {
  Vocabulary v = Vocabulary::standard(2);
  CHECK(to_string(v, Interpretation{0}) == "{}");
  CHECK(to_string(v, Interpretation{3}) == "{p,q}");
  CHECK(to_string(v, ws(v, 0b0011)) == "[{}, {p}]");
  CHECK(to_string(v, WorldSet::none_of(v)) == "[]");
  CHECK(to_string(v, BeliefPair(ws(v, 0b1111), ws(v, 0b0010))) ==
        "P=[{}, {p}, {q}, {p,q}], S=[{p}]");
}

TEST_CASE("mismatched widths are rejected") {
  Vocabulary v1 = Vocabulary::standard(1);
  Vocabulary v2 = Vocabulary::standard(2);
  WorldSet a = WorldSet::all_of(v1);
  WorldSet b = WorldSet::all_of(v2);
  CHECK_THROWS_AS(leq_w(a, b), InternalError);
  CHECK_THROWS_AS(a &= b, InternalError);
  CHECK_THROWS_AS(a.subset_of(b), InternalError);
}

TEST_CASE("knowledge growth never flips a settled modal estimate") {
  // On consistent pairs ordered by knowledge, a modal formula whose
  // conservative and liberal estimates already agree keeps that verdict.
  Vocabulary v = Vocabulary::standard(2);
  std::vector<BeliefPair> pairs = enumerate_belief_pairs(v);
  std::vector<BeliefPair> consistent;
  for (const BeliefPair& b : pairs)
    if (is_consistent(b)) consistent.push_back(b);

  std::mt19937_64 rng(23);
  std::vector<Formula> formulas;
  for (int k = 0; k < 60; ++k)
    formulas.push_back(gen_formula(rng, v, 2, true));

  int ordered = 0;
  for (const BeliefPair& b1 : consistent)
    for (const BeliefPair& b2 : consistent) {
      if (!leq_kn(b1, b2)) continue;
      ++ordered;
      for (const Formula& f : formulas) {
        Formula kf = Formula::know(f);
        FourVal v1 = eval_four(v, b1, Interpretation{0}, kf);
        if (v1 == kTrue4 || v1 == kFalse4)
          CHECK(eval_four(v, b2, Interpretation{0}, kf) == v1);
      }
    }
  CHECK(ordered > 100);  // the filter really sampled ordered pairs
}
