#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nmlab/ael.hpp"
#include "nmlab/dl.hpp"
#include "nmlab/gen.hpp"
#include "nmlab/parse.hpp"
#include "nmlab/translate.hpp"
#include "nmlab/verify.hpp"

using namespace nmlab;

TEST_CASE("one default, believed prerequisite: p : q / p") {
  Vocabulary v = Vocabulary::standard(2);
  DefaultTheory d = parse_default_theory("D: p : q / p.");
  WorldSet all = WorldSet::all_of(v);
  WorldSet modp = WorldSet::from_bits(v, 0b1010);

  // believing p weakly supports p, but the support is not grounded
  CHECK(dl::weak_extensions(v, d) == std::vector<WorldSet>{modp, all});
  CHECK(dl::extensions(v, d) == std::vector<WorldSet>{all});
  CHECK(dl::extensions_oracle(v, d) == std::vector<WorldSet>{all});

  CHECK(dl::revise(v, d, all) == all);
  CHECK(dl::revise(v, d, modp) == modp);
  CHECK(dl::stable_revise(v, d, modp) == all);

  PairFixpoint kk = dl::kripke_kleene(v, d);
  CHECK(kk.pair == BeliefPair(all, modp));
  CHECK(kk.iterations == 2);
  PairFixpoint wf = dl::well_founded(v, d);
  CHECK(wf.pair == BeliefPair(all, all));
  CHECK(wf.iterations == 2);

  std::vector<BeliefPair> pw = dl::partial_weak_extensions(v, d);
  REQUIRE(pw.size() == 4);
  CHECK(pw[0] == BeliefPair(modp, modp));
  CHECK(pw[1] == BeliefPair(modp, all));
  CHECK(pw[2] == BeliefPair(all, modp));
  CHECK(pw[3] == BeliefPair(all, all));
  CHECK(dl::partial_extensions(v, d) ==
        std::vector<BeliefPair>{BeliefPair(all, all)});
}

TEST_CASE("facts and a normal default: birds fly") {
  DefaultTheory d = parse_default_theory(
      "W:\n"
      "b\n"
      "D:\n"
      "b : f / f.\n");
  Vocabulary v({"b", "f"});
  WorldSet modb = WorldSet::from_bits(v, 0b1010);
  WorldSet modbf = WorldSet::from_bits(v, 0b1000);

  CHECK(dl::extensions(v, d) == std::vector<WorldSet>{modbf});
  CHECK(dl::extensions_oracle(v, d) == std::vector<WorldSet>{modbf});
  CHECK(dl::weak_extensions(v, d) == std::vector<WorldSet>{modbf});

  CHECK(dl::stable_revise(v, d, WorldSet::none_of(v)) == modb);
  CHECK(dl::stable_revise(v, d, WorldSet::all_of(v)) == modbf);

  PairFixpoint kk = dl::kripke_kleene(v, d);
  CHECK(kk.pair == BeliefPair(modbf, modbf));
  CHECK(kk.iterations == 3);
  CHECK(is_complete(kk.pair));
  PairFixpoint wf = dl::well_founded(v, d);
  CHECK(wf.pair == BeliefPair(modbf, modbf));
  CHECK(wf.iterations == 3);
}

TEST_CASE("an even cycle of defaults has two extensions") {
  Vocabulary v = Vocabulary::standard(2);
  DefaultTheory d = parse_default_theory(
      "D:\n"
      "true : ~p / q.\n"
      "true : ~q / p.\n");
  WorldSet all = WorldSet::all_of(v);
  WorldSet modp = WorldSet::from_bits(v, 0b1010);
  WorldSet modq = WorldSet::from_bits(v, 0b1100);
  WorldSet modpq = WorldSet::from_bits(v, 0b1000);

  CHECK(dl::extensions(v, d) == std::vector<WorldSet>{modp, modq});
  CHECK(dl::extensions_oracle(v, d) == std::vector<WorldSet>{modp, modq});

  // the well-founded pair stays undecided between them
  PairFixpoint wf = dl::well_founded(v, d);
  CHECK(wf.pair == BeliefPair(all, modpq));
  CHECK(wf.iterations == 2);
  CHECK(!is_complete(wf.pair));
  CHECK(dl::kripke_kleene(v, d).pair == wf.pair);
  for (const BeliefPair& b : dl::partial_extensions(v, d))
    CHECK(leq_kn(wf.pair, b));
}

TEST_CASE("a self-defeating default leaves no extensions") {
  Vocabulary v = Vocabulary::standard(1);
  DefaultTheory d = parse_default_theory("D: true : p / ~p.");
  WorldSet all = WorldSet::all_of(v);
  WorldSet notp = WorldSet::from_bits(v, 0b01);

  CHECK(dl::weak_extensions(v, d).empty());
  CHECK(dl::extensions(v, d).empty());
  CHECK(dl::extensions_oracle(v, d).empty());

  // both least fixpoints still exist and are consistent
  PairFixpoint kk = dl::kripke_kleene(v, d);
  CHECK(kk.pair == BeliefPair(all, notp));
  CHECK(is_consistent(kk.pair));
  CHECK(dl::well_founded(v, d).pair == kk.pair);
}

TEST_CASE("defaults with believed justifications") {
  Vocabulary v = Vocabulary::standard(2);
  DefaultTheory d = parse_default_theory("D: true : q / p.");
  WorldSet modp = WorldSet::from_bits(v, 0b1010);
  CHECK(dl::stable_revise(v, d, WorldSet::all_of(v)) == modp);
  CHECK(dl::extensions(v, d) == std::vector<WorldSet>{modp});
  CHECK(dl::extensions_oracle(v, d) == std::vector<WorldSet>{modp});
}

TEST_CASE("a theory of facts alone") {
  Vocabulary v = Vocabulary::standard(2);
  DefaultTheory d = parse_default_theory(
      "W:\n"
      "p -> q\n"
      "p\n"
      "D:\n");
  WorldSet modpq = WorldSet::from_bits(v, 0b1000);
  CHECK(dl::weak_extensions(v, d) == std::vector<WorldSet>{modpq});
  CHECK(dl::extensions(v, d) == std::vector<WorldSet>{modpq});
  CHECK(dl::extensions_oracle(v, d) == std::vector<WorldSet>{modpq});
  PairFixpoint kk = dl::kripke_kleene(v, d);
  CHECK(kk.pair == BeliefPair(modpq, modpq));
  CHECK(kk.iterations == 2);
  CHECK(dl::well_founded(v, d).pair == kk.pair);

  DefaultTheory empty;
  WorldSet all = WorldSet::all_of(v);
  CHECK(dl::extensions(v, empty) == std::vector<WorldSet>{all});
  CHECK(dl::weak_extensions(v, empty) == std::vector<WorldSet>{all});
  CHECK(dl::kripke_kleene(v, empty).pair == BeliefPair(all, all));
}

TEST_CASE("the modal encoding carries the semantics across") {
  for (std::uint64_t seed = 400; seed < 430; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.atom_count = 2;
    cfg.default_count = 3;
    cfg.theory_size = 2;
    DefaultTheory d = gen_default_theory(cfg);
    Vocabulary v = Vocabulary::standard(cfg.atom_count);
    ModalTheory m = konolige(d);
    CAPTURE(to_string(d));
    CHECK(dl::weak_extensions(v, d) == ael::expansions_brute(v, m));
    CHECK(dl::extensions(v, d) == ael::extensions(v, m));
    CHECK(dl::kripke_kleene(v, d).pair == ael::kripke_kleene(v, m).pair);
    CHECK(dl::well_founded(v, d).pair == ael::well_founded(v, m).pair);
  }
}

TEST_CASE("monotone pair revision, antimonotone stable revision") {
  Vocabulary v = Vocabulary::standard(1);
  std::vector<BeliefPair> pairs = enumerate_belief_pairs(v);
  std::vector<WorldSet> sets = enumerate_world_sets(v);
  GenConfig cfg;
  cfg.atom_count = 1;
  cfg.default_count = 2;
  cfg.theory_size = 1;
  for (int k = 0; k < 25; ++k) {
    cfg.seed = 500 + k;
    DefaultTheory d = gen_default_theory(cfg);
    CAPTURE(to_string(d));
    for (const BeliefPair& b1 : pairs)
      for (const BeliefPair& b2 : pairs) {
        if (!leq_kn(b1, b2)) continue;
        CHECK(leq_kn(dl::revise_pair(v, d, b1), dl::revise_pair(v, d, b2)));
        CHECK(leq_kn(dl::stable_revise_pair(v, d, b1),
                     dl::stable_revise_pair(v, d, b2)));
      }
    for (const WorldSet& s1 : sets)
      for (const WorldSet& s2 : sets) {
        if (!leq_w(s1, s2)) continue;
        CHECK(leq_w(dl::stable_revise(v, d, s2), dl::stable_revise(v, d, s1)));
      }
  }
}

TEST_CASE("the oracle rejects oversized theories") {
  Vocabulary v = Vocabulary::standard(1);
  DefaultTheory d;
  for (int k = 0; k < 17; ++k)
    d.defaults.push_back(
        Default(Formula::truth(), {Formula::truth()}, Formula::atom("p")));
  CHECK_THROWS_AS(dl::extensions_oracle(v, d), CapError);
}

TEST_CASE("default statements hold on random theories") {
  for (const char* id :
       {"T6", "T7", "T8", "T9", "T10", "T11", "T12", "T13", "T14"}) {
    GenConfig cfg;
    cfg.sample_count = 25;
    TheoremReport r = verify_theorem(id, cfg);
    CAPTURE(to_string(r));
    CHECK(r.passed());
    CHECK(r.instances == 25);
  }
}
