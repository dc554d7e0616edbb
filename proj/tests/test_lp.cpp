#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nmlab/gen.hpp"
#include "nmlab/lp.hpp"
#include "nmlab/parse.hpp"
#include "nmlab/verify.hpp"

using namespace nmlab;
using lp::AtomPair;
using lp::AtomSet;

namespace {

AtomSet atoms(std::uint32_t bits) { return AtomSet{bits}; }

}  // namespace

TEST_CASE("one-step consequences") {
  Vocabulary v = Vocabulary::standard(2);
  Program p = parse_program("p :- not q.\nq :- p.");
  CHECK(lp::step(v, p, atoms(0b00)) == atoms(0b01));
  CHECK(lp::step(v, p, atoms(0b01)) == atoms(0b11));
  CHECK(lp::step(v, p, atoms(0b11)) == atoms(0b10));
  CHECK(lp::all_atoms(v) == atoms(0b11));

  // the pair step keeps certain and possible consequences apart
  Program loop = parse_program("p :- not p.");
  Vocabulary v1 = Vocabulary::standard(1);
  AtomPair b{atoms(0), atoms(1)};
  CHECK(lp::step_pair(v1, loop, b) == b);
  CHECK(lp::step_pair(v1, loop, AtomPair{atoms(1), atoms(1)}) ==
        AtomPair{atoms(0), atoms(0)});
}

TEST_CASE("an even loop splits, an odd loop starves") {
  Vocabulary v = Vocabulary::standard(2);
  Program even = parse_program("p :- not q.\nq :- not p.");
  CHECK(lp::stable_models(v, even) == std::vector<AtomSet>{atoms(1), atoms(2)});
  CHECK(lp::supported_models(v, even) ==
        std::vector<AtomSet>{atoms(1), atoms(2)});
  CHECK(lp::gl_models(v, even) == lp::stable_models(v, even));

  lp::LpFixpoint kk = lp::kripke_kleene(v, even);
  CHECK(kk.pair == AtomPair{atoms(0), atoms(0b11)});
  CHECK(kk.iterations == 1);
  lp::LpFixpoint wf = lp::well_founded(v, even);
  CHECK(wf.pair == AtomPair{atoms(0), atoms(0b11)});
  CHECK(wf.iterations == 1);
  CHECK(lp::alternating_fixpoint(v, even) == wf.pair);
  CHECK(!lp::is_complete(wf.pair));
  CHECK(lp::is_consistent(wf.pair));

  Vocabulary v1 = Vocabulary::standard(1);
  Program odd = parse_program("p :- not p.");
  CHECK(lp::stable_models(v1, odd).empty());
  CHECK(lp::supported_models(v1, odd).empty());
  CHECK(lp::gl_models(v1, odd).empty());
  CHECK(lp::well_founded(v1, odd).pair == AtomPair{atoms(0), atoms(1)});
  CHECK(lp::alternating_fixpoint(v1, odd) == AtomPair{atoms(0), atoms(1)});
}

TEST_CASE("facts propagate and settle") {
  Vocabulary v = Vocabulary::standard(2);
  Program p = parse_program("p.\nq :- p.");
  CHECK(lp::stable_models(v, p) == std::vector<AtomSet>{atoms(0b11)});
  CHECK(lp::supported_models(v, p) == std::vector<AtomSet>{atoms(0b11)});

  lp::LpFixpoint kk = lp::kripke_kleene(v, p);
  CHECK(kk.pair == AtomPair{atoms(0b11), atoms(0b11)});
  CHECK(kk.iterations == 3);
  lp::LpFixpoint wf = lp::well_founded(v, p);
  CHECK(wf.pair == AtomPair{atoms(0b11), atoms(0b11)});
  CHECK(wf.iterations == 2);
  CHECK(lp::is_complete(wf.pair));

  // ":- ." bodies and the empty program are legal degenerate cases
  Program bare = parse_program("p :- .");
  CHECK(lp::stable_models(Vocabulary::standard(1), bare) ==
        std::vector<AtomSet>{atoms(1)});
  Program none;
  CHECK(lp::stable_models(v, none) == std::vector<AtomSet>{atoms(0)});
  CHECK(lp::well_founded(v, none).pair == AtomPair{atoms(0), atoms(0)});
}

TEST_CASE("negation can be stratified away") {
  Vocabulary v = Vocabulary::standard(3);
  Program p = parse_program("p.\nq :- p, not r.\n");
  CHECK(lp::stable_models(v, p) == std::vector<AtomSet>{atoms(0b011)});
  lp::LpFixpoint wf = lp::well_founded(v, p);
  CHECK(wf.pair == AtomPair{atoms(0b011), atoms(0b011)});
  // supported models may add an unfounded loop only if the program has one
  CHECK(lp::supported_models(v, p) == std::vector<AtomSet>{atoms(0b011)});
  Program selfq = parse_program("p.\nq :- q.");
  CHECK(lp::supported_models(Vocabulary::standard(2), selfq) ==
        std::vector<AtomSet>{atoms(0b01), atoms(0b11)});
  CHECK(lp::stable_models(Vocabulary::standard(2), selfq) ==
        std::vector<AtomSet>{atoms(0b01)});
}

TEST_CASE("the reduct oracles agree everywhere") {
  GenConfig cfg;
  cfg.atom_count = 3;
  cfg.clause_count = 5;
  for (int k = 0; k < 60; ++k) {
    cfg.seed = 600 + k;
    Program p = gen_program(cfg);
    Vocabulary v = Vocabulary::standard(cfg.atom_count);
    CAPTURE(to_string(p));
    CHECK(lp::stable_models(v, p) == lp::gl_models(v, p));
    lp::LpFixpoint wf = lp::well_founded(v, p);
    CHECK(wf.pair == lp::alternating_fixpoint(v, p));
    CHECK(lp::leq_kn(lp::kripke_kleene(v, p).pair, wf.pair));
    // stable models sit between the well-founded bounds
    for (AtomSet m : lp::stable_models(v, p)) {
      CHECK(wf.pair.lower.subset_of(m));
      CHECK(m.subset_of(wf.pair.upper));
    }
  }
}

TEST_CASE("the default-theory reading preserves the semantics") {
  for (const char* text :
       {"p :- not q.\nq :- not p.", "p :- not p.", "p.\nq :- p.",
        "p.\nq :- p, not r."}) {
    Program p = parse_program(text);
    Vocabulary v(atoms_of(p));
    lp::EmbeddingReport r = lp::check_embedding(v, p);
    CAPTURE(text);
    REQUIRE(r.checks.size() == 4);
    for (const lp::EmbeddingCheck& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
    CHECK(r.all_pass());
    CHECK(!r.note.empty());
  }
  GenConfig cfg;
  cfg.atom_count = 3;
  cfg.clause_count = 4;
  for (int k = 0; k < 40; ++k) {
    cfg.seed = 700 + k;
    Program p = gen_program(cfg);
    Vocabulary v = Vocabulary::standard(cfg.atom_count);
    CAPTURE(to_string(p));
    CHECK(lp::check_embedding(v, p).all_pass());
  }
}

TEST_CASE("atom-set printing and caps") {
  Vocabulary v = Vocabulary::standard(2);
  CHECK(lp::to_string(v, atoms(0)) == "{}");
  CHECK(lp::to_string(v, atoms(0b11)) == "{p,q}");
  CHECK(lp::to_string(v, AtomPair{atoms(1), atoms(0b11)}) ==
        "lower={p}, upper={p,q}");

  Vocabulary big = Vocabulary::standard(17);
  Program p = parse_program("p.");
  CHECK_THROWS_AS(lp::supported_models(big, p), CapError);
  CHECK_THROWS_AS(lp::stable_models(big, p), CapError);
  Vocabulary five = Vocabulary::standard(5);
  CHECK_THROWS_AS(lp::check_embedding(five, p), CapError);
}

TEST_CASE("program statements hold on random programs") {
  GenConfig cfg;
  cfg.sample_count = 25;
  TheoremReport r = verify_theorem("T15", cfg);
  CAPTURE(to_string(r));
  CHECK(r.passed());
  CHECK(r.instances == 25);
}
