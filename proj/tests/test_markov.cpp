#include "support/words.hpp"

#include "pbraid/closure.hpp"
#include "pbraid/desingularization.hpp"
#include "pbraid/error.hpp"
#include "pbraid/markov.hpp"

#include <doctest.h>

#include <random>

using namespace pbraid;

TEST_CASE("inverse") {
  CHECK(inverse(parse("s1 S2", 3)) == parse("s2 S1", 3));
  CHECK(inverse(Word(3)) == Word(3));
  CHECK_THROWS_AS(inverse(parse("p1", 2)), PreCrossingError);
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = testing::random_classical_word(rng, 4, trial % 8);
    CHECK(free_reduce(concat(a, inverse(a))) == Word(4));
    CHECK(inverse(inverse(a)) == a);
  }
}

TEST_CASE("apply_move examples") {
  CHECK(apply_move(parse("s1", 2), SigmaStabilization{1, StabDirection::Stabilize}) ==
        parse("s1 s2", 3));
  CHECK(apply_move(parse("s1 p1", 2), CyclicShift{1}) == parse("p1 s1", 2));
  CHECK(apply_move(Word(2), PreStabilization{StabDirection::Stabilize}) == parse("p2", 3));
  CHECK(apply_move(parse("p1", 2), Conjugation{parse("s1", 2)}) == parse("S1 p1 s1", 2));
  CHECK(apply_move(parse("p1 S2", 3), SigmaStabilization{-1, StabDirection::Destabilize}) ==
        parse("p1", 2));
  CHECK(apply_move(parse("s1 p2", 3), PreStabilization{StabDirection::Destabilize}) ==
        parse("s1", 2));
}

TEST_CASE("apply_move rejects invalid moves") {
  CHECK_THROWS_AS(apply_move(parse("p1", 2), Conjugation{parse("p1", 2)}), InvalidMove);
  CHECK_THROWS_AS(apply_move(parse("p1", 2), Conjugation{parse("s1", 3)}), InvalidMove);
  CHECK_THROWS_AS(apply_move(parse("p1", 2), CyclicShift{2}), InvalidMove);
  // last letter has the wrong sign, index elsewhere, or wrong letter
  CHECK_THROWS_AS(apply_move(parse("s2", 3), SigmaStabilization{-1, StabDirection::Destabilize}),
                  InvalidMove);
  CHECK_THROWS_AS(apply_move(parse("s2 s1 s2", 3), SigmaStabilization{1, StabDirection::Destabilize}),
                  InvalidMove);
  CHECK_THROWS_AS(apply_move(parse("s2", 3), PreStabilization{StabDirection::Destabilize}),
                  InvalidMove);
  CHECK_THROWS_AS(apply_move(parse("s1", 2), SigmaStabilization{1, StabDirection::Destabilize}),
                  InvalidMove);
  CHECK_THROWS_AS(apply_move(Word(3), PreStabilization{StabDirection::Destabilize}), InvalidMove);
  CHECK(move_violation(parse("s1 p2", 3), PreStabilization{StabDirection::Destabilize}) ==
        std::nullopt);
}

TEST_CASE("stabilization round-trips and trivial shifts") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    auto b = testing::random_word(rng, 2 + trial % 3, trial % 7);
    for (int sign : {1, -1}) {
      auto up = apply_move(b, SigmaStabilization{sign, StabDirection::Stabilize});
      CHECK(apply_move(up, SigmaStabilization{sign, StabDirection::Destabilize}) == b);
    }
    auto up = apply_move(b, PreStabilization{StabDirection::Stabilize});
    CHECK(apply_move(up, PreStabilization{StabDirection::Destabilize}) == b);
    CHECK(apply_move(b, CyclicShift{0}) == b);
    CHECK(apply_move(b, CyclicShift{b.size()}) == b);
  }
}

TEST_CASE("move mini-language") {
  for (const char *spec : {"M1:s1", "M1:s1,S2", "M1:", "M2:3", "M3:+", "M3:-", "M3:+d", "M3:-d", "M4",
                           "M4:d"})
    CHECK(render(parse_move(spec, 3)) == spec);
  CHECK(std::get<Conjugation>(parse_move("M1:s1,S2", 3)).conjugator == parse("s1 S2", 3));
  for (const char *bad : {"", "M", "M5", "M2", "M2:x", "M2:-1", "M3", "M3:x", "M4:x", "M1:s3", "X1"})
    CHECK_THROWS_AS(parse_move(bad, 3), ParseError);
}

TEST_CASE("markov_search examples") {
  auto found = markov_search(parse("s1", 2), parse("s1 s2", 3));
  REQUIRE(found);
  REQUIRE(found->size() == 1);
  CHECK(std::get<SigmaStabilization>(found->front()) ==
        SigmaStabilization{1, StabDirection::Stabilize});

  const auto w = parse("p1 s2 S1", 3);
  found = markov_search(w, w);
  REQUIRE(found);
  CHECK(found->empty());

  // p1 commutes with s1, so the conjugate is already equal in PM_2; the
  // search may return the empty certificate, and the single conjugation is
  // also valid.
  const auto target = parse("S1 p1 s1", 2);
  found = markov_search(parse("p1", 2), target);
  REQUIRE(found);
  CHECK(equal_pm(apply_moves(parse("p1", 2), *found), target));
  CHECK(equal_pm(apply_move(parse("p1", 2), Conjugation{parse("s1", 2)}), target));
}

TEST_CASE("markov_search finds multi-step certificates") {
  const auto from = parse("s1 p1 s1", 2);
  const auto path = std::vector<MarkovMove>{PreStabilization{StabDirection::Stabilize}, CyclicShift{2},
                                            Conjugation{parse("S2", 3)}};
  const auto to = apply_moves(from, path);
  auto found = markov_search(from, to, {.move_budget = 4, .size_cap = 10});
  REQUIRE(found);
  CHECK(found->size() <= path.size());
  CHECK(equal_pm(apply_moves(from, *found), to));
}

TEST_CASE("markov_search gives up inconclusively") {
  // different component counts can never be connected
  CHECK_FALSE(markov_search(parse("s1", 2), Word(2), {.move_budget = 2, .size_cap = 6}));
  CHECK_FALSE(markov_search(parse("s1", 2), parse("s1 s2 s3", 4), {.move_budget = 1, .size_cap = 6}));
}

TEST_CASE("Markov moves preserve closure invariants") {
  std::mt19937_64 rng(59);
  int applied = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 3;
    auto b = testing::random_word(rng, n, trial % 7, 3);
    std::vector<MarkovMove> candidates{
        Conjugation{testing::random_classical_word(rng, n, 2)},
        CyclicShift{b.size() / 2},
        SigmaStabilization{trial % 2 ? 1 : -1, StabDirection::Stabilize},
        PreStabilization{StabDirection::Stabilize},
        SigmaStabilization{1, StabDirection::Destabilize},
        PreStabilization{StabDirection::Destabilize},
    };
    for (const auto &m : candidates) {
      if (move_violation(b, m))
        continue;
      const auto moved = apply_move(b, m);
      CHECK(component_count(moved) == component_count(b));
      CHECK(linking_profile(moved) == linking_profile(b));
      ++applied;
    }
  }
  CHECK(applied > 1000);
}
