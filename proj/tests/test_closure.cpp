#include "support/oracles.hpp"
#include "support/words.hpp"

#include "pbraid/closure.hpp"
#include "pbraid/desingularization.hpp"
#include "pbraid/error.hpp"

#include <doctest.h>

#include <random>

using namespace pbraid;

namespace {

std::map<testing::BruteEntry, testing::BruteWeight> as_brute(const LinkingProfile &p) {
  std::map<testing::BruteEntry, testing::BruteWeight> out;
  for (const auto &[e, w] : p.entries)
    out[{e.component_count, e.doubled_linkings}] = {w.numerator(), w.denominator()};
  return out;
}

} // namespace

TEST_CASE("component count") {
  CHECK(component_count(parse("s1", 2)) == 1);
  CHECK(component_count(Word(3)) == 3);
  CHECK(component_count(parse("p1 s2", 3)) == 1);
  CHECK(component_count(parse("s1 s1", 2)) == 2);
}

TEST_CASE("resolve") {
  CHECK(resolve(parse("p1", 2), {{1}}) == parse("s1", 2));
  CHECK(resolve(parse("p1", 2), {{-1}}) == parse("S1", 2));
  CHECK(resolve(parse("s1 p2 p1", 3), {{1, -1}}) == parse("s1 s2 S1", 3));
  CHECK_THROWS(resolve(parse("p1 p1", 2), {{1}}));
  CHECK_THROWS(resolve(parse("p1", 2), {{1, 1}}));
  CHECK_THROWS(resolve(parse("p1", 2), {{0}}));
}

TEST_CASE("doubled linking numbers") {
  CHECK(doubled_linking_numbers(parse("s1 s1", 2)) == std::vector<long>{2});
  CHECK(doubled_linking_numbers(Word(2)) == std::vector<long>{0});
  CHECK(doubled_linking_numbers(parse("s1", 2)).empty());
  CHECK(doubled_linking_numbers(parse("S1 S1 s2 s2", 3)) == std::vector<long>{-2, 0, 2});
  CHECK_THROWS_AS(doubled_linking_numbers(parse("p1", 2)), PreCrossingError);
}

TEST_CASE("linking profile examples") {
  auto p = linking_profile(parse("p1", 2));
  REQUIRE(p.entries.size() == 1);
  CHECK(p.entries.begin()->first == ProfileEntry{1, {}});
  CHECK(p.entries.begin()->second == Weight(1));

  p = linking_profile(parse("s1 s1", 2));
  REQUIRE(p.entries.size() == 1);
  CHECK(p.entries.begin()->first == ProfileEntry{2, {2}});

  p = linking_profile(parse("p1 p1", 2));
  const LinkingProfile expected{{{ProfileEntry{2, {-2}}, Weight(1, 4)},
                                 {ProfileEntry{2, {0}}, Weight(1, 2)},
                                 {ProfileEntry{2, {2}}, Weight(1, 4)}}};
  CHECK(p == expected);
  CHECK(as_brute(p) == testing::brute_profile(parse("p1 p1", 2)));
}

TEST_CASE("linking profile matches the brute-force resolver") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 400; ++trial) {
    auto w = testing::random_word(rng, 2 + trial % 4, trial % 9, 4);
    const auto p = linking_profile(w);
    CHECK(as_brute(p) == testing::brute_profile(w));
    Weight total(0);
    for (const auto &[e, weight] : p.entries)
      total += weight;
    CHECK(total == Weight(1));
    if (stats(w).pre_count == 0) {
      REQUIRE(p.entries.size() == 1);
      CHECK(p.entries.begin()->second == Weight(1));
    }
  }
}

TEST_CASE("closure invariants agree on equal words") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    auto w = testing::random_word(rng, 3, trial % 5, 2);
    // splice in a relation instance; the result is equal in PM_3
    auto letters = std::vector<Letter>(w.begin(), w.end());
    std::vector<Letter> rel{sigma(1), sigma(2), pre(1)};
    letters.insert(letters.end(), rel.begin(), rel.end());
    Word a(3, letters);
    letters.resize(letters.size() - 3);
    for (auto l : {pre(2), sigma(1), sigma(2)})
      letters.push_back(l);
    Word b(3, letters);
    REQUIRE(equal_pm(a, b));
    CHECK(component_count(a) == component_count(b));
    CHECK(linking_profile(a) == linking_profile(b));
  }
}

TEST_CASE("resolution cap") {
  Word many(2, std::vector<Letter>(6, pre(1)));
  CHECK_THROWS_AS(linking_profile(many, 5), CapExceeded);
  CHECK_NOTHROW(linking_profile(many, 6));
}
