#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dalc/bases.hpp"
#include "dalc/entailment.hpp"
#include "dalc/parser.hpp"
#include "test_support.hpp"

using namespace dalc;

using testsup::base_strings;
using testsup::naive_bases;

TEST_CASE("kb1: a unique base keeps the feather default") {
  KnowledgeBase kb = testsup::load_fixture("kb1.dl");
  RankingResult r = compute_ranking(kb);
  auto bases = mp_bases(kb, r, parse_concept("Penguin"));
  REQUIRE(bases.size() == 1);
  CHECK(bases[0].str() ==
        "{T(Bird) <= HasNiceFeather, T(Penguin) <= not Fly}");
  CHECK(mp_entails(kb, r, parse_query("T(Penguin) <= HasNiceFeather")));
  CHECK(lex_entails(kb, r, parse_query("T(Penguin) <= HasNiceFeather")));
}

TEST_CASE("kb2: two incomparable bases, common consequences only") {
  KnowledgeBase kb = testsup::load_fixture("kb2.dl");
  RankingResult r = compute_ranking(kb);
  auto bases = mp_bases(kb, r, parse_concept("Penguin"));
  CHECK(base_strings(bases) ==
        std::set<std::string>{"{T(Bird) <= A, T(Penguin) <= not Fly}",
                              "{T(Bird) <= H, T(Penguin) <= not Fly}"});
  CHECK(mp_entails(kb, r, parse_query("T(Penguin) <= C")));
  CHECK_FALSE(mp_entails(kb, r, parse_query("T(Penguin) <= A")));
  CHECK_FALSE(mp_entails(kb, r, parse_query("T(Penguin) <= H")));
}

TEST_CASE("kb3: subset and cardinality preferences part ways") {
  KnowledgeBase kb = testsup::load_fixture("kb3.dl");
  RankingResult r = compute_ranking(kb);
  auto mp = mp_bases(kb, r, parse_concept("Penguin"));
  auto lex = lex_bases(kb, r, parse_concept("Penguin"));
  CHECK(mp.size() == 2);
  REQUIRE(lex.size() == 1);
  CHECK(lex[0].str() ==
        "{T(Bird) <= A, T(Bird) <= H, T(Penguin) <= not Fly}");
  CHECK_FALSE(mp_entails(kb, r, parse_query("T(Penguin) <= C")));
  CHECK(lex_entails(kb, r, parse_query("T(Penguin) <= C")));
}

TEST_CASE("kb4: defaults of rank >= k are forced into every base") {
  KnowledgeBase kb = testsup::load_fixture("kb4.dl");
  RankingResult r = compute_ranking(kb);
  auto bases = mp_bases(kb, r, parse_concept("BabyPenguin"));
  REQUIRE(bases.size() == 1);
  CHECK(bases[0].subject_rank == 2);
  CHECK(bases[0].str() ==
        "{T(BabyPenguin) <= not BlackFeather, T(Penguin) <= not Fly}");
  CHECK(mp_entails(kb, r, parse_query("T(BabyPenguin) <= not Fly")));
  CHECK_FALSE(rc_entails(kb, r, parse_query("T(BabyPenguin) <= not Fly")));
}

TEST_CASE("greedy enumeration matches the literal preference order") {
  std::mt19937 rng(23);
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    KnowledgeBase kb = testsup::random_kb(rng);
    RankingResult r = compute_ranking(kb);
    Concept b = testsup::random_concept(rng, 1);
    if (concept_rank(r, b).is_infinite()) continue;
    CAPTURE(to_string(kb));
    CAPTURE(to_string(b));
    CHECK(base_strings(mp_bases(kb, r, b)) == naive_bases(kb, r, b, false));
    CHECK(base_strings(lex_bases(kb, r, b)) == naive_bases(kb, r, b, true));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("lex bases are always among the mp bases") {
  std::mt19937 rng(29);
  for (int i = 0; i < 80; ++i) {
    KnowledgeBase kb = testsup::random_kb(rng);
    RankingResult r = compute_ranking(kb);
    Concept b = testsup::random_concept(rng, 1);
    if (concept_rank(r, b).is_infinite()) continue;
    auto mp = base_strings(mp_bases(kb, r, b));
    for (const auto& s : base_strings(lex_bases(kb, r, b)))
      CHECK(mp.count(s) == 1);
  }
}

TEST_CASE("infinite-rank subjects have no bases but entail everything") {
  KnowledgeBase kb = parse_kb("T(A) <= Bot. T(B) <= C.");
  RankingResult r = compute_ranking(kb);
  CHECK_THROWS_AS(mp_bases(kb, r, parse_concept("A")), std::invalid_argument);
  CHECK(mp_entails(kb, r, parse_query("T(A) <= C")));
  CHECK(lex_entails(kb, r, parse_query("T(A) <= not C")));
}
