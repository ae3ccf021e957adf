#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dalc/bases.hpp"
#include "dalc/oracle.hpp"
#include "dalc/parser.hpp"
#include "test_support.hpp"

using namespace dalc;

TEST_CASE("kb1 valuation domain") {
  KnowledgeBase kb = testsup::load_fixture("kb1.dl");
  // 4 atoms, halved by Penguin <= Bird: 12 valuations survive the strict part
  CHECK(enumerate_domain(kb).size() == 12);
  OracleModel m = minimal_ranked_model(kb);
  // no infinite-rank defaults, so nothing is excluded
  CHECK(m.domain.size() == 12);
  std::vector<std::string> atoms = m.atoms;
  for (std::size_t i = 0; i < m.domain.size(); ++i) {
    bool bird = eval_concept(parse_concept("Bird"), m.domain[i], atoms);
    bool penguin = eval_concept(parse_concept("Penguin"), m.domain[i], atoms);
    if (penguin) CHECK(m.global_rank[i] >= 1);
    if (!bird) CHECK(m.global_rank[i] == 0);
  }
}

TEST_CASE("inconsistent-subject defaults shrink the domain") {
  KnowledgeBase kb = parse_kb("T(A) <= Bot.");
  CHECK(enumerate_domain(kb).size() == 2);
  OracleModel m = minimal_ranked_model(kb);
  CHECK(m.domain.size() == 1);  // the A-world is inconsistent with the KB
  CHECK(oracle_rc_entails(kb, parse_query("A <= Bot")));
}

TEST_CASE("oracle bounds") {
  CHECK_THROWS_AS(enumerate_domain(parse_kb("A <= exists r.B.")),
                  OracleBoundsError);
  CHECK_THROWS_AS(enumerate_domain(parse_kb("A1 and A2 and A3 <= A4 and A5 and A6.")),
                  OracleBoundsError);
  Limits small;
  small.max_domain = 4;
  CHECK_THROWS_AS(
      minimal_s_enriched_models(testsup::load_fixture("kb1.dl"), small),
      OracleBoundsError);
  CHECK_THROWS_AS(eval_concept(parse_concept("exists r.A"), 0, {"A"}),
                  OracleBoundsError);
}

TEST_CASE("minimal ranked model reproduces rational closure on fixtures") {
  Limits wide;
  wide.max_atoms = 8;  // kb2/kb3 carry 6-7 atoms
  for (const char* f : {"kb1.dl", "kb2.dl", "kb3.dl", "kb4.dl"}) {
    KnowledgeBase kb = testsup::load_fixture(f);
    RankingResult r = compute_ranking(kb);
    for (const char* q :
         {"T(Bird) <= Fly", "T(Penguin) <= not Fly", "T(Penguin) <= Fly",
          "T(Bird) <= A", "Penguin <= Bird", "T(Penguin and Bird) <= Fly"}) {
      CAPTURE(f);
      CAPTURE(q);
      CHECK(rc_entails(kb, r, parse_query(q)) ==
            oracle_rc_entails(kb, parse_query(q), wide));
    }
  }
}

TEST_CASE("enriched models recover the blocked inheritance") {
  KnowledgeBase kb1 = testsup::load_fixture("kb1.dl");
  CHECK_FALSE(oracle_rc_entails(kb1, parse_query("T(Penguin) <= HasNiceFeather")));
  CHECK(oracle_s_entails(kb1, parse_query("T(Penguin) <= HasNiceFeather")));
  CHECK(oracle_s_entails(kb1, parse_query("T(Penguin) <= not Fly")));
  CHECK_FALSE(oracle_s_entails(kb1, parse_query("T(Penguin) <= Fly")));

  KnowledgeBase kb4 = testsup::load_fixture("kb4.dl");
  CHECK(oracle_s_entails(kb4, parse_query("T(BabyPenguin) <= not Fly")));
}

TEST_CASE("aspect ranks are two-level and tied to the defaults") {
  KnowledgeBase kb = testsup::load_fixture("kb1.dl");
  OracleModel m = minimal_ranked_model(kb);
  REQUIRE(m.aspect_concepts.size() == 3);  // Fly, HasNiceFeather, not Fly
  for (std::size_t a = 0; a < m.aspect_concepts.size(); ++a)
    for (std::size_t i = 0; i < m.domain.size(); ++i)
      CHECK(m.aspect_rank[a][i] <= 1);
}

TEST_CASE("randomized cross-checks between tableau and oracle paths") {
  std::mt19937 rng(41);
  for (int i = 0; i < 150; ++i) {
    KnowledgeBase kb = testsup::random_kb(rng);
    RankingResult r = compute_ranking(kb);
    Query q = testsup::random_typical_query(rng);
    CAPTURE(to_string(kb));
    CAPTURE(to_string(q));
    bool rc = rc_entails(kb, r, q);
    bool mp = mp_entails(kb, r, q);
    bool lex = lex_entails(kb, r, q);
    bool orc = oracle_rc_entails(kb, q);
    bool os = oracle_s_entails(kb, q);
    CHECK(rc == orc);
    if (rc) CHECK(mp);
    if (mp) CHECK(lex);
    if (mp) CHECK(os);
    if (orc) CHECK(os);
  }
}

TEST_CASE("the single-aspect preference condition is already implied") {
  std::mt19937 rng(43);
  for (int i = 0; i < 60; ++i) {
    KnowledgeBase kb = testsup::random_kb(rng);
    CAPTURE(to_string(kb));
    auto plain = minimal_s_enriched_models(kb, {}, false);
    auto strengthened = minimal_s_enriched_models(kb, {}, true);
    REQUIRE(plain.size() == strengthened.size());
    for (std::size_t m = 0; m < plain.size(); ++m)
      CHECK(plain[m].global_rank == strengthened[m].global_rank);
  }
}
