#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dalc/parser.hpp"
#include "test_support.hpp"

using namespace dalc;

TEST_CASE("statement forms") {
  KnowledgeBase kb = parse_kb(
      "# a comment\n"
      "Penguin <= Bird.\n"
      "T(Penguin) <= not Fly.\n"
      "Bird(tweety).\n"
      "hasFriend(tweety, opus).\n");
  CHECK(kb.strict.size() == 1);
  CHECK(kb.defeasible.size() == 1);
  REQUIRE(kb.concept_assertions.size() == 1);
  CHECK(kb.concept_assertions[0].individual == "tweety");
  REQUIRE(kb.role_assertions.size() == 1);
  CHECK(kb.role_assertions[0].role == "hasFriend");
  CHECK(kb.role_assertions[0].from == "tweety");
  CHECK(kb.role_assertions[0].to == "opus");
}

TEST_CASE("precedence and quantifiers") {
  CHECK(same_concept(parse_concept("not A and B or C"),
                     parse_concept("((not A) and B) or C")));
  CHECK(to_string(parse_concept("exists r.A and B")) ==
        "exists r.A and B");  // quantifier body is a primary
  Query q = parse_query("T(Penguin and Black) <= not Fly");
  CHECK(q.lhs.typical);
  CHECK(to_string(q.lhs.subject) == "Penguin and Black");
}

TEST_CASE("duplicate defeasible inclusions collapse") {
  KnowledgeBase kb = parse_kb(
      "T(Bird) <= Fly.\n"
      "T(Bird) <= Fly or Fly.\n");
  CHECK(kb.defeasible.size() == 1);
}

TEST_CASE("parse errors carry position") {
  CHECK_THROWS_AS(parse_kb("Penguin <= Bird"), ParseError);  // missing dot
  CHECK_THROWS_AS(parse_kb("Penguin <= <= Bird."), ParseError);
  CHECK_THROWS_AS(parse_concept(""), ParseError);
  try {
    parse_kb("A <= B.\n??");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("typicality is restricted to the whole lhs") {
  CHECK_THROWS_AS(parse_kb("A <= T(B)."), ParseError);
  CHECK_THROWS_AS(parse_kb("T(A) and C <= B."), ParseError);
  CHECK_THROWS_AS(parse_concept("T(A)"), ParseError);
}

TEST_CASE("name namespaces are disjoint") {
  CHECK_THROWS_AS(parse_kb("Bird(tweety). tweety <= Bird."), ParseError);
  CHECK_THROWS_AS(parse_kb("r(a, b). r <= Bird."), ParseError);
  CHECK_THROWS_AS(parse_kb("A <= exists r.B. r(a, b). A(r)."), ParseError);
  // same name reused consistently is fine
  CHECK_NOTHROW(parse_kb("r(a, b). r(b, a). A(a)."));
}

TEST_CASE("fixtures parse") {
  for (const char* f : {"kb1.dl", "kb2.dl", "kb3.dl", "kb4.dl"}) {
    KnowledgeBase kb = testsup::load_fixture(f);
    CHECK(kb.defeasible.size() >= 3);
  }
}
