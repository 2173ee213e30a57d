#include "doctest.h"
#include "lexicon.hpp"

using namespace dltag;

TEST_CASE("default lexicon covers the worked connectives") {
  Lexicon lx = Lexicon::defaults();

  auto then = lx.lookup("then");
  REQUIRE(then.size() == 1);
  CHECK(then[0]->cls == ConnClass::Adverbial);
  CHECK(then[0]->relation == "after");
  CHECK(then[0]->constraint == "culminated-eventuality");
  CHECK(then[0]->interactionCase == InteractionCase::Case1);

  auto otherwise = lx.lookup("otherwise");
  REQUIRE(otherwise.size() == 1);
  CHECK(otherwise[0]->complementForming);
  CHECK(otherwise[0]->interactionCase == InteractionCase::Case2);

  auto so = lx.lookup("so");
  REQUIRE(so.size() == 1);
  CHECK(so[0]->cls == ConnClass::Coord);
  CHECK(so[0]->relation == "result");
  CHECK(so[0]->treeFamily == "coord-initial");

  auto forex = lx.lookup("for example");
  REQUIRE(forex.size() == 1);
  CHECK(forex[0]->interactionCase == InteractionCase::Case3Parasitic);

  // Simple-coordination aux plus the marked (result-bearing) initial.
  auto andEntries = lx.lookup("and");
  CHECK(andEntries.size() == 2);

  for (const char* s : {"because", "although", "while", "after", "if", ".", ";",
                        "nevertheless", "though", "instead", "by contrast", "meanwhile"})
    CHECK(lx.lookup(s).size() >= 1);

  CHECK(lx.lookup("on the one hand").size() == 1);
  CHECK(lx.lookup("not only").size() == 1);

  CHECK(lx.lookup("zebra").empty());
}

TEST_CASE("every adverbial entry has a case and every entry a tree family") {
  Lexicon lx = Lexicon::defaults();
  for (const auto& e : lx.entries()) {
    CHECK(!e.treeFamily.empty());
    if (e.cls == ConnClass::Adverbial) {
      CHECK(e.interactionCase.has_value());
      CHECK(knownConstraint(e.constraint));
    } else {
      CHECK(!e.interactionCase.has_value());
    }
    if (e.cls == ConnClass::Punct) CHECK(e.relation == "elaboration");
  }
}

TEST_CASE("loading extends and replaces entries") {
  Lexicon lx = Lexicon::defaults();
  size_t before = lx.entries().size();

  // "on the other hand" both closes the pair and stands alone.
  lx.load("on the other hand | Adverbial | contrast | adverbial-aux | any | Case1\n");
  CHECK(lx.lookup("on the other hand").size() == 2);
  CHECK(lx.entries().size() == before + 1);

  // Empty input leaves the defaults unchanged.
  lx.load("# just a comment\n\n");
  CHECK(lx.entries().size() == before + 1);

  // Replacing an existing (surface, class) keeps the count.
  lx.load("because | Subord | explanation | subconj | | | order=sub-first\n");
  CHECK(lx.entries().size() == before + 1);

  CHECK_THROWS_WITH_AS(lx.load("oops | Gerund | x | y\n"),
                       doctest::Contains("unknown class"), Error);
  CHECK_THROWS_WITH_AS(lx.load("oops | Adverbial | x | y | not-a-constraint\n"),
                       doctest::Contains("unknown constraint"), Error);
  CHECK_THROWS_WITH_AS(lx.load("justone | Coord\n"), doctest::Contains("at least 4"),
                       Error);
}

TEST_CASE("longest match beats prefix") {
  Lexicon lx = Lexicon::defaults();
  std::vector<std::string> words = {"for", "example", "he", "lied"};
  std::string matched;
  CHECK(lx.longestMatch(words, 0, &matched) == 2);
  CHECK(matched == "for example");

  std::vector<std::string> hand = {"on", "the", "other", "hand"};
  CHECK(lx.longestMatch(hand, 0, &matched) == 4);
}

TEST_CASE("antecedent constraints consult event properties") {
  CHECK(constraintHolds("any", {}));
  CHECK(constraintHolds("culminated-eventuality", {"culminated"}));
  CHECK(!constraintHolds("culminated-eventuality", {"process"}));
  CHECK(constraintHolds("complement-admitting", {"condition-antecedent"}));
  CHECK(constraintHolds("complement-admitting", {"action"}));
  CHECK(!constraintHolds("complement-admitting", {"state"}));
  CHECK(constraintHolds("alternative-admitting", {"alternative-admitting"}));
}
