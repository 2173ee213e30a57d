#include "doctest.h"
#include "grammar.hpp"

using namespace dltag;

TEST_CASE("templates instantiate with the expected shapes") {
  Tree mid = instantiate("subconj-mid", "because");
  CHECK(mid.kind == TreeKind::Initial);
  CHECK(serialize(mid) == "(Dc Dc| because Dc|)");
  CHECK(mid.substitutionSites().size() == 2);
  CHECK(mid.foot() == nullptr);

  Tree pre = instantiate("subconj-pre", "although");
  CHECK(serialize(pre) == "(Dc although Dc| Dc|)");

  Tree punct = instantiate("punct-aux", ".");
  CHECK(punct.kind == TreeKind::Auxiliary);
  CHECK(serialize(punct) == "(Dc Dc* . Dc|)");
  REQUIRE(punct.foot() != nullptr);
  CHECK(punct.foot()->label == punct.root->label);

  Tree adv = instantiate("adverbial-aux", "then");
  CHECK(serialize(adv) == "(Dc then Dc*)");

  Tree pair = instantiate("paired", "on the one hand", "on the other hand");
  CHECK(serialize(pair) == "(Dc on the one hand Dc| on the other hand Dc|)");

  TreeSet set = instantiateSet("for-example-set", "for example");
  CHECK(set.clauseLevel.id == "beta:for_ex1");
  CHECK(set.discourseLevel.id == "beta:for_ex2");
  CHECK(set.clauseLevel.foot() != nullptr);
  CHECK(set.discourseLevel.foot() != nullptr);
  // The discourse-level member contributes no surface material.
  CHECK(set.discourseLevel.yield().empty());

  CHECK_THROWS_AS(instantiate("zigzag", "x"), Error);
}

TEST_CASE("substitution fills sites and rejects bad targets") {
  Tree host = instantiate("subconj-mid", "because");
  substitute(host, "1", clauseTree("T1"));
  substitute(host, "3", clauseTree("T2"));
  CHECK(serialize(host) == "(Dc (Dc T1) because (Dc T2))");
  CHECK(host.complete());

  Tree host2 = instantiate("subconj-mid", "because");
  CHECK_THROWS_WITH_AS(substitute(host2, "0", clauseTree("T1")),
                       doctest::Contains("not a substitution site"), Error);
  CHECK_THROWS_WITH_AS(substitute(host2, "1", instantiate("punct-aux", ".")),
                       doctest::Contains("auxiliary"), Error);
}

TEST_CASE("adjunction splices the displaced subtree under the foot") {
  // Fig-8 pattern: punct adjoins at the root of T1, T2 fills its slot.
  Tree punct = instantiate("punct-aux", ".");
  substitute(punct, "3", clauseTree("T2"));
  Tree t1 = clauseTree("T1");
  adjoin(t1, "0", punct);
  CHECK(serialize(t1) == "(Dc (Dc T1) . (Dc T2))");

  std::vector<std::string> yield = t1.yield();
  REQUIRE(yield.size() == 3);
  CHECK(yield[0] == "T1");
  CHECK(yield[1] == ".");
  CHECK(yield[2] == "T2");

  // Adverbial aux at the root of a clause.
  Tree t4 = clauseTree("T4");
  adjoin(t4, "0", instantiate("adverbial-aux", "then"));
  CHECK(serialize(t4) == "(Dc then (Dc T4))");

  Tree t5 = clauseTree("T5");
  CHECK_THROWS_WITH_AS(adjoin(t5, "1", instantiate("adverbial-aux", "then")),
                       doctest::Contains("leaf"), Error);
  CHECK_THROWS_WITH_AS(adjoin(t5, "0", clauseTree("T6")),
                       doctest::Contains("auxiliary"), Error);
}

TEST_CASE("adjunction preserves the existing yield order") {
  Tree host = instantiate("subconj-mid", "because");
  substitute(host, "1", clauseTree("T1"));
  substitute(host, "3", clauseTree("T2"));
  std::vector<std::string> before = host.clauseYield();
  Tree punct = instantiate("punct-aux", ";");
  substitute(punct, "3", clauseTree("T3"));
  adjoin(host, "0", punct);
  std::vector<std::string> after = host.clauseYield();
  REQUIRE(after.size() == 3);
  CHECK(after[0] == before[0]);
  CHECK(after[1] == before[1]);
  CHECK(after[2] == "T3");
}

TEST_CASE("gorn addresses are 1-based with 0 for the root") {
  Tree mid = instantiate("subconj-mid", "if");
  CHECK(mid.nodeAt("0") == mid.root);
  CHECK(mid.nodeAt("1")->kind == NodeKind::SubstitutionSite);
  CHECK(mid.nodeAt("2")->kind == NodeKind::Anchor);
  CHECK(mid.nodeAt("3")->kind == NodeKind::SubstitutionSite);
  CHECK(mid.addressOf(mid.nodeAt("3")) == "3");
  CHECK(mid.nodeAt("9") == nullptr);
}

TEST_CASE("dot export is a digraph with one node per tree node") {
  Tree t = clauseTree("T1");
  std::string dot = toDot(t);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("T1") != std::string::npos);
}
