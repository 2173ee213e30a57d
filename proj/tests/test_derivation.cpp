#include "doctest.h"
#include "analysis.hpp"
#include "derivation.hpp"

using namespace dltag;

namespace {

std::vector<DiscourseToken> tokensOf(const std::string& text) {
  return parseDiscFile(text).tokens;
}

}  // namespace

TEST_CASE("medial subordinate conjunction derivation") {
  // You shouldn't trust John because he never returns what he borrows.
  Lexicon lx = Lexicon::defaults();
  Derivation d = buildDerivation(tokensOf("CLAUSE T1\nCONN because\nCLAUSE T2\n"), lx);
  REQUIRE(!d.root->isClause);
  CHECK(d.root->treeId == "alpha:because-mid");
  REQUIRE(d.root->children.size() == 2);
  CHECK(d.root->children[0].op == DerivOp::Subst);
  CHECK(d.root->children[0].address == "1");
  CHECK(d.root->children[0].child->clauseId == "T1");
  CHECK(d.root->children[1].address == "3");
  CHECK(d.root->children[1].child->clauseId == "T2");

  Tree t = replay(d);
  CHECK(serialize(t) == "(Dc (Dc T1) because (Dc T2))");
}

TEST_CASE("punctuation adjoins at the left segment root") {
  Lexicon lx = Lexicon::defaults();
  Derivation d = buildDerivation(tokensOf("CLAUSE T1\nPUNCT .\nCLAUSE T2\n"), lx);
  CHECK(d.root->isClause);  // the derivation tree is rooted in tau1
  REQUIRE(d.root->children.size() == 1);
  CHECK(d.root->children[0].op == DerivOp::Adjoin);
  CHECK(d.root->children[0].address == "0");
  CHECK(d.root->children[0].child->treeId == "beta:punct");

  Tree t = replay(d);
  CHECK(serialize(t) == "(Dc (Dc T1) . (Dc T2))");
}

TEST_CASE("barolo derivation matches the four-clause walkthrough") {
  Lexicon lx = Lexicon::defaults();
  Derivation d = buildDerivation(
      tokensOf("CLAUSE T1\nCONN so\nCLAUSE T2\nCONN but\nCLAUSE T3\n"
               "CONN because\nCONN then\nCLAUSE T4\n"),
      lx);
  CHECK(d.root->treeId == "alpha:so");
  // T1 and T2 substitute into alpha:so; beta:but root-adjoins the result.
  REQUIRE(d.root->children.size() == 3);
  CHECK(d.root->children[2].op == DerivOp::Adjoin);
  const DerivationNode& but = *d.root->children[2].child;
  CHECK(but.treeId == "beta:but");
  REQUIRE(but.children.size() == 1);
  const DerivationNode& because = *but.children[0].child;
  CHECK(because.treeId == "alpha:because-mid");
  const DerivationNode& t4 = *because.children[1].child;
  CHECK(t4.clauseId == "T4");
  REQUIRE(t4.children.size() == 1);
  CHECK(t4.children[0].child->treeId == "beta:then");

  // Completion order: so, because, but.
  REQUIRE(d.structuralOrder.size() == 3);
  CHECK(d.structuralOrder[0]->treeId == "alpha:so");
  CHECK(d.structuralOrder[1]->treeId == "alpha:because-mid");
  CHECK(d.structuralOrder[2]->treeId == "beta:but");

  // Yield preservation, against brute-force leaf enumeration.
  Tree t = replay(d);
  std::vector<std::string> yield = t.clauseYield();
  std::vector<std::string> expected = {"T1", "T2", "T3", "T4"};
  CHECK(yield == expected);
}

TEST_CASE("single clause replays to its own unit") {
  Lexicon lx = Lexicon::defaults();
  Derivation d = buildDerivation(tokensOf("CLAUSE T1\n"), lx);
  CHECK(serialize(replay(d)) == "(Dc T1)");
}

TEST_CASE("for example consumes both tree-set members") {
  Lexicon lx = Lexicon::defaults();
  Derivation d = buildDerivation(
      tokensOf("CLAUSE T1\nCONN because\nCONN for example\nCLAUSE T2\n"), lx);
  REQUIRE(d.adverbials.size() == 1);
  const AdverbialOccurrence& occ = d.adverbials[0];
  CHECK(occ.advNode->treeId == "beta:for_ex1");
  REQUIRE(occ.discourseMember);
  CHECK(occ.discourseMember->treeId == "beta:for_ex2");
  CHECK(occ.enclosing->treeId == "alpha:because-mid");

  int members = 0;
  std::function<void(const DerivNodePtr&)> count = [&](const DerivNodePtr& n) {
    if (n->templateName == "for-example-set") members++;
    for (const auto& c : n->children) count(c.child);
  };
  count(d.root);
  CHECK(members == 2);
  CHECK(replay(d).complete());
}

TEST_CASE("preposed subordinate takes the following two units") {
  Lexicon lx = Lexicon::defaults();
  Derivation d = buildDerivation(
      tokensOf("CONN if\nCLAUSE C1 | e1:red(light1)\nCLAUSE C2 | e2:stop(you)\n"), lx);
  CHECK(d.root->treeId == "alpha:if-pre");
  CHECK(serialize(replay(d)) == "(Dc if (Dc C1) (Dc C2))");
}

TEST_CASE("builder error cases") {
  Lexicon lx = Lexicon::defaults();
  CHECK_THROWS_WITH_AS(buildDerivation(tokensOf("CLAUSE T1\nCONN zebra\nCLAUSE T2\n"), lx),
                       doctest::Contains("not in lexicon"), Error);
  // A subordinate conjunction as final token dangles.
  CHECK_THROWS_AS(buildDerivation(tokensOf("CLAUSE T1\nCONN because\n"), lx), Error);
  CHECK_THROWS_AS(buildDerivation(tokensOf("CONN if\nCLAUSE C1\n"), lx), Error);
  // Two clauses with no connective between them.
  CHECK_THROWS_AS(buildDerivation(tokensOf("CLAUSE T1\nCLAUSE T2\n"), lx), Error);
  // A paired construction missing its second anchor.
  CHECK_THROWS_AS(
      buildDerivation(tokensOf("CONN on the one hand\nCLAUSE A\nCLAUSE B\n"), lx), Error);
}

TEST_CASE("marked coordination needs its annotation") {
  Lexicon lx = Lexicon::defaults();
  // Unmarked "and" continues the description.
  Derivation d1 = buildDerivation(tokensOf("CLAUSE T1\nCONN and\nCLAUSE T2\n"), lx);
  CHECK(d1.root->isClause);
  // Marked "and" builds the result-bearing initial tree.
  Derivation d2 =
      buildDerivation(tokensOf("CLAUSE T1\nCONN and | marked\nCLAUSE T2\n"), lx);
  CHECK(d2.root->treeId == "alpha:and");
}

TEST_CASE("paired construction with embedded pair") {
  Lexicon lx = Lexicon::defaults();
  Derivation d = buildDerivation(
      tokensOf("CONN on the one hand\nCLAUSE A\nPUNCT .\nCONN not only\nCLAUSE B\n"
               "CONN but also\nCLAUSE C\nCONN on the other hand\nCLAUSE D\n"),
      lx);
  Tree t = replay(d);
  std::vector<std::string> expected = {"A", "B", "C", "D"};
  CHECK(t.clauseYield() == expected);
  DependencyGraph g = extractDependencies(d, {});
  CHECK(checkNoCrossing(g).violations.empty());
}

TEST_CASE("replay round-trips to a structurally identical tree") {
  Lexicon lx = Lexicon::defaults();
  Derivation d = buildDerivation(
      tokensOf("CLAUSE T1\nCONN so\nCLAUSE T2\nCONN but\nCLAUSE T3\n"
               "CONN because\nCONN then\nCLAUSE T4\n"),
      lx);
  CHECK(serialize(replay(d)) == serialize(replay(d)));
}

TEST_CASE("crossing check flags interleaved structural links only") {
  // Fig 3(i): although(a,c) crossing if(b,d).
  DependencyGraph g;
  g.links.push_back({"although", "a", "c", 1, 3, false});
  g.links.push_back({"if", "b", "d", 2, 4, false});
  CrossingReport r = checkNoCrossing(g);
  CHECK(r.violations.size() == 1);

  // The nested (stretched) variant is fine: although(a,d), if(b,c).
  DependencyGraph nested;
  nested.links.push_back({"although", "a", "d", 1, 4, false});
  nested.links.push_back({"if", "b", "c", 2, 3, false});
  CHECK(checkNoCrossing(nested).violations.empty());

  // An anaphoric link crossing a structural one is reported, not flagged.
  DependencyGraph barolo;
  barolo.links.push_back({"so", "T1", "T2", 1, 2, false});
  barolo.links.push_back({"but", "T2", "T3", 2, 3, false});
  barolo.links.push_back({"because", "T3", "T4", 3, 4, false});
  barolo.links.push_back({"then", "T2", "T4", 2, 4, true});
  CrossingReport br = checkNoCrossing(barolo);
  CHECK(br.violations.empty());
  CHECK(br.anaphoricCrossings.size() == 2);

  CHECK(checkNoCrossing(DependencyGraph{}).violations.empty());
}

TEST_CASE("derivation dump and dot output") {
  Lexicon lx = Lexicon::defaults();
  Derivation d = buildDerivation(tokensOf("CLAUSE T1\nPUNCT .\nCLAUSE T2\n"), lx);
  std::string dump = dumpDerivation(d);
  CHECK(dump.find("adjoin@0 <- beta:punct") != std::string::npos);
  CHECK(dump.find("subst@3 <- T2") != std::string::npos);
  std::string dot = derivationDot(d);
  CHECK(dot.find("style=dashed") != std::string::npos);
}

TEST_CASE("right frontier is the path to the last clause") {
  Lexicon lx = Lexicon::defaults();
  Derivation d = buildDerivation(
      tokensOf("CONN if\nCLAUSE C1\nCLAUSE C2\nPUNCT .\nCONN otherwise\nCLAUSE C3\n"), lx);
  std::vector<std::string> frontier = rightFrontier(d);
  CHECK(std::find(frontier.begin(), frontier.end(), "C3") != frontier.end());
  // The condition clause sits inside the first sentence, off the frontier.
  CHECK(std::find(frontier.begin(), frontier.end(), "C1") == frontier.end());
}
