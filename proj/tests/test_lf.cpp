#include "doctest.h"
#include "lf.hpp"

using namespace dltag;

TEST_CASE("fresh labels fill the smallest unused index") {
  LabelTable t;
  t.intern("e1");
  t.intern("e2");
  t.intern("e3");
  t.intern("e4");
  t.intern("e5");
  CHECK(t.text(t.fresh("e")) == "e6");

  LabelTable t2;
  CHECK(t2.text(t2.fresh("i")) == "i1");

  LabelTable t3;
  LabelId a = t3.fresh("e");
  LabelId b = t3.fresh("e");
  CHECK(t3.text(a) != t3.text(b));

  // A gap left by the input numbering is reused, the way the route
  // directions analysis numbers the bridged culmination e2 next to e3.
  LabelTable t4;
  t4.intern("e1");
  t4.intern("e3");
  CHECK(t4.text(t4.fresh("e")) == "e2");

  // Primed families share the index pool.
  LabelTable t5;
  t5.intern("e1");
  t5.intern("e2");
  t5.intern("e3'");
  CHECK(t5.text(t5.fresh("e", "'")) == "e4'");
}

TEST_CASE("beta reduction substitutes the bound variable") {
  LogicalForm lf;
  LabelId e4 = lf.labels.intern("e4");
  VarId ev = lf.makeVar("EV", VarKind::AdverbialAntecedent);
  VarId x = lf.makeVar("x", VarKind::AbstractionBound);

  Lambda lam;
  lam.bound = x;
  lam.body = Term("after", {Arg(VarArg{x}), Arg(VarArg{ev})});
  Term r = betaReduce(lam, e4);
  CHECK(lf.printTerm(r) == "after(e4,EV)");

  // [\x.if(VE,x)] e3 == if(VE,e3)
  LabelId e3 = lf.labels.intern("e3");
  VarId ve = lf.makeVar("VE", VarKind::DerivedComplement);
  Lambda lam2;
  lam2.bound = x;
  lam2.body = Term("if", {Arg(VarArg{ve}), Arg(VarArg{x})});
  CHECK(lf.printTerm(betaReduce(lam2, e3)) == "if(VE,e3)");

  // Vacuous binding leaves the body untouched.
  LabelId j = lf.labels.intern("e1");
  Lambda lam3;
  lam3.bound = x;
  lam3.body = Term("left", {Arg(IndividualArg{"j"})});
  CHECK(lf.printTerm(betaReduce(lam3, j)) == "left(j)");

  // Idempotence: reducing twice with the same argument changes nothing.
  Term once = betaReduce(lam, e4);
  Term again = once;
  substituteVar(again, x, Arg(LabelArg{e4}));
  CHECK(lf.printTerm(once) == lf.printTerm(again));
}

TEST_CASE("resolve_var rewrites occurrences and shrinks the unresolved set") {
  LogicalForm lf;
  LabelId e4 = lf.labels.intern("e4");
  LabelId e2 = lf.labels.intern("e2");
  VarId ev = lf.makeVar("EV", VarKind::AdverbialAntecedent);
  lf.addRelation(Term("after", {Arg(LabelArg{e4}), Arg(VarArg{ev})}));

  CHECK(lf.unresolved().size() == 1);
  lf.resolveVar(ev, e2);
  CHECK(lf.unresolved().empty());
  lf.finalizeLabels();
  CHECK(lf.item(0).term.pred == "after");
  CHECK(lf.printTerm(lf.item(0).term) == "i1:after(e4,e2)");

  CHECK_THROWS_WITH_AS(lf.resolveVar(ev, e2), doctest::Contains("already resolved"),
                       Error);
}

TEST_CASE("resolving an EV with a companion VE materializes the complement") {
  // if(VE,e3) with complement(VE,EV), EV->e2 gives if(e4,e3) and
  // complement(e2,e4) with a fresh e4 for VE.
  LogicalForm lf;
  lf.setDefaultFamily("e", "");
  LabelId e3 = lf.labels.intern("e3");
  LabelId e2 = lf.labels.intern("e2");
  lf.labels.intern("e1");
  VarId ev = lf.makeVar("EV", VarKind::AdverbialAntecedent);
  VarId ve = lf.makeVar("VE", VarKind::DerivedComplement);
  lf.var(ve).companionEv = ev;
  lf.addRelation(Term("if", {Arg(VarArg{ve}), Arg(LabelArg{e3})}));

  CHECK(lf.unresolved().size() == 1);  // VE is derived, not externally resolved
  lf.resolveVar(ev, e2);
  CHECK(lf.unresolved().empty());
  lf.finalizeLabels();
  CHECK(lf.prettyPrint() == "e5:if(e4,e3)\ncomplement(e2,e4)");
}

TEST_CASE("unknown variable and unknown target are rejected") {
  LogicalForm lf;
  LabelId e1 = lf.labels.intern("e1");
  CHECK_THROWS_AS(lf.resolveVar(42, e1), Error);
  VarId ev = lf.makeVar("EV", VarKind::AdverbialAntecedent);
  CHECK_THROWS_AS(lf.resolveVar(ev, 99), Error);
}

TEST_CASE("pretty printing follows the LF text grammar") {
  LogicalForm lf;
  LabelId e1 = lf.labels.intern("e1");
  Term t("left", {Arg(IndividualArg{"j"})});
  t.label = e1;
  lf.addEvent(std::move(t));
  CHECK(lf.prettyPrint() == "e1:left(j)");

  LogicalForm empty;
  CHECK(empty.prettyPrint() == "");

  // Defeasible rule with an equality consequent: during(X,e1) > ~(X = e2)
  LogicalForm lf2;
  LabelId a = lf2.labels.intern("e1");
  LabelId b = lf2.labels.intern("e2");
  VarId x = lf2.makeVar("X", VarKind::AbstractionBound);
  Rule rule;
  rule.antecedent.push_back(Term("during", {Arg(VarArg{x}), Arg(LabelArg{a})}));
  rule.consequent = Term("=", {Arg(VarArg{x}), Arg(LabelArg{b})});
  rule.negatedConsequent = true;
  lf2.addRule(std::move(rule));
  CHECK(lf2.prettyPrint() == "during(X,e1) > ~(X = e2)");
}

TEST_CASE("negation prints bare predicates without extra parentheses") {
  LogicalForm lf;
  LabelId i1 = lf.labels.intern("i1");
  Term inner("explanation", {Arg(IndividualArg{"a"}), Arg(IndividualArg{"b"})});
  Term neg("~", {});
  neg.args.push_back(std::make_shared<Term>(inner));
  neg.label = i1;
  lf.addEvent(std::move(neg));
  CHECK(lf.prettyPrint() == "i1:~explanation(a,b)");
}

TEST_CASE("lambda arguments print with the backslash notation") {
  LogicalForm lf;
  VarId x = lf.makeVar("X", VarKind::AbstractionBound);
  auto lam = std::make_shared<Lambda>();
  lam->bound = x;
  lam->body = Term("contain", {Arg(IndividualArg{"box1"}), Arg(VarArg{x})});
  Term t("exemplify", {Arg(IndividualArg{"hematite1"}), Arg(lam)});
  lf.addEvent(std::move(t));
  CHECK(lf.prettyPrint() == "exemplify(hematite1,\\X.contain(box1,X))");
}

TEST_CASE("LF text round-trips through parse and print") {
  const char* docs[] = {
      "e1:left(j)",
      "e1:left(j)\ne2:left(m)\ne3:because(e1,e2)",
      "e4:upset(DPRO,s)",
      "i1:exemplification(interp(T2),\\X.explanation(X,interp(T1)))",
      "e6:if(e4,e3)\ncomplement(e2,e4)",
      "during(X,e1) > ~(X = e2)",
      "during(X,E) ^ E:discuss(Y,politics) > ~(X:think_about(Y,fish))",
      "i1:~explanation(interp(TB),interp(T1))",
  };
  for (const char* doc : docs) {
    LogicalForm lf;
    ParsedLf parsed = parseLfText(doc, lf);
    for (auto& item : parsed.items) {
      if (item.kind == ItemKind::RuleItem)
        lf.addRule(*item.rule);
      else if (!item.term.label && !item.term.varLabel && lf.itemCount() > 0)
        lf.addAnchored(std::move(item.term), lf.itemCount() - 1);
      else
        lf.addEvent(std::move(item.term));
    }
    CHECK(lf.prettyPrint() == doc);
  }
}

TEST_CASE("referential integrity scans every argument position") {
  LogicalForm lf;
  LabelId e1 = lf.labels.intern("e1");
  Term t("because", {Arg(LabelArg{e1}), Arg(LabelArg{e1})});
  lf.addEvent(std::move(t));
  CHECK(lf.referentialIntegrity());
  Term bad("because", {Arg(LabelArg{917}), Arg(LabelArg{e1})});
  lf.addEvent(std::move(bad));
  CHECK(!lf.referentialIntegrity());
}
