#include "composer.hpp"

#include <functional>

namespace dltag {

namespace {

class Composer {
 public:
  Composer(const Derivation& d, const Lexicon& lx, const std::vector<EventSeed>& seeds)
      : d_(d), lx_(lx), seeds_(seeds) {}

  Interpretation run() {
    chooseLabelFamily();
    seedEvents();
    composeClauses();
    // Structural relations in completion order, then adverbials in text
    // order; item order is the label-assignment base order.
    emitNode(d_.root);
    out_.top = segmentTop_.at(d_.root.get());
    emitAdverbials();
    return std::move(out_);
  }

 private:
  // Generated labels continue the family of the last clause's head label
  // ("e", "e'"); analyses over bare clauses use the "i" family.
  void chooseLabelFamily() {
    std::string base = "i", suffix;
    for (const auto* tok : d_.clauseTokens) {
      if (tok->lfFragment.empty() || looksLikeVarName(tok->lfFragment)) continue;
      size_t colon = tok->lfFragment.find(':');
      if (colon == std::string::npos) continue;
      LogicalForm scratch;
      LabelId id = scratch.labels.intern(tok->lfFragment.substr(0, colon));
      const LabelInfo& info = scratch.labels.info(id);
      if (info.numeric) {
        base = info.base;
        suffix = info.suffix;
      }
    }
    out_.lf.setDefaultFamily(base, suffix);
  }

  void seedEvents() {
    for (const auto& seed : seeds_) {
      LabelId id = out_.lf.labels.intern(seed.label);
      // The most recent seeded event stands for the preceding discourse
      // segment that a continuation of the first unit may elaborate.
      predecessorTop_ = id;
      if (!seed.termText.empty()) {
        ParsedLf parsed = parseLfText(seed.termText, out_.lf);
        for (auto& it : parsed.items) out_.lf.addEvent(std::move(it.term));
      }
    }
  }

  void composeClauses() {
    for (size_t i = 0; i < d_.clauses.size(); i++) {
      const DiscourseToken& tok = *d_.clauseTokens[i];
      ClauseInfo info;
      info.id = tok.clauseId;
      info.index = static_cast<int>(i) + 1;
      info.props = tok.props;
      if (tok.lfFragment.empty()) {
        LabelId top = out_.lf.labels.intern("interp(" + tok.clauseId + ")");
        info.top = LabelArg{top};
        info.eventLabels.push_back(top);
      } else if (looksLikeVarName(tok.lfFragment)) {
        VarKind kind = tok.lfFragment.rfind("DPRO", 0) == 0 ? VarKind::DeicticPronoun
                                                            : VarKind::AdverbialAntecedent;
        info.top = VarArg{out_.lf.makeVar(tok.lfFragment, kind)};
      } else {
        ParsedLf parsed = parseLfText(tok.lfFragment, out_.lf);
        if (parsed.items.empty() || !parsed.items.front().term.label)
          throw Error("missing-clause-interpretation",
                      "clause " + tok.clauseId + " has no labeled head term");
        info.top = LabelArg{*parsed.items.front().term.label};
        for (auto& it : parsed.items) {
          if (it.term.label) info.eventLabels.push_back(*it.term.label);
          out_.lf.addEvent(std::move(it.term));
        }
      }
      clauseTop_[tok.clauseId] = info.top;
      out_.clauses.push_back(std::move(info));
    }
  }

  Arg clauseArgOf(const DerivNodePtr& n) { return clauseTop_.at(n->clauseId); }

  int firstClauseIndexOfUnit(const DerivNodePtr& n) const {
    if (n->isClause) return d_.clauseIndex(n->clauseId);
    for (const auto& c : n->children) {
      int idx = firstClauseIndexOfUnit(c.child);
      if (idx) return idx;
    }
    return 0;
  }

  // Interprets the node's own structure and returns its top abstract object.
  // Continuations adjoined at this node update segmentTop_.
  Arg emitNode(const DerivNodePtr& n) {
    Arg top;
    if (n->isClause) {
      top = clauseArgOf(n);
    } else if (n->templateName == "subconj-mid" || n->templateName == "subconj-pre" ||
               n->templateName == "coord-initial" || n->templateName == "paired") {
      std::vector<Arg> operands;
      for (const auto& c : n->children)
        if (c.op == DerivOp::Subst) operands.push_back(emitNode(c.child));
      if (operands.size() != 2)
        throw Error("incomplete-derivation",
                    "connective node " + n->treeId + " lacks an argument");
      bool subIsSecondOperand = n->templateName == "subconj-mid";
      Arg subArg = subIsSecondOperand ? operands[1] : operands[0];
      Arg mainArg = subIsSecondOperand ? operands[0] : operands[1];
      std::vector<Arg> args;
      switch (n->entry->argOrder) {
        case ArgOrder::RightLeft: args = {operands[1], operands[0]}; break;
        case ArgOrder::LeftRight: args = {operands[0], operands[1]}; break;
        case ArgOrder::SubFirst: args = {subArg, mainArg}; break;
        case ArgOrder::SubSecond: args = {mainArg, subArg}; break;
      }
      top = addRelation(n, Term(n->entry->relation, std::move(args)));
    } else {
      throw Error("incomplete-derivation", "unexpected node " + n->treeId);
    }

    segmentTop_[n.get()] = top;
    // Adjoined continuations, outside-in.
    for (const auto& c : n->children) {
      if (c.op != DerivOp::Adjoin) continue;
      const DerivNodePtr& aux = c.child;
      if (aux->templateName != "punct-aux" && aux->templateName != "conj-aux") continue;
      Arg rhsTop;
      const DerivNodePtr* rhs = nullptr;
      for (const auto& ac : aux->children)
        if (ac.op == DerivOp::Subst) {
          rhsTop = emitNode(ac.child);
          rhs = &ac.child;
        }
      if (!rhs)
        throw Error("incomplete-derivation", "continuation " + aux->treeId + " is empty");

      Arg target;
      if (chainTarget_.count(n.get())) {
        // Simple coordination: every conjunct bears the same relation to the
        // same left-adjacent unit as the first one.
        target = chainTarget_[n.get()];
      } else if (n == d_.root && predecessorTop_) {
        target = LabelArg{*predecessorTop_};
      } else {
        target = segmentTop_[n.get()];
      }
      chainTarget_[n.get()] = target;

      Arg relTop = addRelation(aux, Term(aux->entry->relation, {rhsTop, target}));
      segmentTop_[n.get()] = relTop;

      ContinuationRecord rec;
      rec.item = std::get<TermRefArg>(relTop).term;
      rec.leftClauseIndex = targetClauseIndex(target);
      rec.rightClauseIndex = firstClauseIndexOfUnit(*rhs);
      rec.suggestion = aux->entry->refinementSuggestion;
      out_.continuations.push_back(rec);
    }
    return segmentTop_[n.get()];
  }

  int targetClauseIndex(const Arg& target) const {
    if (auto* l = std::get_if<LabelArg>(&target))
      for (const auto& c : out_.clauses)
        if (auto* lt = std::get_if<LabelArg>(&c.top); lt && lt->id == l->id) return c.index;
    return 0;
  }

  Arg addRelation(const DerivNodePtr& node, Term t) {
    if (node->negated) {
      Term neg("~", {});
      neg.args.push_back(std::make_shared<Term>(std::move(t)));
      t = std::move(neg);
    }
    int item = out_.lf.addRelation(std::move(t));
    itemOfNode_[node.get()] = item;
    out_.relationItemOfNode[node->treeId] = item;
    out_.nodeTrace.push_back(node->treeId + " -> item " + std::to_string(item));
    return TermRefArg{item};
  }

  void emitAdverbials() {
    int evCount = 0;
    for (size_t i = 0; i < d_.adverbials.size(); i++) {
      const AdverbialOccurrence& occ = d_.adverbials[i];
      AdverbialInstance inst;
      inst.entry = occ.entry;
      inst.index = static_cast<int>(i);
      inst.hostClauseIndex = occ.hostClauseIndex;
      inst.negated = occ.negated;
      inst.sigma = occ.hostClause->isClause ? clauseArgOf(occ.hostClause)
                                            : segmentTop_.at(occ.hostClause.get());
      if (occ.enclosing && itemOfNode_.count(occ.enclosing.get()))
        inst.enclosingItem = itemOfNode_[occ.enclosing.get()];
      if (occ.enclosing && occ.enclosing->entry)
        inst.enclosingClass = occ.enclosing->entry->cls;

      InteractionCase c = occ.entry->interactionCase.value_or(InteractionCase::Case1);
      if (c == InteractionCase::Case3Parasitic) {
        out_.adverbials.push_back(std::move(inst));
        continue;
      }

      evCount++;
      std::string suffix = evCount > 1 ? std::to_string(evCount) : "";
      inst.ev = out_.lf.makeVar("EV" + suffix, VarKind::AdverbialAntecedent);
      if (c == InteractionCase::Case4Defeasible) {
        // The contribution is a presupposed rule, built at resolution; the
        // anaphoric antecedent is still sought through EV.
        out_.adverbials.push_back(std::move(inst));
        continue;
      }

      Term t;
      if (occ.entry->complementForming) {
        inst.ve = out_.lf.makeVar("VE" + suffix, VarKind::DerivedComplement);
        out_.lf.var(inst.ve).companionEv = inst.ev;
        t = Term(occ.entry->relation, {Arg(VarArg{inst.ve}), inst.sigma});
      } else if (auto* sl = std::get_if<LabelArg>(&inst.sigma)) {
        // [\x . R_a(x, EV)] sigma
        Lambda lam;
        lam.bound = out_.lf.makeVar("x", VarKind::AbstractionBound);
        lam.body = Term(occ.entry->relation, {Arg(VarArg{lam.bound}), Arg(VarArg{inst.ev})});
        t = betaReduce(lam, sl->id);
      } else {
        t = Term(occ.entry->relation, {inst.sigma, Arg(VarArg{inst.ev})});
      }
      if (inst.negated) {
        Term neg("~", {});
        neg.args.push_back(std::make_shared<Term>(std::move(t)));
        t = std::move(neg);
      }
      inst.termItem = out_.lf.addRelation(std::move(t));
      out_.adverbials.push_back(std::move(inst));
    }
  }

  const Derivation& d_;
  const Lexicon& lx_;
  const std::vector<EventSeed>& seeds_;
  Interpretation out_;
  std::optional<LabelId> predecessorTop_;
  std::map<std::string, Arg> clauseTop_;
  std::map<const DerivationNode*, Arg> segmentTop_;
  std::map<const DerivationNode*, Arg> chainTarget_;
  std::map<const DerivationNode*, int> itemOfNode_;
};

}  // namespace

Interpretation interpret(const Derivation& d, const Lexicon& lexicon,
                         const std::vector<EventSeed>& seeds) {
  return Composer(d, lexicon, seeds).run();
}

Lambda abstractRelation(LogicalForm& lf, const Term& rel, int overArg) {
  if (rel.args.size() != 2)
    throw Error("non-binary", "can only abstract over a binary relation");
  Lambda lam;
  lam.bound = lf.makeVar("X", VarKind::AbstractionBound);
  lam.body = rel;
  lam.body.label.reset();
  lam.body.args[static_cast<size_t>(overArg)] = VarArg{lam.bound};
  return lam;
}

}  // namespace dltag
