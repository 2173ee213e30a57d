#include "resolver.hpp"

#include <algorithm>

namespace dltag {

ContextEvent* DiscourseContext::find(LabelId label) {
  for (auto& e : events)
    if (e.label == label) return &e;
  return nullptr;
}

const ContextEvent* DiscourseContext::find(LabelId label) const {
  for (const auto& e : events)
    if (e.label == label) return &e;
  return nullptr;
}

DiscourseContext buildContext(const Interpretation& interp,
                              const std::vector<EventSeed>& seeds,
                              const Derivation& d) {
  DiscourseContext ctx;
  // Seeded events precede the clause sequence.
  for (const auto& seed : seeds) {
    ContextEvent ev;
    for (size_t i = 0; i < interp.lf.labels.size(); i++)
      if (interp.lf.labels.text(static_cast<LabelId>(i)) == seed.label)
        ev.label = static_cast<LabelId>(i);
    ev.clauseIndex = 0;
    ev.props = seed.props;
    if (ev.label != kNoId) ctx.events.push_back(std::move(ev));
  }
  for (const auto& cl : interp.clauses) {
    bool head = true;
    for (LabelId l : cl.eventLabels) {
      ContextEvent ev;
      ev.label = l;
      ev.clauseIndex = cl.index;
      if (head) ev.props = cl.props;
      head = false;
      ctx.events.push_back(std::move(ev));
    }
  }
  ctx.frontier = rightFrontier(d);
  return ctx;
}

namespace {

bool hasProp(const std::vector<std::string>& props, const std::string& p) {
  return std::find(props.begin(), props.end(), p) != props.end();
}

LabelId existingAssociate(const DiscourseContext& ctx, LabelId e, const std::string& via) {
  auto it = ctx.associates.find(e);
  if (it == ctx.associates.end()) return kNoId;
  for (const auto& [assoc, name] : it->second)
    if (name == via) return assoc;
  return kNoId;
}

LabelId materializeBridge(DiscourseContext& ctx, LogicalForm& lf, LabelId e,
                          const std::string& via, const std::string& defPred,
                          const std::vector<std::string>& yieldProps) {
  LabelId prior = existingAssociate(ctx, e, via);
  if (prior != kNoId) return prior;
  LabelId fresh = lf.freshLabel();
  Term def(defPred, {Arg(LabelArg{e})});
  def.label = fresh;
  lf.addEvent(std::move(def));
  const ContextEvent* src = ctx.find(e);
  ContextEvent ev;
  ev.label = fresh;
  ev.clauseIndex = src ? src->clauseIndex : 0;
  ev.props = yieldProps;
  ev.bridged = true;
  ev.bridgeVia = via;
  ev.bridgedFrom = e;
  ctx.events.push_back(std::move(ev));
  ctx.associates[e].push_back({fresh, via});
  return fresh;
}

}  // namespace

LabelId bridgeCulmination(DiscourseContext& ctx, LogicalForm& lf, LabelId e) {
  const ContextEvent* ev = ctx.find(e);
  if (!ev) throw Error("unknown-target", "no such event in context");
  LabelId prior = existingAssociate(ctx, e, "culmination");
  if (prior != kNoId) return prior;
  if (!hasProp(ev->props, "process") || hasProp(ev->props, "culminated"))
    throw Error("not-a-process", "culmination coercion requires a process eventuality");
  return materializeBridge(ctx, lf, e, "culmination", "culmination", {"culminated"});
}

std::pair<LabelId, int> complementOf(DiscourseContext& ctx, LogicalForm& lf, LabelId e,
                                     int anchorItem) {
  const ContextEvent* ev = ctx.find(e);
  if (!ev) throw Error("unknown-target", "no such event in context");
  if (!hasProp(ev->props, "condition-antecedent") && !hasProp(ev->props, "action") &&
      !hasProp(ev->props, "answer"))
    throw Error("no-complement",
                "eventuality admits no contextually relevant complement");
  LabelId prior = existingAssociate(ctx, e, "complement");
  if (prior != kNoId) {
    for (int i = 0; i < lf.itemCount(); i++) {
      const LfItem& it = lf.item(i);
      if (!it.erased && it.kind == ItemKind::Event && it.term.pred == "complement")
        if (auto* l = std::get_if<LabelArg>(&it.term.args[1]); l && l->id == prior)
          return {prior, i};
    }
    return {prior, kNoId};
  }
  LabelId fresh = lf.freshLabel();
  Term comp("complement", {Arg(LabelArg{e}), Arg(LabelArg{fresh})});
  int item = lf.addAnchored(std::move(comp), anchorItem);
  ContextEvent nev;
  nev.label = fresh;
  nev.clauseIndex = ev->clauseIndex;
  nev.bridged = true;
  nev.bridgeVia = "complement";
  nev.bridgedFrom = e;
  ctx.events.push_back(std::move(nev));
  ctx.associates[e].push_back({fresh, "complement"});
  return {fresh, item};
}

CompatPredicate compatByName(const std::string& name) {
  if (name == "favor-action")
    return [](const ContextEvent& e) { return hasProp(e.props, "action"); };
  if (name == "favor-condition")
    return [](const ContextEvent& e) { return hasProp(e.props, "condition-antecedent"); };
  throw Error("schema-violation", "unknown compat predicate: " + name);
}

std::optional<std::string> inferAdjacencyRelation(
    const std::vector<std::string>& leftProps, const std::vector<std::string>& rightProps,
    const std::vector<AdjacencyRule>& table) {
  for (const auto& rule : table)
    if (hasProp(leftProps, rule.leftProp) && hasProp(rightProps, rule.rightProp))
      return rule.relation;
  return std::nullopt;
}

namespace {

LabelId sigmaLabel(const AdverbialInstance& inst) {
  if (auto* l = std::get_if<LabelArg>(&inst.sigma)) return l->id;
  return kNoId;
}

Term* slotTerm(LogicalForm& lf, int item) {
  Term* t = &lf.item(item).term;
  if (t->pred == "~") t = std::get<std::shared_ptr<Term>>(t->args[0]).get();
  return t;
}

int findSigmaSlot(const Term& t, const Arg& sigma) {
  for (size_t i = 0; i < t.args.size(); i++) {
    if (auto* l = std::get_if<LabelArg>(&t.args[i]))
      if (auto* s = std::get_if<LabelArg>(&sigma); s && l->id == s->id)
        return static_cast<int>(i);
    if (auto* r = std::get_if<TermRefArg>(&t.args[i]))
      if (auto* s = std::get_if<TermRefArg>(&sigma); s && r->term == s->term)
        return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

std::pair<LabelId, CandidateSet> resolveAdverbial(DiscourseContext& ctx,
                                                  Interpretation& interp,
                                                  AdverbialInstance& inst,
                                                  const CompatPredicate& compat) {
  if (inst.ev == kNoId || interp.lf.var(inst.ev).status == VarStatus::Resolved)
    throw Error("unknown-variable", "adverbial's EV is not unresolved");
  LogicalForm& lf = interp.lf;
  LabelId sigma = sigmaLabel(inst);
  const std::string& constraint = inst.entry->constraint;

  // Bridgeable associates join the candidate pool when their product would
  // satisfy the constraint.
  size_t directCount = ctx.events.size();
  for (size_t i = 0; i < directCount; i++) {
    ContextEvent ev = ctx.events[i];
    if (ev.label == sigma) continue;
    if (hasProp(ev.props, "process") && !hasProp(ev.props, "culminated") &&
        constraintHolds(constraint, {"culminated"}))
      bridgeCulmination(ctx, lf, ev.label);
    if (hasProp(ev.props, "interrogative") &&
        constraintHolds(constraint, {"answer", "condition-antecedent"}))
      materializeBridge(ctx, lf, ev.label, "inferred-answer", "answer",
                        {"answer", "condition-antecedent"});
  }

  CandidateSet set;
  for (size_t i = 0; i < ctx.events.size(); i++) {
    const ContextEvent& ev = ctx.events[i];
    if (ev.label == sigma) continue;
    if (ev.bridgeVia == "complement") continue;
    if (!constraintHolds(constraint, ev.props)) continue;
    Candidate c;
    c.label = ev.label;
    c.position = static_cast<int>(i);
    c.bridged = ev.bridged;
    c.bridgeVia = ev.bridgeVia;
    c.compatPass = compat ? compat(ev) : true;
    c.constraint = constraint;
    for (const auto& cl : interp.clauses)
      if (cl.index == ev.clauseIndex)
        c.onFrontier = std::find(ctx.frontier.begin(), ctx.frontier.end(), cl.id) !=
                       ctx.frontier.end();
    set.ranked.push_back(c);
  }
  if (set.ranked.empty())
    throw Error("no-candidate",
                "no antecedent satisfies '" + constraint + "' for '" +
                    inst.entry->surface + "'");

  std::stable_sort(set.ranked.begin(), set.ranked.end(),
                   [](const Candidate& a, const Candidate& b) {
                     if (a.compatPass != b.compatPass) return a.compatPass;
                     if (a.bridged != b.bridged) return b.bridged;
                     return a.position > b.position;
                   });
  LabelId chosen = set.ranked.front().label;

  if (inst.entry->complementForming && inst.ve != kNoId) {
    auto [comp, item] = complementOf(ctx, lf, chosen, inst.termItem);
    VarInfo& ve = lf.var(inst.ve);
    ve.status = VarStatus::Resolved;
    ve.resolvedTo = comp;
    Arg repl = LabelArg{comp};
    for (int i = 0; i < lf.itemCount(); i++)
      if (lf.item(i).kind != ItemKind::RuleItem) substituteVar(lf.item(i).term, inst.ve, repl);
  }
  lf.resolveVar(inst.ev, chosen);
  return {chosen, set};
}

void applyInteractionCase(DiscourseContext& ctx, Interpretation& interp,
                          AdverbialInstance& inst, LabelId chosen,
                          std::map<int, int>& refinementOfItem, TraceRecord& rec) {
  LogicalForm& lf = interp.lf;
  InteractionCase c = inst.entry->interactionCase.value_or(InteractionCase::Case1);
  rec.caseApplied = caseName(c);

  switch (c) {
    case InteractionCase::Case1: {
      // sigma separately serves as an argument to both relations; both are
      // already present as separate labeled terms.
      if (inst.termItem != kNoId) rec.emittedItems.push_back(inst.termItem);
      return;
    }
    case InteractionCase::Case2: {
      if (inst.enclosingItem == kNoId)
        throw Error("case-precondition-violated",
                    "'" + inst.entry->surface + "' has no enclosing relation to embed into");
      Term* host = slotTerm(lf, inst.enclosingItem);
      int slot = findSigmaSlot(*host, inst.sigma);
      if (slot < 0)
        throw Error("case-precondition-violated",
                    "enclosing relation does not take sigma as an argument");
      host->args[static_cast<size_t>(slot)] = TermRefArg{inst.termItem};
      // A subordinate conjunction embedding the adverbial's relation keeps
      // its clauses in surface order: explanation(e2,e6).
      if (inst.enclosingClass && *inst.enclosingClass == ConnClass::Subord && slot == 0)
        std::swap(host->args[0], host->args[1]);
      rec.emittedItems.push_back(inst.termItem);
      rec.emittedItems.push_back(inst.enclosingItem);
      return;
    }
    case InteractionCase::Case3Parasitic: {
      int target = kNoId;
      for (const auto& other : interp.adverbials)
        if (other.index < inst.index && other.hostClauseIndex == inst.hostClauseIndex &&
            other.termItem != kNoId)
          target = other.termItem;
      if (target == kNoId && inst.enclosingItem != kNoId) {
        auto it = refinementOfItem.find(inst.enclosingItem);
        target = it != refinementOfItem.end() ? it->second : inst.enclosingItem;
      }
      if (target == kNoId)
        throw Error("case-precondition-violated",
                    "'" + inst.entry->surface + "' found no relation to abstract");
      Term* host = slotTerm(lf, target);
      int slot = findSigmaSlot(*host, inst.sigma);
      if (slot < 0)
        throw Error("case-precondition-violated",
                    "abstraction target does not take sigma as an argument");
      Lambda lam = abstractRelation(lf, *host, slot);
      Term repl(inst.entry->relation, {inst.sigma, Arg(std::make_shared<Lambda>(lam))});
      LfItem& item = lf.item(target);
      item.term = std::move(repl);
      item.term.defeasible = false;
      rec.emittedItems.push_back(target);
      return;
    }
    case InteractionCase::Case4Defeasible: {
      int rItem = inst.enclosingItem;
      if (rItem != kNoId) {
        auto it = refinementOfItem.find(rItem);
        if (it != refinementOfItem.end()) rItem = it->second;
      }
      if (rItem == kNoId)
        throw Error("case-precondition-violated",
                    "'" + inst.entry->surface + "' found no relation for its rule");
      const Term& r = *slotTerm(lf, rItem);
      int slot = findSigmaSlot(r, inst.sigma);
      if (slot < 0)
        throw Error("case-precondition-violated",
                    "relation does not take sigma as an argument");
      LabelId sigma = sigmaLabel(inst);
      int other = 1 - slot;

      bool generic = false;
      for (const auto& cl : interp.clauses)
        if (cl.index == inst.hostClauseIndex) generic = hasProp(cl.props, "generic");

      Rule rule;
      VarId x = lf.makeVar("X", VarKind::AbstractionBound);
      Term ante = r;
      ante.label.reset();
      ante.defeasible = false;
      ante.args[static_cast<size_t>(slot)] = VarArg{x};

      auto eventTermOf = [&](LabelId l) -> const Term* {
        for (int i = 0; i < lf.itemCount(); i++) {
          const LfItem& it = lf.item(i);
          if (!it.erased && it.kind == ItemKind::Event && it.term.label &&
              *it.term.label == l)
            return &it.term;
        }
        return nullptr;
      };

      if (generic) {
        // during(X,E) ^ E:discuss(Y,politics) > ~(X:think_about(Y,fish))
        LabelId anteLabel = kNoId;
        if (auto* l = std::get_if<LabelArg>(&r.args[static_cast<size_t>(other)]))
          anteLabel = l->id;
        const Term* anteEvent = anteLabel != kNoId ? eventTermOf(anteLabel) : nullptr;
        const Term* sigmaEvent = sigma != kNoId ? eventTermOf(sigma) : nullptr;
        if (!anteEvent || !sigmaEvent)
          throw Error("case-precondition-violated",
                      "generic rule needs event terms for both clauses");

        VarId e = lf.makeVar("E", VarKind::AbstractionBound);
        ante.args[static_cast<size_t>(other)] = VarArg{e};

        // Individuals shared between the two clauses abstract to Y, Z, ...
        std::vector<std::string> shared;
        for (const auto& a : anteEvent->args)
          if (auto* ia = std::get_if<IndividualArg>(&a))
            for (const auto& b : sigmaEvent->args)
              if (auto* ib = std::get_if<IndividualArg>(&b))
                if (ia->name == ib->name &&
                    std::find(shared.begin(), shared.end(), ia->name) == shared.end())
                  shared.push_back(ia->name);
        const char* names[] = {"Y", "Z", "W"};
        std::map<std::string, VarId> varOf;
        for (size_t i = 0; i < shared.size() && i < 3; i++)
          varOf[shared[i]] = lf.makeVar(names[i], VarKind::AbstractionBound);

        auto generalize = [&](const Term& src, std::optional<VarId> asLabel) {
          Term t = src;
          t.label.reset();
          t.varLabel = asLabel;
          for (auto& a : t.args)
            if (auto* ia = std::get_if<IndividualArg>(&a))
              if (varOf.count(ia->name)) a = VarArg{varOf[ia->name]};
          return t;
        };
        rule.antecedent.push_back(std::move(ante));
        rule.antecedent.push_back(generalize(*anteEvent, e));
        rule.consequent = generalize(*sigmaEvent, x);
      } else {
        // during(X,e1) > ~(X = e2)
        rule.antecedent.push_back(std::move(ante));
        rule.consequent = Term("=", {Arg(VarArg{x}), Arg(LabelArg{sigma})});
      }
      rule.negatedConsequent = true;
      rec.emittedRule = rule;
      lf.addRule(std::move(rule));
      return;
    }
  }
}

ResolutionResult resolveAll(Interpretation& interp, DiscourseContext& ctx,
                            const Derivation& d, const ResolutionOptions& opts) {
  ResolutionResult out;
  LogicalForm& lf = interp.lf;

  // Deictic pronouns resolve to the nearest preceding eventuality.
  for (size_t v = 0; v < lf.varCount(); v++) {
    const VarInfo& info = lf.var(static_cast<VarId>(v));
    if (info.kind != VarKind::DeicticPronoun || info.status == VarStatus::Resolved)
      continue;
    int hostClause = 0;
    for (const auto& cl : interp.clauses)
      if (auto* va = std::get_if<VarArg>(&cl.top); va && va->id == static_cast<VarId>(v))
        hostClause = cl.index;
    const ContextEvent* best = nullptr;
    for (const auto& ev : ctx.events)
      if (ev.clauseIndex < hostClause && !ev.bridged)
        if (!best || ev.clauseIndex >= best->clauseIndex) best = &ev;
    if (!best)
      throw Error("no-candidate", "no antecedent for deictic pronoun " + info.name);
    lf.resolveVar(static_cast<VarId>(v), best->label);
    TraceRecord rec;
    rec.kind = TraceRecord::Kind::Dpro;
    rec.surface = info.name;
    rec.chosen = best->label;
    rec.detail = lf.labels.text(best->label);
    out.trace.push_back(std::move(rec));
  }

  // Adjacency-triggered inference over continuation relations.
  std::map<int, int> refinementOfItem;
  for (const auto& cont : interp.continuations) {
    std::vector<std::string> leftProps, rightProps;
    for (const auto& cl : interp.clauses) {
      if (cl.index == cont.leftClauseIndex) leftProps = cl.props;
      if (cl.index == cont.rightClauseIndex) rightProps = cl.props;
    }
    auto refined = inferAdjacencyRelation(leftProps, rightProps, opts.ruleTable);
    if (refined) {
      Term t = lf.item(cont.item).term;
      t.label.reset();
      t.pred = *refined;
      t.defeasible = true;
      int item = lf.addRelation(std::move(t));
      refinementOfItem[cont.item] = item;
      TraceRecord rec;
      rec.kind = TraceRecord::Kind::Adjacency;
      rec.detail = "elaboration -> " + *refined + " | defeasible";
      rec.emittedItems.push_back(item);
      out.trace.push_back(std::move(rec));
    }
    if (!cont.suggestion.empty()) {
      TraceRecord rec;
      rec.kind = TraceRecord::Kind::Suggestion;
      rec.detail = "elaboration -> " + cont.suggestion + " | not-applied";
      out.trace.push_back(std::move(rec));
    }
  }

  // Explicit denial retracts a defeasible refinement without contradiction.
  for (const auto& cl : interp.clauses) {
    for (const auto& prop : cl.props) {
      if (prop.rfind("denies=", 0) != 0) continue;
      std::string rel = prop.substr(7);
      for (int i = 0; i < lf.itemCount(); i++) {
        LfItem& it = lf.item(i);
        if (!it.erased && it.kind == ItemKind::Relation && it.term.defeasible &&
            it.term.pred == rel) {
          lf.erase(i);
          for (auto rit = refinementOfItem.begin(); rit != refinementOfItem.end();)
            rit = rit->second == i ? refinementOfItem.erase(rit) : std::next(rit);
          TraceRecord rec;
          rec.kind = TraceRecord::Kind::Retraction;
          rec.detail = rel + " | denied-by=" + cl.id;
          out.trace.push_back(std::move(rec));
          break;
        }
      }
    }
  }

  CompatPredicate compat;
  if (!opts.compatName.empty()) compat = compatByName(opts.compatName);

  for (auto& inst : interp.adverbials) {
    TraceRecord rec;
    rec.kind = TraceRecord::Kind::Adverbial;
    rec.surface = inst.entry->surface;
    if (auto* l = std::get_if<LabelArg>(&inst.sigma)) rec.sigma = lf.labels.text(l->id);

    InteractionCase c = inst.entry->interactionCase.value_or(InteractionCase::Case1);
    if (c == InteractionCase::Case3Parasitic) {
      applyInteractionCase(ctx, interp, inst, kNoId, refinementOfItem, rec);
      out.trace.push_back(std::move(rec));
      continue;
    }

    auto [chosen, set] = resolveAdverbial(ctx, interp, inst, compat);
    rec.candidates = set;
    rec.chosen = chosen;
    applyInteractionCase(ctx, interp, inst, chosen, refinementOfItem, rec);
    out.trace.push_back(std::move(rec));

    const ContextEvent* ev = ctx.find(chosen);
    AnaphoricLink link;
    link.name = inst.entry->surface;
    link.antecedentPos = ev ? ev->clauseIndex : 0;
    link.matrixPos = inst.hostClauseIndex;
    out.anaphoricLinks.push_back(link);
  }
  return out;
}

}  // namespace dltag
