#include "derivation.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace dltag {

int Derivation::clauseIndex(const std::string& id) const {
  for (size_t i = 0; i < clauses.size(); i++)
    if (clauses[i]->clauseId == id) return static_cast<int>(i) + 1;
  return 0;
}

namespace {

class Builder {
 public:
  Builder(const std::vector<DiscourseToken>& tokens, const Lexicon& lexicon)
      : tokens_(tokens), lexicon_(lexicon) {}

  Derivation build() {
    if (tokens_.empty()) throw Error("parse-error", "empty token stream");
    out_.root = parseSegment({});
    if (pos_ != tokens_.size())
      throw Error("parse-error", "unexpected trailing token in stream");
    attachDiscourseMembers();
    return std::move(out_);
  }

 private:
  const DiscourseToken* peek() const {
    return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr;
  }
  const DiscourseToken& next() { return tokens_[pos_++]; }

  static bool hintMatches(const std::string& hint, const ConnectiveEntry& e) {
    if (hint.empty()) return true;
    if (hint == "marked") return e.markedUse;
    return hint == connClassName(e.cls);
  }

  // Feasible entries for `surface` in the given syntactic position.
  enum class Position { UnitStart, Medial };
  const ConnectiveEntry* select(const DiscourseToken& tok, Position where,
                                const std::vector<std::string>& stops) {
    auto all = lexicon_.lookup(tok.surface);
    if (all.empty())
      throw Error("unresolvable-connective",
                  "connective not in lexicon: '" + tok.surface + "'");
    // An open paired construction claims its second anchor outright.
    for (const auto& s : stops)
      if (s == tok.surface)
        throw Error("parse-error", "pair-second anchor consumed out of turn");

    std::vector<const ConnectiveEntry*> feasible;
    for (const auto* e : all) {
      if (!hintMatches(tok.classHint, *e)) continue;
      if (e->markedUse && tok.classHint != "marked") continue;
      // Second anchors only close an open pair, which stops handle above.
      if (e->cls == ConnClass::Paired && e->surface != tok.surface) continue;
      bool ok = false;
      switch (e->cls) {
        case ConnClass::Subord: ok = true; break;
        case ConnClass::Paired: ok = where == Position::UnitStart; break;
        case ConnClass::Adverbial: ok = where == Position::UnitStart; break;
        case ConnClass::Coord:
          ok = e->treeFamily == "coord-initial" ? where == Position::Medial
                                                : where == Position::Medial;
          break;
        case ConnClass::Punct: ok = where == Position::Medial; break;
      }
      if (ok) feasible.push_back(e);
    }
    if (feasible.empty())
      throw Error("dangling-argument",
                  "connective '" + tok.surface + "' has no argument here");
    if (feasible.size() > 1) {
      // Several feasible readings and no hint that narrows them down.
      std::set<ConnClass> classes;
      for (const auto* e : feasible) classes.insert(e->cls);
      if (classes.size() > 1 || feasible.size() > 1)
        throw Error("ambiguous-without-hint",
                    "connective '" + tok.surface + "' is ambiguous; add a class hint");
    }
    return feasible.front();
  }

  DerivNodePtr makeConnNode(const ConnectiveEntry* e, const std::string& tmpl,
                            bool negated) {
    auto n = std::make_shared<DerivationNode>();
    n->templateName = tmpl;
    n->anchor = e->surface;
    n->anchor2 = e->surface2;
    n->entry = e;
    n->negated = negated;
    Tree t = tmpl == "for-example-set" ? Tree() : instantiate(tmpl, e->surface, e->surface2);
    n->treeId = t.id;
    if (tmpl == "punct-aux") n->treeId = "beta:punct";
    return n;
  }

  DerivNodePtr makeClauseNode(const DiscourseToken& tok) {
    for (const auto& c : out_.clauses)
      if (c->clauseId == tok.clauseId)
        throw Error("parse-error", "duplicate clause id: " + tok.clauseId);
    auto n = std::make_shared<DerivationNode>();
    n->isClause = true;
    n->clauseId = tok.clauseId;
    n->treeId = tok.clauseId;
    out_.clauses.push_back(n);
    out_.clauseTokens.push_back(&tok);
    return n;
  }

  // segment := operand (continuation operand)*
  DerivNodePtr parseSegment(const std::vector<std::string>& stops) {
    DerivNodePtr seg = parseOperand(stops);
    bool isRootSegment = depth_ == 0;
    while (const DiscourseToken* t = peek()) {
      if (t->kind == DiscourseToken::Kind::GroupEnd) break;
      if (t->kind == DiscourseToken::Kind::Connective && isStop(stops, t->surface)) break;

      const ConnectiveEntry* e = nullptr;
      if (t->kind == DiscourseToken::Kind::Punct) {
        auto all = lexicon_.lookup(t->surface);
        for (const auto* cand : all)
          if (cand->cls == ConnClass::Punct) e = cand;
        if (!e)
          throw Error("unresolvable-connective",
                      "punctuation not in lexicon: '" + t->surface + "'");
      } else if (t->kind == DiscourseToken::Kind::Connective) {
        e = select(*t, Position::Medial, stops);
        if (e->treeFamily != "conj-aux") break;  // not a continuation
      } else {
        throw Error("parse-error", "unexpected clause; expected a connective");
      }
      const DiscourseToken& tok = next();
      std::string tmpl = e->cls == ConnClass::Punct ? "punct-aux" : "conj-aux";
      DerivNodePtr aux = makeConnNode(e, tmpl, tok.negated);
      depth_++;
      DerivNodePtr rhs = parseOperand(stops);
      depth_--;
      aux->children.push_back({DerivOp::Subst, "3", rhs});
      seg->children.push_back({DerivOp::Adjoin, "0", aux});
      out_.structuralOrder.push_back(aux);
      out_.continuations.push_back({aux, seg, rhs, isRootSegment});
    }
    return seg;
  }

  static bool isStop(const std::vector<std::string>& stops, const std::string& s) {
    return std::find(stops.begin(), stops.end(), s) != stops.end();
  }

  // operand := core-unit (medial-initial-connective operand)*
  DerivNodePtr parseOperand(const std::vector<std::string>& stops) {
    DerivNodePtr unit = parseCoreUnit(stops);
    while (const DiscourseToken* t = peek()) {
      if (t->kind != DiscourseToken::Kind::Connective) break;
      if (isStop(stops, t->surface)) break;
      const ConnectiveEntry* e = select(*t, Position::Medial, stops);
      bool medialInitial =
          e->cls == ConnClass::Subord ||
          (e->cls == ConnClass::Coord && e->treeFamily == "coord-initial");
      if (!medialInitial) break;
      const DiscourseToken& tok = next();
      std::string tmpl = e->cls == ConnClass::Subord ? "subconj-mid" : "coord-initial";
      DerivNodePtr node = makeConnNode(e, tmpl, tok.negated);
      depth_++;
      if (!peek()) throw Error("dangling-argument",
                               "connective '" + e->surface + "' lacks a right argument");
      DerivNodePtr rhs = parseOperand(stops);
      depth_--;
      node->children.push_back({DerivOp::Subst, "1", unit});
      node->children.push_back({DerivOp::Subst, "3", rhs});
      out_.structuralOrder.push_back(node);
      unit = node;
    }
    return unit;
  }

  // core-unit := adverbial* (clause | preposed-subord | paired | group)
  DerivNodePtr parseCoreUnit(const std::vector<std::string>& stops) {
    std::vector<std::pair<const ConnectiveEntry*, bool>> pendingAdverbs;
    while (const DiscourseToken* t = peek()) {
      if (t->kind != DiscourseToken::Kind::Connective) break;
      if (isStop(stops, t->surface)) break;
      auto all = lexicon_.lookup(t->surface);
      bool adverbialHere = false;
      for (const auto* e : all)
        if (e->cls == ConnClass::Adverbial && hintMatches(t->classHint, *e))
          adverbialHere = true;
      // Structural readings win at unit start unless the hint says otherwise.
      for (const auto* e : all) {
        if (e->cls == ConnClass::Adverbial) continue;
        if (!hintMatches(t->classHint, *e)) continue;
        if (e->markedUse && t->classHint != "marked") continue;
        if (e->cls == ConnClass::Subord || e->cls == ConnClass::Paired)
          if (t->classHint.empty() || t->classHint != "Adverbial") adverbialHere = false;
      }
      if (!adverbialHere) break;
      const DiscourseToken& tok = next();
      const ConnectiveEntry* chosen = nullptr;
      for (const auto* e : all)
        if (e->cls == ConnClass::Adverbial && hintMatches(tok.classHint, *e)) chosen = e;
      pendingAdverbs.push_back({chosen, tok.negated});
    }

    const DiscourseToken* t = peek();
    if (!t) throw Error("dangling-argument", "expected a clause");

    DerivNodePtr unit;
    if (t->kind == DiscourseToken::Kind::Clause) {
      unit = makeClauseNode(next());
    } else if (t->kind == DiscourseToken::Kind::GroupBegin) {
      next();
      unit = parseSegment({});
      if (!peek() || peek()->kind != DiscourseToken::Kind::GroupEnd)
        throw Error("parse-error", "unterminated group");
      next();
    } else if (t->kind == DiscourseToken::Kind::Connective) {
      const ConnectiveEntry* e = select(*t, Position::UnitStart, stops);
      if (e->cls == ConnClass::Subord) {
        const DiscourseToken& tok = next();
        DerivNodePtr node = makeConnNode(e, "subconj-pre", tok.negated);
        depth_++;
        DerivNodePtr first = parseOperand(stops);
        if (!peek())
          throw Error("dangling-argument",
                      "preposed '" + e->surface + "' lacks its main clause");
        DerivNodePtr second = parseOperand(stops);
        depth_--;
        node->children.push_back({DerivOp::Subst, "2", first});
        node->children.push_back({DerivOp::Subst, "3", second});
        out_.structuralOrder.push_back(node);
        unit = node;
      } else if (e->cls == ConnClass::Paired) {
        const DiscourseToken& tok = next();
        DerivNodePtr node = makeConnNode(e, "paired", tok.negated);
        std::vector<std::string> innerStops = stops;
        innerStops.push_back(e->surface2);
        depth_++;
        DerivNodePtr first = parseSegment(innerStops);
        if (!peek() || peek()->kind != DiscourseToken::Kind::Connective ||
            peek()->surface != e->surface2)
          throw Error("dangling-argument",
                      "paired '" + e->surface + "' is missing its second anchor");
        next();  // the second anchor
        DerivNodePtr second = parseOperand(stops);
        depth_--;
        node->children.push_back({DerivOp::Subst, "2", first});
        node->children.push_back({DerivOp::Subst, "4", second});
        out_.structuralOrder.push_back(node);
        unit = node;
      } else {
        throw Error("dangling-argument",
                    "connective '" + t->surface + "' cannot start a discourse unit");
      }
    } else {
      throw Error("parse-error", "unexpected token");
    }

    for (auto& [entry, negated] : pendingAdverbs) {
      AdverbialOccurrence occ;
      occ.entry = entry;
      occ.hostClause = unit;
      occ.negated = negated;
      if (isTreeSetTemplate(entry->treeFamily)) {
        auto member1 = std::make_shared<DerivationNode>();
        member1->treeId = "beta:for_ex1";
        member1->templateName = "for-example-set";
        member1->anchor = entry->surface;
        member1->entry = entry;
        unit->children.push_back({DerivOp::Adjoin, "0", member1});
        occ.advNode = member1;
      } else {
        DerivNodePtr adv = makeConnNode(entry, "adverbial-aux", negated);
        unit->children.push_back({DerivOp::Adjoin, "0", adv});
        occ.advNode = adv;
      }
      out_.adverbials.push_back(std::move(occ));
    }
    return unit;
  }

  // After the parse, fill in each adverbial's host position, enclosing
  // relation node, and the discourse-level tree-set member.
  void attachDiscourseMembers() {
    for (auto& occ : out_.adverbials) {
      occ.hostClauseIndex = occ.hostClause->isClause
                                ? out_.clauseIndex(occ.hostClause->clauseId)
                                : firstClauseIndex(occ.hostClause);
      occ.enclosing = parentOf(occ.hostClause);
      if (occ.entry && isTreeSetTemplate(occ.entry->treeFamily)) {
        if (!occ.enclosing)
          throw Error("case-precondition-violated",
                      "'" + occ.entry->surface + "' requires an enclosing discourse relation");
        auto member2 = std::make_shared<DerivationNode>();
        member2->treeId = "beta:for_ex2";
        member2->templateName = "for-example-set";
        member2->anchor = occ.entry->surface;
        member2->entry = occ.entry;
        member2->treeSetMember2 = true;
        occ.enclosing->children.push_back({DerivOp::Adjoin, "0", member2});
        occ.discourseMember = member2;
      }
    }
  }

  DerivNodePtr parentOf(const DerivNodePtr& target) {
    DerivNodePtr found;
    std::function<void(const DerivNodePtr&)> walk = [&](const DerivNodePtr& n) {
      for (const auto& c : n->children) {
        if (c.child == target && c.op == DerivOp::Subst) found = n;
        walk(c.child);
      }
    };
    walk(out_.root);
    return found;
  }

  int firstClauseIndex(const DerivNodePtr& n) {
    if (n->isClause) return out_.clauseIndex(n->clauseId);
    for (const auto& c : n->children) {
      int idx = firstClauseIndex(c.child);
      if (idx) return idx;
    }
    return 0;
  }

  const std::vector<DiscourseToken>& tokens_;
  const Lexicon& lexicon_;
  Derivation out_;
  size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

Derivation buildDerivation(const std::vector<DiscourseToken>& tokens,
                           const Lexicon& lexicon) {
  return Builder(tokens, lexicon).build();
}

Tree replayNode(const DerivationNode& node) {
  Tree t;
  if (node.isClause) {
    t = clauseTree(node.clauseId);
  } else if (node.templateName == "for-example-set") {
    TreeSet set = instantiateSet("for-example-set", node.anchor);
    t = node.treeSetMember2 ? set.discourseLevel : set.clauseLevel;
  } else {
    t = instantiate(node.templateName, node.anchor, node.anchor2);
  }
  for (const auto& c : node.children)
    if (c.op == DerivOp::Subst) substitute(t, c.address, replayNode(*c.child));
  for (const auto& c : node.children)
    if (c.op == DerivOp::Adjoin) adjoin(t, c.address, replayNode(*c.child));
  return t;
}

Tree replay(const Derivation& d) {
  if (!d.root) throw Error("incomplete-derivation", "empty derivation");
  Tree t = replayNode(*d.root);
  if (!t.complete())
    throw Error("incomplete-derivation", "derived tree has an open site");
  return t;
}

namespace {

void dumpNode(const DerivationNode& n, int indent, std::string& out) {
  out.append(indent, ' ');
  out += n.treeId;
  out += "\n";
  for (const auto& c : n.children) {
    out.append(indent + 2, ' ');
    out += c.op == DerivOp::Subst ? "subst@" : "adjoin@";
    out += c.address;
    out += " <- ";
    std::string sub;
    dumpNode(*c.child, indent + 2, sub);
    out += sub.substr(indent + 2);
  }
}

}  // namespace

std::string dumpDerivation(const Derivation& d) {
  std::string out;
  dumpNode(*d.root, 0, out);
  return out;
}

std::string derivationDot(const Derivation& d) {
  std::ostringstream out;
  out << "digraph derivation {\n";
  int counter = 0;
  std::function<int(const DerivationNode&)> walk = [&](const DerivationNode& n) {
    int id = counter++;
    out << "  n" << id << " [label=\"" << n.treeId << "\"];\n";
    for (const auto& c : n.children) {
      int kid = walk(*c.child);
      // Fig-8 convention: solid substitution, dashed adjunction.
      out << "  n" << id << " -> n" << kid << " [label=\"" << c.address << "\""
          << (c.op == DerivOp::Adjoin ? ", style=dashed" : "") << "];\n";
    }
    return id;
  };
  walk(*d.root);
  out << "}\n";
  return out.str();
}

std::vector<std::string> rightFrontier(const Derivation& d) {
  std::vector<std::string> frontier;
  if (d.clauses.empty()) return frontier;
  const std::string& lastId = d.clauses.back()->clauseId;
  std::function<bool(const DerivNodePtr&)> walk = [&](const DerivNodePtr& n) {
    bool onPath = n->isClause && n->clauseId == lastId;
    for (const auto& c : n->children)
      if (walk(c.child)) onPath = true;
    if (onPath) frontier.push_back(n->isClause ? n->clauseId : n->treeId);
    return onPath;
  };
  walk(d.root);
  std::reverse(frontier.begin(), frontier.end());
  return frontier;
}

namespace {

void clauseSpan(const Derivation& d, const DerivNodePtr& n, int& lo, int& hi) {
  if (n->isClause) {
    int idx = d.clauseIndex(n->clauseId);
    lo = std::min(lo, idx);
    hi = std::max(hi, idx);
  }
  for (const auto& c : n->children) clauseSpan(d, c.child, lo, hi);
}

std::pair<int, int> spanOf(const Derivation& d, const DerivNodePtr& n) {
  int lo = 1 << 20, hi = 0;
  clauseSpan(d, n, lo, hi);
  return {lo, hi};
}

}  // namespace

DependencyGraph extractDependencies(const Derivation& d,
                                    const std::vector<AnaphoricLink>& anaphoric) {
  DependencyGraph g;
  auto clauseAt = [&](int pos) -> std::string {
    if (pos >= 1 && pos <= static_cast<int>(d.clauses.size()))
      return d.clauses[pos - 1]->clauseId;
    return "ctx";
  };

  std::function<void(const DerivNodePtr&)> walk = [&](const DerivNodePtr& n) {
    if (!n->isClause && n->entry &&
        (n->templateName == "subconj-mid" || n->templateName == "subconj-pre" ||
         n->templateName == "coord-initial" || n->templateName == "paired")) {
      std::vector<DerivNodePtr> operands;
      for (const auto& c : n->children)
        if (c.op == DerivOp::Subst) operands.push_back(c.child);
      if (operands.size() == 2) {
        auto [l1, h1] = spanOf(d, operands[0]);
        auto [l2, h2] = spanOf(d, operands[1]);
        DepLink link;
        link.name = n->anchor;
        link.leftPos = h1;
        link.rightPos = l2;
        link.leftUnit = clauseAt(h1);
        link.rightUnit = clauseAt(l2);
        g.links.push_back(link);
      }
    }
    for (const auto& c : n->children) walk(c.child);
  };
  walk(d.root);

  for (const auto& cont : d.continuations) {
    auto [l1, h1] = spanOf(d, cont.hostRoot);
    auto [l2, h2] = spanOf(d, cont.rhs);
    DepLink link;
    link.name = cont.auxNode->anchor;
    link.leftPos = std::min(h1, l2 - 1);
    link.rightPos = l2;
    link.leftUnit = clauseAt(link.leftPos);
    link.rightUnit = clauseAt(l2);
    g.links.push_back(link);
  }

  std::sort(g.links.begin(), g.links.end(), [](const DepLink& a, const DepLink& b) {
    return a.leftPos != b.leftPos ? a.leftPos < b.leftPos : a.rightPos < b.rightPos;
  });

  for (const auto& a : anaphoric) {
    DepLink link;
    link.name = a.name;
    link.anaphoric = true;
    link.leftPos = a.antecedentPos;
    link.rightPos = a.matrixPos;
    link.leftUnit = clauseAt(a.antecedentPos);
    link.rightUnit = clauseAt(a.matrixPos);
    g.links.push_back(link);
  }
  return g;
}

CrossingReport checkNoCrossing(const DependencyGraph& g) {
  CrossingReport report;
  const auto& links = g.links;
  for (size_t i = 0; i < links.size(); i++) {
    for (size_t j = 0; j < links.size(); j++) {
      if (i == j) continue;
      const DepLink& a = links[i];
      const DepLink& b = links[j];
      if (!a.anaphoric && !b.anaphoric) {
        if (i < j && a.leftPos < b.leftPos && b.leftPos < a.rightPos &&
            a.rightPos < b.rightPos)
          report.violations.push_back({static_cast<int>(i), static_cast<int>(j)});
      } else if (a.anaphoric && !b.anaphoric) {
        bool leftIn = a.leftPos < b.leftPos && b.leftPos < a.rightPos;
        bool rightIn = a.leftPos < b.rightPos && b.rightPos < a.rightPos;
        if (leftIn != rightIn)
          report.anaphoricCrossings.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  return report;
}

std::string formatCrossingReport(const DependencyGraph& g, const CrossingReport& r) {
  std::ostringstream out;
  auto show = [&](const DepLink& l) {
    return l.name + " [" + l.leftUnit + "," + l.rightUnit + "]";
  };
  for (const auto& l : g.links)
    out << "link " << (l.anaphoric ? "anaphoric " : "structural ") << show(l) << "\n";
  for (const auto& [i, j] : r.violations)
    out << "violation " << show(g.links[i]) << " x " << show(g.links[j]) << "\n";
  for (const auto& [i, j] : r.anaphoricCrossings)
    out << "anaphoric-crossing " << show(g.links[i]) << " x " << show(g.links[j]) << "\n";
  out << "violations " << r.violations.size() << "\n";
  return out.str();
}

}  // namespace dltag
