#include "lf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace dltag {

namespace {

// Splits "e3'" into ("e", 3, "'"). Returns false for non-numeric labels
// such as "interp(T1)".
bool parseNumericLabel(const std::string& text, std::string& base, int& index,
                       std::string& suffix) {
  size_t i = 0;
  while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) i++;
  if (i == 0 || i >= text.size()) return false;
  size_t d = i;
  while (d < text.size() && std::isdigit(static_cast<unsigned char>(text[d]))) d++;
  if (d == i) return false;
  size_t p = d;
  while (p < text.size() && text[p] == '\'') p++;
  if (p != text.size()) return false;
  base = text.substr(0, i);
  index = std::stoi(text.substr(i, d - i));
  suffix = text.substr(d);
  return true;
}

}  // namespace

LabelId LabelTable::intern(const std::string& text) {
  for (size_t i = 0; i < labels_.size(); i++)
    if (labels_[i].text == text) return static_cast<LabelId>(i);
  LabelInfo info;
  info.text = text;
  info.numeric = parseNumericLabel(text, info.base, info.index, info.suffix);
  labels_.push_back(std::move(info));
  return static_cast<LabelId>(labels_.size() - 1);
}

bool LabelTable::known(const std::string& text) const {
  for (const auto& l : labels_)
    if (l.text == text) return true;
  return false;
}

int LabelTable::smallestUnusedIndex() const {
  std::set<int> used;
  for (const auto& l : labels_)
    if (l.numeric) used.insert(l.index);
  int i = 1;
  while (used.count(i)) i++;
  return i;
}

LabelId LabelTable::fresh(const std::string& base, const std::string& suffix) {
  int idx = smallestUnusedIndex();
  return intern(base + std::to_string(idx) + suffix);
}

VarId LogicalForm::makeVar(const std::string& name, VarKind kind) {
  VarInfo v;
  v.name = name;
  v.kind = kind;
  vars_.push_back(std::move(v));
  return static_cast<VarId>(vars_.size() - 1);
}

int LogicalForm::addEvent(Term t) {
  LfItem it;
  it.kind = ItemKind::Event;
  it.term = std::move(t);
  items_.push_back(std::move(it));
  return itemCount() - 1;
}

int LogicalForm::addRelation(Term t) {
  LfItem it;
  it.kind = ItemKind::Relation;
  it.term = std::move(t);
  items_.push_back(std::move(it));
  return itemCount() - 1;
}

int LogicalForm::addRule(Rule r, int anchorAfter) {
  LfItem it;
  it.kind = ItemKind::RuleItem;
  it.rule = std::move(r);
  it.anchorAfter = anchorAfter;
  items_.push_back(std::move(it));
  return itemCount() - 1;
}

int LogicalForm::addAnchored(Term t, int anchorAfter) {
  LfItem it;
  it.kind = ItemKind::Event;
  it.term = std::move(t);
  it.anchorAfter = anchorAfter;
  items_.push_back(std::move(it));
  return itemCount() - 1;
}

std::vector<VarId> LogicalForm::unresolved() const {
  // Derived-complement vars (VE) are excluded: they bind automatically when
  // their companion EV resolves and are never resolved from outside.
  std::vector<VarId> out;
  for (size_t i = 0; i < vars_.size(); i++) {
    const VarInfo& v = vars_[i];
    if (v.status == VarStatus::Unresolved &&
        (v.kind == VarKind::AdverbialAntecedent || v.kind == VarKind::DeicticPronoun))
      out.push_back(static_cast<VarId>(i));
  }
  return out;
}

void LogicalForm::setDefaultFamily(std::string base, std::string suffix) {
  familyBase_ = std::move(base);
  familySuffix_ = std::move(suffix);
}

LabelId LogicalForm::freshLabel() { return labels.fresh(familyBase_, familySuffix_); }

void substituteVar(Term& t, VarId v, const Arg& replacement) {
  for (auto& a : t.args) {
    if (auto* va = std::get_if<VarArg>(&a)) {
      if (va->id == v) a = replacement;
    } else if (auto* lam = std::get_if<std::shared_ptr<Lambda>>(&a)) {
      if (*lam && (*lam)->bound != v) {
        auto copy = std::make_shared<Lambda>(**lam);
        substituteVar(copy->body, v, replacement);
        a = copy;
      }
    } else if (auto* nested = std::get_if<std::shared_ptr<Term>>(&a)) {
      if (*nested) {
        auto copy = std::make_shared<Term>(**nested);
        substituteVar(*copy, v, replacement);
        a = copy;
      }
    }
  }
}

bool termMentionsVar(const Term& t, VarId v) {
  if (t.varLabel && *t.varLabel == v) return true;
  for (const auto& a : t.args) {
    if (auto* va = std::get_if<VarArg>(&a)) {
      if (va->id == v) return true;
    } else if (auto* lam = std::get_if<std::shared_ptr<Lambda>>(&a)) {
      if (*lam && termMentionsVar((*lam)->body, v)) return true;
    } else if (auto* nested = std::get_if<std::shared_ptr<Term>>(&a)) {
      if (*nested && termMentionsVar(**nested, v)) return true;
    }
  }
  return false;
}

void LogicalForm::resolveVar(VarId v, LabelId target) {
  if (v < 0 || v >= static_cast<VarId>(vars_.size()))
    throw Error("unknown-variable", "no such anaphoric variable");
  VarInfo& info = vars_[v];
  if (info.status == VarStatus::Resolved)
    throw Error("unknown-variable", "variable '" + info.name + "' already resolved");
  if (target < 0 || target >= static_cast<LabelId>(labels.size()))
    throw Error("unknown-target", "resolution target label is not defined");

  info.status = VarStatus::Resolved;
  info.resolvedTo = target;
  Arg repl = LabelArg{target};
  for (auto& it : items_) {
    if (it.kind == ItemKind::RuleItem) continue;
    substituteVar(it.term, v, repl);
  }

  // An EV with a pending companion VE forces the complement into existence.
  for (size_t i = 0; i < vars_.size(); i++) {
    VarInfo& ve = vars_[i];
    if (ve.kind != VarKind::DerivedComplement || ve.companionEv != v ||
        ve.status == VarStatus::Resolved)
      continue;
    LabelId freshId = freshLabel();
    int anchor = kNoId;
    for (int k = 0; k < itemCount(); k++) {
      if (items_[k].kind != ItemKind::RuleItem &&
          termMentionsVar(items_[k].term, static_cast<VarId>(i)))
        anchor = k;
    }
    Term comp("complement", {Arg(LabelArg{target}), Arg(LabelArg{freshId})});
    addAnchored(std::move(comp), anchor);
    ve.status = VarStatus::Resolved;
    ve.resolvedTo = freshId;
    Arg veRepl = LabelArg{freshId};
    for (auto& it : items_) {
      if (it.kind == ItemKind::RuleItem) continue;
      substituteVar(it.term, static_cast<VarId>(i), veRepl);
    }
  }
}

Term betaReduce(const Lambda& abs, LabelId arg) {
  Term out = abs.body;
  substituteVar(out, abs.bound, Arg(LabelArg{arg}));
  return out;
}

namespace {

bool argHasUnlabeledRef(const LogicalForm& lf, const Arg& a);

bool termHasUnlabeledRef(const LogicalForm& lf, const Term& t) {
  for (const auto& a : t.args)
    if (argHasUnlabeledRef(lf, a)) return true;
  return false;
}

bool argHasUnlabeledRef(const LogicalForm& lf, const Arg& a) {
  if (auto* ref = std::get_if<TermRefArg>(&a))
    return !lf.item(ref->term).term.label.has_value();
  if (auto* lam = std::get_if<std::shared_ptr<Lambda>>(&a))
    return *lam && termHasUnlabeledRef(lf, (*lam)->body);
  if (auto* nested = std::get_if<std::shared_ptr<Term>>(&a))
    return *nested && termHasUnlabeledRef(lf, **nested);
  return false;
}

}  // namespace

void LogicalForm::finalizeLabels() {
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& it : items_) {
      if (it.erased || it.kind != ItemKind::Relation || it.term.label) continue;
      if (termHasUnlabeledRef(*this, it.term)) continue;
      it.term.label = freshLabel();
      progress = true;
    }
  }
  for (const auto& it : items_) {
    if (!it.erased && it.kind == ItemKind::Relation && !it.term.label)
      throw Error("incomplete-derivation", "cyclic relation references in logical form");
  }
}

std::string LogicalForm::printArg(const Arg& a) const {
  if (auto* l = std::get_if<LabelArg>(&a)) return labels.text(l->id);
  if (auto* ind = std::get_if<IndividualArg>(&a)) return ind->name;
  if (auto* v = std::get_if<VarArg>(&a)) return vars_.at(v->id).name;
  if (auto* ref = std::get_if<TermRefArg>(&a)) {
    const Term& t = item(ref->term).term;
    return t.label ? labels.text(*t.label) : "?";
  }
  if (auto* lam = std::get_if<std::shared_ptr<Lambda>>(&a)) {
    const Lambda& l = **lam;
    return "\\" + vars_.at(l.bound).name + "." + printTerm(l.body);
  }
  const auto& nested = std::get<std::shared_ptr<Term>>(a);
  return printTerm(*nested);
}

std::string LogicalForm::printTerm(const Term& t) const {
  std::string head;
  if (t.label)
    head = labels.text(*t.label) + ":";
  else if (t.varLabel)
    head = vars_.at(*t.varLabel).name + ":";

  if (t.pred == "~") {
    const Term& inner = *std::get<std::shared_ptr<Term>>(t.args.at(0));
    std::string body = printTerm(inner);
    bool plain = !inner.label && !inner.varLabel && inner.pred != "=";
    return head + "~" + (plain ? body : "(" + body + ")");
  }
  if (t.pred == "=") return head + printArg(t.args.at(0)) + " = " + printArg(t.args.at(1));

  std::string out = head + t.pred + "(";
  for (size_t i = 0; i < t.args.size(); i++) {
    if (i) out += ",";
    out += printArg(t.args[i]);
  }
  return out + ")";
}

std::string LogicalForm::printRule(const Rule& r) const {
  std::string out;
  for (size_t i = 0; i < r.antecedent.size(); i++) {
    if (i) out += " ^ ";
    out += printTerm(r.antecedent[i]);
  }
  out += " > ";
  if (r.negatedConsequent) {
    std::string body = printTerm(r.consequent);
    bool plain = !r.consequent.label && !r.consequent.varLabel && r.consequent.pred != "=";
    out += "~" + (plain ? body : "(" + body + ")");
  } else {
    out += printTerm(r.consequent);
  }
  return out;
}

std::vector<int> LogicalForm::printOrder() const {
  // Labeled terms sort by (family first-appearance, index); non-numeric
  // labels keep item order up front. Anchored items follow their anchor,
  // rules go last.
  std::map<std::pair<std::string, std::string>, int> familyRank;
  for (size_t i = 0; i < labels.size(); i++) {
    const LabelInfo& info = labels.info(static_cast<LabelId>(i));
    if (!info.numeric) continue;
    auto key = std::make_pair(info.base, info.suffix);
    if (!familyRank.count(key)) familyRank[key] = static_cast<int>(familyRank.size());
  }

  struct Entry {
    int idx;
    long key1;
    long key2;
  };
  std::vector<Entry> primaries;
  std::vector<int> rules;
  for (int i = 0; i < itemCount(); i++) {
    const LfItem& it = items_[i];
    if (it.erased || it.anchorAfter != kNoId) continue;
    if (it.kind == ItemKind::RuleItem) {
      rules.push_back(i);
      continue;
    }
    long k1 = -1, k2 = i;
    if (it.term.label) {
      const LabelInfo& info = labels.info(*it.term.label);
      if (info.numeric) {
        k1 = familyRank.at({info.base, info.suffix});
        k2 = info.index;
      }
    }
    primaries.push_back({i, k1, k2});
  }
  std::stable_sort(primaries.begin(), primaries.end(), [](const Entry& a, const Entry& b) {
    return a.key1 != b.key1 ? a.key1 < b.key1 : a.key2 < b.key2;
  });

  std::vector<int> order;
  auto emitWithAnchored = [&](int idx, auto&& self) -> void {
    order.push_back(idx);
    for (int j = 0; j < itemCount(); j++)
      if (!items_[j].erased && items_[j].anchorAfter == idx) self(j, self);
  };
  for (const auto& e : primaries) emitWithAnchored(e.idx, emitWithAnchored);
  for (int r : rules) emitWithAnchored(r, emitWithAnchored);
  return order;
}

std::string LogicalForm::prettyPrint() const {
  std::string out;
  for (int idx : printOrder()) {
    const LfItem& it = items_[idx];
    std::string line =
        it.kind == ItemKind::RuleItem ? printRule(*it.rule) : printTerm(it.term);
    if (!out.empty()) out += "\n";
    out += line;
  }
  return out;
}

namespace {

bool collectLabelsOk(const LogicalForm& lf, const Term& t);

bool argLabelsOk(const LogicalForm& lf, const Arg& a) {
  if (auto* l = std::get_if<LabelArg>(&a))
    return l->id >= 0 && l->id < static_cast<LabelId>(lf.labels.size());
  if (auto* lam = std::get_if<std::shared_ptr<Lambda>>(&a))
    return !*lam || collectLabelsOk(lf, (*lam)->body);
  if (auto* nested = std::get_if<std::shared_ptr<Term>>(&a))
    return !*nested || collectLabelsOk(lf, **nested);
  return true;
}

bool collectLabelsOk(const LogicalForm& lf, const Term& t) {
  if (t.label && (*t.label < 0 || *t.label >= static_cast<LabelId>(lf.labels.size())))
    return false;
  for (const auto& a : t.args)
    if (!argLabelsOk(lf, a)) return false;
  return true;
}

}  // namespace

bool LogicalForm::referentialIntegrity() const {
  for (const auto& it : items_) {
    if (it.erased) continue;
    if (it.kind == ItemKind::RuleItem) {
      for (const auto& t : it.rule->antecedent)
        if (!collectLabelsOk(*this, t)) return false;
      if (!collectLabelsOk(*this, it.rule->consequent)) return false;
    } else if (!collectLabelsOk(*this, it.term)) {
      return false;
    }
  }
  return true;
}

bool looksLikeVarName(const std::string& tok) {
  static const char* names[] = {"EV", "VE", "DPRO", "X", "E", "Y", "Z", "W"};
  for (const char* n : names) {
    std::string base(n);
    if (tok.size() < base.size() || tok.compare(0, base.size(), base) != 0) continue;
    size_t i = base.size();
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) i++;
    while (i < tok.size() && tok[i] == '\'') i++;
    if (i == tok.size()) {
      // "E" must not swallow "EV..." / "EV" must not be read as E+garbage.
      if (base == "E" && tok.size() > 1 && tok[1] == 'V') continue;
      return true;
    }
  }
  return false;
}

// --- LF text parser ------------------------------------------------------

namespace {

class LfParser {
 public:
  LfParser(const std::string& text, LogicalForm& lf) : src_(text), lf_(lf) {}

  ParsedLf parse() {
    ParsedLf out;
    std::istringstream in(src_);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line))
      if (!line.empty()) lines.push_back(line);
    // Pre-scan term labels so same-document references classify as labels.
    for (const auto& l : lines) prescanLabels(l);
    for (const auto& l : lines) parseLine(l, out);
    return out;
  }

 private:
  void prescanLabels(const std::string& line) {
    size_t i = 0;
    while (i < line.size()) {
      size_t start = i;
      while (i < line.size() && isIdentChar(line[i])) i++;
      if (i > start && i < line.size() && line[i] == ':') {
        std::string tok = line.substr(start, i - start);
        if (!looksLikeVarName(tok)) docLabels_.insert(tok);
      }
      if (i == start) i++;
    }
  }

  static bool isIdentChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  void parseLine(const std::string& line, ParsedLf& out) {
    size_t gt = line.find(" > ");
    if (gt != std::string::npos) {
      Rule r;
      for (const std::string& part : splitConj(line.substr(0, gt))) {
        Cursor c{part, 0};
        r.antecedent.push_back(parseTerm(c));
      }
      std::string cons = line.substr(gt + 3);
      Cursor c{cons, 0};
      skipWs(c);
      if (peek(c) == '~') {
        c.pos++;
        bool paren = peek(c) == '(';
        if (paren) c.pos++;
        r.consequent = parseTerm(c);
        if (paren) expect(c, ')');
        r.negatedConsequent = true;
      } else {
        r.consequent = parseTerm(c);
        r.negatedConsequent = false;
      }
      LfItem it;
      it.kind = ItemKind::RuleItem;
      it.rule = std::move(r);
      out.items.push_back(std::move(it));
      return;
    }
    for (const std::string& part : splitConj(line)) {
      Cursor c{part, 0};
      LfItem it;
      it.kind = ItemKind::Event;
      it.term = parseTerm(c);
      skipWs(c);
      if (c.pos != c.text.size())
        throw Error("parse-error", "trailing input in LF term: '" + part + "'");
      out.items.push_back(std::move(it));
    }
  }

  static std::vector<std::string> splitConj(const std::string& s) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
      size_t p = s.find(" ^ ", start);
      if (p == std::string::npos) {
        parts.push_back(s.substr(start));
        break;
      }
      parts.push_back(s.substr(start, p - start));
      start = p + 3;
    }
    return parts;
  }

  struct Cursor {
    const std::string& text;
    size_t pos;
  };

  static void skipWs(Cursor& c) {
    while (c.pos < c.text.size() && c.text[c.pos] == ' ') c.pos++;
  }
  static char peek(const Cursor& c) { return c.pos < c.text.size() ? c.text[c.pos] : '\0'; }
  static void expect(Cursor& c, char ch) {
    if (peek(c) != ch)
      throw Error("parse-error", std::string("expected '") + ch + "' in LF text");
    c.pos++;
  }

  std::string ident(Cursor& c) {
    skipWs(c);
    size_t start = c.pos;
    while (c.pos < c.text.size() && isIdentChar(c.text[c.pos])) c.pos++;
    if (c.pos == start) throw Error("parse-error", "expected identifier in LF text");
    return c.text.substr(start, c.pos - start);
  }

  Term parseTerm(Cursor& c) {
    skipWs(c);
    if (peek(c) == '~') {
      c.pos++;
      bool paren = peek(c) == '(';
      if (paren) c.pos++;
      Term inner = parseTerm(c);
      if (paren) expect(c, ')');
      Term t("~", {});
      t.args.push_back(std::make_shared<Term>(std::move(inner)));
      return t;
    }
    std::string tok = ident(c);
    Term t;
    if (peek(c) == ':') {
      c.pos++;
      if (looksLikeVarName(tok))
        t.varLabel = internVar(tok);
      else
        t.label = lf_.labels.intern(tok);
      if (peek(c) == '~') {
        c.pos++;
        bool paren = peek(c) == '(';
        if (paren) c.pos++;
        Term inner = parseTerm(c);
        if (paren) expect(c, ')');
        t.pred = "~";
        t.args.push_back(std::make_shared<Term>(std::move(inner)));
        return t;
      }
      tok = ident(c);
    }
    if (peek(c) == '(') {
      c.pos++;
      t.pred = tok;
      skipWs(c);
      if (peek(c) != ')') {
        t.args.push_back(parseArg(c));
        skipWs(c);
        while (peek(c) == ',') {
          c.pos++;
          t.args.push_back(parseArg(c));
          skipWs(c);
        }
      }
      expect(c, ')');
      return t;
    }
    // Bare token: only valid as lhs of an equality.
    skipWs(c);
    if (c.pos + 1 < c.text.size() && c.text[c.pos] == '=') {
      c.pos++;
      std::string rhs = ident(c);
      t.pred = "=";
      t.args.push_back(classify(tok));
      t.args.push_back(classify(rhs));
      return t;
    }
    throw Error("parse-error", "bare token '" + tok + "' is not a term");
  }

  Arg parseArg(Cursor& c) {
    skipWs(c);
    if (peek(c) == '\\') {
      c.pos++;
      std::string name = ident(c);
      expect(c, '.');
      auto lam = std::make_shared<Lambda>();
      lam->bound = internVar(name);
      lam->body = parseTerm(c);
      return lam;
    }
    std::string tok = ident(c);
    if (peek(c) == '(') {
      c.pos++;
      auto nested = std::make_shared<Term>();
      nested->pred = tok;
      skipWs(c);
      if (peek(c) != ')') {
        nested->args.push_back(parseArg(c));
        skipWs(c);
        while (peek(c) == ',') {
          c.pos++;
          nested->args.push_back(parseArg(c));
          skipWs(c);
        }
      }
      expect(c, ')');
      return nested;
    }
    return classify(tok);
  }

  Arg classify(const std::string& tok) {
    if (looksLikeVarName(tok)) return VarArg{internVar(tok)};
    if (lf_.labels.known(tok) || docLabels_.count(tok))
      return LabelArg{lf_.labels.intern(tok)};
    return IndividualArg{tok};
  }

  VarId internVar(const std::string& name) {
    auto it = varByName_.find(name);
    if (it != varByName_.end()) return it->second;
    VarKind kind = VarKind::AbstractionBound;
    if (name.rfind("EV", 0) == 0)
      kind = VarKind::AdverbialAntecedent;
    else if (name.rfind("VE", 0) == 0)
      kind = VarKind::DerivedComplement;
    else if (name.rfind("DPRO", 0) == 0)
      kind = VarKind::DeicticPronoun;
    VarId v = lf_.makeVar(name, kind);
    varByName_[name] = v;
    return v;
  }

  const std::string& src_;
  LogicalForm& lf_;
  std::set<std::string> docLabels_;
  std::map<std::string, VarId> varByName_;
};

}  // namespace

ParsedLf parseLfText(const std::string& text, LogicalForm& lf) {
  return LfParser(text, lf).parse();
}

}  // namespace dltag
