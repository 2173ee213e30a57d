#include "analysis.hpp"

#include <fstream>
#include <sstream>

namespace dltag {

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io-error", "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

std::vector<std::string> splitFields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == '|') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  for (auto& f : fields) {
    size_t a = f.find_first_not_of(" \t");
    size_t b = f.find_last_not_of(" \t");
    f = a == std::string::npos ? "" : f.substr(a, b - a + 1);
  }
  return fields;
}

std::vector<std::string> splitList(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

DiscFile parseDiscFile(const std::string& text) {
  DiscFile out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    line = line.substr(first);

    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    std::string rest;
    std::getline(ls, rest);
    if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
    auto err = [&](const std::string& msg) {
      return Error("parse-error", "line " + std::to_string(lineno) + ": " + msg);
    };

    if (kw == "CLAUSE") {
      std::vector<std::string> f = splitFields(rest);
      if (f.empty() || f[0].empty()) throw err("CLAUSE needs an id");
      DiscourseToken t;
      t.kind = DiscourseToken::Kind::Clause;
      t.clauseId = f[0];
      if (f.size() > 1) t.lfFragment = f[1];
      if (f.size() > 2) t.props = splitList(f[2], ',');
      out.tokens.push_back(std::move(t));
    } else if (kw == "CONN") {
      std::vector<std::string> f = splitFields(rest);
      if (f.empty() || f[0].empty()) throw err("CONN needs a surface form");
      DiscourseToken t;
      t.kind = DiscourseToken::Kind::Connective;
      t.surface = f[0];
      for (size_t i = 1; i < f.size(); i++) {
        if (f[i] == "neg") t.negated = true;
        else if (!f[i].empty()) t.classHint = f[i];
      }
      out.tokens.push_back(std::move(t));
    } else if (kw == "PUNCT") {
      if (rest.empty()) throw err("PUNCT needs a mark");
      DiscourseToken t;
      t.kind = DiscourseToken::Kind::Punct;
      t.surface = rest;
      out.tokens.push_back(std::move(t));
    } else if (kw == "EVENT") {
      std::vector<std::string> f = splitFields(rest);
      if (f.empty() || f[0].empty()) throw err("EVENT needs a label");
      EventSeed seed;
      seed.label = f[0];
      if (f.size() > 1) seed.termText = f[1];
      if (f.size() > 2) seed.props = splitList(f[2], ',');
      out.seeds.push_back(std::move(seed));
    } else if (kw == "LINK") {
      std::istringstream fs(rest);
      ExplicitLink l;
      std::string kind;
      fs >> kind >> l.name >> l.left >> l.right;
      if (kind != "structural" && kind != "anaphoric")
        throw err("LINK kind must be structural or anaphoric");
      if (l.right.empty()) throw err("LINK needs: kind name left right");
      l.anaphoric = kind == "anaphoric";
      out.links.push_back(std::move(l));
    } else if (kw == "RULE") {
      std::vector<std::string> f = splitFields(rest);
      if (f.size() != 3) throw err("RULE needs: relation | leftProp | rightProp");
      out.ruleTable.push_back({f[0], f[1], f[2]});
    } else if (kw == "COMPAT") {
      if (rest.empty()) throw err("COMPAT needs a predicate name");
      out.compat = rest;
    } else if (kw == "BEGIN") {
      DiscourseToken t;
      t.kind = DiscourseToken::Kind::GroupBegin;
      out.tokens.push_back(std::move(t));
    } else if (kw == "END") {
      DiscourseToken t;
      t.kind = DiscourseToken::Kind::GroupEnd;
      out.tokens.push_back(std::move(t));
    } else {
      throw err("unknown record '" + kw + "'");
    }
  }
  return out;
}

Analysis Analysis::run(const std::string& discText, const Lexicon& lexicon,
                       const AnalysisOptions& opts) {
  Analysis a;
  a.mode_ = opts.mode;
  a.file_ = parseDiscFile(discText);
  if (a.file_.tokens.empty() && a.file_.links.empty())
    throw Error("parse-error", "discourse file has no tokens");

  // Explicit LINK records describe a dependency graph directly; clause
  // records then only fix the linear order.
  if (opts.mode == Mode::CheckCrossing && !a.file_.links.empty()) {
    std::vector<std::string> order;
    for (const auto& t : a.file_.tokens)
      if (t.kind == DiscourseToken::Kind::Clause) order.push_back(t.clauseId);
    auto posOf = [&](const std::string& id) {
      for (size_t i = 0; i < order.size(); i++)
        if (order[i] == id) return static_cast<int>(i) + 1;
      throw Error("parse-error", "LINK references unknown clause '" + id + "'");
    };
    for (const auto& l : a.file_.links) {
      DepLink link;
      link.name = l.name;
      link.anaphoric = l.anaphoric;
      link.leftUnit = l.left;
      link.rightUnit = l.right;
      link.leftPos = posOf(l.left);
      link.rightPos = posOf(l.right);
      a.graph_.links.push_back(link);
    }
    a.crossing_ = checkNoCrossing(a.graph_);
    return a;
  }

  a.deriv_ = buildDerivation(a.file_.tokens, lexicon);
  a.derived_ = replay(a.deriv_);
  a.built_ = true;
  if (opts.mode == Mode::Derive) return a;

  a.interp_ = interpret(a.deriv_, lexicon, a.file_.seeds);
  if (opts.mode == Mode::Compose) {
    a.interp_.lf.finalizeLabels();
    return a;
  }

  a.ctx_ = buildContext(a.interp_, a.file_.seeds, a.deriv_);
  ResolutionOptions ropts;
  ropts.compatName = !opts.compatOverride.empty() ? opts.compatOverride : a.file_.compat;
  ropts.ruleTable = a.file_.ruleTable;
  a.res_ = resolveAll(a.interp_, a.ctx_, a.deriv_, ropts);
  a.interp_.lf.finalizeLabels();
  a.graph_ = extractDependencies(a.deriv_, a.res_.anaphoricLinks);
  a.crossing_ = checkNoCrossing(a.graph_);
  return a;
}

std::string Analysis::emitLf() const {
  std::string out = interp_.lf.prettyPrint();
  if (!out.empty()) out += "\n";
  return out;
}

std::string Analysis::emitDerivation() const {
  std::string out = dumpDerivation(deriv_);
  out += "derived: " + serialize(derived_) + "\n";
  out += "yield:";
  for (const auto& leaf : derived_.clauseYield()) out += " " + leaf;
  out += "\n";
  return out;
}

std::string Analysis::emitDerivedDot() const { return toDot(derived_, "derived"); }

std::string Analysis::emitDerivationDot() const { return derivationDot(deriv_); }

std::string Analysis::emitTrace() const {
  const LogicalForm& lf = interp_.lf;
  std::ostringstream out;
  if (mode_ == Mode::Compose) {
    for (const auto& line : interp_.nodeTrace) out << line << "\n";
    return out.str();
  }
  auto itemText = [&](int item) {
    const LfItem& it = lf.item(item);
    return it.kind == ItemKind::RuleItem ? lf.printRule(*it.rule) : lf.printTerm(it.term);
  };
  for (const auto& rec : res_.trace) {
    switch (rec.kind) {
      case TraceRecord::Kind::Dpro:
        out << "dpro " << rec.surface << " | chosen=" << rec.detail << "\n";
        break;
      case TraceRecord::Kind::Adjacency: {
        out << "adjacency | " << rec.detail;
        for (int item : rec.emittedItems) out << " | emits=" << itemText(item);
        out << "\n";
        break;
      }
      case TraceRecord::Kind::Suggestion:
        out << "suggestion | " << rec.detail << "\n";
        break;
      case TraceRecord::Kind::Retraction:
        out << "retract | " << rec.detail << "\n";
        break;
      case TraceRecord::Kind::Bridge:
        out << "bridge | " << rec.detail << "\n";
        break;
      case TraceRecord::Kind::Adverbial: {
        out << "adverbial " << rec.surface << " | sigma=" << rec.sigma << " | candidates=";
        for (size_t i = 0; i < rec.candidates.ranked.size(); i++) {
          const Candidate& c = rec.candidates.ranked[i];
          if (i) out << ";";
          out << lf.labels.text(c.label) << "[" << (c.bridged ? "bridged:" + c.bridgeVia : "direct")
              << ",recency=" << c.position << ",frontier=" << (c.onFrontier ? "yes" : "no")
              << "," << c.constraint << ":pass,compat=" << (c.compatPass ? "pass" : "fail")
              << "]";
        }
        out << " | chosen=" << (rec.chosen != kNoId ? lf.labels.text(rec.chosen) : "-");
        out << " | case=" << rec.caseApplied << " | emits=";
        bool first = true;
        for (int item : rec.emittedItems) {
          if (!first) out << ",";
          first = false;
          out << itemText(item);
        }
        if (rec.emittedRule) {
          if (!first) out << ",";
          out << lf.printRule(*rec.emittedRule);
        }
        out << "\n";
        break;
      }
    }
  }
  return out.str();
}

std::string Analysis::emitCrossing() const { return formatCrossingReport(graph_, crossing_); }

}  // namespace dltag
