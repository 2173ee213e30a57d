#include "lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dltag {

const char* connClassName(ConnClass c) {
  switch (c) {
    case ConnClass::Coord: return "Coord";
    case ConnClass::Subord: return "Subord";
    case ConnClass::Paired: return "Paired";
    case ConnClass::Adverbial: return "Adverbial";
    case ConnClass::Punct: return "Punct";
  }
  return "?";
}

const char* caseName(InteractionCase c) {
  switch (c) {
    case InteractionCase::Case1: return "Case1";
    case InteractionCase::Case2: return "Case2";
    case InteractionCase::Case3Parasitic: return "Case3";
    case InteractionCase::Case4Defeasible: return "Case4";
  }
  return "?";
}

namespace {

bool hasProp(const std::vector<std::string>& props, const std::string& p) {
  return std::find(props.begin(), props.end(), p) != props.end();
}

ConnectiveEntry subord(const std::string& surface, const std::string& relation,
                       ArgOrder order) {
  ConnectiveEntry e;
  e.surface = surface;
  e.cls = ConnClass::Subord;
  e.relation = relation;
  e.treeFamily = "subconj";
  e.argOrder = order;
  return e;
}

ConnectiveEntry punct(const std::string& mark) {
  ConnectiveEntry e;
  e.surface = mark;
  e.cls = ConnClass::Punct;
  e.relation = "elaboration";
  e.treeFamily = "punct-aux";
  return e;
}

ConnectiveEntry conjAux(const std::string& surface, const std::string& suggest = "") {
  ConnectiveEntry e;
  e.surface = surface;
  e.cls = ConnClass::Coord;
  e.relation = "elaboration";
  e.treeFamily = "conj-aux";
  e.refinementSuggestion = suggest;
  return e;
}

ConnectiveEntry coordInitial(const std::string& surface, const std::string& relation,
                             bool marked = false) {
  ConnectiveEntry e;
  e.surface = surface;
  e.cls = ConnClass::Coord;
  e.relation = relation;
  e.treeFamily = "coord-initial";
  e.markedUse = marked;
  return e;
}

ConnectiveEntry paired(const std::string& first, const std::string& second,
                       const std::string& relation) {
  ConnectiveEntry e;
  e.surface = first;
  e.surface2 = second;
  e.cls = ConnClass::Paired;
  e.relation = relation;
  e.treeFamily = "paired";
  e.argOrder = ArgOrder::LeftRight;
  return e;
}

ConnectiveEntry adverbial(const std::string& surface, const std::string& relation,
                          InteractionCase c, const std::string& constraint,
                          bool complementForming = false) {
  ConnectiveEntry e;
  e.surface = surface;
  e.cls = ConnClass::Adverbial;
  e.relation = relation;
  e.treeFamily = c == InteractionCase::Case3Parasitic ? "for-example-set" : "adverbial-aux";
  e.constraint = constraint;
  e.interactionCase = c;
  e.complementForming = complementForming;
  return e;
}

}  // namespace

Lexicon Lexicon::defaults() {
  Lexicon lx;
  lx.add(subord("because", "explanation", ArgOrder::SubFirst));
  lx.add(subord("although", "concession", ArgOrder::SubFirst));
  lx.add(subord("while", "during", ArgOrder::SubSecond));
  lx.add(subord("after", "after", ArgOrder::SubSecond));
  lx.add(subord("if", "if", ArgOrder::SubFirst));
  lx.add(subord("whereas", "contrast", ArgOrder::SubSecond));
  lx.add(subord("when", "during", ArgOrder::SubSecond));

  lx.add(coordInitial("so", "result"));
  lx.add(coordInitial("and", "result", /*marked=*/true));
  lx.add(coordInitial("or", "result", /*marked=*/true));

  lx.add(conjAux("and"));
  lx.add(conjAux("or"));
  lx.add(conjAux("but", "contrast"));

  lx.add(punct("."));
  lx.add(punct(";"));
  lx.add(punct(":"));
  lx.add(punct("--"));
  lx.add(punct("?"));

  lx.add(paired("on the one hand", "on the other hand", "contrast"));
  lx.add(paired("not only", "but also", "addition"));
  lx.add(paired("either", "or", "disjunction"));
  lx.add(paired("admittedly", "but", "concession"));

  lx.add(adverbial("then", "after", InteractionCase::Case1, "culminated-eventuality"));
  lx.add(adverbial("instead", "alternative", InteractionCase::Case1, "alternative-admitting"));
  lx.add(adverbial("otherwise", "if", InteractionCase::Case2, "complement-admitting",
                   /*complementForming=*/true));
  lx.add(adverbial("nevertheless", "-", InteractionCase::Case4Defeasible, "any"));
  lx.add(adverbial("though", "-", InteractionCase::Case4Defeasible, "any"));
  lx.add(adverbial("for example", "exemplification", InteractionCase::Case3Parasitic, "any"));
  lx.add(adverbial("for instance", "exemplification", InteractionCase::Case3Parasitic, "any"));
  lx.add(adverbial("by contrast", "contrast", InteractionCase::Case1, "any"));
  lx.add(adverbial("meanwhile", "during", InteractionCase::Case1, "any"));
  lx.add(adverbial("also", "parallel", InteractionCase::Case1, "any"));
  return lx;
}

void Lexicon::add(ConnectiveEntry e) {
  for (auto& existing : entries_) {
    if (existing.surface == e.surface && existing.cls == e.cls &&
        existing.markedUse == e.markedUse) {
      existing = std::move(e);
      return;
    }
  }
  entries_.push_back(std::move(e));
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

}  // namespace

void Lexicon::load(const std::string& document) {
  std::istringstream in(document);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    std::vector<std::string> f = splitFields(line);
    if (f.size() < 4)
      throw Error("schema-violation",
                  "lexicon line " + std::to_string(lineno) + ": expected at least 4 fields");
    ConnectiveEntry e;
    // A paired surface is written "first ... second".
    size_t dots = f[0].find("...");
    if (dots != std::string::npos) {
      e.surface = f[0].substr(0, dots);
      e.surface2 = f[0].substr(dots + 3);
      while (!e.surface.empty() && e.surface.back() == ' ') e.surface.pop_back();
      while (!e.surface2.empty() && e.surface2.front() == ' ') e.surface2.erase(0, 1);
    } else {
      e.surface = f[0];
    }
    const std::string& cls = f[1];
    if (cls == "Coord") e.cls = ConnClass::Coord;
    else if (cls == "Subord") e.cls = ConnClass::Subord;
    else if (cls == "Paired") e.cls = ConnClass::Paired;
    else if (cls == "Adverbial") e.cls = ConnClass::Adverbial;
    else if (cls == "Punct") e.cls = ConnClass::Punct;
    else
      throw Error("schema-violation", "lexicon line " + std::to_string(lineno) +
                                          ": unknown class '" + cls + "'");
    e.relation = f[2];
    e.treeFamily = f[3];
    if (f.size() > 4 && !f[4].empty()) {
      if (!knownConstraint(f[4]))
        throw Error("schema-violation", "lexicon line " + std::to_string(lineno) +
                                            ": unknown constraint '" + f[4] + "'");
      e.constraint = f[4];
    }
    if (f.size() > 5 && !f[5].empty()) {
      const std::string& c = f[5];
      if (c == "Case1") e.interactionCase = InteractionCase::Case1;
      else if (c == "Case2") e.interactionCase = InteractionCase::Case2;
      else if (c == "Case3" || c == "Case3-parasitic")
        e.interactionCase = InteractionCase::Case3Parasitic;
      else if (c == "Case4" || c == "Case4-defeasible")
        e.interactionCase = InteractionCase::Case4Defeasible;
      else
        throw Error("schema-violation", "lexicon line " + std::to_string(lineno) +
                                            ": unknown case '" + c + "'");
    }
    if (f.size() > 6) {
      std::istringstream flags(f[6]);
      std::string flag;
      while (flags >> flag) {
        if (flag == "complement-forming") e.complementForming = true;
        else if (flag == "marked") e.markedUse = true;
        else if (flag.rfind("order=", 0) == 0) {
          std::string o = flag.substr(6);
          if (o == "rl") e.argOrder = ArgOrder::RightLeft;
          else if (o == "lr") e.argOrder = ArgOrder::LeftRight;
          else if (o == "sub-first") e.argOrder = ArgOrder::SubFirst;
          else if (o == "sub-second") e.argOrder = ArgOrder::SubSecond;
          else
            throw Error("schema-violation", "lexicon line " + std::to_string(lineno) +
                                                ": unknown order '" + o + "'");
        } else if (flag.rfind("suggest=", 0) == 0) {
          e.refinementSuggestion = flag.substr(8);
        } else {
          throw Error("schema-violation", "lexicon line " + std::to_string(lineno) +
                                              ": unknown flag '" + flag + "'");
        }
      }
    }
    if (e.cls == ConnClass::Adverbial && !e.interactionCase)
      e.interactionCase = InteractionCase::Case1;
    add(std::move(e));
  }
}

void Lexicon::loadFile(const std::string& path) {
  std::ostringstream buf;
  {
    std::ifstream in(path);
    if (!in) throw Error("io-error", "cannot open lexicon file: " + path);
    buf << in.rdbuf();
  }
  load(buf.str());
}

std::vector<const ConnectiveEntry*> Lexicon::lookup(const std::string& surface) const {
  std::vector<const ConnectiveEntry*> out;
  for (const auto& e : entries_)
    if (e.surface == surface || (!e.surface2.empty() && e.surface2 == surface))
      out.push_back(&e);
  return out;
}

size_t Lexicon::longestMatch(const std::vector<std::string>& words, size_t start,
                             std::string* matched) const {
  size_t best = 0;
  for (const auto& e : entries_) {
    for (const std::string* s : {&e.surface, &e.surface2}) {
      if (s->empty()) continue;
      std::istringstream in(*s);
      std::vector<std::string> parts;
      std::string w;
      while (in >> w) parts.push_back(w);
      if (parts.empty() || parts.size() <= best) continue;
      if (start + parts.size() > words.size()) continue;
      bool ok = true;
      for (size_t i = 0; i < parts.size(); i++)
        if (words[start + i] != parts[i]) ok = false;
      if (ok) {
        best = parts.size();
        if (matched) *matched = *s;
      }
    }
  }
  return best;
}

bool knownConstraint(const std::string& name) {
  return name == "any" || name == "culminated-eventuality" ||
         name == "complement-admitting" || name == "alternative-admitting";
}

bool constraintHolds(const std::string& name, const std::vector<std::string>& props) {
  if (name == "any") return true;
  if (name == "culminated-eventuality") return hasProp(props, "culminated");
  if (name == "complement-admitting")
    return hasProp(props, "condition-antecedent") || hasProp(props, "action") ||
           hasProp(props, "answer");
  if (name == "alternative-admitting")
    return hasProp(props, "alternative-admitting") || hasProp(props, "action");
  throw Error("schema-violation", "unknown antecedent constraint: " + name);
}

}  // namespace dltag
