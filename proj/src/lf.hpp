#ifndef DLTAG_LF_HPP
#define DLTAG_LF_HPP

// Logical forms over eventualities: labeled predicate terms, anaphoric
// variables, lambda abstractions and defeasible rules, plus the text
// grammar used by golden outputs:
//
//   term  := [label ":"] pred "(" arg ("," arg)* ")"
//   eq    := arg " = " arg            (infix, parenthesized under "~")
//   neg   := "~" term | "~(" inner ")"
//   rule  := term (" ^ " term)* " > " term
//
// Terms print one per line; " ^ " joins conjuncts inside a single line.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace dltag {

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

using LabelId = int;
using VarId = int;
constexpr int kNoId = -1;

// A discourse label such as "e4", "e3'", "i2" or the opaque "interp(T1)".
// Numeric labels carry (base, index, prime-suffix) so fresh allocation can
// fill the smallest unused index, the way the worked analyses number
// bridged referents.
struct LabelInfo {
  std::string text;
  std::string base;    // "e", "i", ... (empty when not numeric)
  int index = 0;
  std::string suffix;  // trailing primes, e.g. "'"
  bool numeric = false;
};

class LabelTable {
 public:
  LabelId intern(const std::string& text);
  LabelId fresh(const std::string& base, const std::string& suffix = "");
  bool known(const std::string& text) const;
  const LabelInfo& info(LabelId id) const { return labels_.at(id); }
  const std::string& text(LabelId id) const { return labels_.at(id).text; }
  size_t size() const { return labels_.size(); }

 private:
  int smallestUnusedIndex() const;
  std::vector<LabelInfo> labels_;
};

enum class VarKind {
  AdverbialAntecedent,  // EV
  DerivedComplement,    // VE, tied to a companion EV
  DeicticPronoun,       // DPRO
  AbstractionBound,     // X, E, Y, ...
};

enum class VarStatus { Unresolved, Resolved };

struct VarInfo {
  std::string name;
  VarKind kind = VarKind::AbstractionBound;
  VarStatus status = VarStatus::Unresolved;
  LabelId resolvedTo = kNoId;
  VarId companionEv = kNoId;  // set on VE vars: the EV the complement tracks
};

struct Term;
struct Lambda;

struct LabelArg {
  LabelId id;
};
struct IndividualArg {
  std::string name;
};
struct VarArg {
  VarId id;
};
// Reference to another relation term in the same LF; prints as that term's
// label once labels are finalized.
struct TermRefArg {
  int term;
};

using Arg = std::variant<LabelArg, IndividualArg, VarArg, TermRefArg,
                         std::shared_ptr<Lambda>, std::shared_ptr<Term>>;

struct Term {
  std::optional<LabelId> label;
  std::optional<VarId> varLabel;  // rule fragments like "X:think_about(...)"
  std::string pred;               // "~" wraps one arg; "=" prints infix
  std::vector<Arg> args;
  bool defeasible = false;

  Term() = default;
  Term(std::string p, std::vector<Arg> a) : pred(std::move(p)), args(std::move(a)) {}
};

struct Lambda {
  VarId bound;
  Term body;
};

// Presupposed defeasible implication, emitted but never reasoned with.
struct Rule {
  std::vector<Term> antecedent;
  Term consequent;
  bool negatedConsequent = true;
};

enum class ItemKind { Event, Relation, RuleItem };

struct LfItem {
  ItemKind kind = ItemKind::Event;
  Term term;                 // Event / Relation payload
  std::optional<Rule> rule;  // RuleItem payload
  int anchorAfter = kNoId;   // unlabeled item printed right after this item
  bool erased = false;
};

class LogicalForm {
 public:
  LabelTable labels;

  VarId makeVar(const std::string& name, VarKind kind);
  VarInfo& var(VarId id) { return vars_.at(id); }
  const VarInfo& var(VarId id) const { return vars_.at(id); }
  size_t varCount() const { return vars_.size(); }

  int addEvent(Term t);
  int addRelation(Term t);
  int addRule(Rule r, int anchorAfter = kNoId);
  int addAnchored(Term t, int anchorAfter);  // unlabeled companion (complement)

  LfItem& item(int idx) { return items_.at(idx); }
  const LfItem& item(int idx) const { return items_.at(idx); }
  int itemCount() const { return static_cast<int>(items_.size()); }
  void erase(int idx) { items_.at(idx).erased = true; }

  // Unresolved anaphoric variables, in creation order.
  std::vector<VarId> unresolved() const;

  // Rewrites every occurrence of `v` to `target` and marks it resolved.
  // Resolving an EV with a pending companion VE materializes the complement:
  // a fresh label is allocated for VE and `complement(target, fresh)` is
  // appended, anchored after the term holding VE.
  void resolveVar(VarId v, LabelId target);

  // Default label family for generated labels ("e"/"'" seeded from input
  // clause labels, "i" otherwise).
  void setDefaultFamily(std::string base, std::string suffix);
  const std::string& familyBase() const { return familyBase_; }
  const std::string& familySuffix() const { return familySuffix_; }
  LabelId freshLabel();

  // Assigns labels to relation terms that still lack one: repeated passes in
  // item order, labeling a term once every TermRef it mentions is labeled.
  // Event terms keep their input labels. Idempotent.
  void finalizeLabels();

  // Canonical text, one term per line (see header comment).
  std::string prettyPrint() const;
  std::string printTerm(const Term& t) const;
  std::string printRule(const Rule& r) const;
  std::string printArg(const Arg& a) const;

  // True if every label mentioned by any term is interned in `labels`.
  bool referentialIntegrity() const;

 private:
  std::vector<int> printOrder() const;
  std::vector<VarInfo> vars_;
  std::vector<LfItem> items_;
  std::string familyBase_ = "i";
  std::string familySuffix_;
};

// [lambda x . body] applied to a label: substitute and drop the binder.
Term betaReduce(const Lambda& abs, LabelId arg);

// In-place variant used by resolveVar and term rewriting.
void substituteVar(Term& t, VarId v, const Arg& replacement);
bool termMentionsVar(const Term& t, VarId v);

// Parsed form of the LF text grammar, used for clause fragments and for
// round-trip checks. Labels are interned into `lf.labels`; argument tokens
// are classified as labels only when already interned (or defined by a label
// in the same text), as vars when they match the EV/VE/DPRO/X/E/Y/Z families,
// and as individuals otherwise.
struct ParsedLf {
  std::vector<LfItem> items;
};
ParsedLf parseLfText(const std::string& text, LogicalForm& lf);

bool looksLikeVarName(const std::string& tok);

}  // namespace dltag

#endif  // DLTAG_LF_HPP
