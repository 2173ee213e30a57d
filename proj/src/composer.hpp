#ifndef DLTAG_COMPOSER_HPP
#define DLTAG_COMPOSER_HPP

// Bottom-up interpretation of derivation trees. Clause leaves contribute
// their supplied event terms; structural connectives contribute R(...) with
// per-entry argument order; punctuation and simple conjunction contribute
// elaboration(right, left) with chained continuation targets; adverbials
// contribute R_a(sigma, EV) with a fresh unresolved EV (plus VE and a
// complement constraint for complement-forming ones). Relation terms are
// emitted unlabeled and labeled at serialization time, structural relations
// in completion order before adverbial contributions.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "derivation.hpp"
#include "lexicon.hpp"
#include "lf.hpp"

namespace dltag {

struct ClauseInfo {
  std::string id;
  int index = 0;  // 1-based text position
  Arg top;        // LabelArg, or VarArg for a deictic-pronoun clause
  std::vector<std::string> props;
  std::vector<LabelId> eventLabels;  // labels defined by the clause fragment
};

struct AdverbialInstance {
  const ConnectiveEntry* entry = nullptr;
  int index = 0;  // text order among adverbials
  Arg sigma;
  int hostClauseIndex = 0;
  VarId ev = kNoId;
  VarId ve = kNoId;
  int termItem = kNoId;       // R_a / if-term item (Cases 1 and 2)
  int enclosingItem = kNoId;  // relation item of the enclosing node
  std::optional<ConnClass> enclosingClass;
  bool negated = false;
};

struct ContinuationRecord {
  int item = kNoId;  // the elaboration term
  int leftClauseIndex = 0;
  int rightClauseIndex = 0;
  std::string suggestion;  // lexical refinement suggestion ("but" -> contrast)
};

struct EventSeed {
  std::string label;
  std::string termText;  // optional defining term
  std::vector<std::string> props;
};

struct Interpretation {
  LogicalForm lf;
  Arg top;
  std::vector<ClauseInfo> clauses;
  std::vector<AdverbialInstance> adverbials;
  std::vector<ContinuationRecord> continuations;
  std::map<std::string, int> relationItemOfNode;  // derivation node treeId#n -> item
  std::vector<std::string> nodeTrace;             // per-node contributed terms
};

// Composes the complete derivation. Errors: incomplete-derivation,
// missing-clause-interpretation.
Interpretation interpret(const Derivation& d, const Lexicon& lexicon,
                         const std::vector<EventSeed>& seeds = {});

// Abstracts one argument of a binary relation term: result(s,d) over the
// first argument gives \X.result(X,d). Error: non-binary.
Lambda abstractRelation(LogicalForm& lf, const Term& rel, int overArg);

}  // namespace dltag

#endif  // DLTAG_COMPOSER_HPP
