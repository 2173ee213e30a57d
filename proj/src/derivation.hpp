#ifndef DLTAG_DERIVATION_HPP
#define DLTAG_DERIVATION_HPP

// Deterministic left-to-right derivation builder over an annotated token
// stream, replay to a derived tree, and the projectivity check over
// structural dependency links (anaphoric links are exempt).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grammar.hpp"
#include "lexicon.hpp"

namespace dltag {

struct DiscourseToken {
  enum class Kind { Clause, Connective, Punct, GroupBegin, GroupEnd };
  Kind kind = Kind::Clause;
  std::string clauseId;
  std::string lfFragment;
  std::vector<std::string> props;
  std::string surface;    // Connective / Punct
  std::string classHint;  // "", class name, or "marked"
  bool negated = false;
};

struct DerivationNode;
using DerivNodePtr = std::shared_ptr<DerivationNode>;

enum class DerivOp { Subst, Adjoin };

struct DerivChild {
  DerivOp op;
  std::string address;  // elementary-tree Gorn address ("0" = root)
  DerivNodePtr child;
};

struct DerivationNode {
  bool isClause = false;
  std::string clauseId;
  std::string treeId;
  std::string templateName;
  std::string anchor;
  std::string anchor2;
  const ConnectiveEntry* entry = nullptr;
  bool negated = false;
  bool treeSetMember2 = false;  // beta:for_ex2
  std::vector<DerivChild> children;
};

struct AdverbialOccurrence {
  const ConnectiveEntry* entry = nullptr;
  DerivNodePtr advNode;
  DerivNodePtr hostClause;   // unit the aux adjoined to (a clause in practice)
  DerivNodePtr enclosing;    // derivation parent of the host, if any
  DerivNodePtr discourseMember;  // beta:for_ex2 node for tree sets
  int hostClauseIndex = 0;       // 1-based clause position
  bool negated = false;
};

struct ContinuationSite {
  DerivNodePtr auxNode;   // punct-aux / conj-aux derivation node
  DerivNodePtr hostRoot;  // segment root it adjoined to
  DerivNodePtr rhs;       // unit substituted into the aux
  bool hostIsDerivationRoot = false;
};

struct Derivation {
  DerivNodePtr root;
  std::vector<DerivNodePtr> clauses;               // text order
  std::vector<const DiscourseToken*> clauseTokens; // parallel to clauses
  std::vector<DerivNodePtr> structuralOrder;       // completion order
  std::vector<AdverbialOccurrence> adverbials;     // text order
  std::vector<ContinuationSite> continuations;

  int clauseIndex(const std::string& id) const;  // 1-based, 0 if unknown
};

// Builds the derivation per the fixed attachment policy: subordinate
// conjunctions take the pre/mid initial tree by token position, "so"-class
// coordinates take the Fig-6 initial tree, punctuation and simple
// conjunction adjoin at the current left segment's root, adverbials adjoin
// at their host clause root, and "for example" consumes both tree-set
// members. Errors: unresolvable-connective, ambiguous-without-hint,
// dangling-argument.
Derivation buildDerivation(const std::vector<DiscourseToken>& tokens,
                           const Lexicon& lexicon);

// Replays the recorded operations to the derived phrase structure.
// Error: incomplete-derivation.
Tree replay(const Derivation& d);
Tree replayNode(const DerivationNode& node);

// Indented dump mirroring the derivation-tree notation (op, address, child).
std::string dumpDerivation(const Derivation& d);
std::string derivationDot(const Derivation& d);

// Right frontier after the full parse: unit ids on the path from the root
// to the last clause.
std::vector<std::string> rightFrontier(const Derivation& d);

// --- dependency graph ----------------------------------------------------

struct DepLink {
  std::string name;       // connective surface
  std::string leftUnit;   // clause id at the left endpoint
  std::string rightUnit;  // clause id at the right endpoint
  int leftPos = 0;        // 1-based clause positions
  int rightPos = 0;
  bool anaphoric = false;
};

struct DependencyGraph {
  std::vector<DepLink> links;
};

struct AnaphoricLink {
  std::string name;
  int antecedentPos = 0;  // clause position of the chosen antecedent's source
  int matrixPos = 0;
};

DependencyGraph extractDependencies(const Derivation& d,
                                    const std::vector<AnaphoricLink>& anaphoric);

struct CrossingReport {
  std::vector<std::pair<int, int>> violations;          // structural x structural
  std::vector<std::pair<int, int>> anaphoricCrossings;  // anaphoric x structural
};

// Flags interleaved structural links (a < c < b < d); an anaphoric link is
// reported as crossing a structural link when exactly one structural
// endpoint falls strictly inside its span, but never as a violation.
CrossingReport checkNoCrossing(const DependencyGraph& g);

std::string formatCrossingReport(const DependencyGraph& g, const CrossingReport& r);

}  // namespace dltag

#endif  // DLTAG_DERIVATION_HPP
