#ifndef DLTAG_GRAMMAR_HPP
#define DLTAG_GRAMMAR_HPP

// DLTAG elementary trees and the two TAG combination operations. Trees are
// node-object structures; Gorn addresses (root "0", children "1".."n",
// deeper "i.j") are computed on demand so substitution and adjunction never
// invalidate node identities.

#include <memory>
#include <string>
#include <vector>

#include "lf.hpp"

namespace dltag {

enum class NodeKind { Internal, SubstitutionSite, FootNode, Anchor, ClauseLeaf };

struct TreeNode {
  NodeKind kind = NodeKind::Internal;
  std::string label = "Dc";  // "Dc" for structure, anchor text for anchors
  std::string clauseId;      // ClauseLeaf only
  bool silentAnchor = false; // discourse-level tree-set member: no surface yield
  std::vector<std::shared_ptr<TreeNode>> children;
};

using NodePtr = std::shared_ptr<TreeNode>;

enum class TreeKind { Initial, Auxiliary };

struct Tree {
  std::string id;       // e.g. "alpha:because-mid", "beta:then"
  TreeKind kind = TreeKind::Initial;
  NodePtr root;

  NodePtr nodeAt(const std::string& gorn) const;
  std::string addressOf(const NodePtr& node) const;  // "" when absent
  std::vector<NodePtr> substitutionSites() const;
  NodePtr foot() const;
  // Surface yield: anchor texts and clause ids, left to right.
  std::vector<std::string> yield() const;
  std::vector<std::string> clauseYield() const;
  bool complete() const;  // no open substitution site or foot left

  Tree cloneTree() const;
};

// Template names: subconj-mid, subconj-pre, paired, coord-initial,
// punct-aux, conj-aux, adverbial-aux, for-example-set (two members).
// Anchors are bound from the connective surface at instantiation.
struct TreeSet {
  Tree clauseLevel;     // beta:for_ex1
  Tree discourseLevel;  // beta:for_ex2 (silent anchor)
};

bool isTreeSetTemplate(const std::string& name);
Tree instantiate(const std::string& templateName, const std::string& anchor,
                 const std::string& anchor2 = "");
TreeSet instantiateSet(const std::string& templateName, const std::string& anchor);
Tree clauseTree(const std::string& clauseId);

// Replaces the substitution site at `gorn` with `filler` (an initial or
// derived tree rooted in Dc). Errors: not-a-substitution-site,
// label-mismatch (filler is auxiliary / has an open foot).
void substitute(Tree& host, const std::string& gorn, const Tree& filler);

// Splices `aux` in at the Dc node at `gorn`: the subtree there moves under
// the aux foot and the aux root takes its place. Errors: not-adjoinable,
// label-mismatch.
void adjoin(Tree& host, const std::string& gorn, const Tree& aux);

// Parenthesized labeled bracketing, e.g. "(Dc (Dc T1) because (Dc T2))".
std::string serialize(const Tree& t);

// DOT digraph of the phrase structure (solid edges).
std::string toDot(const Tree& t, const std::string& graphName = "derived");

}  // namespace dltag

#endif  // DLTAG_GRAMMAR_HPP
