#include "grammar.hpp"

#include <functional>
#include <sstream>

namespace dltag {

namespace {

NodePtr internal(std::vector<NodePtr> children) {
  auto n = std::make_shared<TreeNode>();
  n->kind = NodeKind::Internal;
  n->children = std::move(children);
  return n;
}

NodePtr substSite() {
  auto n = std::make_shared<TreeNode>();
  n->kind = NodeKind::SubstitutionSite;
  return n;
}

NodePtr footNode() {
  auto n = std::make_shared<TreeNode>();
  n->kind = NodeKind::FootNode;
  return n;
}

NodePtr anchorNode(const std::string& text, bool silent = false) {
  auto n = std::make_shared<TreeNode>();
  n->kind = NodeKind::Anchor;
  n->label = text;
  n->silentAnchor = silent;
  return n;
}

NodePtr cloneNode(const NodePtr& n) {
  auto c = std::make_shared<TreeNode>(*n);
  c->children.clear();
  for (const auto& k : n->children) c->children.push_back(cloneNode(k));
  return c;
}

}  // namespace

Tree Tree::cloneTree() const {
  Tree t;
  t.id = id;
  t.kind = kind;
  t.root = cloneNode(root);
  return t;
}

NodePtr Tree::nodeAt(const std::string& gorn) const {
  if (gorn.empty() || gorn == "0") return root;
  NodePtr cur = root;
  std::istringstream in(gorn);
  std::string part;
  while (std::getline(in, part, '.')) {
    int idx = std::stoi(part);
    if (idx < 1 || idx > static_cast<int>(cur->children.size())) return nullptr;
    cur = cur->children[idx - 1];
  }
  return cur;
}

std::string Tree::addressOf(const NodePtr& node) const {
  std::string found;
  std::function<bool(const NodePtr&, const std::string&)> walk =
      [&](const NodePtr& cur, const std::string& addr) {
        if (cur == node) {
          found = addr.empty() ? "0" : addr;
          return true;
        }
        for (size_t i = 0; i < cur->children.size(); i++) {
          std::string child = addr.empty() ? std::to_string(i + 1)
                                           : addr + "." + std::to_string(i + 1);
          if (walk(cur->children[i], child)) return true;
        }
        return false;
      };
  walk(root, "");
  return found;
}

std::vector<NodePtr> Tree::substitutionSites() const {
  std::vector<NodePtr> out;
  std::function<void(const NodePtr&)> walk = [&](const NodePtr& n) {
    if (n->kind == NodeKind::SubstitutionSite) out.push_back(n);
    for (const auto& k : n->children) walk(k);
  };
  walk(root);
  return out;
}

NodePtr Tree::foot() const {
  NodePtr out;
  std::function<void(const NodePtr&)> walk = [&](const NodePtr& n) {
    if (n->kind == NodeKind::FootNode) out = n;
    for (const auto& k : n->children) walk(k);
  };
  walk(root);
  return out;
}

std::vector<std::string> Tree::yield() const {
  std::vector<std::string> out;
  std::function<void(const NodePtr&)> walk = [&](const NodePtr& n) {
    if (n->kind == NodeKind::Anchor && !n->silentAnchor) out.push_back(n->label);
    if (n->kind == NodeKind::ClauseLeaf) out.push_back(n->clauseId);
    for (const auto& k : n->children) walk(k);
  };
  walk(root);
  return out;
}

std::vector<std::string> Tree::clauseYield() const {
  std::vector<std::string> out;
  std::function<void(const NodePtr&)> walk = [&](const NodePtr& n) {
    if (n->kind == NodeKind::ClauseLeaf) out.push_back(n->clauseId);
    for (const auto& k : n->children) walk(k);
  };
  walk(root);
  return out;
}

bool Tree::complete() const {
  return substitutionSites().empty() && !foot();
}

bool isTreeSetTemplate(const std::string& name) { return name == "for-example-set"; }

Tree instantiate(const std::string& name, const std::string& anchor,
                 const std::string& anchor2) {
  Tree t;
  if (name == "subconj-mid" || name == "coord-initial") {
    // Fig 4a / Fig 6: Dc -> Dc| anchor Dc|
    t.kind = TreeKind::Initial;
    t.root = internal({substSite(), anchorNode(anchor), substSite()});
  } else if (name == "subconj-pre") {
    // Fig 4b: Dc -> anchor Dc| Dc|
    t.kind = TreeKind::Initial;
    t.root = internal({anchorNode(anchor), substSite(), substSite()});
  } else if (name == "paired") {
    // Fig 5 convention: Dc -> anchor1 Dc| anchor2 Dc|
    t.kind = TreeKind::Initial;
    t.root = internal({anchorNode(anchor), substSite(), anchorNode(anchor2), substSite()});
  } else if (name == "punct-aux" || name == "conj-aux") {
    // Fig 7a/b: Dc -> Dc* anchor Dc|
    t.kind = TreeKind::Auxiliary;
    t.root = internal({footNode(), anchorNode(anchor), substSite()});
  } else if (name == "adverbial-aux") {
    // Fig 7c: Dc -> anchor Dc*
    t.kind = TreeKind::Auxiliary;
    t.root = internal({anchorNode(anchor), footNode()});
  } else {
    throw Error("unknown-template", "unknown tree template: " + name);
  }
  std::string tag = anchor;
  for (auto& c : tag)
    if (c == ' ') c = '_';
  t.id = (t.kind == TreeKind::Initial ? "alpha:" : "beta:") + tag;
  if (name == "subconj-mid") t.id += "-mid";
  if (name == "subconj-pre") t.id += "-pre";
  return t;
}

TreeSet instantiateSet(const std::string& name, const std::string& anchor) {
  if (!isTreeSetTemplate(name))
    throw Error("unknown-template", "not a tree-set template: " + name);
  TreeSet set;
  set.clauseLevel.kind = TreeKind::Auxiliary;
  set.clauseLevel.root = internal({anchorNode(anchor), footNode()});
  set.clauseLevel.id = "beta:for_ex1";
  set.discourseLevel.kind = TreeKind::Auxiliary;
  set.discourseLevel.root = internal({footNode(), anchorNode(anchor, /*silent=*/true)});
  set.discourseLevel.id = "beta:for_ex2";
  return set;
}

Tree clauseTree(const std::string& clauseId) {
  Tree t;
  t.kind = TreeKind::Initial;
  t.id = clauseId;
  auto leaf = std::make_shared<TreeNode>();
  leaf->kind = NodeKind::ClauseLeaf;
  leaf->clauseId = clauseId;
  t.root = internal({leaf});
  return t;
}

void substitute(Tree& host, const std::string& gorn, const Tree& filler) {
  NodePtr site = host.nodeAt(gorn);
  if (!site) throw Error("not-a-substitution-site", "no node at address " + gorn);
  if (site->kind != NodeKind::SubstitutionSite)
    throw Error("not-a-substitution-site", "node at " + gorn + " is not a substitution site");
  if (filler.kind == TreeKind::Auxiliary || filler.foot())
    throw Error("label-mismatch", "cannot substitute an auxiliary tree (open foot node)");
  if (filler.root->label != site->label)
    throw Error("label-mismatch", "filler root label does not match site label");
  *site = *filler.cloneTree().root;
}

void adjoin(Tree& host, const std::string& gorn, const Tree& aux) {
  if (aux.kind != TreeKind::Auxiliary)
    throw Error("label-mismatch", "adjoined tree must be auxiliary");
  NodePtr target = host.nodeAt(gorn);
  if (!target) throw Error("not-adjoinable", "no node at address " + gorn);
  if (target->kind == NodeKind::Anchor || target->kind == NodeKind::ClauseLeaf ||
      target->kind == NodeKind::SubstitutionSite)
    throw Error("not-adjoinable", "cannot adjoin at a leaf");
  Tree auxCopy = aux.cloneTree();
  NodePtr foot = auxCopy.foot();
  if (!foot) throw Error("label-mismatch", "auxiliary tree has no foot node");
  if (foot->label != target->label)
    throw Error("label-mismatch", "foot label does not match adjunction target");
  // The displaced subtree moves under the foot; the aux root takes its place.
  TreeNode displaced = *target;
  *foot = displaced;
  foot->kind = displaced.kind;
  *target = *auxCopy.root;
}

namespace {

void serializeNode(const NodePtr& n, std::string& out) {
  switch (n->kind) {
    case NodeKind::Anchor:
      if (!n->silentAnchor) out += n->label;
      return;
    case NodeKind::ClauseLeaf:
      out += n->clauseId;
      return;
    case NodeKind::SubstitutionSite:
      out += n->label + "|";
      return;
    case NodeKind::FootNode:
      out += n->label + "*";
      return;
    case NodeKind::Internal: {
      out += "(" + n->label;
      for (const auto& k : n->children) {
        if (k->kind == NodeKind::Anchor && k->silentAnchor) continue;
        out += " ";
        serializeNode(k, out);
      }
      out += ")";
      return;
    }
  }
}

}  // namespace

std::string serialize(const Tree& t) {
  std::string out;
  serializeNode(t.root, out);
  return out;
}

std::string toDot(const Tree& t, const std::string& graphName) {
  std::ostringstream out;
  out << "digraph " << graphName << " {\n";
  int counter = 0;
  std::function<int(const NodePtr&)> walk = [&](const NodePtr& n) {
    int id = counter++;
    std::string label = n->label;
    if (n->kind == NodeKind::ClauseLeaf) label = n->clauseId;
    if (n->kind == NodeKind::FootNode) label += "*";
    if (n->kind == NodeKind::SubstitutionSite) label += "|";
    out << "  n" << id << " [label=\"" << label << "\"];\n";
    for (const auto& k : n->children) {
      if (k->kind == NodeKind::Anchor && k->silentAnchor) continue;
      int kid = walk(k);
      out << "  n" << id << " -> n" << kid << ";\n";
    }
    return id;
  };
  walk(t.root);
  out << "}\n";
  return out.str();
}

}  // namespace dltag
