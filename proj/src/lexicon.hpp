#ifndef DLTAG_LEXICON_HPP
#define DLTAG_LEXICON_HPP

// Connective inventory. Structural entries (conjunctions, punctuation,
// paired constructions) carry a relation name, a tree family and an
// argument-order convention; adverbial entries carry an antecedent
// constraint and the interaction case realized at resolution time.
//
// File format, one record per line, '#' comments:
//   surface | class | relation | treeFamily | constraint | case | flags

#include <optional>
#include <string>
#include <vector>

#include "lf.hpp"

namespace dltag {

enum class ConnClass { Coord, Subord, Paired, Adverbial, Punct };

enum class InteractionCase { Case1, Case2, Case3Parasitic, Case4Defeasible };

// How a structural relation orders its two clause arguments.
//   RightLeft: R(right, left)  -- "so", punctuation, simple conjunction
//   LeftRight: R(left, right)  -- paired constructions, surface order
//   SubFirst / SubSecond: the subordinate clause's eventuality goes first
//   or second regardless of preposed/medial position.
enum class ArgOrder { RightLeft, LeftRight, SubFirst, SubSecond };

struct ConnectiveEntry {
  std::string surface;
  std::string surface2;  // second anchor of a paired construction
  ConnClass cls = ConnClass::Coord;
  std::string relation;  // "-" for Case-4 adverbials (no binary relation)
  std::string treeFamily;
  ArgOrder argOrder = ArgOrder::RightLeft;
  std::string constraint = "any";  // adverbials only
  std::optional<InteractionCase> interactionCase;
  bool complementForming = false;
  bool markedUse = false;  // result-bearing "and"/"or", selected by hint only
  std::string refinementSuggestion;  // e.g. "but" suggests contrast
};

class Lexicon {
 public:
  // Inventory covering every connective exercised by the worked derivations.
  static Lexicon defaults();

  // Parses records and merges them over the current entries. A record whose
  // (surface, class) matches an existing entry replaces it; otherwise it
  // extends the inventory. Throws Error("schema-violation") with a line
  // number on malformed input.
  void load(const std::string& document);
  void loadFile(const std::string& path);

  // All entries matching the surface (first or second paired anchor).
  std::vector<const ConnectiveEntry*> lookup(const std::string& surface) const;

  // Longest multiword match starting at `words[start]`; returns the number
  // of words consumed (0 when nothing matches).
  size_t longestMatch(const std::vector<std::string>& words, size_t start,
                      std::string* matched) const;

  const std::vector<ConnectiveEntry>& entries() const { return entries_; }

 private:
  void add(ConnectiveEntry e);
  std::vector<ConnectiveEntry> entries_;
};

const char* connClassName(ConnClass c);
const char* caseName(InteractionCase c);

// Registered antecedent constraints: culminated-eventuality,
// complement-admitting, alternative-admitting, any.
bool constraintHolds(const std::string& name, const std::vector<std::string>& props);
bool knownConstraint(const std::string& name);

}  // namespace dltag

#endif  // DLTAG_LEXICON_HPP
