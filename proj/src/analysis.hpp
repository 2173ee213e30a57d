#ifndef DLTAG_ANALYSIS_HPP
#define DLTAG_ANALYSIS_HPP

// Discourse-file parsing and the analysis pipeline behind the CLI and the
// shared-library API.
//
// Token stream file (.disc), one record per line, '#' comments:
//   CLAUSE id [| event-lf [| prop,prop,...]]
//   CONN surface [| classhint] [| neg]
//   PUNCT mark
//   EVENT label [| term [| prop,...]]     seeded context referent
//   LINK structural|anaphoric name left right   explicit dependency graph
//   RULE relation | leftProp | rightProp        adjacency rule-table entry
//   COMPAT name                                 plausibility predicate
//   BEGIN / END                                 embedded segment grouping

#include <optional>
#include <string>
#include <vector>

#include "composer.hpp"
#include "derivation.hpp"
#include "resolver.hpp"

namespace dltag {

enum class Mode { Derive, Compose, Resolve, CheckCrossing };

struct ExplicitLink {
  bool anaphoric = false;
  std::string name;
  std::string left;
  std::string right;
};

struct DiscFile {
  std::vector<DiscourseToken> tokens;
  std::vector<EventSeed> seeds;
  std::vector<AdjacencyRule> ruleTable;
  std::vector<ExplicitLink> links;
  std::string compat;
};

DiscFile parseDiscFile(const std::string& text);

struct AnalysisOptions {
  Mode mode = Mode::Resolve;
  std::string compatOverride;  // CLI --compat beats the file's COMPAT record
  std::string lexiconPath;
};

class Analysis {
 public:
  static Analysis run(const std::string& discText, const Lexicon& lexicon,
                      const AnalysisOptions& opts);

  std::string emitLf() const;
  std::string emitDerivation() const;
  std::string emitDerivedDot() const;
  std::string emitDerivationDot() const;
  std::string emitTrace() const;
  std::string emitCrossing() const;
  int violationCount() const { return static_cast<int>(crossing_.violations.size()); }
  Mode mode() const { return mode_; }

  const Interpretation& interpretation() const { return interp_; }
  const Derivation& derivation() const { return deriv_; }
  const DiscourseContext& context() const { return ctx_; }
  const DependencyGraph& graph() const { return graph_; }
  const ResolutionResult& resolution() const { return res_; }

 private:
  Mode mode_ = Mode::Resolve;
  bool built_ = false;
  DiscFile file_;
  Derivation deriv_;
  Interpretation interp_;
  DiscourseContext ctx_;
  ResolutionResult res_;
  DependencyGraph graph_;
  CrossingReport crossing_;
  Tree derived_;
};

std::string readFile(const std::string& path);

}  // namespace dltag

#endif  // DLTAG_ANALYSIS_HPP
