#ifndef DLTAG_RESOLVER_HPP
#define DLTAG_RESOLVER_HPP

// Discourse-context maintenance and anaphoric resolution for adverbials:
// candidate collection under per-adverbial antecedent constraints, bridging
// (culmination coercion, inferred answers), complement formation for
// "otherwise", and the four ways an adverbial's relation interacts with the
// structural or inferred relation at its site.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "composer.hpp"
#include "derivation.hpp"

namespace dltag {

struct ContextEvent {
  LabelId label = kNoId;
  int clauseIndex = 0;  // 0 for seeded context events
  std::vector<std::string> props;
  bool bridged = false;
  std::string bridgeVia;
  LabelId bridgedFrom = kNoId;
};

struct DiscourseContext {
  std::vector<ContextEvent> events;  // discourse order
  std::vector<std::string> frontier; // unit ids on the right frontier
  // label -> (associate label, bridge name); created only by registered
  // bridges, each application idempotent.
  std::map<LabelId, std::vector<std::pair<LabelId, std::string>>> associates;

  ContextEvent* find(LabelId label);
  const ContextEvent* find(LabelId label) const;
};

// Appends the events a composed fragment introduces (clause eventualities
// with their annotated properties, seeded events first).
DiscourseContext buildContext(const Interpretation& interp,
                              const std::vector<EventSeed>& seeds,
                              const Derivation& d);

// Coerces a process eventuality to its culmination; idempotent. The fresh
// label is defined by a `culmination(e)` event term. Error: not-a-process.
LabelId bridgeCulmination(DiscourseContext& ctx, LogicalForm& lf, LabelId e);

// Contextually relevant complement of an eventuality that admits one
// (condition-antecedent, action, or inferred answer); idempotent.
// Error: no-complement.
std::pair<LabelId, int> complementOf(DiscourseContext& ctx, LogicalForm& lf, LabelId e,
                                     int anchorItem);

// Pluggable plausibility predicate, looked up by name ("favor-action",
// "favor-condition"). Unknown names raise an error.
using CompatPredicate = std::function<bool(const ContextEvent&)>;
CompatPredicate compatByName(const std::string& name);

struct Candidate {
  LabelId label = kNoId;
  int position = 0;  // recency rank source: discourse order index
  bool bridged = false;
  std::string bridgeVia;
  bool compatPass = true;
  bool onFrontier = false;
  std::string constraint;
};

struct CandidateSet {
  std::vector<Candidate> ranked;  // best first
};

struct AdjacencyRule {
  std::string relation;
  std::string leftProp;
  std::string rightProp;
};

// elaboration(right,left) always holds; a rule-table hit adds one refined
// relation, marked defeasible. Returns the refined relation name if any.
std::optional<std::string> inferAdjacencyRelation(
    const std::vector<std::string>& leftProps, const std::vector<std::string>& rightProps,
    const std::vector<AdjacencyRule>& table);

struct TraceRecord {
  enum class Kind { Adverbial, Adjacency, Retraction, Suggestion, Dpro, Bridge };
  Kind kind = Kind::Adverbial;
  std::string surface;
  std::string sigma;
  CandidateSet candidates;
  LabelId chosen = kNoId;
  std::string caseApplied;
  std::vector<int> emittedItems;
  std::optional<Rule> emittedRule;
  std::string detail;  // adjacency/retraction/suggestion/dpro/bridge payload
};

struct ResolutionOptions {
  std::string compatName;              // empty: recency among constraint passes
  std::vector<AdjacencyRule> ruleTable;
};

struct ResolutionResult {
  std::vector<TraceRecord> trace;
  std::vector<AnaphoricLink> anaphoricLinks;
};

// Resolves one adverbial instance: candidates from context events and
// bridgeable associates, filtered by the antecedent constraint, excluding
// sigma; ranked by (compat pass, direct before bridged, recency). For
// complement-forming adverbials the complement of the chosen antecedent is
// formed first and VE binds it. Error: no-candidate.
std::pair<LabelId, CandidateSet> resolveAdverbial(DiscourseContext& ctx,
                                                  Interpretation& interp,
                                                  AdverbialInstance& inst,
                                                  const CompatPredicate& compat);

// Realizes the interaction case recorded on the adverbial's lexicon entry.
// Error: case-precondition-violated.
void applyInteractionCase(DiscourseContext& ctx, Interpretation& interp,
                          AdverbialInstance& inst, LabelId chosen,
                          std::map<int, int>& refinementOfItem, TraceRecord& rec);

// Full resolution pass: deictic pronouns, adjacency inference and
// retraction, then each adverbial in text order.
ResolutionResult resolveAll(Interpretation& interp, DiscourseContext& ctx,
                            const Derivation& d, const ResolutionOptions& opts);

}  // namespace dltag

#endif  // DLTAG_RESOLVER_HPP
