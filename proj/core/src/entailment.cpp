#include "dalc/entailment.hpp"

#include "dalc/ranking.hpp"

namespace dalc {

bool is_exceptional(const Concept& c, const TBoxStage& e, const Limits& limits) {
  Concept probe = Concept::conj(materialize(e.defeasible), c);
  return !is_satisfiable(probe, e.strict, limits);
}

bool guarded_entails(const TBoxStage& e, const Concept& extra, const Concept& b,
                     const Concept& d, const Limits& limits) {
  Concept probe = Concept::conj(
      Concept::conj(materialize(e.defeasible), extra),
      Concept::conj(b, Concept::negation(d)));
  return !is_satisfiable(probe, e.strict, limits);
}

bool strict_query_entails(const KnowledgeBase& kb, const RankingResult& ranking,
                          const Query& q, const Limits& limits) {
  std::vector<StrictInclusion> axioms = kb.strict;
  for (const auto& d : ranking.infinite_defaults)
    axioms.push_back({d.subject, d.aspect});
  return entails(axioms, q, limits);
}

}  // namespace dalc
