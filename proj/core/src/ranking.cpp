#include "dalc/ranking.hpp"

#include <algorithm>

namespace dalc {

Rank RankingResult::default_rank(const DefeasibleInclusion& d) const {
  for (std::size_t i = 0; i < strata.size(); ++i)
    for (const auto& e : strata[i])
      if (same_inclusion(e, d)) return Rank(i);
  return Rank::infinite();
}

RankingResult compute_ranking(const KnowledgeBase& kb, const Limits& limits) {
  RankingResult result;
  TBoxStage stage{kb.strict, kb.defeasible};
  for (;;) {
    std::vector<DefeasibleInclusion> exceptional;
    for (const auto& d : stage.defeasible)
      if (is_exceptional(d.subject, stage, limits)) exceptional.push_back(d);
    result.stages.push_back(stage);
    if (exceptional.size() == stage.defeasible.size()) {
      // Fixpoint: the remaining defaults are exceptional at every stage.
      result.infinite_defaults = stage.defeasible;
      break;
    }
    std::vector<DefeasibleInclusion> dropped;
    for (const auto& d : stage.defeasible) {
      bool kept = false;
      for (const auto& e : exceptional)
        if (same_inclusion(d, e)) { kept = true; break; }
      if (!kept) dropped.push_back(d);
    }
    result.strata.push_back(std::move(dropped));
    stage.defeasible = std::move(exceptional);
  }
  return result;
}

Rank concept_rank(const RankingResult& ranking, const Concept& c,
                  const Limits& limits) {
  const std::string key = to_string(canonical(c));
  {
    std::lock_guard<std::mutex> lock(ranking.rank_cache->mutex);
    auto it = ranking.rank_cache->entries.find(key);
    if (it != ranking.rank_cache->entries.end()) return it->second;
  }
  Rank rank = Rank::infinite();
  for (std::size_t i = 0; i < ranking.stages.size(); ++i) {
    if (!is_exceptional(c, ranking.stages[i], limits)) {
      rank = Rank(i);
      break;
    }
  }
  std::lock_guard<std::mutex> lock(ranking.rank_cache->mutex);
  ranking.rank_cache->entries.emplace(key, rank);
  return rank;
}

bool rc_entails(const KnowledgeBase& kb, const RankingResult& ranking,
                const Query& q, const Limits& limits) {
  if (!q.lhs.typical) return strict_query_entails(kb, ranking, q, limits);
  Rank lhs = concept_rank(ranking, q.lhs.subject, limits);
  if (lhs.is_infinite()) return true;
  Rank lhs_and_neg_rhs = concept_rank(
      ranking, Concept::conj(q.lhs.subject, Concept::negation(q.rhs)), limits);
  return lhs < lhs_and_neg_rhs;
}

}  // namespace dalc
