#pragma once

#include <vector>

#include "dalc/kb.hpp"
#include "dalc/limits.hpp"
#include "dalc/tableau.hpp"

namespace dalc {

struct RankingResult;  // ranking.hpp

/// One stage E_i of the exceptionality sequence: the strict part is constant
/// across stages, the defeasible part shrinks.
struct TBoxStage {
  std::vector<StrictInclusion> strict;
  std::vector<DefeasibleInclusion> defeasible;
};

/// C is exceptional for E iff no most-normal element can be a C. Decided by
/// the materialization reduction: strict + materialization(defeasible) + C
/// is unsatisfiable.
bool is_exceptional(const Concept& c, const TBoxStage& e,
                    const Limits& limits = {});

/// The guarded inclusion T(Top) ⊓ extra ⊑ (not b or d) over stage e,
/// via the same reduction: materialization(e) ⊓ extra ⊓ b ⊑ d classically.
bool guarded_entails(const TBoxStage& e, const Concept& extra,
                     const Concept& b, const Concept& d,
                     const Limits& limits = {});

/// Plain (non-typicality) query entailment: classical entailment after
/// strictifying every infinite-rank default T(C) <= D into C <= D.
bool strict_query_entails(const KnowledgeBase& kb, const RankingResult& ranking,
                          const Query& q, const Limits& limits = {});

}  // namespace dalc
