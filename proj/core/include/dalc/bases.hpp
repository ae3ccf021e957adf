#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "dalc/kb.hpp"
#include "dalc/limits.hpp"
#include "dalc/ranking.hpp"

namespace dalc {

/// A stratified selection of defeasible inclusions compatible with a subject
/// concept: the chosen S_i per stratum below the subject's rank k, plus the
/// defaults of rank >= k, which are always included.
struct Base {
  std::map<std::size_t, std::vector<DefeasibleInclusion>> selection;
  std::vector<DefeasibleInclusion> forced;  // every default of rank >= k
  std::size_t subject_rank = 0;             // k

  /// Union of selection and forced, in canonical printed order.
  std::vector<DefeasibleInclusion> all() const;
  std::string str() const;
};

bool operator==(const Base& a, const Base& b);

/// Per-stratum selection policy: subset-maximal compatible sets (the
/// multipreference closure) or maximum-cardinality compatible sets (the
/// lexicographic closure).
enum class BasePolicy { SubsetMaximal, CardinalityMaximal };

/// All preferred maximal compatible bases for subject b (rank must be
/// finite), in deterministic canonical order.
std::vector<Base> mp_bases(const KnowledgeBase& kb, const RankingResult& ranking,
                           const Concept& b, const Limits& limits = {});
std::vector<Base> lex_bases(const KnowledgeBase& kb,
                            const RankingResult& ranking, const Concept& b,
                            const Limits& limits = {});

/// Typical query T(B) <= D: true iff the guarded entailment holds for every
/// base. rank(B) infinite answers true, mirroring the rational-closure
/// convention. Plain queries delegate to strict_query_entails.
bool mp_entails(const KnowledgeBase& kb, const RankingResult& ranking,
                const Query& q, const Limits& limits = {});
bool lex_entails(const KnowledgeBase& kb, const RankingResult& ranking,
                 const Query& q, const Limits& limits = {});

/// Shared implementations parameterized by policy (exposed for the CLI).
std::vector<Base> compute_bases(const KnowledgeBase& kb,
                                const RankingResult& ranking, const Concept& b,
                                BasePolicy policy, const Limits& limits = {});
bool closure_entails(const KnowledgeBase& kb, const RankingResult& ranking,
                     const Query& q, BasePolicy policy,
                     const Limits& limits = {});

}  // namespace dalc
