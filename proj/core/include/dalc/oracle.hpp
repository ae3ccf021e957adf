#pragma once

#include <cstdint>
#include <vector>

#include "dalc/errors.hpp"
#include "dalc/kb.hpp"
#include "dalc/limits.hpp"

namespace dalc {

/// A truth assignment over the KB's atoms, packed into a bitmask indexed by
/// the sorted atom list.
using Valuation = std::uint32_t;

/// A finite role-free interpretation: the canonical domain with a global rank
/// function and the two-level per-aspect rank functions. Built only by the
/// oracle; shares no code with the tableau path.
struct OracleModel {
  std::vector<std::string> atoms;
  std::vector<Valuation> domain;
  std::vector<std::size_t> global_rank;  // parallel to domain
  std::vector<Concept> aspect_concepts;  // canonical, sorted
  /// aspect_rank[a][i] is 0 iff domain[i] satisfies the materialization of
  /// every defeasible inclusion with aspect aspect_concepts[a].
  std::vector<std::vector<std::uint8_t>> aspect_rank;
};

/// Propositional truth of a (role-free) concept under a valuation.
bool eval_concept(const Concept& c, Valuation v,
                  const std::vector<std::string>& atoms);

/// All valuations consistent with the strict part of the KB.
/// Errors on role-bearing KBs and when the atom bound is exceeded.
std::vector<Valuation> enumerate_domain(const KnowledgeBase& kb,
                                        const Limits& limits = {});

/// The pointwise-minimal canonical ranked model: each element ranked at the
/// first stage of the (truth-table) exceptionality sequence whose
/// materialization it satisfies. Valuations that satisfy no stage are
/// inconsistent with the KB and are excluded from the model domain.
/// The result is re-verified against every typicality inclusion.
OracleModel minimal_ranked_model(const KnowledgeBase& kb,
                                 const Limits& limits = {});

/// Query evaluation in the minimal canonical ranked model.
bool oracle_rc_entails(const KnowledgeBase& kb, const Query& q,
                       const Limits& limits = {});

/// All minimal canonical S-enriched models: aspect ranks fixed to the
/// two-level minimal shape, global rank functions enumerated under the
/// typicality condition and the specificity condition (concept ranks read
/// off the candidate model itself), pointwise-minimal survivors returned.
/// With with_condition_a set, the single-aspect preference condition is
/// additionally enforced during the search (it is provably redundant; the
/// flag exists so tests can confirm that).
std::vector<OracleModel> minimal_s_enriched_models(
    const KnowledgeBase& kb, const Limits& limits = {},
    bool with_condition_a = false);

/// True iff the query holds in every minimal canonical S-enriched model.
bool oracle_s_entails(const KnowledgeBase& kb, const Query& q,
                      const Limits& limits = {});

}  // namespace dalc
