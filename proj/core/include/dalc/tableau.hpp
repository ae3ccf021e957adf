#pragma once

#include <span>

#include "dalc/errors.hpp"
#include "dalc/kb.hpp"
#include "dalc/limits.hpp"

namespace dalc {

/// Classical ALC concept satisfiability w.r.t. a strict TBox.
/// Tableau with the standard GCI rule (nnf(not C or D) in every node label)
/// and subset blocking on ancestors. Deterministic rule and branch order.
/// Throws ResourceLimitError when the node budget is exhausted.
bool is_satisfiable(const Concept& c, std::span<const StrictInclusion> strict,
                    const Limits& limits = {});

/// Classical subsumption: C <= D holds in every model of the strict TBox.
/// The query lhs must be plain (no typicality).
bool entails(std::span<const StrictInclusion> strict, const Query& q,
             const Limits& limits = {});

/// Classical consistency of the ABox against the strict TBox.
bool abox_consistent(const KnowledgeBase& kb, const Limits& limits = {});

}  // namespace dalc
